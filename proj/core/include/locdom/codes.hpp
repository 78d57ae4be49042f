#pragma once

#include <string>
#include <vector>

#include "locdom/graph.hpp"

namespace locdom {

/// A set of sensor positions. Carries no graph; it is validated against one at use time.
class Code {
  public:
    Code() = default;
    explicit Code(VertexSet members) : members_(members) {}
    Code(std::initializer_list<Vertex> vs) : members_(vs) {}
    static Code from(const std::vector<Vertex>& vs) { return Code(VertexSet::from(vs)); }

    VertexSet members() const { return members_; }
    bool contains(Vertex v) const { return members_.contains(v); }
    int size() const { return members_.size(); }
    bool empty() const { return members_.empty(); }
    /// Sorted member list.
    std::vector<Vertex> to_vector() const { return members_.to_vector(); }

    bool operator==(const Code&) const = default;

  private:
    VertexSet members_;
};

/// DOM: dominating set; DOM2: 2-dominating set; LD / SLD / DLD: locating-,
/// self-locating- and solid-locating-dominating codes.
enum class CodeKind { dom, dom2, ld, sld, dld };

inline constexpr CodeKind all_code_kinds[] = {CodeKind::dom, CodeKind::dom2, CodeKind::ld, CodeKind::sld,
                                              CodeKind::dld};

std::string to_string(CodeKind k);
/// Case-insensitive: "DOM", "DOM2", "LD", "SLD", "DLD".
CodeKind parse_code_kind(const std::string& text);

/// Which of the two equivalent formulations a predicate evaluates. SLD and DLD
/// have distinct characterization forms; the other kinds have only one.
enum class Form { definition, characterization };

/// I(C; u) = N[u] ∩ C
VertexSet identifying_set(const Graph& g, const Code& c, Vertex u);

/// Throws std::invalid_argument on an empty code and std::out_of_range when
/// the code mentions a vertex outside the graph. The characterization forms
/// need at least two vertices and fall back to the definitions on K1.
bool is_code(const Graph& g, const Code& c, CodeKind kind, Form form = Form::definition);

/// Vertices contained in every self-locating-dominating code: with n >= 2,
/// exactly those u with N(u) ⊆ N[v] for some v != u; the single vertex when n = 1.
VertexSet forced_sld_codewords(const Graph& g);

/// V \ {u}, which is solid-locating-dominating whenever u has a neighbour.
/// Throws std::invalid_argument when u is isolated.
Code drop_one_dld_code(const Graph& g, Vertex u);

}  // namespace locdom
