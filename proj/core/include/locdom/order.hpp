#pragma once

#include <cstdint>
#include <vector>

#include "locdom/graph.hpp"

namespace locdom {

/// The vicinal preorder x ≲ y  ⟺  N(x) ⊆ N[y].
class VicinalPreorder {
  public:
    explicit VicinalPreorder(const Graph& g);

    int order() const { return static_cast<int>(up_.size()); }
    bool leq(Vertex x, Vertex y) const { return up_[x].contains(y); }
    bool equivalent(Vertex x, Vertex y) const { return leq(x, y) && leq(y, x); }
    bool less(Vertex x, Vertex y) const { return leq(x, y) && !leq(y, x); }

    /// {y : x ≲ y}
    VertexSet up_set(Vertex x) const { return up_[x]; }
    /// ∼-classes, each sorted, ordered by smallest member.
    const std::vector<VertexSet>& classes() const { return classes_; }
    /// Index into classes() for each vertex.
    int class_of(Vertex x) const { return class_of_[x]; }

    /// Vertices x with no y such that x < y.
    VertexSet maximal_vertices() const;
    bool is_antichain(VertexSet s) const;
    bool is_chain(VertexSet s) const;

  private:
    std::vector<VertexSet> up_;
    std::vector<VertexSet> classes_;
    std::vector<int> class_of_;
};

enum class TwinKind { true_twins, false_twins, not_twins };

/// Throws std::invalid_argument when u == v.
TwinKind twins(const Graph& g, Vertex u, Vertex v);
bool is_twin_free(const Graph& g);

struct DilworthResult {
    int width;
    /// One vertex per class in a maximum antichain.
    VertexSet antichain;
    /// Minimum chain cover of V; each chain is a union of whole ∼-classes.
    std::vector<VertexSet> chains;
};

/// ∇(G): width of the vicinal preorder, via a minimum chain cover of the
/// quotient poset (bipartite matching) and a König antichain witness.
DilworthResult dilworth(const Graph& g);
int dilworth_number(const Graph& g);

/// Threshold recognition. Runs the ∇(G) = 1 test and the isolated/universal
/// peel-off and throws std::logic_error if they disagree.
bool is_threshold(const Graph& g);

/// Peel-off test alone: repeatedly remove an isolated or universal vertex.
bool peels_to_empty(const Graph& g);

/// Exact binomial coefficient; throws std::overflow_error instead of wrapping.
std::uint64_t binomial(int n, int k);

/// k + C(k, ⌊k/2⌋): the largest order a graph with a k-codeword
/// solid-locating-dominating code can have. k >= 1.
std::uint64_t sperner_capacity(int k);

/// Smallest k >= 1 with sperner_capacity(k) >= n.
int sperner_lower_bound(std::uint64_t n);

/// Smallest k >= 1 with k + 2^k - 1 >= n: the matching bound for locating-dominating codes.
int ld_order_lower_bound(std::uint64_t n);

}  // namespace locdom
