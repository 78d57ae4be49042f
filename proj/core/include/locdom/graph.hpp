#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "locdom/vertex_set.hpp"

namespace locdom {

class GraphBuilder;

/// Immutable finite simple undirected graph on vertices 0..n-1 (1 <= n <= 64).
///
/// Adjacency is kept as one VertexSet per vertex so neighbourhood
/// intersections are single word operations. Display labels are optional and
/// do not take part in equality.
class Graph {
  public:
    static constexpr int max_order = 64;

    /// Discrete graph on n vertices.
    explicit Graph(int n);

    static Graph from_edges(int n, const std::vector<std::pair<Vertex, Vertex>>& edges);

    int order() const { return static_cast<int>(adj_.size()); }
    /// Number of edges.
    int size() const;
    VertexSet vertices() const { return VertexSet::range(order()); }

    bool adjacent(Vertex u, Vertex v) const { return adj_[check(u)].contains(check(v)); }
    /// N(u)
    VertexSet neighbors(Vertex u) const { return adj_[check(u)]; }
    /// N[u]
    VertexSet closed_neighbors(Vertex u) const { return adj_[check(u)] | VertexSet::single(u); }
    int degree(Vertex u) const { return neighbors(u).size(); }
    int max_degree() const;

    std::vector<std::pair<Vertex, Vertex>> edges() const;

    bool has_labels() const { return !labels_.empty(); }
    /// Display label; the decimal index when no labels were set.
    std::string label(Vertex u) const;

    bool operator==(const Graph& o) const { return adj_ == o.adj_; }

  private:
    friend class GraphBuilder;
    Graph() = default;
    Vertex check(Vertex u) const;

    std::vector<VertexSet> adj_;
    std::vector<std::string> labels_;
};

class GraphBuilder {
  public:
    explicit GraphBuilder(int n);

    GraphBuilder& add_edge(Vertex u, Vertex v);
    GraphBuilder& set_label(Vertex u, std::string label);
    int order() const { return static_cast<int>(adj_.size()); }

    Graph build() const;

  private:
    std::vector<VertexSet> adj_;
    std::vector<std::string> labels_;
};

/// Number of edges on a shortest u-v path; nullopt when v is unreachable.
std::optional<int> distance(const Graph& g, Vertex u, Vertex v);

/// Breadth-first distances from `source`; -1 marks unreachable vertices.
std::vector<int> distances_from(const Graph& g, Vertex source);

/// Length of a shortest cycle; nullopt for forests.
std::optional<int> girth(const Graph& g);

bool is_connected(const Graph& g);
bool is_tree(const Graph& g);
bool is_complete(const Graph& g);
bool is_discrete(const Graph& g);

Graph complement(const Graph& g);

/// Vertex (u, v) of the product is indexed u * h.order() + v.
Graph cartesian_product(const Graph& g, const Graph& h);

/// Graph on the same vertices with u ~ v whenever 1 <= d(u, v) <= 2.
Graph square(const Graph& g);

/// Subgraph induced by `keep`, vertices renumbered in increasing order. Labels are carried over.
Graph induced_subgraph(const Graph& g, VertexSet keep);

}  // namespace locdom
