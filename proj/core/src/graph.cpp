#include "locdom/graph.hpp"

#include <algorithm>
#include <limits>
#include <queue>
#include <stdexcept>

namespace locdom {

namespace {

void check_order(int n) {
    if (n < 1 || n > Graph::max_order) {
        throw std::invalid_argument("graph order must be in 1.." + std::to_string(Graph::max_order) +
                                    ", got " + std::to_string(n));
    }
}

}  // namespace

Graph::Graph(int n) {
    check_order(n);
    adj_.resize(n);
}

Graph Graph::from_edges(int n, const std::vector<std::pair<Vertex, Vertex>>& edges) {
    GraphBuilder b(n);
    for (auto [u, v] : edges) b.add_edge(u, v);
    return b.build();
}

Vertex Graph::check(Vertex u) const {
    if (u < 0 || u >= order()) {
        throw std::out_of_range("vertex " + std::to_string(u) + " out of range for graph of order " +
                                std::to_string(order()));
    }
    return u;
}

int Graph::size() const {
    int twice = 0;
    for (auto s : adj_) twice += s.size();
    return twice / 2;
}

int Graph::max_degree() const {
    int d = 0;
    for (auto s : adj_) d = std::max(d, s.size());
    return d;
}

std::vector<std::pair<Vertex, Vertex>> Graph::edges() const {
    std::vector<std::pair<Vertex, Vertex>> out;
    for (Vertex u = 0; u < order(); ++u) {
        for (Vertex v : adj_[u]) {
            if (u < v) out.emplace_back(u, v);
        }
    }
    return out;
}

std::string Graph::label(Vertex u) const {
    check(u);
    return labels_.empty() ? std::to_string(u) : labels_[u];
}

GraphBuilder::GraphBuilder(int n) {
    check_order(n);
    adj_.resize(n);
}

GraphBuilder& GraphBuilder::add_edge(Vertex u, Vertex v) {
    if (u < 0 || v < 0 || u >= order() || v >= order()) {
        throw std::out_of_range("edge endpoint out of range");
    }
    if (u == v) throw std::invalid_argument("self-loop at vertex " + std::to_string(u));
    adj_[u].insert(v);
    adj_[v].insert(u);
    return *this;
}

GraphBuilder& GraphBuilder::set_label(Vertex u, std::string label) {
    if (u < 0 || u >= order()) throw std::out_of_range("label vertex out of range");
    if (labels_.empty()) {
        labels_.resize(adj_.size());
        for (int i = 0; i < order(); ++i) labels_[i] = std::to_string(i);
    }
    labels_[u] = std::move(label);
    return *this;
}

Graph GraphBuilder::build() const {
    Graph g;
    g.adj_ = adj_;
    g.labels_ = labels_;
    return g;
}

std::vector<int> distances_from(const Graph& g, Vertex source) {
    std::vector<int> dist(g.order(), -1);
    dist[source] = 0;
    VertexSet seen = VertexSet::single(source);
    VertexSet frontier = seen;
    for (int d = 1; !frontier.empty(); ++d) {
        VertexSet next;
        for (Vertex u : frontier) next |= g.neighbors(u);
        next -= seen;
        for (Vertex v : next) dist[v] = d;
        seen |= next;
        frontier = next;
    }
    return dist;
}

std::optional<int> distance(const Graph& g, Vertex u, Vertex v) {
    (void)g.neighbors(v);  // range check
    int d = distances_from(g, u)[v];
    if (d < 0) return std::nullopt;
    return d;
}

std::optional<int> girth(const Graph& g) {
    const int n = g.order();
    int best = std::numeric_limits<int>::max();
    std::vector<int> dist(n);
    std::vector<Vertex> parent(n);
    for (Vertex s = 0; s < n; ++s) {
        std::fill(dist.begin(), dist.end(), -1);
        dist[s] = 0;
        parent[s] = -1;
        std::queue<Vertex> q;
        q.push(s);
        while (!q.empty()) {
            Vertex u = q.front();
            q.pop();
            for (Vertex v : g.neighbors(u)) {
                if (dist[v] < 0) {
                    dist[v] = dist[u] + 1;
                    parent[v] = u;
                    q.push(v);
                } else if (parent[u] != v) {
                    best = std::min(best, dist[u] + dist[v] + 1);
                }
            }
        }
    }
    if (best == std::numeric_limits<int>::max()) return std::nullopt;
    return best;
}

bool is_connected(const Graph& g) {
    auto d = distances_from(g, 0);
    return std::none_of(d.begin(), d.end(), [](int x) { return x < 0; });
}

bool is_tree(const Graph& g) { return g.size() == g.order() - 1 && is_connected(g); }

bool is_complete(const Graph& g) {
    return g.size() == g.order() * (g.order() - 1) / 2;
}

bool is_discrete(const Graph& g) { return g.size() == 0; }

Graph complement(const Graph& g) {
    GraphBuilder b(g.order());
    for (Vertex u = 0; u < g.order(); ++u) {
        for (Vertex v = u + 1; v < g.order(); ++v) {
            if (!g.adjacent(u, v)) b.add_edge(u, v);
        }
        if (g.has_labels()) b.set_label(u, g.label(u));
    }
    return b.build();
}

Graph cartesian_product(const Graph& g, const Graph& h) {
    const int gn = g.order();
    const int hn = h.order();
    if (gn * hn > Graph::max_order) {
        throw std::invalid_argument("cartesian product has " + std::to_string(gn * hn) +
                                    " vertices, more than the supported " +
                                    std::to_string(Graph::max_order));
    }
    GraphBuilder b(gn * hn);
    auto id = [hn](Vertex u, Vertex v) { return u * hn + v; };
    for (Vertex u = 0; u < gn; ++u) {
        for (Vertex v = 0; v < hn; ++v) {
            b.set_label(id(u, v), "(" + g.label(u) + "," + h.label(v) + ")");
            for (Vertex w : h.neighbors(v)) {
                if (v < w) b.add_edge(id(u, v), id(u, w));
            }
            for (Vertex w : g.neighbors(u)) {
                if (u < w) b.add_edge(id(u, v), id(w, v));
            }
        }
    }
    return b.build();
}

Graph square(const Graph& g) {
    GraphBuilder b(g.order());
    for (Vertex u = 0; u < g.order(); ++u) {
        VertexSet reach = g.neighbors(u);
        for (Vertex v : g.neighbors(u)) reach |= g.neighbors(v);
        reach.erase(u);
        for (Vertex v : reach) {
            if (u < v) b.add_edge(u, v);
        }
    }
    return b.build();
}

Graph induced_subgraph(const Graph& g, VertexSet keep) {
    std::vector<Vertex> old_ids = keep.to_vector();
    std::vector<int> new_id(g.order(), -1);
    for (std::size_t i = 0; i < old_ids.size(); ++i) new_id[old_ids[i]] = static_cast<int>(i);
    GraphBuilder b(static_cast<int>(old_ids.size()));
    for (std::size_t i = 0; i < old_ids.size(); ++i) {
        Vertex u = old_ids[i];
        if (g.has_labels()) b.set_label(static_cast<int>(i), g.label(u));
        for (Vertex v : g.neighbors(u) & keep) {
            if (u < v) b.add_edge(static_cast<int>(i), new_id[v]);
        }
    }
    return b.build();
}

}  // namespace locdom
