#include "locdom/trees.hpp"

#include <algorithm>
#include <array>
#include <limits>
#include <stdexcept>
#include <vector>

namespace locdom {

namespace {

void require_tree(const Graph& t) {
    if (!is_tree(t)) throw std::invalid_argument("graph is not a tree (it must be connected and acyclic)");
}

VertexSet leaves_in(const Graph& t, VertexSet alive) {
    VertexSet out;
    for (Vertex v : alive) {
        if ((t.neighbors(v) & alive).size() == 1) out.insert(v);
    }
    return out;
}

VertexSet dld_prune(const Graph& t, VertexSet alive) {
    if (alive.size() == 1) return alive;
    for (Vertex c : alive) {
        // Star: every leaf is a codeword.
        if ((t.neighbors(c) & alive).size() == alive.size() - 1) return alive - VertexSet::single(c);
    }
    const VertexSet leaves = leaves_in(t, alive);
    for (Vertex u : alive - leaves) {
        const VertexSet nb = t.neighbors(u) & alive;
        const VertexSet lu = nb & leaves;
        const VertexSet inner = nb - leaves;
        if (lu.empty() || inner.size() != 1) continue;
        const Vertex v = inner.first();
        VertexSet rest = dld_prune(t, alive - lu - VertexSet::single(u));
        if (!rest.contains(v)) return rest | lu;
        return rest | (lu - VertexSet::single(lu.first())) | VertexSet::single(u);
    }
    throw std::logic_error("tree without a prunable support vertex");
}

constexpr int inf = std::numeric_limits<int>::max() / 4;

enum State { in_set = 0, out_done = 1, out_need_parent = 2 };

// cost[v][s]: smallest 2-dominating set of the subtree at v in state s.
struct TwoDomination {
    const Graph& t;
    std::vector<std::vector<Vertex>> children;
    std::vector<std::array<int, 3>> cost;

    explicit TwoDomination(const Graph& tree) : t(tree), children(tree.order()), cost(tree.order()) {
        std::vector<Vertex> order{0};
        std::vector<Vertex> parent(t.order(), -1);
        for (std::size_t i = 0; i < order.size(); ++i) {
            Vertex v = order[i];
            for (Vertex w : t.neighbors(v)) {
                if (w == parent[v]) continue;
                parent[w] = v;
                children[v].push_back(w);
                order.push_back(w);
            }
        }
        for (auto it = order.rbegin(); it != order.rend(); ++it) evaluate(*it);
    }

    // best[j]: cheapest choice of IN/OUT_DONE children with min(j, 2) of them in.
    std::vector<std::array<int, 3>> out_tables(Vertex v) const {
        std::vector<std::array<int, 3>> table(children[v].size() + 1, {inf, inf, inf});
        table[0] = {0, inf, inf};
        for (std::size_t i = 0; i < children[v].size(); ++i) {
            const auto& c = cost[children[v][i]];
            for (int j = 0; j < 3; ++j) {
                if (table[i][j] >= inf) continue;
                int in_j = std::min(j + 1, 2);
                table[i + 1][in_j] = std::min(table[i + 1][in_j], table[i][j] + c[in_set]);
                table[i + 1][j] = std::min(table[i + 1][j], table[i][j] + c[out_done]);
            }
        }
        return table;
    }

    void evaluate(Vertex v) {
        int in_cost = 1;
        for (Vertex c : children[v]) in_cost += std::min({cost[c][in_set], cost[c][out_done], cost[c][out_need_parent]});
        auto table = out_tables(v);
        cost[v] = {in_cost, table.back()[2], table.back()[1]};
    }

    void collect(Vertex v, State s, VertexSet& code) const {
        if (s == in_set) {
            code.insert(v);
            for (Vertex c : children[v]) {
                const auto& k = cost[c];
                State best = in_set;
                if (k[out_done] < k[best]) best = out_done;
                if (k[out_need_parent] < k[best]) best = out_need_parent;
                collect(c, best, code);
            }
            return;
        }
        auto table = out_tables(v);
        int j = s == out_done ? 2 : 1;
        for (std::size_t i = children[v].size(); i > 0; --i) {
            const Vertex c = children[v][i - 1];
            const int total = table[i][j];
            if (table[i - 1][j] < inf && table[i - 1][j] + cost[c][out_done] == total) {
                collect(c, out_done, code);
                continue;
            }
            // The child is in; the prefix held j - 1 children, or already two when j == 2.
            int prev = j - 1;
            if (j == 2 && table[i - 1][2] < inf && table[i - 1][2] + cost[c][in_set] == total) prev = 2;
            collect(c, in_set, code);
            j = prev;
        }
    }
};

SolverResult finish(const Graph& t, VertexSet code, CodeKind kind) {
    SolverResult r;
    r.value = code.size();
    r.witness = Code(code);
    r.nodes_explored = static_cast<std::uint64_t>(t.order());
    r.lower_bound_used = 0;
    r.method = Method::tree_linear;
    if (!is_code(t, r.witness, kind)) throw std::logic_error("tree solver produced an invalid " + to_string(kind) + " witness");
    return r;
}

}  // namespace

SolverResult tree_gamma_dld(const Graph& t) {
    require_tree(t);
    return finish(t, dld_prune(t, t.vertices()), CodeKind::dld);
}

SolverResult tree_gamma_sld(const Graph& t) {
    require_tree(t);
    if (t.order() == 1) return finish(t, VertexSet::single(0), CodeKind::sld);
    TwoDomination dp(t);
    VertexSet code;
    const auto& root = dp.cost[0];
    dp.collect(0, root[in_set] <= root[out_done] ? in_set : out_done, code);
    if (code.size() != std::min(root[in_set], root[out_done])) throw std::logic_error("γ₂ reconstruction mismatch");
    SolverResult r = finish(t, code, CodeKind::dom2);
    if (!is_code(t, r.witness, CodeKind::sld)) throw std::logic_error("2-dominating set of a tree is not self-locating-dominating");
    return r;
}

int leaf_count(const Graph& t) {
    int count = 0;
    for (Vertex v : t.vertices()) count += t.degree(v) == 1;
    return count;
}

int support_vertex_count(const Graph& t) {
    int count = 0;
    for (Vertex v : t.vertices()) {
        for (Vertex w : t.neighbors(v)) {
            if (t.degree(w) == 1) {
                ++count;
                break;
            }
        }
    }
    return count;
}

}  // namespace locdom
