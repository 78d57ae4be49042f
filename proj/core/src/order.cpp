#include "locdom/order.hpp"

#include <limits>
#include <stdexcept>

namespace locdom {

__extension__ using wide_uint = unsigned __int128;

VicinalPreorder::VicinalPreorder(const Graph& g) : up_(g.order()), class_of_(g.order(), -1) {
    for (Vertex x : g.vertices()) {
        for (Vertex y : g.vertices()) {
            if (g.neighbors(x).subset_of(g.closed_neighbors(y))) up_[x].insert(y);
        }
    }
#ifndef NDEBUG
    for (Vertex x : g.vertices())
        for (Vertex y : up_[x])
            if (!up_[y].subset_of(up_[x])) throw std::logic_error("vicinal preorder is not transitive");
#endif
    for (Vertex x : g.vertices()) {
        if (class_of_[x] >= 0) continue;
        VertexSet cls;
        for (Vertex y : up_[x]) {
            if (up_[y].contains(x)) cls.insert(y);
        }
        for (Vertex y : cls) class_of_[y] = static_cast<int>(classes_.size());
        classes_.push_back(cls);
    }
}

VertexSet VicinalPreorder::maximal_vertices() const {
    VertexSet out;
    for (Vertex x = 0; x < order(); ++x) {
        bool maximal = true;
        for (Vertex y : up_[x]) {
            if (!leq(y, x)) {
                maximal = false;
                break;
            }
        }
        if (maximal) out.insert(x);
    }
    return out;
}

bool VicinalPreorder::is_antichain(VertexSet s) const {
    for (Vertex x : s) {
        if ((up_[x] & s) != VertexSet::single(x)) return false;
    }
    return true;
}

bool VicinalPreorder::is_chain(VertexSet s) const {
    for (Vertex x : s)
        for (Vertex y : s)
            if (!leq(x, y) && !leq(y, x)) return false;
    return true;
}

TwinKind twins(const Graph& g, Vertex u, Vertex v) {
    if (u == v) throw std::invalid_argument("twins: vertices must be distinct");
    if (g.closed_neighbors(u) == g.closed_neighbors(v)) return TwinKind::true_twins;
    if (g.neighbors(u) == g.neighbors(v)) return TwinKind::false_twins;
    return TwinKind::not_twins;
}

bool is_twin_free(const Graph& g) {
    for (Vertex u = 0; u < g.order(); ++u)
        for (Vertex v = u + 1; v < g.order(); ++v)
            if (twins(g, u, v) != TwinKind::not_twins) return false;
    return true;
}

namespace {

// Kuhn's augmenting paths on the strict-order bipartite graph of the quotient poset.
struct Matching {
    const std::vector<std::vector<int>>& succ;
    std::vector<int> match_right;  // right class -> left class
    std::vector<int> match_left;   // left class -> right class
    std::vector<char> visited;

    explicit Matching(const std::vector<std::vector<int>>& s)
        : succ(s), match_right(s.size(), -1), match_left(s.size(), -1), visited(s.size()) {}

    bool augment(int a) {
        for (int b : succ[a]) {
            if (visited[b]) continue;
            visited[b] = 1;
            if (match_right[b] < 0 || augment(match_right[b])) {
                match_right[b] = a;
                match_left[a] = b;
                return true;
            }
        }
        return false;
    }

    int run() {
        int size = 0;
        for (std::size_t a = 0; a < succ.size(); ++a) {
            std::fill(visited.begin(), visited.end(), 0);
            if (augment(static_cast<int>(a))) ++size;
        }
        return size;
    }
};

}  // namespace

DilworthResult dilworth(const Graph& g) {
    VicinalPreorder pre(g);
    const auto& classes = pre.classes();
    const int k = static_cast<int>(classes.size());
    std::vector<Vertex> rep(k);
    for (int i = 0; i < k; ++i) rep[i] = classes[i].first();

    std::vector<std::vector<int>> succ(k);
    for (int a = 0; a < k; ++a)
        for (int b = 0; b < k; ++b)
            if (a != b && pre.leq(rep[a], rep[b])) succ[a].push_back(b);

    Matching m(succ);
    const int matched = m.run();

    DilworthResult out;
    out.width = k - matched;

    // Chains: follow matched edges from every class that is nobody's successor.
    for (int a = 0; a < k; ++a) {
        if (m.match_right[a] >= 0) continue;
        VertexSet chain;
        for (int c = a; c >= 0; c = m.match_left[c]) chain |= classes[c];
        out.chains.push_back(chain);
    }

    // König: Z = vertices reachable from unmatched left nodes by alternating
    // paths; min cover = (L \ Z) ∪ (R ∩ Z); classes untouched by the cover form
    // a maximum antichain.
    std::vector<char> left_z(k, 0), right_z(k, 0);
    std::vector<int> stack;
    for (int a = 0; a < k; ++a) {
        if (m.match_left[a] < 0) {
            left_z[a] = 1;
            stack.push_back(a);
        }
    }
    while (!stack.empty()) {
        int a = stack.back();
        stack.pop_back();
        for (int b : succ[a]) {
            if (right_z[b]) continue;
            right_z[b] = 1;
            int a2 = m.match_right[b];
            if (a2 >= 0 && !left_z[a2]) {
                left_z[a2] = 1;
                stack.push_back(a2);
            }
        }
    }
    for (int a = 0; a < k; ++a) {
        bool in_cover = !left_z[a] || right_z[a];
        if (!in_cover) out.antichain.insert(rep[a]);
    }

    if (out.antichain.size() != out.width || !pre.is_antichain(out.antichain) ||
        static_cast<int>(out.chains.size()) != out.width) {
        throw std::logic_error("dilworth: antichain witness does not match chain cover");
    }
    for (auto c : out.chains) {
        if (!pre.is_chain(c)) throw std::logic_error("dilworth: cover element is not a chain");
    }
    return out;
}

int dilworth_number(const Graph& g) { return dilworth(g).width; }

bool peels_to_empty(const Graph& g) {
    VertexSet alive = g.vertices();
    while (!alive.empty()) {
        bool removed = false;
        for (Vertex v : alive) {
            VertexSet nb = g.neighbors(v) & alive;
            if (nb.empty() || nb == alive - VertexSet::single(v)) {
                alive.erase(v);
                removed = true;
                break;
            }
        }
        if (!removed) return false;
    }
    return true;
}

bool is_threshold(const Graph& g) {
    bool by_width = dilworth_number(g) == 1;
    bool by_peeling = peels_to_empty(g);
    if (by_width != by_peeling) {
        throw std::logic_error("threshold tests disagree: Dilworth number and peel-off give different answers");
    }
    return by_width;
}

std::uint64_t binomial(int n, int k) {
    if (k < 0 || n < 0 || k > n) return 0;
    if (k > n - k) k = n - k;
    wide_uint r = 1;
    for (int i = 1; i <= k; ++i) {
        // r * (n - k + i) / i is exact at every step.
        r = r * static_cast<unsigned>(n - k + i) / static_cast<unsigned>(i);
        if (r > std::numeric_limits<std::uint64_t>::max()) throw std::overflow_error("binomial overflow");
    }
    return static_cast<std::uint64_t>(r);
}

std::uint64_t sperner_capacity(int k) {
    if (k < 1) throw std::invalid_argument("sperner_capacity: k must be >= 1");
    std::uint64_t c = binomial(k, k / 2);
    if (c > std::numeric_limits<std::uint64_t>::max() - static_cast<std::uint64_t>(k)) {
        throw std::overflow_error("sperner_capacity overflow");
    }
    return c + static_cast<std::uint64_t>(k);
}

int sperner_lower_bound(std::uint64_t n) {
    if (n < 1) throw std::invalid_argument("sperner_lower_bound: n must be >= 1");
    int k = 1;
    while (sperner_capacity(k) < n) ++k;
    return k;
}

int ld_order_lower_bound(std::uint64_t n) {
    if (n < 1) throw std::invalid_argument("ld_order_lower_bound: n must be >= 1");
    int k = 1;
    while (k < 63 && static_cast<std::uint64_t>(k) + (std::uint64_t{1} << k) - 1 < n) ++k;
    return k;
}

}  // namespace locdom
