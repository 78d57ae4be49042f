#include "locdom/enumerate.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace locdom {

std::uint64_t labeled_graph_count(int n) {
    int pairs = n * (n - 1) / 2;
    if (n < 1 || pairs > 62) throw std::invalid_argument("labeled enumeration supports 1 <= n <= 11");
    return std::uint64_t{1} << pairs;
}

Graph labeled_graph(int n, std::uint64_t mask) {
    GraphBuilder b(n);
    int k = 0;
    for (int j = 1; j < n; ++j) {
        for (int i = 0; i < j; ++i, ++k) {
            if ((mask >> k) & 1U) b.add_edge(i, j);
        }
    }
    return b.build();
}

void for_each_labeled_graph(int n, const std::function<void(const Graph&)>& visit) {
    const auto count = labeled_graph_count(n);
    for (std::uint64_t mask = 0; mask < count; ++mask) visit(labeled_graph(n, mask));
}

Graph tree_from_pruefer(int n, std::span<const int> sequence) {
    if (n < 2 || static_cast<int>(sequence.size()) != n - 2) {
        throw std::invalid_argument("Pruefer sequence must have length n - 2");
    }
    std::vector<int> degree(n, 1);
    for (int x : sequence) {
        if (x < 0 || x >= n) throw std::invalid_argument("Pruefer entry out of range");
        ++degree[x];
    }
    GraphBuilder b(n);
    // Linear-time decoding: `leaf` walks upward, `ptr` remembers the scan position.
    int ptr = 0;
    while (degree[ptr] != 1) ++ptr;
    int leaf = ptr;
    for (int x : sequence) {
        b.add_edge(leaf, x);
        if (--degree[x] == 1 && x < ptr) {
            leaf = x;
        } else {
            ++ptr;
            while (degree[ptr] != 1) ++ptr;
            leaf = ptr;
        }
    }
    b.add_edge(leaf, n - 1);
    return b.build();
}

void for_each_labeled_tree(int n, const std::function<void(const Graph&)>& visit) {
    if (n == 1) {
        visit(Graph(1));
        return;
    }
    std::vector<int> seq(n - 2, 0);
    while (true) {
        visit(tree_from_pruefer(n, seq));
        int i = n - 3;
        while (i >= 0 && seq[i] == n - 1) seq[i--] = 0;
        if (i < 0) break;
        ++seq[i];
    }
}

namespace {

std::string rooted_form(const Graph& t, Vertex root, Vertex parent) {
    std::vector<std::string> kids;
    for (Vertex c : t.neighbors(root)) {
        if (c != parent) kids.push_back(rooted_form(t, c, root));
    }
    std::sort(kids.begin(), kids.end());
    std::string s = "(";
    for (auto& k : kids) s += k;
    return s + ")";
}

std::vector<Vertex> tree_centers(const Graph& t) {
    VertexSet alive = t.vertices();
    std::vector<int> deg(t.order());
    for (Vertex v = 0; v < t.order(); ++v) deg[v] = t.degree(v);
    while (alive.size() > 2) {
        VertexSet leaves;
        for (Vertex v : alive) {
            if (deg[v] <= 1) leaves.insert(v);
        }
        for (Vertex v : leaves) {
            for (Vertex w : t.neighbors(v) & alive) --deg[w];
        }
        alive -= leaves;
    }
    return alive.to_vector();
}

}  // namespace

std::string tree_canonical_form(const Graph& tree) {
    if (!is_tree(tree)) throw std::invalid_argument("tree_canonical_form: graph is not a tree");
    std::string best;
    for (Vertex c : tree_centers(tree)) {
        auto s = rooted_form(tree, c, -1);
        if (best.empty() || s < best) best = s;
    }
    return best;
}

std::vector<Graph> free_trees(int n) {
    if (n < 1 || n > Graph::max_order) throw std::invalid_argument("free_trees: n out of range");
    // Level sequences of rooted trees in the order of Beyer and Hedetniemi,
    // starting from the path and ending at the star.
    std::vector<int> level(n);
    for (int i = 0; i < n; ++i) level[i] = i;
    std::set<std::string> seen;
    std::vector<Graph> out;
    while (true) {
        GraphBuilder b(n);
        std::vector<int> last_at_depth(n, 0);
        for (int i = 1; i < n; ++i) {
            b.add_edge(i, last_at_depth[level[i] - 1]);
            last_at_depth[level[i]] = i;
        }
        Graph t = b.build();
        if (seen.insert(tree_canonical_form(t)).second) out.push_back(std::move(t));

        int p = n - 1;
        while (p > 0 && level[p] <= 1) --p;
        if (p == 0) break;
        int q = p - 1;
        while (level[q] != level[p] - 1) --q;
        for (int i = p; i < n; ++i) level[i] = level[i - (p - q)];
    }
    return out;
}

}  // namespace locdom
