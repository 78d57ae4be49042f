#include "locdom/constructions.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>

#include <json.hpp>

#include "locdom/errors.hpp"
#include "locdom/graph_io.hpp"
#include "locdom/order.hpp"

namespace locdom {

std::string to_string(ClaimParameter p) {
    switch (p) {
        case ClaimParameter::gamma_ld: return "gamma_LD";
        case ClaimParameter::gamma_sld: return "gamma_SLD";
        case ClaimParameter::gamma_dld: return "gamma_DLD";
        case ClaimParameter::order: return "n";
    }
    return "?";
}

namespace {

/// Bit masks of the r-subsets of {0..k-1}, in lexicographic order of their sorted member lists.
std::vector<std::uint64_t> subsets_of_size(int k, int r) {
    std::vector<std::uint64_t> out;
    std::vector<int> pick(r);
    for (int i = 0; i < r; ++i) pick[i] = i;
    while (true) {
        std::uint64_t mask = 0;
        for (int x : pick) mask |= std::uint64_t{1} << x;
        out.push_back(mask);
        int i = r - 1;
        while (i >= 0 && pick[i] == k - r + i) --i;
        if (i < 0) break;
        ++pick[i];
        for (int j = i + 1; j < r; ++j) pick[j] = pick[j - 1] + 1;
    }
    return out;
}

/// Every non-empty subset of {0..k-1}, ordered lexicographically by sorted member list.
std::vector<std::uint64_t> all_subsets_lex(int k) {
    std::vector<std::uint64_t> out;
    for (std::uint64_t m = 1; m < (std::uint64_t{1} << k); ++m) out.push_back(m);
    auto key = [](std::uint64_t m) {
        std::vector<int> members;
        for (int i = 0; i < 64; ++i)
            if (m >> i & 1) members.push_back(i);
        return members;
    };
    std::sort(out.begin(), out.end(), [&](auto x, auto y) { return key(x) < key(y); });
    return out;
}

void check_order(int n, const std::string& what) {
    if (n > Graph::max_order) {
        throw std::length_error(what + " needs " + std::to_string(n) + " vertices; graphs are limited to " +
                                std::to_string(Graph::max_order));
    }
}

/// Wire `owner` to the members of `mask`, read as offsets into the block starting at `base`.
void attach(GraphBuilder& b, Vertex owner, std::uint64_t mask, Vertex base) {
    for (int i = 0; i < 64; ++i)
        if (mask >> i & 1) b.add_edge(owner, base + i);
}

Graph layer_graph(int k, int r, bool clique_on_u) {
    const auto layer = subsets_of_size(k, r);
    const int n = k + static_cast<int>(layer.size());
    check_order(n, "Sperner graph for k = " + std::to_string(k));
    GraphBuilder b(n);
    for (int i = 0; i < k; ++i) b.set_label(i, "u" + std::to_string(i + 1));
    for (std::size_t j = 0; j < layer.size(); ++j) {
        const Vertex v = k + static_cast<int>(j);
        b.set_label(v, "v" + std::to_string(j + 1));
        attach(b, v, layer[j], 0);
    }
    if (clique_on_u)
        for (int i = 0; i < k; ++i)
            for (int j = i + 1; j < k; ++j) b.add_edge(i, j);
    return b.build();
}

/// Labels v1..va on indices 0..a-1 and u1.. on the rest.
void label_kp(GraphBuilder& b, int a) {
    for (int i = 0; i < b.order(); ++i) {
        b.set_label(i, i < a ? "v" + std::to_string(i + 1) : "u" + std::to_string(i - a + 1));
    }
}

}  // namespace

ConstructionClaim sperner_extremal(int k) {
    if (k < 1) throw std::invalid_argument("sperner_extremal needs k >= 1");
    Graph g = layer_graph(k, (k + 1) / 2, false);
    return {"sperner-extremal", g, {{ClaimParameter::gamma_sld, k}, {ClaimParameter::order, g.order()}}};
}

std::pair<ConstructionClaim, ConstructionClaim> complement_gap(int k) {
    if (k < 4) throw std::invalid_argument("complement_gap needs k >= 4");
    Graph g = layer_graph(k, k / 2, true);
    const int layer = static_cast<int>(binomial(k, k / 2));
    ConstructionClaim first{"complement-gap", g, {{ClaimParameter::gamma_sld, layer}, {ClaimParameter::order, g.order()}}};
    Graph h = complement(g);
    ConstructionClaim second{"complement-gap-complement", h, {{ClaimParameter::gamma_sld, k}, {ClaimParameter::order, h.order()}}};
    return {first, second};
}

ConstructionClaim realize_ld_sld(int a, int b) {
    if (a < 1 || b < a || (a < 63 && static_cast<std::uint64_t>(b - a) > (std::uint64_t{1} << a) - 1)) {
        throw Infeasible("no graph has gamma_LD = " + std::to_string(a) + " and gamma_SLD = " + std::to_string(b) +
                         ": need a >= 1 and 0 <= b - a <= 2^a - 1");
    }
    const std::vector<Claim> claims{{ClaimParameter::gamma_ld, a}, {ClaimParameter::gamma_sld, b}};
    const std::string name = "realize-ld-sld";
    const int d = b - a;

    if (d == 0) {
        check_order(a, name);
        return {name, Graph(a), claims};
    }
    if (d == 1) {
        check_order(b, name);
        return {name, Graph::from_edges(b, {{0, 1}}), claims};
    }
    if (a == 2 && b == 4) {
        return {name, Graph::from_edges(5, {{0, 1}, {0, 4}, {1, 2}, {1, 3}, {2, 3}}), claims};
    }
    if (a == 2 && b == 5) {
        return {name, Graph::from_edges(5, {{0, 2}, {0, 3}, {0, 4}, {1, 2}, {1, 3}, {1, 4}, {2, 3}}), claims};
    }

    if (d <= (1 << std::min(a, 30)) - 2) {
        // K = v1..vk, K' = v(k+1)..va, P = u1..u(b+1-a).
        int k = 2;
        while (d > (1 << k) - 2) ++k;
        const int n = b + 1;
        check_order(n, name);
        GraphBuilder g(n);
        label_kp(g, a);
        const Vertex u1 = a;
        for (Vertex v = 0; v < n; ++v)
            if (v != u1) g.add_edge(u1, v);
        for (int i = 2; i <= k + 1; ++i) g.add_edge(a + i - 1, i - 2);
        const std::uint64_t full = (std::uint64_t{1} << k) - 1;
        int next = k + 2;
        for (std::uint64_t s : all_subsets_lex(k)) {
            if (next > d + 1) break;
            if (s == full || std::popcount(s) == 1) continue;
            attach(g, a + next - 1, s, 0);
            ++next;
        }
        if (next != d + 2) throw std::logic_error("realize_ld_sld ran out of distinct neighbourhoods");
        return {name, g.build(), claims};
    }

    // Extremal case d = 2^a - 1: K = v1..va, P = u1..u(b-a).
    const int n = b;
    check_order(n, name);
    std::vector<std::uint64_t> nk(d + 1, 0);  // neighbourhood in K of u_i, 1-based
    nk[1] = (std::uint64_t{1} << a) - 1;
    for (int i = 2; i <= a; ++i) nk[i] = 1 | std::uint64_t{1} << (i - 1);
    int next = a + 1;
    for (std::uint64_t s : all_subsets_lex(a)) {
        if (std::find(nk.begin() + 1, nk.begin() + a + 1, s) != nk.begin() + a + 1) continue;
        nk[next++] = s;
    }
    GraphBuilder g(n);
    label_kp(g, a);
    auto u = [&](int i) { return a + i - 1; };
    for (Vertex v = 1; v < a; ++v) g.add_edge(0, v);
    for (int i = 1; i <= d; ++i) attach(g, u(i), nk[i], 0);
    for (int i = 2; i <= d; ++i)
        if (nk[i] & 1) g.add_edge(u(1), u(i));
    for (int i = 2; i <= a; ++i)
        for (int j = a + 1; j <= d; ++j)
            if (nk[j] >> (i - 1) & 1) g.add_edge(u(i), u(j));
    return {name, g.build(), claims};
}

ConstructionClaim realize_ld_dld(int a, int b) {
    auto slack = [](int x) -> long long {
        if (x >= 62) return (1LL << 62);
        return (1LL << x) - 1 - static_cast<long long>(binomial(x, (x + 1) / 2));
    };
    if (a < 1 || b < a || b - a > slack(a)) {
        throw Infeasible("no graph has gamma_LD = " + std::to_string(a) + " and gamma_DLD = " + std::to_string(b) +
                         ": need a >= 1 and 0 <= b - a <= 2^a - 1 - C(a, ceil(a/2))");
    }
    const std::vector<Claim> claims{{ClaimParameter::gamma_ld, a}, {ClaimParameter::gamma_dld, b}};
    const std::string name = "realize-ld-dld";
    const int d = b - a;

    if (d == 0) {
        check_order(a + 1, name);
        GraphBuilder g(a + 1);
        for (Vertex v = 1; v <= a; ++v) g.add_edge(0, v);
        return {name, g.build(), claims};
    }

    int k = 2;
    while (d > slack(k)) ++k;
    const int middle = static_cast<int>(binomial(k, (k + 1) / 2));
    const int p = d + middle;
    const int n = a + p;
    check_order(n, name);

    GraphBuilder g(n);
    label_kp(g, a);
    auto u = [&](int i) { return a + i - 1; };
    for (Vertex i = 0; i < a; ++i)
        for (Vertex j = i + 1; j < a; ++j) g.add_edge(i, j);
    for (Vertex v = 0; v < a; ++v) g.add_edge(u(1), v);

    std::vector<std::uint64_t> used{(std::uint64_t{1} << k) - 1};
    int i = 2;
    for (std::uint64_t s : subsets_of_size(k, k / 2)) {
        attach(g, u(i++), s, 0);
        used.push_back(s);
    }
    if (k >= 4) {
        for (int j = 0; j < k; ++j) {
            attach(g, u(i++), std::uint64_t{1} << j, 0);
            used.push_back(std::uint64_t{1} << j);
        }
    }
    for (std::uint64_t s : all_subsets_lex(k)) {
        if (i > p) break;
        if (std::find(used.begin(), used.end(), s) != used.end()) continue;
        attach(g, u(i++), s, 0);
    }
    if (i != p + 1) throw std::logic_error("realize_ld_dld ran out of distinct neighbourhoods");
    return {name, g.build(), claims};
}

std::string claims_json(const ConstructionClaim& c) {
    nlohmann::ordered_json j;
    j["name"] = c.name;
    j["graph6"] = emit_graph6(c.graph);
    j["n"] = c.graph.order();
    nlohmann::ordered_json claims = nlohmann::ordered_json::object();
    for (const auto& cl : c.claims) claims[to_string(cl.parameter)] = cl.value;
    j["claims"] = claims;
    return j.dump(2);
}

}  // namespace locdom
