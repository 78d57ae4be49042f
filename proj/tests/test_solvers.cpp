#include <doctest.h>

#include <locdom/enumerate.hpp>
#include <locdom/errors.hpp>
#include <locdom/solvers.hpp>

#include "helpers.hpp"

using namespace locdom;
using namespace testing_support;

namespace {

int solve(const Graph& g, CodeKind k) { return minimum_code(g, k).value; }

int brute_independence(const Graph& g, bool distance3) {
    Graph h = distance3 ? square(g) : g;
    int best = 0;
    for (std::uint64_t bits = 1; bits < (std::uint64_t{1} << g.order()); ++bits) {
        VertexSet s(bits);
        bool ok = true;
        for (Vertex v : s)
            if (h.neighbors(v).intersects(s)) ok = false;
        if (ok) best = std::max(best, s.size());
    }
    return best;
}

}  // namespace

TEST_CASE("six-vertex example") {
    Graph g = six_vertex_example();
    CHECK(solve(g, CodeKind::ld) == 3);
    CHECK(solve(g, CodeKind::dld) == 3);
    CHECK(solve(g, CodeKind::sld) == 4);
    auto r = minimum_code(g, CodeKind::sld);
    CHECK(is_code(g, r.witness, CodeKind::sld));
}

TEST_CASE("small families") {
    CHECK(solve(complete(5), CodeKind::sld) == 5);
    CHECK(solve(complete(5), CodeKind::dld) == 4);
    CHECK(solve(Graph(4), CodeKind::dld) == 4);
    CHECK(solve(star(6), CodeKind::dom) == 1);
    CHECK(solve(star(6), CodeKind::dom2) == 5);
    CHECK(solve(path(7), CodeKind::sld) == 4);
    CHECK(solve(cycle(8), CodeKind::dld) == 4);
    CHECK(solve(Graph(1), CodeKind::sld) == 1);
}

TEST_CASE("branch and bound equals exhaustive search, n <= 6") {
    SolverOptions ex;
    ex.method = Method::exhaustive;
    SolverOptions plain;
    plain.theorem_pruning = false;
    for (int n = 1; n <= 6; ++n) {
        for_each_labeled_graph(n, [&](const Graph& g) {
            for (CodeKind k : all_code_kinds) {
                auto a = exhaustive_minimum_code(g, k, ex);
                auto b = minimum_code(g, k);
                auto c = minimum_code(g, k, plain);
                REQUIRE(a.value == b.value);
                REQUIRE(a.value == c.value);
                // Both report the lexicographically smallest optimum.
                REQUIRE(a.witness == b.witness);
                REQUIRE(a.witness == c.witness);
            }
        });
    }
}

TEST_CASE("independence numbers match brute force, n <= 6") {
    for (int n = 1; n <= 6; ++n) {
        for_each_labeled_graph(n, [&](const Graph& g) {
            REQUIRE(independence_number(g).value == brute_independence(g, false));
            REQUIRE(distance3_independence_number(g).value == brute_independence(g, true));
        });
    }
    CHECK(independence_number(cycle(7)).value == 3);
    CHECK(distance3_independence_number(path(7)).value == 3);
}

TEST_CASE("greedy distance-3 construction gives DLD codes") {
    for (int n = 2; n <= 6; ++n) {
        for_each_labeled_graph(n, [&](const Graph& g) {
            if (!is_connected(g)) {
                REQUIRE_THROWS_AS(greedy_3distance_code(g), std::invalid_argument);
                return;
            }
            Code c = greedy_3distance_code(g);
            REQUIRE(is_code(g, c, CodeKind::dld));
            REQUIRE(n - c.size() <= distance3_independence_number(g).value);
        });
    }
}

TEST_CASE("ladder lemma: a 2-dominating set of size n misses part of the first rung") {
    for (int n = 2; n <= 7; ++n) {
        Graph l = ladder(n);
        REQUIRE(two_domination_number(l).value == n);
        // every n-subset that 2-dominates leaves out vertex 0 or vertex 1
        std::vector<Vertex> pick(n);
        for (int i = 0; i < n; ++i) pick[i] = i;
        const int total = 2 * n;
        int seen = 0;
        while (true) {
            Code c = Code::from(pick);
            if (is_code(l, c, CodeKind::dom2)) {
                ++seen;
                REQUIRE_FALSE((c.contains(0) && c.contains(1)));
            }
            int i = n - 1;
            while (i >= 0 && pick[i] == total - n + i) --i;
            if (i < 0) break;
            ++pick[i];
            for (int j = i + 1; j < n; ++j) pick[j] = pick[j - 1] + 1;
        }
        CHECK(seen > 0);
    }
}

TEST_CASE("cap") {
    SolverOptions o;
    o.max_vertices = 5;
    CHECK_THROWS_AS(minimum_code(path(6), CodeKind::sld, o), CapExceeded);
    CHECK_THROWS_AS(exhaustive_minimum_code(path(6), CodeKind::sld, o), CapExceeded);
    CHECK_NOTHROW(minimum_code(path(5), CodeKind::sld, o));
    SolverOptions bad;
    bad.method = Method::tree_linear;
    CHECK_THROWS_AS(minimum_code(path(3), CodeKind::sld, bad), std::invalid_argument);
}

TEST_CASE("lower bound hints do not change the value") {
    Graph g = ladder(5);
    int ld = solve(g, CodeKind::ld);
    SolverOptions o;
    o.lower_bound_hint = ld;
    CHECK(minimum_code(g, CodeKind::dld, o).value == solve(g, CodeKind::dld));
}
