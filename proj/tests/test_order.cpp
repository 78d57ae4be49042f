#include <doctest.h>

#include <locdom/enumerate.hpp>
#include <locdom/order.hpp>

#include "helpers.hpp"

using namespace locdom;
using namespace testing_support;

namespace {

// Width by brute force: the largest set of pairwise incomparable ∼-classes.
int brute_width(const Graph& g) {
    const int n = g.order();
    auto leq = [&](Vertex x, Vertex y) { return g.neighbors(x).subset_of(g.closed_neighbors(y)); };
    int best = 0;
    for (std::uint64_t bits = 1; bits < (std::uint64_t{1} << n); ++bits) {
        VertexSet s(bits);
        bool ok = true;
        for (Vertex x : s)
            for (Vertex y : s)
                if (x != y && leq(x, y)) ok = false;
        if (ok) best = std::max(best, s.size());
    }
    return best;
}

}  // namespace

TEST_CASE("vicinal preorder") {
    Graph p = path(4);
    VicinalPreorder pre(p);
    CHECK(pre.leq(0, 2));   // N(0) = {1} ⊆ N[2]
    CHECK_FALSE(pre.leq(2, 0));
    CHECK(pre.leq(0, 1));
    CHECK(pre.equivalent(0, 0));
    CHECK(dilworth_number(p) == 2);
    CHECK(dilworth_number(cycle(5)) == 5);
    CHECK(dilworth_number(complete(4)) == 1);
    CHECK(dilworth_number(Graph(4)) == 1);
}

TEST_CASE("twins") {
    Graph k = complete(3);
    CHECK(twins(k, 0, 1) == TwinKind::true_twins);
    CHECK(twins(star(4), 1, 2) == TwinKind::false_twins);
    CHECK(twins(path(4), 0, 3) == TwinKind::not_twins);
    CHECK_THROWS_AS(twins(k, 1, 1), std::invalid_argument);
    CHECK(is_twin_free(path(4)));
    CHECK_FALSE(is_twin_free(star(3)));
}

TEST_CASE("Dilworth width matches brute force, with valid witnesses") {
    for (int n = 1; n <= 6; ++n) {
        for_each_labeled_graph(n, [&](const Graph& g) {
            auto d = dilworth(g);
            REQUIRE(d.width == brute_width(g));
            VertexSet covered;
            for (auto c : d.chains) covered |= c;
            REQUIRE(covered == g.vertices());
            // threshold recognition cross-checks peel-off internally
            REQUIRE(is_threshold(g) == (d.width == 1));
        });
    }
}

TEST_CASE("counting bounds") {
    CHECK(binomial(6, 3) == 20);
    CHECK(binomial(4, 5) == 0);
    CHECK(binomial(66, 33) == 7219428434016265740ULL);
    CHECK_THROWS_AS(binomial(70, 35), std::overflow_error);
    CHECK(sperner_capacity(3) == 6);
    CHECK(sperner_capacity(4) == 10);
    CHECK(sperner_lower_bound(6) == 3);
    CHECK(sperner_lower_bound(7) == 4);
    CHECK(sperner_lower_bound(1) == 1);
    CHECK(ld_order_lower_bound(10) == 3);
    CHECK(ld_order_lower_bound(11) == 4);
    CHECK_THROWS_AS(sperner_lower_bound(0), std::invalid_argument);
}
