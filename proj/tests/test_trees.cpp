#include <doctest.h>

#include <locdom/enumerate.hpp>
#include <locdom/solvers.hpp>
#include <locdom/trees.hpp>

#include "helpers.hpp"

using namespace locdom;
using namespace testing_support;

TEST_CASE("paths and stars") {
    for (int n = 1; n <= 14; ++n) {
        CHECK(tree_gamma_dld(path(n)).value == (n + 1) / 2);
        if (n >= 2) CHECK(tree_gamma_sld(path(n)).value == (n + 2) / 2);
    }
    for (int n = 3; n <= 10; ++n) {
        CHECK(tree_gamma_dld(star(n)).value == n - 1);
        CHECK(tree_gamma_sld(star(n)).value == n - 1);
    }
    CHECK(tree_gamma_dld(Graph(1)).value == 1);
    CHECK(tree_gamma_sld(Graph(1)).value == 1);
}

TEST_CASE("leaves and support vertices") {
    CHECK(leaf_count(path(5)) == 2);
    CHECK(support_vertex_count(path(5)) == 2);
    CHECK(leaf_count(star(6)) == 5);
    CHECK(support_vertex_count(star(6)) == 1);
}

TEST_CASE("non-trees are rejected") {
    CHECK_THROWS_AS(tree_gamma_dld(cycle(4)), std::invalid_argument);
    CHECK_THROWS_AS(tree_gamma_sld(Graph(3)), std::invalid_argument);
}

TEST_CASE("tree algorithms agree with exhaustive search on every labeled tree, n <= 8") {
    SolverOptions ex;
    ex.method = Method::exhaustive;
    for (int n = 2; n <= 8; ++n) {
        for_each_labeled_tree(n, [&](const Graph& t) {
            auto d = tree_gamma_dld(t);
            auto s = tree_gamma_sld(t);
            REQUIRE(d.method == Method::tree_linear);
            REQUIRE(d.value == exhaustive_minimum_code(t, CodeKind::dld, ex).value);
            REQUIRE(s.value == exhaustive_minimum_code(t, CodeKind::sld, ex).value);
            REQUIRE(is_code(t, d.witness, CodeKind::dld));
            REQUIRE(is_code(t, s.witness, CodeKind::sld));
            REQUIRE(d.witness.size() == d.value);
            REQUIRE(s.witness.size() == s.value);
        });
    }
}

TEST_CASE("larger free trees against branch and bound") {
    for (int n : {11, 12, 13}) {
        for (const auto& t : free_trees(n)) {
            REQUIRE(tree_gamma_dld(t).value == minimum_code(t, CodeKind::dld).value);
            REQUIRE(tree_gamma_sld(t).value == minimum_code(t, CodeKind::sld).value);
        }
    }
}

TEST_CASE("linear algorithms handle 64 vertices") {
    CHECK(tree_gamma_dld(path(64)).value == 32);
    CHECK(tree_gamma_sld(path(64)).value == 33);
}
