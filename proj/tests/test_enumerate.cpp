#include <doctest.h>

#include <set>

#include <locdom/enumerate.hpp>
#include <locdom/graph_io.hpp>

#include "helpers.hpp"

using namespace locdom;

TEST_CASE("labeled graphs follow the graph6 pair order") {
    CHECK(labeled_graph_count(4) == 64);
    CHECK(labeled_graph(3, 0b001) == Graph::from_edges(3, {{0, 1}}));
    CHECK(labeled_graph(3, 0b010) == Graph::from_edges(3, {{0, 2}}));
    CHECK(labeled_graph(3, 0b100) == Graph::from_edges(3, {{1, 2}}));
    std::set<std::string> seen;
    for_each_labeled_graph(4, [&](const Graph& g) { seen.insert(emit_graph6(g)); });
    CHECK(seen.size() == 64);
}

TEST_CASE("Pruefer decoding") {
    std::vector<int> star_seq{3, 3, 3};
    CHECK(tree_from_pruefer(5, star_seq) == Graph::from_edges(5, {{0, 3}, {1, 3}, {2, 3}, {3, 4}}));
    std::vector<int> path_seq{1, 2};
    CHECK(tree_from_pruefer(4, path_seq) == Graph::from_edges(4, {{0, 1}, {1, 2}, {2, 3}}));
    CHECK(tree_from_pruefer(2, {}) == Graph::from_edges(2, {{0, 1}}));
}

TEST_CASE("all labeled trees are distinct trees, n^(n-2) of them") {
    for (int n = 2; n <= 7; ++n) {
        std::set<std::string> seen;
        std::uint64_t count = 0;
        for_each_labeled_tree(n, [&](const Graph& t) {
            CHECK(is_tree(t));
            seen.insert(emit_graph6(t));
            ++count;
        });
        std::uint64_t expected = 1;
        for (int i = 0; i < n - 2; ++i) expected *= n;
        CHECK(count == expected);
        CHECK(seen.size() == expected);
    }
}

TEST_CASE("free trees match the isomorphism class counts") {
    const int counts[] = {0, 1, 1, 1, 2, 3, 6, 11, 23, 47, 106, 235};
    for (int n = 1; n <= 11; ++n) {
        auto trees = free_trees(n);
        CHECK(static_cast<int>(trees.size()) == counts[n]);
        std::set<std::string> forms;
        for (const auto& t : trees) {
            CHECK(is_tree(t));
            CHECK(t.order() == n);
            forms.insert(tree_canonical_form(t));
        }
        CHECK(static_cast<int>(forms.size()) == counts[n]);
    }
}

TEST_CASE("canonical forms collapse the labeled trees onto the free trees") {
    for (int n = 2; n <= 7; ++n) {
        std::set<std::string> labeled, free;
        for_each_labeled_tree(n, [&](const Graph& t) { labeled.insert(tree_canonical_form(t)); });
        for (const auto& t : free_trees(n)) free.insert(tree_canonical_form(t));
        CHECK(labeled == free);
    }
}
