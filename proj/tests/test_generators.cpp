#include <doctest.h>

#include <locdom/generators.hpp>
#include <locdom/order.hpp>

#include "helpers.hpp"

using namespace locdom;
using namespace testing_support;

TEST_CASE("family sizes") {
    CHECK(path(5).size() == 4);
    CHECK(cycle(5).size() == 5);
    CHECK(star(5).size() == 4);
    CHECK(complete(5).size() == 10);
    CHECK(generate(GraphFamily::complete_bipartite(2, 3)).size() == 6);
    CHECK(generate(GraphFamily::discrete(4)).size() == 0);
    CHECK(ladder(4).size() == 10);
    CHECK(ladder(1) == path(2));
}

TEST_CASE("bad parameters are rejected") {
    CHECK_THROWS_AS(generate(GraphFamily::cycle(2)), std::invalid_argument);
    CHECK_THROWS_AS(generate(GraphFamily::path(0)), std::invalid_argument);
    CHECK_THROWS_AS(generate(GraphFamily::ladder(33)), std::invalid_argument);
    CHECK_THROWS_AS(generate({Family::complete_bipartite, {3}}), std::invalid_argument);
    CHECK_THROWS_AS(parse_threshold_steps("iux"), std::invalid_argument);
    CHECK_THROWS_AS(parse_family("hexagon"), std::invalid_argument);
}

TEST_CASE("family names round trip") {
    for (auto f : {Family::path, Family::cycle, Family::star, Family::complete, Family::complete_bipartite,
                   Family::discrete, Family::ladder, Family::threshold}) {
        CHECK(parse_family(to_string(f)) == f);
    }
    CHECK(parse_family("complete-bipartite") == Family::complete_bipartite);
}

TEST_CASE("threshold sequences build threshold graphs") {
    Graph g = generate(GraphFamily::threshold(parse_threshold_steps("iiuiu")));
    CHECK(g.order() == 5);
    CHECK(g.degree(4) == 4);
    CHECK(g.degree(3) == 1);
    CHECK(g.degree(2) == 3);
    CHECK(is_threshold(g));
}
