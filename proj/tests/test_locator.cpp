#include <doctest.h>

#include <json.hpp>

#include <locdom/enumerate.hpp>
#include <locdom/errors.hpp>
#include <locdom/locator.hpp>

#include "helpers.hpp"

using namespace locdom;
using namespace testing_support;

TEST_CASE("reports") {
    Graph g = six_vertex_example();
    Code c{1, 3, 5};
    CHECK(sensor_reports(g, c, {}) == ReportVector{0, 0, 0});
    CHECK(sensor_reports(g, c, {0}) == ReportVector{1, 1, 0});
    CHECK(sensor_reports(g, c, {4}) == ReportVector{1, 1, 1});
    CHECK(sensor_reports(g, c, {3}) == ReportVector{0, 2, 0});
    CHECK(sensor_reports(g, c, {0, 2}) == ReportVector{1, 1, 1});
    CHECK_THROWS_AS(sensor_reports(g, c, {6}), std::out_of_range);
}

TEST_CASE("a locating code mistakes two faults for one") {
    Graph g = six_vertex_example();
    Code c{1, 3, 5};
    auto out = locate(g, c, sensor_reports(g, c, {0, 2}));
    CHECK(out.tag == OutcomeTag::located);
    CHECK(out.vertex == 4);
}

TEST_CASE("an SLD code refuses the same pair") {
    Graph g = six_vertex_example();
    Code c{0, 2, 3, 5};
    auto out = locate(g, c, sensor_reports(g, c, {1, 4}));
    CHECK(out.tag == OutcomeTag::multiple_or_inconsistent);
    CHECK(locate(g, c, sensor_reports(g, c, {1})).vertex == 1);
    CHECK(locate(g, c, sensor_reports(g, c, {})).tag == OutcomeTag::nothing);
}

TEST_CASE("codeword faults") {
    Graph g = six_vertex_example();
    Code c{0, 2, 3, 5};
    auto one = locate(g, c, sensor_reports(g, c, {3}));
    CHECK(one.tag == OutcomeTag::located);
    CHECK(one.vertex == 3);
    CHECK(one.confirmed_faults == std::vector<Vertex>{3});
    auto two = locate(g, c, sensor_reports(g, c, {0, 5}));
    CHECK(two.tag == OutcomeTag::multiple_or_inconsistent);
    CHECK(two.confirmed_faults == std::vector<Vertex>{0, 5});
}

TEST_CASE("bad report vectors") {
    Graph g = path(3);
    Code c{1};
    CHECK_THROWS_AS(locate(g, c, {0, 0}), std::invalid_argument);
    CHECK_THROWS_AS(locate(g, c, {3}), std::invalid_argument);
}

TEST_CASE("SLD codes: single faults are located and no non-faulty vertex ever is, n <= 6") {
    for (int n = 1; n <= 6; ++n) {
        for_each_labeled_graph(n, [&](const Graph& g) {
            for (std::uint64_t bits = 1; bits < (std::uint64_t{1} << n); ++bits) {
                Code c{VertexSet(bits)};
                if (!is_code(g, c, CodeKind::sld)) continue;
                for (Vertex u : g.vertices()) {
                    auto out = locate(g, c, sensor_reports(g, c, VertexSet::single(u)));
                    REQUIRE(out.tag == OutcomeTag::located);
                    REQUIRE(out.vertex == u);
                    for (Vertex w : g.vertices()) {
                        VertexSet f{u, w};
                        auto o = locate(g, c, sensor_reports(g, c, f));
                        if (o.tag == OutcomeTag::located) REQUIRE(f.contains(*o.vertex));
                    }
                }
            }
        });
    }
}

TEST_CASE("self mode keeps codewords among the candidates") {
    Graph g = six_vertex_example();
    Code c{0, 2, 3, 5};
    CHECK(locate(g, c, sensor_reports(g, c, {1}), DecodeMode::self).vertex == 1);
    CHECK(locate(g, c, sensor_reports(g, c, {4}), DecodeMode::self).vertex == 4);
    // on P3 with code {0, 1} the fault at 2 is only pinned down once codewords are excluded
    Graph p = path(3);
    Code d{0, 1};
    auto reports = sensor_reports(p, d, {2});
    CHECK(locate(p, d, reports, DecodeMode::solid).vertex == 2);
    CHECK(locate(p, d, reports, DecodeMode::self).tag == OutcomeTag::multiple_or_inconsistent);
}

TEST_CASE("scenarios") {
    auto s = parse_scenario(R"({"graph6": "EkSg", "code": [1, 3, 5], "faults": [0, 2]})");
    CHECK(s.graph == six_vertex_example());
    CHECK(s.mode == DecodeMode::solid);
    auto j = nlohmann::json::parse(simulate_scenario_json(s));
    CHECK(j["outcome"] == "located");
    CHECK(j["vertex"] == 4);
    CHECK(j["reports"]["3"] == 1);

    CHECK_THROWS_AS(parse_scenario("{"), ParseError);
    CHECK_THROWS_AS(parse_scenario(R"({"code": [1], "faults": []})"), std::invalid_argument);
    CHECK_THROWS_AS(parse_scenario(R"({"graph6": "A_", "code": [], "faults": []})"), std::invalid_argument);
    CHECK_THROWS_AS(parse_scenario(R"({"graph6": "A_", "code": [2], "faults": []})"), std::out_of_range);
    CHECK_THROWS_AS(parse_scenario(R"({"graph6": "A_", "code": [0], "faults": [], "mode": "x"})"),
                    std::invalid_argument);
    CHECK_THROWS_AS(parse_scenario(R"({"graph6": "A", "code": [0], "faults": []})"), ParseError);
}
