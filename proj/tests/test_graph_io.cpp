#include <doctest.h>

#include <fstream>
#include <random>
#include <sstream>

#include <locdom/errors.hpp>
#include <locdom/graph_io.hpp>

#include "helpers.hpp"
#include "reference_graph6.hpp"

using namespace locdom;
using namespace testing_support;

namespace {

std::size_t parse_offset(const std::string& text) {
    try {
        parse_graph6(text);
    } catch (const ParseError& e) {
        return e.offset();
    }
    FAIL("expected a parse error for " << text);
    return 0;
}

std::size_t edge_list_line(const std::string& text) {
    try {
        parse_edge_list(text);
    } catch (const ParseError& e) {
        return e.offset();
    }
    FAIL("expected a parse error");
    return 0;
}

}  // namespace

TEST_CASE("known graph6 strings") {
    CHECK(emit_graph6(six_vertex_example()) == "EkSg");
    CHECK(parse_graph6("EkSg") == six_vertex_example());
    CHECK(parse_graph6(">>graph6<<EkSg") == six_vertex_example());
    CHECK(emit_graph6(Graph(1)) == "@");
    CHECK(emit_graph6(path(2)) == "A_");
    CHECK(emit_graph6(Graph(2)) == "A?");
    CHECK(emit_graph6(complete(4)) == "C~");
}

TEST_CASE("graph6 errors carry byte offsets") {
    CHECK(parse_offset("") == 0);
    CHECK(parse_offset("A") == 1);       // body missing
    CHECK(parse_offset("A_?") == 2);     // trailing byte
    CHECK(parse_offset("A`") == 1);      // padding bit set
    CHECK(parse_offset("E kSg") == 1);   // byte below 63
    CHECK(parse_offset("?") == 0);       // order zero
    CHECK_THROWS_AS(parse_graph6("~?~"), ParseError);
    CHECK_THROWS_AS(parse_graph6("~~??????"), ParseError);
}

TEST_CASE("four-byte size prefix for 63 and 64 vertices") {
    for (int n : {62, 63, 64}) {
        Graph g = cycle(n);
        std::string s = emit_graph6(g);
        CHECK((s[0] == '~') == (n >= 63));
        CHECK(parse_graph6(s) == g);
        auto ref = reference::decode_graph6(s);
        CHECK(ref.n == n);
        CHECK(static_cast<int>(ref.edges.size()) == n);
    }
}

TEST_CASE("random round trips agree with the reference decoder") {
    std::mt19937_64 rng(7);
    for (int trial = 0; trial < 300; ++trial) {
        int n = std::uniform_int_distribution<int>(1, 64)(rng);
        double p = std::uniform_real_distribution<double>(0, 1)(rng);
        GraphBuilder b(n);
        std::set<std::pair<int, int>> edges;
        for (int j = 1; j < n; ++j)
            for (int i = 0; i < j; ++i)
                if (std::bernoulli_distribution(p)(rng)) {
                    b.add_edge(i, j);
                    edges.insert({i, j});
                }
        Graph g = b.build();
        std::string s = emit_graph6(g);
        auto ref = reference::decode_graph6(s);
        REQUIRE(ref.n == n);
        REQUIRE(ref.edges == edges);
        REQUIRE(parse_graph6(s) == g);
    }
}

TEST_CASE("edge lists") {
    std::ifstream in(std::string(LOCDOM_TEST_DATA) + "/grid.edges");
    std::stringstream text;
    text << in.rdbuf();
    Graph g = parse_edge_list(text.str());
    CHECK(g == six_vertex_example());
    CHECK(parse_edge_list(emit_edge_list(g)) == g);
    CHECK(edge_list_line("") == 1);
    CHECK(edge_list_line("3 1\n0 1\n1 2\n") == 1);
    CHECK(edge_list_line("3 2\n0 1\n1 1\n") == 3);
    CHECK(edge_list_line("3 2\n0 1\n1 0\n") == 3);
    CHECK(edge_list_line("3 1\n\n# note\n0 7\n") == 4);
    CHECK(edge_list_line("3 1\n0 x\n") == 2);
}

TEST_CASE("streaming reader reports line numbers") {
    std::istringstream ok("# header\nEkSg\n\nA_\n");
    Graph6Reader r(ok);
    CHECK(r.next() == six_vertex_example());
    CHECK(r.next() == path(2));
    CHECK_FALSE(r.next().has_value());

    std::istringstream bad("A_\nA~\n");
    Graph6Reader r2(bad);
    CHECK(r2.next().has_value());
    try {
        r2.next();
        FAIL("expected a parse error");
    } catch (const ParseError& e) {
        CHECK(e.offset() == 2);
    }
}

TEST_CASE("graph files") {
    const std::string dir = LOCDOM_TEST_DATA;
    CHECK(load_graph_file(dir + "/grid.edges") == six_vertex_example());
    CHECK_THROWS_AS(load_graph_file(dir + "/small.g6"), ParseError);
    CHECK_THROWS_AS(load_graph_file(dir + "/missing.g6"), std::runtime_error);
}
