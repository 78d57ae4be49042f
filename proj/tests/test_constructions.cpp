#include <doctest.h>

#include <json.hpp>

#include <locdom/constructions.hpp>
#include <locdom/enumerate.hpp>
#include <locdom/errors.hpp>
#include <locdom/harness.hpp>
#include <locdom/order.hpp>
#include <locdom/solvers.hpp>

using namespace locdom;

namespace {

void all_claims_hold(const ConstructionClaim& c) {
    CAPTURE(c.name);
    for (const auto& check : verify_claims(c)) {
        CAPTURE(to_string(check.parameter));
        CHECK(check.claimed == check.computed);
    }
}

}  // namespace

TEST_CASE("Sperner graphs reach the order bound") {
    for (int k = 3; k <= 5; ++k) {
        auto c = sperner_extremal(k);
        CHECK(static_cast<std::uint64_t>(c.graph.order()) == sperner_capacity(k));
        all_claims_hold(c);
    }
    CHECK(sperner_extremal(6).graph.order() == 26);
    CHECK_THROWS_AS(sperner_extremal(8), std::length_error);
}

TEST_CASE("no graph on four vertices has an SLD code with two codewords") {
    // which is why the k = 2 Sperner instance cannot meet its claim
    for_each_labeled_graph(4, [](const Graph& g) { REQUIRE(minimum_code(g, CodeKind::sld).value > 2); });
    auto c = sperner_extremal(2);
    CHECK(c.graph.order() == 4);
}

TEST_CASE("complement gap") {
    for (int k = 4; k <= 5; ++k) {
        auto [g, h] = complement_gap(k);
        CHECK(h.graph == complement(g.graph));
        all_claims_hold(g);
        all_claims_hold(h);
    }
    CHECK_THROWS_AS(complement_gap(3), std::invalid_argument);
}

TEST_CASE("LD versus SLD realizations") {
    for (int a = 1; a <= 3; ++a) {
        for (int b = a; b <= a + (1 << a) - 1; ++b) {
            auto c = realize_ld_sld(a, b);
            if (c.graph.order() > 16) continue;
            all_claims_hold(c);
        }
    }
    CHECK(realize_ld_sld(3, 10).graph.order() == 10);   // 2^a + a - 1
    CHECK(realize_ld_sld(4, 8).graph.order() == 9);     // b + 1 below the extreme
    CHECK_THROWS_AS(realize_ld_sld(2, 6), Infeasible);
    CHECK_THROWS_AS(realize_ld_sld(3, 2), Infeasible);
    CHECK_THROWS_AS(realize_ld_sld(0, 0), Infeasible);
}

TEST_CASE("LD versus DLD realizations") {
    for (int a = 1; a <= 4; ++a) {
        for (int b = a; b <= a + (1 << a) - 1; ++b) {
            std::uint64_t slack = (std::uint64_t{1} << a) - 1 - binomial(a, (a + 1) / 2);
            if (static_cast<std::uint64_t>(b - a) > slack) {
                CHECK_THROWS_AS(realize_ld_dld(a, b), Infeasible);
                continue;
            }
            auto c = realize_ld_dld(a, b);
            if (c.graph.order() > 16) continue;
            all_claims_hold(c);
        }
    }
}

TEST_CASE("claims serialise to JSON") {
    auto j = nlohmann::json::parse(claims_json(realize_ld_sld(2, 4)));
    CHECK(j["graph6"] == "Dj_");
    CHECK(j["n"] == 5);
    CHECK(j["claims"]["gamma_LD"] == 2);
    CHECK(j["claims"]["gamma_SLD"] == 4);
}
