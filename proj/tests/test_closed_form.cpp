#include <doctest.h>

#include <locdom/closed_form.hpp>
#include <locdom/errors.hpp>
#include <locdom/solvers.hpp>

using namespace locdom;

namespace {

int cf(ClosedFormFamily f, std::vector<int> p, CodeKind k) { return closed_form({f, std::move(p), k}); }

void agrees(ClosedFormFamily f, std::vector<int> p, CodeKind k) {
    ClosedFormQuery q{f, p, k};
    CAPTURE(to_string(f));
    CAPTURE(to_string(k));
    CAPTURE(p[0]);
    CHECK(closed_form(q) == minimum_code(closed_form_graph(q), k).value);
}

}  // namespace

TEST_CASE("known values") {
    CHECK(cf(ClosedFormFamily::path, {7}, CodeKind::sld) == 4);
    CHECK(cf(ClosedFormFamily::path, {7}, CodeKind::dld) == 4);
    CHECK(cf(ClosedFormFamily::cycle, {9}, CodeKind::sld) == 5);
    CHECK(cf(ClosedFormFamily::ladder, {5}, CodeKind::sld) == 6);
    CHECK(cf(ClosedFormFamily::ladder, {4}, CodeKind::sld) == 6);
    CHECK(cf(ClosedFormFamily::ladder, {4}, CodeKind::dld) == 4);
    CHECK(cf(ClosedFormFamily::ladder, {1}, CodeKind::dom2) == 2);
    CHECK(cf(ClosedFormFamily::complete, {6}, CodeKind::sld) == 6);
    CHECK(cf(ClosedFormFamily::rook, {4, 2}, CodeKind::sld) == 4);
    CHECK(cf(ClosedFormFamily::discrete, {3}, CodeKind::dld) == 3);
}

TEST_CASE("outside the proved ranges nothing is returned") {
    CHECK_THROWS_AS(cf(ClosedFormFamily::cycle, {4}, CodeKind::sld), NotAvailable);
    CHECK_THROWS_AS(cf(ClosedFormFamily::path, {1}, CodeKind::sld), NotAvailable);
    CHECK_THROWS_AS(cf(ClosedFormFamily::ladder, {1}, CodeKind::sld), NotAvailable);
    CHECK_THROWS_AS(cf(ClosedFormFamily::rook, {3, 2}, CodeKind::sld), NotAvailable);
    CHECK_THROWS_AS(cf(ClosedFormFamily::path, {5}, CodeKind::ld), NotAvailable);
    CHECK_THROWS_AS(cf(ClosedFormFamily::complete, {4}, CodeKind::dld), NotAvailable);
    CHECK_THROWS_AS(parse_closed_form_family("hypercube"), std::invalid_argument);
}

TEST_CASE("closed forms agree with the solver") {
    for (int n = 1; n <= 16; ++n) {
        if (n >= 2) agrees(ClosedFormFamily::path, {n}, CodeKind::sld);
        agrees(ClosedFormFamily::path, {n}, CodeKind::dld);
        agrees(ClosedFormFamily::path, {n}, CodeKind::dom2);
    }
    for (int t = 5; t <= 16; ++t) {
        agrees(ClosedFormFamily::cycle, {t}, CodeKind::sld);
        agrees(ClosedFormFamily::cycle, {t}, CodeKind::dld);
    }
    for (int n = 1; n <= 9; ++n) {
        if (n >= 2) agrees(ClosedFormFamily::ladder, {n}, CodeKind::sld);
        agrees(ClosedFormFamily::ladder, {n}, CodeKind::dld);
        agrees(ClosedFormFamily::ladder, {n}, CodeKind::dom2);
    }
    for (int m = 1; m <= 8; ++m) agrees(ClosedFormFamily::complete, {m}, CodeKind::sld);
    for (int n = 1; n <= 6; ++n) agrees(ClosedFormFamily::discrete, {n}, CodeKind::dld);
    agrees(ClosedFormFamily::rook, {2, 1}, CodeKind::sld);
    agrees(ClosedFormFamily::rook, {4, 2}, CodeKind::sld);
    agrees(ClosedFormFamily::rook, {5, 2}, CodeKind::sld);
    agrees(ClosedFormFamily::rook, {6, 3}, CodeKind::sld);
    agrees(ClosedFormFamily::rook, {7, 3}, CodeKind::sld);
}

TEST_CASE("family names") {
    for (auto f : {ClosedFormFamily::path, ClosedFormFamily::cycle, ClosedFormFamily::ladder,
                   ClosedFormFamily::complete, ClosedFormFamily::rook, ClosedFormFamily::discrete})
        CHECK(parse_closed_form_family(to_string(f)) == f);
}
