#include "locdom/closed_form.hpp"

#include <stdexcept>

#include "locdom/errors.hpp"
#include "locdom/generators.hpp"

namespace locdom {

std::string to_string(ClosedFormFamily f) {
    switch (f) {
        case ClosedFormFamily::path: return "path";
        case ClosedFormFamily::cycle: return "cycle";
        case ClosedFormFamily::ladder: return "ladder";
        case ClosedFormFamily::complete: return "complete";
        case ClosedFormFamily::rook: return "rook";
        case ClosedFormFamily::discrete: return "discrete";
    }
    return "?";
}

ClosedFormFamily parse_closed_form_family(const std::string& name) {
    for (auto f : {ClosedFormFamily::path, ClosedFormFamily::cycle, ClosedFormFamily::ladder,
                   ClosedFormFamily::complete, ClosedFormFamily::rook, ClosedFormFamily::discrete}) {
        if (name == to_string(f)) return f;
    }
    throw std::invalid_argument("unknown closed-form family '" + name +
                                "' (expected path, cycle, ladder, complete, rook or discrete)");
}

namespace {

[[noreturn]] void unavailable(const ClosedFormQuery& q, const std::string& why) {
    throw NotAvailable("no closed form for " + to_string(q.kind) + " on " + to_string(q.family) + ": " + why);
}

int param(const ClosedFormQuery& q, std::size_t i) {
    const std::size_t want = q.family == ClosedFormFamily::rook ? 2 : 1;
    if (q.params.size() != want) {
        throw std::invalid_argument(to_string(q.family) + " takes " + std::to_string(want) + " parameter(s)");
    }
    if (q.params[i] < 1) throw std::invalid_argument("family parameters must be positive");
    return q.params[i];
}

int half_up(int x) { return (x + 1) / 2; }

}  // namespace

int closed_form(const ClosedFormQuery& q) {
    const int n = param(q, 0);
    switch (q.family) {
        case ClosedFormFamily::path:
            if (q.kind == CodeKind::sld) {
                if (n < 2) unavailable(q, "needs n >= 2");
                return half_up(n + 1);
            }
            if (q.kind == CodeKind::dld) return half_up(n);
            if (q.kind == CodeKind::dom2) return half_up(n + 1);
            break;
        case ClosedFormFamily::cycle:
            if (q.kind == CodeKind::sld || q.kind == CodeKind::dld) {
                if (n < 5) unavailable(q, "needs t >= 5");
                return half_up(n);
            }
            break;
        case ClosedFormFamily::ladder:
            if (q.kind == CodeKind::sld) {
                if (n < 2) unavailable(q, "needs n >= 2");
                return n % 2 == 1 ? n + 1 : n + 2;
            }
            if (q.kind == CodeKind::dld) return n;
            if (q.kind == CodeKind::dom2) return n == 1 ? 2 : n;
            break;
        case ClosedFormFamily::complete:
            if (q.kind == CodeKind::sld) return n;
            break;
        case ClosedFormFamily::rook: {
            const int m2 = param(q, 1);
            if (q.kind == CodeKind::sld) {
                if (n < 2 * m2) unavailable(q, "needs m >= 2n");
                return n;
            }
            break;
        }
        case ClosedFormFamily::discrete:
            if (q.kind == CodeKind::dld) return n;
            break;
    }
    unavailable(q, "this pair is not covered");
}

Graph closed_form_graph(const ClosedFormQuery& q) {
    const int n = param(q, 0);
    switch (q.family) {
        case ClosedFormFamily::path: return generate(GraphFamily::path(n));
        case ClosedFormFamily::cycle: return generate(GraphFamily::cycle(n));
        case ClosedFormFamily::ladder: return generate(GraphFamily::ladder(n));
        case ClosedFormFamily::complete: return generate(GraphFamily::complete(n));
        case ClosedFormFamily::rook:
            return cartesian_product(generate(GraphFamily::complete(n)), generate(GraphFamily::complete(param(q, 1))));
        case ClosedFormFamily::discrete: return generate(GraphFamily::discrete(n));
    }
    throw std::logic_error("unknown closed-form family");
}

}  // namespace locdom
