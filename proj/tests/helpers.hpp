#pragma once

#include <locdom/generators.hpp>
#include <locdom/graph.hpp>
#include <locdom/graph_io.hpp>

namespace testing_support {

// P3 x P2 with a b c on one side and d e f on the other.
inline locdom::Graph six_vertex_example() {
    return locdom::Graph::from_edges(6, {{0, 1}, {0, 3}, {1, 2}, {1, 4}, {2, 5}, {3, 4}, {4, 5}});
}

inline locdom::Graph path(int n) { return locdom::generate(locdom::GraphFamily::path(n)); }
inline locdom::Graph cycle(int n) { return locdom::generate(locdom::GraphFamily::cycle(n)); }
inline locdom::Graph complete(int n) { return locdom::generate(locdom::GraphFamily::complete(n)); }
inline locdom::Graph star(int n) { return locdom::generate(locdom::GraphFamily::star(n)); }
inline locdom::Graph ladder(int n) { return locdom::generate(locdom::GraphFamily::ladder(n)); }

}  // namespace testing_support
