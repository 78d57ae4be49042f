#pragma once

// Deliberately naive graph6 decoder used as a test oracle. It expands every
// data byte into a bit string and walks the upper triangle column by column,
// sharing no code with the library.

#include <set>
#include <stdexcept>
#include <string>
#include <utility>

namespace reference {

struct DecodedGraph {
    int n = 0;
    std::set<std::pair<int, int>> edges;  // (i, j) with i < j
};

inline DecodedGraph decode_graph6(const std::string& text) {
    std::string s = text;
    const std::string header = ">>graph6<<";
    if (s.rfind(header, 0) == 0) s = s.substr(header.size());
    if (s.empty()) throw std::invalid_argument("empty");
    std::size_t pos = 0;
    DecodedGraph g;
    if (s[0] != '~') {
        g.n = s[0] - 63;
        pos = 1;
    } else {
        if (s.size() < 4) throw std::invalid_argument("short size");
        g.n = ((s[1] - 63) << 12) | ((s[2] - 63) << 6) | (s[3] - 63);
        pos = 4;
    }
    std::string bits;
    for (; pos < s.size(); ++pos) {
        int value = s[pos] - 63;
        if (value < 0 || value > 63) throw std::invalid_argument("bad byte");
        for (int b = 5; b >= 0; --b) bits.push_back(((value >> b) & 1) ? '1' : '0');
    }
    std::size_t k = 0;
    for (int j = 1; j < g.n; ++j) {
        for (int i = 0; i < j; ++i) {
            if (k >= bits.size()) throw std::invalid_argument("truncated");
            if (bits[k++] == '1') g.edges.insert({i, j});
        }
    }
    return g;
}

}  // namespace reference
