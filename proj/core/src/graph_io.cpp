#include "locdom/graph_io.hpp"

#include <charconv>
#include <fstream>
#include <sstream>
#include <vector>

#include "locdom/errors.hpp"

namespace locdom {

namespace {

constexpr std::string_view graph6_header = ">>graph6<<";

int sextet(std::string_view text, std::size_t pos) {
    unsigned char c = static_cast<unsigned char>(text[pos]);
    if (c < 63 || c > 126) {
        throw ParseError("graph6: byte " + std::to_string(static_cast<int>(c)) +
                             " outside 63..126 at offset " + std::to_string(pos),
                         pos);
    }
    return c - 63;
}

std::string_view trim(std::string_view s) {
    while (!s.empty() && (s.back() == '\r' || s.back() == ' ' || s.back() == '\t')) s.remove_suffix(1);
    while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
    return s;
}

std::string_view strip_comment(std::string_view line) {
    auto hash = line.find('#');
    if (hash != std::string_view::npos) line = line.substr(0, hash);
    return trim(line);
}

std::vector<long long> parse_ints(std::string_view line, std::size_t line_no) {
    std::vector<long long> out;
    std::size_t i = 0;
    while (i < line.size()) {
        while (i < line.size() && (line[i] == ' ' || line[i] == '\t')) ++i;
        if (i == line.size()) break;
        long long value = 0;
        auto [ptr, ec] = std::from_chars(line.data() + i, line.data() + line.size(), value);
        if (ec != std::errc() || (ptr != line.data() + line.size() && *ptr != ' ' && *ptr != '\t')) {
            throw ParseError("edge list: expected integers on line " + std::to_string(line_no), line_no);
        }
        out.push_back(value);
        i = static_cast<std::size_t>(ptr - line.data());
    }
    return out;
}

}  // namespace

Graph parse_graph6(std::string_view text) {
    std::size_t pos = 0;
    if (text.substr(0, graph6_header.size()) == graph6_header) pos = graph6_header.size();
    if (pos >= text.size()) throw ParseError("graph6: empty record", pos);

    long n = 0;
    if (text[pos] == '~') {
        if (pos + 1 < text.size() && text[pos + 1] == '~') {
            throw ParseError("graph6: eight-byte size prefix is not supported (offset " +
                                 std::to_string(pos) + ")",
                             pos);
        }
        if (pos + 4 > text.size()) {
            throw ParseError("graph6: truncated size prefix at offset " + std::to_string(pos), pos);
        }
        for (int i = 1; i <= 3; ++i) n = (n << 6) | sextet(text, pos + i);
        if (n < 63) {
            throw ParseError("graph6: malformed size prefix at offset " + std::to_string(pos), pos);
        }
        pos += 4;
    } else {
        n = sextet(text, pos);
        pos += 1;
    }
    if (n < 1) throw ParseError("graph6: graph must have at least one vertex", 0);
    if (n > Graph::max_order) {
        throw ParseError("graph6: order " + std::to_string(n) + " exceeds supported maximum " +
                             std::to_string(Graph::max_order),
                         0);
    }

    for (std::size_t byte = pos; byte < text.size(); ++byte) (void)sextet(text, byte);
    const long bits = n * (n - 1) / 2;
    const std::size_t body_bytes = static_cast<std::size_t>((bits + 5) / 6);
    if (text.size() - pos < body_bytes) {
        throw ParseError("graph6: record too short, expected " + std::to_string(body_bytes) +
                             " adjacency bytes after offset " + std::to_string(pos),
                         text.size());
    }
    if (text.size() - pos > body_bytes) {
        std::size_t off = pos + body_bytes;
        throw ParseError("graph6: trailing garbage at offset " + std::to_string(off), off);
    }

    GraphBuilder b(static_cast<int>(n));
    long k = 0;
    for (int j = 1; j < n; ++j) {
        for (int i = 0; i < j; ++i, ++k) {
            std::size_t byte = pos + static_cast<std::size_t>(k / 6);
            int shift = 5 - static_cast<int>(k % 6);
            if ((sextet(text, byte) >> shift) & 1) b.add_edge(i, j);
        }
    }
    // Padding bits must be zero for a canonical record.
    if (bits % 6 != 0) {
        int pad = 6 - static_cast<int>(bits % 6);
        std::size_t last = pos + body_bytes - 1;
        if (sextet(text, last) & ((1 << pad) - 1)) {
            throw ParseError("graph6: non-zero padding bits at offset " + std::to_string(last), last);
        }
    }
    return b.build();
}

std::string emit_graph6(const Graph& g) {
    const int n = g.order();
    if (n > Graph::max_order) throw std::invalid_argument("graph6: unsupported order");
    std::string out;
    if (n <= 62) {
        out.push_back(static_cast<char>(n + 63));
    } else {
        out.push_back('~');
        for (int shift = 12; shift >= 0; shift -= 6) out.push_back(static_cast<char>(((n >> shift) & 63) + 63));
    }
    int acc = 0;
    int filled = 0;
    for (int j = 1; j < n; ++j) {
        for (int i = 0; i < j; ++i) {
            acc = (acc << 1) | (g.adjacent(i, j) ? 1 : 0);
            if (++filled == 6) {
                out.push_back(static_cast<char>(acc + 63));
                acc = 0;
                filled = 0;
            }
        }
    }
    if (filled > 0) out.push_back(static_cast<char>((acc << (6 - filled)) + 63));
    return out;
}

Graph parse_edge_list(std::string_view text) {
    std::vector<std::pair<std::size_t, std::vector<long long>>> rows;
    std::size_t line_no = 0;
    std::size_t start = 0;
    while (start <= text.size()) {
        auto end = text.find('\n', start);
        if (end == std::string_view::npos) end = text.size();
        ++line_no;
        auto line = strip_comment(text.substr(start, end - start));
        if (!line.empty()) rows.emplace_back(line_no, parse_ints(line, line_no));
        start = end + 1;
    }
    if (rows.empty()) throw ParseError("edge list: missing \"n m\" header", line_no);
    const auto& [hline, header] = rows.front();
    if (header.size() != 2) throw ParseError("edge list: header must be \"n m\" (line " + std::to_string(hline) + ")", hline);
    long long n = header[0];
    long long m = header[1];
    if (n < 1 || n > Graph::max_order) {
        throw ParseError("edge list: order " + std::to_string(n) + " out of range (line " + std::to_string(hline) + ")", hline);
    }
    if (m < 0 || static_cast<long long>(rows.size()) - 1 != m) {
        throw ParseError("edge list: header announces " + std::to_string(m) + " edges but " +
                             std::to_string(rows.size() - 1) + " edge lines follow (line " + std::to_string(hline) + ")",
                         hline);
    }
    GraphBuilder b(static_cast<int>(n));
    for (std::size_t r = 1; r < rows.size(); ++r) {
        const auto& [ln, vals] = rows[r];
        if (vals.size() != 2) throw ParseError("edge list: expected \"u v\" on line " + std::to_string(ln), ln);
        long long u = vals[0];
        long long v = vals[1];
        if (u < 0 || v < 0 || u >= n || v >= n) {
            throw ParseError("edge list: vertex out of range on line " + std::to_string(ln), ln);
        }
        if (u == v) throw ParseError("edge list: self-loop on line " + std::to_string(ln), ln);
        if (b.build().adjacent(static_cast<int>(u), static_cast<int>(v))) {
            throw ParseError("edge list: duplicate edge on line " + std::to_string(ln), ln);
        }
        b.add_edge(static_cast<int>(u), static_cast<int>(v));
    }
    return b.build();
}

std::string emit_edge_list(const Graph& g) {
    std::ostringstream out;
    auto edges = g.edges();
    out << g.order() << ' ' << edges.size() << '\n';
    for (auto [u, v] : edges) out << u << ' ' << v << '\n';
    return out.str();
}

std::optional<Graph> Graph6Reader::next() {
    std::string raw;
    while (std::getline(in_, raw)) {
        ++line_;
        auto line = strip_comment(raw);
        if (line.empty()) continue;
        try {
            return parse_graph6(line);
        } catch (const ParseError& e) {
            throw ParseError("line " + std::to_string(line_) + ": " + e.what(), line_);
        }
    }
    return std::nullopt;
}

Graph load_graph_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open graph file '" + path + "'");
    std::stringstream buf;
    buf << in.rdbuf();
    std::string text = buf.str();

    // An edge list starts with an all-digit "n m" header; graph6 never contains spaces.
    std::istringstream probe(text);
    std::string raw;
    while (std::getline(probe, raw)) {
        auto line = strip_comment(raw);
        if (line.empty()) continue;
        if (line.find(' ') != std::string_view::npos || line.find('\t') != std::string_view::npos) {
            return parse_edge_list(text);
        }
        break;
    }
    std::istringstream records(text);
    Graph6Reader reader(records);
    auto g = reader.next();
    if (!g) throw ParseError("no graph found in '" + path + "'", reader.line());
    if (reader.next()) {
        throw ParseError("'" + path + "' holds more than one graph; use sweep for multi-record files", reader.line());
    }
    return *g;
}

}  // namespace locdom
