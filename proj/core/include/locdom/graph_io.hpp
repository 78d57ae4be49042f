#pragma once

#include <cstddef>
#include <istream>
#include <optional>
#include <string>
#include <string_view>

#include "locdom/graph.hpp"

namespace locdom {

/// Decode one graph6 record (optional ">>graph6<<" header, no trailing newline).
/// Throws ParseError carrying the offending byte offset.
Graph parse_graph6(std::string_view text);

/// Encode as graph6. Orders up to 62 use the one-byte size prefix; 63 and 64
/// use the four-byte form.
std::string emit_graph6(const Graph& g);

/// Edge-list text: a "n m" header followed by m lines "u v". Blank lines and
/// '#' comments are ignored. Errors report 1-based line numbers.
Graph parse_edge_list(std::string_view text);
std::string emit_edge_list(const Graph& g);

/// Streams graph6 records from a text source, one per line, skipping blank
/// lines and '#' comments.
class Graph6Reader {
  public:
    explicit Graph6Reader(std::istream& in) : in_(in) {}

    /// Next graph, or nullopt at end of input. Throws ParseError with the
    /// line number on malformed records.
    std::optional<Graph> next();
    std::size_t line() const { return line_; }

  private:
    std::istream& in_;
    std::size_t line_ = 0;
};

/// Load a single graph from a file holding either one graph6 record or an edge list.
Graph load_graph_file(const std::string& path);

}  // namespace locdom
