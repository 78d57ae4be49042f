#pragma once

#include <optional>
#include <string>
#include <vector>

#include "locdom/codes.hpp"
#include "locdom/graph.hpp"

namespace locdom {

/// One entry per codeword, in increasing vertex order: 2 if the codeword is
/// faulty, 1 if a neighbour is, otherwise 0.
using ReportVector = std::vector<int>;

ReportVector sensor_reports(const Graph& g, const Code& c, VertexSet faults);

enum class OutcomeTag { located, multiple_or_inconsistent, nothing };
std::string to_string(OutcomeTag t);

struct LocationOutcome {
    OutcomeTag tag = OutcomeTag::nothing;
    /// Set for located.
    std::optional<Vertex> vertex;
    /// Codewords reporting 2.
    std::vector<Vertex> confirmed_faults;
};

/// solid: candidates are ⋂ N[c] over the codewords reporting 1, minus C.
/// self: the same intersection without removing C.
enum class DecodeMode { solid, self };

/// Decode a report vector. A located answer is only given after re-simulating
/// the single fault and reproducing `reports` exactly; a lone 2-report is
/// accepted under the same test. Throws std::invalid_argument when the vector
/// does not match the code size or holds values outside 0..2.
LocationOutcome locate(const Graph& g, const Code& c, const ReportVector& reports, DecodeMode mode = DecodeMode::solid);

struct Scenario {
    Graph graph;
    Code code;
    VertexSet faults;
    DecodeMode mode = DecodeMode::solid;
};

/// {"graph6": "...", "code": [...], "faults": [...], "mode": "solid"|"self"}
Scenario parse_scenario(const std::string& json_text);

/// {"reports": {...}, "outcome": ..., "vertex": ..., "confirmed_faults": [...]}
std::string simulate_scenario_json(const Scenario& s);

}  // namespace locdom
