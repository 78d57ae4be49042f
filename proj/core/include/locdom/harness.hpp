#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "locdom/constructions.hpp"
#include "locdom/graph.hpp"
#include "locdom/solvers.hpp"

namespace locdom {

enum class CheckStatus { pass, fail, not_applicable };
std::string to_string(CheckStatus s);

struct CheckResult {
    std::string id;
    CheckStatus status;
    /// The compared quantities, or the unmet hypothesis for not_applicable.
    std::string detail;
};

struct ParameterTable {
    int n = 0;
    int m = 0;
    int max_degree = 0;
    std::optional<int> girth;
    bool connected = false;
    int nabla = 0;
    int forced_count = 0;
    bool threshold = false;
    bool twin_free = false;
    std::optional<int> beta, beta2, gamma, gamma2, gamma_ld, gamma_dld, gamma_sld, gamma_dld_complement;
    /// Trees only.
    std::optional<int> leaves, support_vertices;
};

struct TheoremReport {
    std::string graph6;
    ParameterTable params;
    std::vector<CheckResult> checks;
    /// False when the solver cap stopped part of the evaluation.
    bool complete = true;

    bool failed() const;
    const CheckResult* find(const std::string& id) const;
};

struct HarnessOptions {
    /// theorem_pruning is forced off: the values under test must not come
    /// from the bounds being tested.
    SolverOptions solver;
};

/// Evaluate every applicable result on g. Hypotheses are checked first and
/// unmet ones give not_applicable.
TheoremReport check_graph(const Graph& g, const HarnessOptions& options = {});

/// Product sandwiches for SLD and DLD on G □ H.
std::vector<CheckResult> check_product(const Graph& g, const Graph& h, const HarnessOptions& options = {});

struct ClaimCheck {
    ClaimParameter parameter;
    int claimed;
    int computed;
    bool ok() const { return claimed == computed; }
};

std::vector<ClaimCheck> verify_claims(const ConstructionClaim& c, const SolverOptions& options = {});

struct SweepOptions {
    bool keep_going = false;
    int jobs = 1;
    HarnessOptions harness;
};

struct CheckCounts {
    std::uint64_t pass = 0, fail = 0, not_applicable = 0;
};

struct SweepFailure {
    std::string graph6;
    std::string check;
    std::string detail;
    bool operator<(const SweepFailure& o) const;
};

struct SweepReport {
    std::string source;
    std::uint64_t graphs = 0;
    std::uint64_t incomplete = 0;
    /// Keyed by check id.
    std::map<std::string, CheckCounts> counts;
    /// Sorted by (graph6, check).
    std::vector<SweepFailure> failures;
    /// True when the sweep stopped at the first failing graph.
    bool halted = false;

    std::uint64_t failure_count() const;
};

/// source: a graph6 file path, "all:N" (every labeled graph, N <= 7),
/// "trees:N" (every labeled tree via Pruefer sequences) or "free-trees:N"
/// (one tree per isomorphism class). Results do not depend on jobs.
SweepReport sweep(const std::string& source, const SweepOptions& options = {});

std::string to_json(const TheoremReport& r);
std::string to_table(const TheoremReport& r);
std::string to_json(const SweepReport& r);
std::string to_table(const SweepReport& r);

}  // namespace locdom
