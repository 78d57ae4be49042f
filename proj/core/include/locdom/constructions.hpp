#pragma once

#include <string>
#include <utility>
#include <vector>

#include "locdom/graph.hpp"

namespace locdom {

enum class ClaimParameter { gamma_ld, gamma_sld, gamma_dld, order };

/// "gamma_LD", "gamma_SLD", "gamma_DLD", "n"
std::string to_string(ClaimParameter p);

struct Claim {
    ClaimParameter parameter;
    int value;
};

/// A generated graph and the parameter values its construction promises.
/// Nothing here checks the promises; see verify_claims in harness.hpp.
struct ConstructionClaim {
    std::string name;
    Graph graph;
    std::vector<Claim> claims;
};

/// Bipartite graph on U = {u1..uk} and one vertex per ⌈k/2⌉-subset of U
/// (lexicographic order), adjacent to the members of its subset. Claims
/// γ^SLD = k and n = k + C(k, ⌊k/2⌋). Throws std::length_error past 64 vertices.
ConstructionClaim sperner_extremal(int k);

/// G' (the ⌊k/2⌋-layer Sperner graph with U made a clique) and its complement.
/// Claims γ^SLD(G') = C(k, ⌊k/2⌋) and γ^SLD of the complement = k. k >= 4.
std::pair<ConstructionClaim, ConstructionClaim> complement_gap(int k);

/// A graph with γ^LD = a and γ^SLD = b. Feasible iff a >= 1 and
/// 0 <= b - a <= 2^a - 1; throws Infeasible otherwise.
ConstructionClaim realize_ld_sld(int a, int b);

/// A graph with γ^LD = a and γ^DLD = b. Feasible iff a >= 1 and
/// 0 <= b - a <= 2^a - 1 - C(a, ⌈a/2⌉); throws Infeasible otherwise.
ConstructionClaim realize_ld_dld(int a, int b);

/// {"name", "graph6", "n", "claims": {parameter: value}}
std::string claims_json(const ConstructionClaim& c);

}  // namespace locdom
