#pragma once

#include <cstdint>
#include <optional>
#include <string>

#include "locdom/codes.hpp"
#include "locdom/graph.hpp"

namespace locdom {

enum class Method { exhaustive, branch_and_bound, tree_linear, closed_form };

std::string to_string(Method m);

struct SolverOptions {
    /// Exact search refuses graphs with more vertices than this.
    int max_vertices = 24;
    /// exhaustive or branch_and_bound; other tags are rejected by minimum_code.
    Method method = Method::branch_and_bound;
    /// Seed forced codewords and apply the Sperner, Dilworth and order bounds.
    /// Theorem checks turn this off so the values they test are computed
    /// without the results being tested.
    bool theorem_pruning = true;
    /// Extra valid lower bound supplied by the caller (e.g. γ^LD when solving DLD).
    int lower_bound_hint = 0;
};

struct SolverResult {
    int value = 0;
    Code witness;
    std::uint64_t nodes_explored = 0;
    int lower_bound_used = 0;
    Method method = Method::branch_and_bound;
};

/// Exact minimum code of the given kind. Ties are broken towards the
/// lexicographically smallest sorted vertex list, so the witness is the same
/// for both search methods. Throws CapExceeded above options.max_vertices.
SolverResult minimum_code(const Graph& g, CodeKind kind, const SolverOptions& options = {});

/// β(G) with a maximum independent set as witness.
SolverResult independence_number(const Graph& g, const SolverOptions& options = {});

/// β₂(G): largest vertex set with pairwise distance at least 3 (the
/// independence number of the square of G).
SolverResult distance3_independence_number(const Graph& g, const SolverOptions& options = {});

/// γ₂(G)
SolverResult two_domination_number(const Graph& g, const SolverOptions& options = {});

/// C = V \ S where S is grown greedily: take the smallest u still in T and
/// remove every vertex within distance two of u from T. Requires a connected
/// graph on at least two vertices; C is solid-locating-dominating.
Code greedy_3distance_code(const Graph& g);

/// Exhaustive minimum over all vertex subsets by increasing size, using only
/// the definitional predicate. Used as the oracle for the branch-and-bound.
SolverResult exhaustive_minimum_code(const Graph& g, CodeKind kind, const SolverOptions& options = {});

void check_cap(const Graph& g, const SolverOptions& options);

}  // namespace locdom
