#pragma once

#include "locdom/graph.hpp"
#include "locdom/solvers.hpp"

namespace locdom {

/// γ^DLD of a tree by support-vertex pruning: a support vertex u with a single
/// non-leaf neighbour is removed together with its leaves L_u, contributing
/// |L_u|; stars contribute n - 1. Throws std::invalid_argument if t is not a tree.
SolverResult tree_gamma_dld(const Graph& t);

/// γ^SLD of a tree, computed as γ₂ by a three-state dynamic program
/// (in / out and dominated twice below / out and waiting for the parent).
SolverResult tree_gamma_sld(const Graph& t);

/// Number of leaves ℓ(T) and of support vertices s(T).
int leaf_count(const Graph& t);
int support_vertex_count(const Graph& t);

}  // namespace locdom
