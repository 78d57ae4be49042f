#pragma once

#include <cstdint>
#include <functional>
#include <span>
#include <string>
#include <vector>

#include "locdom/graph.hpp"

namespace locdom {

/// Number of labeled graphs on n vertices, 2^(n(n-1)/2). n <= 11.
std::uint64_t labeled_graph_count(int n);

/// The labeled graph whose edge set is encoded by `mask`: bit k is the k-th
/// vertex pair in graph6 order (0-1, 0-2, 1-2, 0-3, ...).
Graph labeled_graph(int n, std::uint64_t mask);

void for_each_labeled_graph(int n, const std::function<void(const Graph&)>& visit);

/// Tree decoded from a Pruefer sequence of length n - 2 (n >= 2).
Graph tree_from_pruefer(int n, std::span<const int> sequence);

/// Every labeled tree on n vertices, via all n^(n-2) Pruefer sequences.
void for_each_labeled_tree(int n, const std::function<void(const Graph&)>& visit);

/// One representative per isomorphism class of trees on n vertices, generated
/// from canonical level sequences of rooted trees.
std::vector<Graph> free_trees(int n);

/// Canonical string of a tree, equal for isomorphic trees.
std::string tree_canonical_form(const Graph& tree);

}  // namespace locdom
