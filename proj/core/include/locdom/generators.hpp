#pragma once

#include <string>
#include <vector>

#include "locdom/graph.hpp"

namespace locdom {

enum class Family { path, cycle, star, complete, complete_bipartite, discrete, ladder, threshold };

/// Threshold-graph creation step.
enum class ThresholdStep { isolated, universal };

/// A named graph family plus its integer parameters:
///   path/cycle/complete/discrete/ladder: {n}; star: {n} (K_{1,n-1});
///   complete_bipartite: {m, n}; threshold: the step sequence, 0 = isolated, 1 = universal.
struct GraphFamily {
    Family family;
    std::vector<int> params;

    static GraphFamily path(int n) { return {Family::path, {n}}; }
    static GraphFamily cycle(int n) { return {Family::cycle, {n}}; }
    static GraphFamily star(int n) { return {Family::star, {n}}; }
    static GraphFamily complete(int n) { return {Family::complete, {n}}; }
    static GraphFamily complete_bipartite(int m, int n) { return {Family::complete_bipartite, {m, n}}; }
    static GraphFamily discrete(int n) { return {Family::discrete, {n}}; }
    static GraphFamily ladder(int n) { return {Family::ladder, {n}}; }
    static GraphFamily threshold(const std::vector<ThresholdStep>& steps);
};

std::string to_string(Family f);
/// Accepts the snake_case names plus "complete-bipartite".
Family parse_family(const std::string& name);

/// Build a member of the family. Throws std::invalid_argument on bad parameters.
Graph generate(const GraphFamily& fam);

/// Parse a threshold creation sequence written as a string of 'i'/'u' characters.
std::vector<ThresholdStep> parse_threshold_steps(const std::string& text);

}  // namespace locdom
