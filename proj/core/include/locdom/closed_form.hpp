#pragma once

#include <string>
#include <vector>

#include "locdom/codes.hpp"
#include "locdom/graph.hpp"

namespace locdom {

/// Families with exactly known code numbers. rook is K_m □ K_n with params {m, n}.
enum class ClosedFormFamily { path, cycle, ladder, complete, rook, discrete };

std::string to_string(ClosedFormFamily f);
ClosedFormFamily parse_closed_form_family(const std::string& name);

struct ClosedFormQuery {
    ClosedFormFamily family;
    std::vector<int> params;
    CodeKind kind;
};

/// Exact value for a covered (family, kind, parameter range); throws
/// NotAvailable for anything else rather than extrapolating.
///
///   path P_n      SLD n >= 2: ⌈(n+1)/2⌉   DLD n >= 1: ⌈n/2⌉   DOM2 n >= 1: ⌈(n+1)/2⌉
///   cycle C_t     SLD, DLD t >= 5: ⌈t/2⌉
///   ladder        SLD n >= 2: n+1 (n odd), n+2 (n even)   DLD n >= 1: n
///                 DOM2: n for n >= 2, 2 for n = 1
///   complete K_m  SLD m >= 1: m
///   rook          SLD m >= 2n, n >= 1: m
///   discrete D_n  DLD n >= 1: n
int closed_form(const ClosedFormQuery& q);

/// The graph a query describes, for cross-checking against the solvers.
Graph closed_form_graph(const ClosedFormQuery& q);

}  // namespace locdom
