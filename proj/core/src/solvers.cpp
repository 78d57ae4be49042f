#include "locdom/solvers.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <stdexcept>
#include <vector>

#include "locdom/errors.hpp"
#include "locdom/order.hpp"

namespace locdom {

std::string to_string(Method m) {
    switch (m) {
        case Method::exhaustive: return "exhaustive";
        case Method::branch_and_bound: return "branch_and_bound";
        case Method::tree_linear: return "tree_linear";
        case Method::closed_form: return "closed_form";
    }
    return "?";
}

void check_cap(const Graph& g, const SolverOptions& options) {
    if (g.order() <= options.max_vertices) return;
    std::ostringstream msg;
    msg << "graph has " << g.order() << " vertices, above the exact-search cap of " << options.max_vertices
        << "; the search may visit up to 2^" << g.order() << " ≈ " << std::pow(2.0, g.order())
        << " subsets; raise the cap to search anyway";
    throw CapExceeded(msg.str());
}

namespace {

/// Depth-first include/exclude search for codes of size below a limit, with
/// incremental feasibility checks on partial assignments.
///
/// For a non-codeword u, upper(u) = N[u] minus excluded vertices bounds its
/// final I-set from above and lower(v) = N[v] ∩ included bounds I(v) from
/// below. A pair violates the kind's condition once upper(u) ⊆ lower(v); such a
/// violation can never be repaired by later decisions.
class CodeSearch {
  public:
    CodeSearch(const Graph& g, CodeKind kind, int lower_bound)
        : g_(g), kind_(kind), lower_bound_(lower_bound) {
        order_ = g.vertices().to_vector();
        std::stable_sort(order_.begin(), order_.end(),
                         [&](Vertex a, Vertex b) { return g.degree(a) > g.degree(b); });
    }

    /// Smallest code with size < limit that contains must_in and avoids
    /// must_out, or nullopt. With first_only the first code found is returned.
    std::optional<VertexSet> run(VertexSet must_in, VertexSet must_out, int limit, bool first_only) {
        in_ = must_in;
        out_ = must_out;
        undecided_ = g_.vertices() - must_in - must_out;
        best_size_ = limit;
        found_.reset();
        first_only_ = first_only;
        stop_ = lower_bound_ >= limit;
        if (!stop_ && initial_consistent()) dfs(0);
        return found_;
    }

    std::uint64_t nodes() const { return nodes_; }

  private:
    VertexSet upper(Vertex u) const { return g_.closed_neighbors(u) - out_; }
    VertexSet lower(Vertex v) const { return g_.closed_neighbors(v) & in_; }
    bool determined(Vertex u) const { return !g_.closed_neighbors(u).intersects(undecided_); }

    /// Conditions on the excluded vertex u against every partner.
    bool u_ok(Vertex u) const {
        const VertexSet up = upper(u);
        switch (kind_) {
            case CodeKind::dom: return !up.empty();
            case CodeKind::dom2: return up.size() >= 2;
            case CodeKind::ld: {
                if (up.empty()) return false;
                if (!determined(u)) return true;
                for (Vertex v : out_) {
                    if (v != u && determined(v) && lower(v) == up) return false;
                }
                return true;
            }
            case CodeKind::dld:
                if (up.empty()) return false;
                for (Vertex v : out_) {
                    if (v != u && up.subset_of(lower(v))) return false;
                }
                return true;
            case CodeKind::sld:
                for (Vertex v : g_.vertices()) {
                    if (v != u && up.subset_of(lower(v))) return false;
                }
                return true;
        }
        return false;
    }

    /// Conditions of every excluded u against the partner v whose lower set grew.
    bool v_ok(Vertex v) const {
        if (kind_ == CodeKind::dld && !out_.contains(v)) return true;
        if (kind_ != CodeKind::dld && kind_ != CodeKind::sld) return true;
        const VertexSet lo = lower(v);
        for (Vertex u : out_) {
            if (u != v && upper(u).subset_of(lo)) return false;
        }
        return true;
    }

    bool initial_consistent() const {
        for (Vertex u : out_)
            if (!u_ok(u)) return false;
        for (Vertex v : g_.vertices())
            if (!v_ok(v)) return false;
        return true;
    }

    bool consistent_after(Vertex x, bool included) const {
        for (Vertex u : g_.closed_neighbors(x) & out_) {
            if (!u_ok(u)) return false;
        }
        if (included) {
            for (Vertex v : g_.closed_neighbors(x)) {
                if (!v_ok(v)) return false;
            }
        } else if (!v_ok(x)) {
            return false;
        }
        return true;
    }

    void dfs(std::size_t idx) {
        ++nodes_;
        if (stop_ || in_.size() >= best_size_) return;
        while (idx < order_.size() && !undecided_.contains(order_[idx])) ++idx;
        if (idx == order_.size()) {
            if (in_.empty()) return;
            found_ = in_;
            best_size_ = in_.size();
            if (first_only_ || best_size_ <= lower_bound_) stop_ = true;
            return;
        }
        const Vertex x = order_[idx];
        const VertexSet in0 = in_, out0 = out_, und0 = undecided_;

        undecided_.erase(x);
        out_.insert(x);
        if (consistent_after(x, false)) dfs(idx + 1);
        in_ = in0;
        out_ = out0;
        undecided_ = und0;
        if (stop_) return;

        undecided_.erase(x);
        in_.insert(x);
        if (consistent_after(x, true)) dfs(idx + 1);
        in_ = in0;
        out_ = out0;
        undecided_ = und0;
    }

    const Graph& g_;
    CodeKind kind_;
    int lower_bound_;
    std::vector<Vertex> order_;
    VertexSet in_, out_, undecided_;
    int best_size_ = 0;
    std::optional<VertexSet> found_;
    bool first_only_ = false;
    bool stop_ = false;
    std::uint64_t nodes_ = 0;
};

int ceil_div(int a, int b) { return (a + b - 1) / b; }

int intrinsic_lower_bound(const Graph& g, CodeKind kind) {
    const int n = g.order();
    switch (kind) {
        case CodeKind::dom: return ceil_div(n, g.max_degree() + 1);
        case CodeKind::dom2: return 1;
        case CodeKind::ld: return ld_order_lower_bound(static_cast<std::uint64_t>(n));
        case CodeKind::sld: return sperner_lower_bound(static_cast<std::uint64_t>(n));
        case CodeKind::dld:
            return std::max(sperner_lower_bound(static_cast<std::uint64_t>(n)), n - dilworth_number(g));
    }
    return 1;
}

SolverResult single_vertex_result(Method m) {
    SolverResult r;
    r.value = 1;
    r.witness = Code{0};
    r.nodes_explored = 1;
    r.lower_bound_used = 1;
    r.method = m;
    return r;
}

void verify_witness(const Graph& g, const SolverResult& r, CodeKind kind) {
    if (r.witness.size() != r.value || !is_code(g, r.witness, kind)) {
        throw std::logic_error("solver produced an invalid " + to_string(kind) + " witness");
    }
}

}  // namespace

SolverResult exhaustive_minimum_code(const Graph& g, CodeKind kind, const SolverOptions& options) {
    check_cap(g, options);
    const int n = g.order();
    SolverResult r;
    r.method = Method::exhaustive;
    r.lower_bound_used = 1;
    std::vector<Vertex> pick;
    for (int size = 1; size <= n; ++size) {
        // Combinations of {0..n-1} of this size in lexicographic order.
        pick.resize(size);
        for (int i = 0; i < size; ++i) pick[i] = i;
        while (true) {
            ++r.nodes_explored;
            Code c = Code::from(pick);
            if (is_code(g, c, kind)) {
                r.value = size;
                r.witness = c;
                return r;
            }
            int i = size - 1;
            while (i >= 0 && pick[i] == n - size + i) --i;
            if (i < 0) break;
            ++pick[i];
            for (int j = i + 1; j < size; ++j) pick[j] = pick[j - 1] + 1;
        }
    }
    throw std::logic_error("exhaustive search found no code; V itself should qualify");
}

SolverResult minimum_code(const Graph& g, CodeKind kind, const SolverOptions& options) {
    if (options.method == Method::exhaustive) return exhaustive_minimum_code(g, kind, options);
    if (options.method != Method::branch_and_bound) {
        throw std::invalid_argument("minimum_code: method must be exhaustive or branch_and_bound");
    }
    check_cap(g, options);
    if (g.order() == 1) return single_vertex_result(Method::branch_and_bound);

    int lower = std::max(1, options.lower_bound_hint);
    VertexSet seed;
    if (options.theorem_pruning) {
        lower = std::max(lower, intrinsic_lower_bound(g, kind));
        if (kind == CodeKind::sld) seed = forced_sld_codewords(g);
    }
    lower = std::max(lower, seed.size());

    CodeSearch search(g, kind, lower);
    // V is a code of every kind, so the optimum is at most n.
    auto best = search.run(seed, {}, g.order(), false);
    VertexSet optimum = best ? *best : g.vertices();
    const int value = optimum.size();

    // Canonical witness: fix vertices in index order, keeping each one whenever
    // some optimum code still extends the current choice.
    VertexSet keep = seed;
    VertexSet drop;
    for (Vertex v : g.vertices()) {
        if (keep.size() == value) break;
        if (keep.contains(v)) continue;
        if (search.run(keep | VertexSet::single(v), drop, value + 1, true)) {
            keep.insert(v);
        } else {
            drop.insert(v);
        }
    }

    SolverResult r;
    r.value = value;
    r.witness = Code(keep);
    r.nodes_explored = search.nodes();
    r.lower_bound_used = lower;
    r.method = Method::branch_and_bound;
    verify_witness(g, r, kind);
    return r;
}

namespace {

class IndependentSetSearch {
  public:
    explicit IndependentSetSearch(const Graph& g) : g_(g) {}

    VertexSet solve(VertexSet p) {
        ++nodes_;
        if (p.empty()) return {};
        Vertex low = -1;
        Vertex high = -1;
        int low_deg = 1 << 20;
        int high_deg = -1;
        for (Vertex v : p) {
            int d = (g_.neighbors(v) & p).size();
            if (d < low_deg) low_deg = d, low = v;
            if (d > high_deg) high_deg = d, high = v;
        }
        // A vertex of degree <= 1 lies in some maximum independent set.
        if (low_deg <= 1) return VertexSet::single(low) | solve(p - g_.closed_neighbors(low));
        VertexSet without = solve(p - VertexSet::single(high));
        VertexSet with = VertexSet::single(high) | solve(p - g_.closed_neighbors(high));
        return with.size() > without.size() ? with : without;
    }

    std::uint64_t nodes() const { return nodes_; }

  private:
    const Graph& g_;
    std::uint64_t nodes_ = 0;
};

}  // namespace

SolverResult independence_number(const Graph& g, const SolverOptions& options) {
    check_cap(g, options);
    IndependentSetSearch s(g);
    VertexSet best = s.solve(g.vertices());
    SolverResult r;
    r.value = best.size();
    r.witness = Code(best);
    r.nodes_explored = s.nodes();
    r.lower_bound_used = 1;
    r.method = Method::branch_and_bound;
    return r;
}

SolverResult distance3_independence_number(const Graph& g, const SolverOptions& options) {
    return independence_number(square(g), options);
}

SolverResult two_domination_number(const Graph& g, const SolverOptions& options) {
    return minimum_code(g, CodeKind::dom2, options);
}

Code greedy_3distance_code(const Graph& g) {
    if (g.order() < 2 || !is_connected(g)) {
        throw std::invalid_argument("greedy_3distance_code needs a connected graph on at least two vertices");
    }
    VertexSet remaining = g.vertices();
    VertexSet chosen;
    while (!remaining.empty()) {
        Vertex u = remaining.first();
        chosen.insert(u);
        for (Vertex v : g.neighbors(u)) remaining -= g.closed_neighbors(v);
    }
    return Code(g.vertices() - chosen);
}

}  // namespace locdom
