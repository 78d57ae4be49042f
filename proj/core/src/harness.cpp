#include "locdom/harness.hpp"

#include <algorithm>
#include <atomic>
#include <exception>
#include <fstream>
#include <functional>
#include <iomanip>
#include <memory>
#include <mutex>
#include <tuple>
#include <sstream>
#include <stdexcept>
#include <thread>

#include <json.hpp>

#include "locdom/codes.hpp"
#include "locdom/enumerate.hpp"
#include "locdom/errors.hpp"
#include "locdom/graph_io.hpp"
#include "locdom/order.hpp"
#include "locdom/trees.hpp"

namespace locdom {

std::string to_string(CheckStatus s) {
    switch (s) {
        case CheckStatus::pass: return "pass";
        case CheckStatus::fail: return "fail";
        case CheckStatus::not_applicable: return "not_applicable";
    }
    return "?";
}

bool TheoremReport::failed() const {
    return std::any_of(checks.begin(), checks.end(), [](const CheckResult& c) { return c.status == CheckStatus::fail; });
}

const CheckResult* TheoremReport::find(const std::string& id) const {
    for (const auto& c : checks)
        if (c.id == id) return &c;
    return nullptr;
}

namespace {

CheckResult verdict(std::string id, bool ok, std::string detail) {
    return {std::move(id), ok ? CheckStatus::pass : CheckStatus::fail, std::move(detail)};
}

CheckResult not_applicable(std::string id, std::string why) {
    return {std::move(id), CheckStatus::not_applicable, std::move(why)};
}

std::string set_text(VertexSet s) {
    std::string out = "{";
    bool first = true;
    for (Vertex v : s) {
        if (!first) out += ",";
        out += std::to_string(v);
        first = false;
    }
    return out + "}";
}

// Ids of checks that need exact solver values, in report order.
const std::vector<std::string>& solver_check_ids() {
    static const std::vector<std::string> ids{
        "chain",           "dld_upper_n_minus_1", "sperner_order",       "dilworth_lower",
        "threshold_iff_dld_max", "sld_full_iff_maximal_twins", "twin_free_sld", "delta_bound_i",
        "delta_bound_ii",  "delta_bound_iii",     "complement_dld",      "sld_two_dominating",
        "girth5_sld_eq_gamma2", "tree_dld_eq_beta", "tree_sld_eq_gamma2", "tree_leaf_support_bound"};
    return ids;
}

bool has_twin(const Graph& g, Vertex x) {
    for (Vertex y : g.vertices())
        if (y != x && twins(g, x, y) != TwinKind::not_twins) return true;
    return false;
}

void structural_checks(const Graph& g, const VicinalPreorder& pre, const DilworthResult& dw, TheoremReport& r) {
    const int n = g.order();

    if (n < 2) {
        r.checks.push_back(not_applicable("vicinal_twins_lemma", "needs n >= 2"));
    } else {
        std::string bad;
        for (Vertex x : g.vertices()) {
            for (Vertex y : g.vertices()) {
                if (x == y) continue;
                const TwinKind t = twins(g, x, y);
                const bool expected = g.adjacent(x, y) ? t == TwinKind::true_twins : t == TwinKind::false_twins;
                if (pre.equivalent(x, y) != expected && bad.empty()) {
                    bad = "equivalence and twin type disagree on " + std::to_string(x) + "," + std::to_string(y);
                }
            }
            const bool below_other = (pre.up_set(x) - VertexSet::single(x)).size() > 0;
            if (below_other != forced_sld_codewords(g).contains(x) && bad.empty()) {
                bad = "forced status of " + std::to_string(x) + " disagrees with x <= y for some y != x";
            }
        }
        r.checks.push_back(verdict("vicinal_twins_lemma", bad.empty(), bad.empty() ? "twins and forced codewords match the preorder" : bad));
    }

    // Oracle: u is forced iff V \ {u} is not self-locating-dominating.
    const VertexSet forced = forced_sld_codewords(g);
    VertexSet oracle;
    if (n == 1) {
        oracle = VertexSet::single(0);
    } else {
        for (Vertex u : g.vertices())
            if (!is_code(g, Code(g.vertices() - VertexSet::single(u)), CodeKind::sld)) oracle.insert(u);
    }
    r.checks.push_back(verdict("forced_codewords", forced == oracle,
                               "neighbourhood test " + set_text(forced) + ", removal oracle " + set_text(oracle)));

    const bool peel = peels_to_empty(g);
    r.checks.push_back(verdict("threshold_recognition", peel == (dw.width == 1),
                               "nabla=" + std::to_string(dw.width) + ", peel-off " + (peel ? "succeeds" : "fails")));
}

/// First pair (u, v), u != v, with N(u) inside N(v) (or N[v]); nullopt if none.
std::optional<std::pair<Vertex, Vertex>> open_containment(const Graph& g, bool closed_target) {
    for (Vertex u : g.vertices())
        for (Vertex v : g.vertices())
            if (u != v && g.neighbors(u).subset_of(closed_target ? g.closed_neighbors(v) : g.neighbors(v)))
                return std::make_pair(u, v);
    return std::nullopt;
}

void solver_checks(const Graph& g, const DilworthResult& dw, const SolverOptions& so, TheoremReport& r) {
    ParameterTable& p = r.params;
    const int n = g.order();
    const auto dom = minimum_code(g, CodeKind::dom, so);
    const auto ld = minimum_code(g, CodeKind::ld, so);
    const auto dld = minimum_code(g, CodeKind::dld, so);
    const auto sld = minimum_code(g, CodeKind::sld, so);
    const auto g2 = two_domination_number(g, so);
    const auto beta = independence_number(g, so);
    const auto beta2 = distance3_independence_number(g, so);
    p.gamma = dom.value;
    p.gamma_ld = ld.value;
    p.gamma_dld = dld.value;
    p.gamma_sld = sld.value;
    p.gamma2 = g2.value;
    p.beta = beta.value;
    p.beta2 = beta2.value;
    std::optional<SolverResult> dld_bar;
    if (n >= 2) {
        dld_bar = minimum_code(complement(g), CodeKind::dld, so);
        p.gamma_dld_complement = dld_bar->value;
    }

    const int a = dom.value, b = ld.value, c = dld.value, d = sld.value;
    auto num = [](int x) { return std::to_string(x); };

    {
        std::string side;
        if (a > b) side = "gamma > gamma_LD";
        else if (b > c) side = "gamma_LD > gamma_DLD";
        else if (c > d) side = "gamma_DLD > gamma_SLD";
        r.checks.push_back(verdict("chain", side.empty(),
                                   "gamma=" + num(a) + " gamma_LD=" + num(b) + " gamma_DLD=" + num(c) + " gamma_SLD=" + num(d) +
                                       (side.empty() ? "" : "; violated: " + side)));
    }

    if (p.m < 1) {
        r.checks.push_back(not_applicable("dld_upper_n_minus_1", "needs m >= 1"));
    } else {
        std::string bad;
        for (Vertex u : g.vertices()) {
            if (g.degree(u) == 0) continue;
            try {
                drop_one_dld_code(g, u);
            } catch (const std::logic_error&) {
                if (bad.empty()) bad = "; V \\ {" + num(u) + "} is not solid-locating-dominating";
            }
        }
        r.checks.push_back(verdict("dld_upper_n_minus_1", c <= n - 1 && bad.empty(),
                                   "gamma_DLD=" + num(c) + " <= n-1=" + num(n - 1) + bad));
    }

    {
        const auto cap = sperner_capacity(c);
        const bool ld_ok = b >= 63 || static_cast<std::uint64_t>(n) <= static_cast<std::uint64_t>(b) + (std::uint64_t{1} << b) - 1;
        std::string side;
        if (static_cast<std::uint64_t>(n) > cap) side = "; violated: n > gamma_DLD + C(gamma_DLD, floor/2)";
        if (!ld_ok) side += "; violated: n > gamma_LD + 2^gamma_LD - 1";
        r.checks.push_back(verdict("sperner_order", side.empty(),
                                   "n=" + num(n) + " <= " + std::to_string(cap) + " (gamma_DLD=" + num(c) + ")" + side));
    }

    {
        VicinalPreorder pre(g);
        const bool dld_anti = pre.is_antichain(g.vertices() - dld.witness.members());
        const bool sld_anti = pre.is_antichain(g.vertices() - sld.witness.members());
        std::string side;
        if (n - dw.width > c) side = "; violated: n - nabla > gamma_DLD";
        if (!dld_anti || !sld_anti) side += "; non-codewords of an optimal code are not an antichain";
        r.checks.push_back(verdict("dilworth_lower", side.empty(),
                                   "n-nabla=" + num(n - dw.width) + " <= gamma_DLD=" + num(c) + side));
    }

    if (p.m < 1) {
        r.checks.push_back(not_applicable("threshold_iff_dld_max", "needs m >= 1"));
    } else {
        const bool lhs = c == n - 1;
        r.checks.push_back(verdict("threshold_iff_dld_max", lhs == p.threshold,
                                   std::string("gamma_DLD ") + (lhs ? "=" : "!=") + " n-1, graph " +
                                       (p.threshold ? "is" : "is not") + " threshold"));
    }

    if (n < 2) {
        r.checks.push_back(not_applicable("sld_full_iff_maximal_twins", "needs n >= 2"));
        r.checks.push_back(not_applicable("twin_free_sld", "needs n >= 2"));
    } else {
        VicinalPreorder pre(g);
        bool all_twinned = true;
        for (Vertex x : pre.maximal_vertices()) all_twinned = all_twinned && has_twin(g, x);
        const bool full = d == n;
        r.checks.push_back(verdict("sld_full_iff_maximal_twins", full == all_twinned,
                                   std::string("gamma_SLD ") + (full ? "=" : "!=") + " n, maximal vertices " +
                                       (all_twinned ? "all have" : "do not all have") + " twins"));
        if (!p.twin_free) {
            r.checks.push_back(not_applicable("twin_free_sld", "graph has twins"));
        } else {
            r.checks.push_back(verdict("twin_free_sld", d <= n - 1, "gamma_SLD=" + num(d) + " <= n-1=" + num(n - 1)));
        }
    }

    const bool connected2 = p.connected && n >= 2;
    const int delta = p.max_degree;
    if (!connected2) {
        const std::string why = "needs a connected graph with n >= 2";
        r.checks.push_back(not_applicable("delta_bound_i", why));
        r.checks.push_back(not_applicable("delta_bound_ii", why));
        r.checks.push_back(not_applicable("delta_bound_iii", why));
    } else {
        const int floor_i = n * delta * delta / (delta * delta + 1);
        const int floor_beta = n * delta / (delta + 1);
        const Code greedy = greedy_3distance_code(g);
        const bool greedy_ok = is_code(g, greedy, CodeKind::dld) && greedy.size() <= floor_i && greedy.size() >= n - beta2.value;
        std::string side;
        if (c > n - beta2.value) side = "; violated: gamma_DLD > n-beta2";
        if (n - beta2.value > floor_i) side += "; violated: n-beta2 > floor bound";
        if (!greedy_ok) side += "; greedy code of size " + num(greedy.size()) + " fails";
        r.checks.push_back(verdict("delta_bound_i", side.empty(),
                                   "gamma_DLD=" + num(c) + " <= n-beta2=" + num(n - beta2.value) + " <= " + num(floor_i) + side));

        if (auto pair = open_containment(g, false)) {
            r.checks.push_back(not_applicable("delta_bound_ii", "N(" + num(pair->first) + ") is contained in N(" +
                                                                    num(pair->second) + ")"));
        } else {
            std::string s2;
            if (c > n - beta.value) s2 = "; violated: gamma_DLD > n-beta";
            if (n - beta.value > floor_beta) s2 += "; violated: n-beta > floor bound";
            r.checks.push_back(verdict("delta_bound_ii", s2.empty(),
                                       "gamma_DLD=" + num(c) + " <= n-beta=" + num(n - beta.value) + " <= " + num(floor_beta) + s2));
        }
        if (auto pair = open_containment(g, true)) {
            r.checks.push_back(not_applicable("delta_bound_iii", "N(" + num(pair->first) + ") is contained in N[" +
                                                                     num(pair->second) + "]"));
        } else {
            std::string s3;
            if (d > n - beta.value) s3 = "; violated: gamma_SLD > n-beta";
            if (n - beta.value > floor_beta) s3 += "; violated: n-beta > floor bound";
            r.checks.push_back(verdict("delta_bound_iii", s3.empty(),
                                       "gamma_SLD=" + num(d) + " <= n-beta=" + num(n - beta.value) + " <= " + num(floor_beta) + s3));
        }
    }

    if (!dld_bar) {
        r.checks.push_back(not_applicable("complement_dld", "needs n >= 2"));
    } else {
        const int e = dld_bar->value;
        const bool differ = c != e;
        const bool extreme = is_complete(g) || is_discrete(g);
        std::string side;
        if (std::abs(c - e) > 1) side = "; violated: difference exceeds 1";
        if (differ != extreme) side += "; violated: difference present iff complete or discrete";
        r.checks.push_back(verdict("complement_dld", side.empty(),
                                   "gamma_DLD=" + num(c) + ", complement " + num(e) + (extreme ? ", complete or discrete" : "") + side));
    }

    {
        const bool witness_2dom = is_code(g, sld.witness, CodeKind::dom2);
        r.checks.push_back(verdict("sld_two_dominating", witness_2dom && g2.value <= d,
                                   "gamma_2=" + num(g2.value) + " <= gamma_SLD=" + num(d) +
                                       (witness_2dom ? "" : "; optimal SLD code is not 2-dominating")));
    }

    if (p.girth && *p.girth < 5) {
        r.checks.push_back(not_applicable("girth5_sld_eq_gamma2", "girth " + num(*p.girth) + " < 5"));
    } else {
        const bool witness_sld = is_code(g, g2.witness, CodeKind::sld);
        r.checks.push_back(verdict("girth5_sld_eq_gamma2", d == g2.value && witness_sld,
                                   "gamma_SLD=" + num(d) + ", gamma_2=" + num(g2.value) +
                                       (witness_sld ? "" : "; minimum 2-dominating set is not SLD")));
    }

    if (!is_tree(g)) {
        for (const char* id : {"tree_dld_eq_beta", "tree_sld_eq_gamma2", "tree_leaf_support_bound"})
            r.checks.push_back(not_applicable(id, "not a tree"));
    } else {
        const int tl = tree_gamma_dld(g).value;
        const int ts = tree_gamma_sld(g).value;
        r.checks.push_back(verdict("tree_dld_eq_beta", tl == c && c == beta.value,
                                   "pruning=" + num(tl) + " search=" + num(c) + " beta=" + num(beta.value)));
        r.checks.push_back(verdict("tree_sld_eq_gamma2", ts == d && d == g2.value,
                                   "tree dp=" + num(ts) + " search=" + num(d) + " gamma_2=" + num(g2.value)));
        const int rhs = n + *p.leaves - *p.support_vertices;
        r.checks.push_back(verdict("tree_leaf_support_bound", 2 * c >= rhs,
                                   "2*gamma_DLD=" + num(2 * c) + " >= n+l-s=" + num(rhs)));
    }
}

}  // namespace

TheoremReport check_graph(const Graph& g, const HarnessOptions& options) {
    SolverOptions so = options.solver;
    so.theorem_pruning = false;
    so.lower_bound_hint = 0;

    TheoremReport r;
    r.graph6 = emit_graph6(g);
    ParameterTable& p = r.params;
    p.n = g.order();
    p.m = g.size();
    p.max_degree = g.max_degree();
    p.girth = girth(g);
    p.connected = is_connected(g);
    const VicinalPreorder pre(g);
    const DilworthResult dw = dilworth(g);
    p.nabla = dw.width;
    p.forced_count = forced_sld_codewords(g).size();
    p.threshold = dw.width == 1;
    p.twin_free = is_twin_free(g);
    if (is_tree(g)) {
        p.leaves = leaf_count(g);
        p.support_vertices = support_vertex_count(g);
    }

    structural_checks(g, pre, dw, r);
    try {
        check_cap(g, so);
        solver_checks(g, dw, so, r);
    } catch (const CapExceeded& e) {
        r.complete = false;
        for (const auto& id : solver_check_ids()) {
            if (!r.find(id)) r.checks.push_back(not_applicable(id, std::string("skipped: ") + e.what()));
        }
    }
    return r;
}

std::vector<CheckResult> check_product(const Graph& g, const Graph& h, const HarnessOptions& options) {
    SolverOptions so = options.solver;
    so.theorem_pruning = false;
    const Graph prod = cartesian_product(g, h);
    std::vector<CheckResult> out;
    for (CodeKind kind : {CodeKind::sld, CodeKind::dld}) {
        const int vg = minimum_code(g, kind, so).value;
        const int vh = minimum_code(h, kind, so).value;
        const int vp = minimum_code(prod, kind, so).value;
        const int lower = std::max(vg, vh);
        const int upper = std::min(h.order() * vg, g.order() * vh);
        std::string side;
        if (vp < lower) side = "; violated: below max of factors";
        if (vp > upper) side += "; violated: above min of scaled factors";
        const std::string k = to_string(kind);
        out.push_back(verdict("product_" + std::string(kind == CodeKind::sld ? "sld" : "dld"), side.empty(),
                              std::to_string(lower) + " <= gamma_" + k + "(G x H)=" + std::to_string(vp) + " <= " +
                                  std::to_string(upper) + " [G " + emit_graph6(g) + ", H " + emit_graph6(h) + "]" + side));
    }
    return out;
}

std::vector<ClaimCheck> verify_claims(const ConstructionClaim& c, const SolverOptions& options) {
    std::vector<ClaimCheck> out;
    for (const auto& claim : c.claims) {
        int computed = 0;
        switch (claim.parameter) {
            case ClaimParameter::gamma_ld: computed = minimum_code(c.graph, CodeKind::ld, options).value; break;
            case ClaimParameter::gamma_sld: computed = minimum_code(c.graph, CodeKind::sld, options).value; break;
            case ClaimParameter::gamma_dld: computed = minimum_code(c.graph, CodeKind::dld, options).value; break;
            case ClaimParameter::order: computed = c.graph.order(); break;
        }
        out.push_back({claim.parameter, claim.value, computed});
    }
    return out;
}

bool SweepFailure::operator<(const SweepFailure& o) const {
    return std::tie(graph6, check, detail) < std::tie(o.graph6, o.check, o.detail);
}

std::uint64_t SweepReport::failure_count() const {
    std::uint64_t total = 0;
    for (const auto& [id, c] : counts) total += c.fail;
    return total;
}

namespace {

struct GraphSource {
    std::uint64_t count = 0;
    std::function<Graph(std::uint64_t)> at;
};

int source_order(const std::string& source, std::size_t colon, int lo, int hi) {
    const std::string arg = source.substr(colon + 1);
    int n = 0;
    try {
        std::size_t used = 0;
        n = std::stoi(arg, &used);
        if (used != arg.size()) throw std::invalid_argument(arg);
    } catch (const std::exception&) {
        throw std::invalid_argument("sweep source '" + source + "': expected an integer after ':'");
    }
    if (n < lo || n > hi) {
        throw std::invalid_argument("sweep source '" + source + "': order must be in " + std::to_string(lo) + ".." +
                                    std::to_string(hi));
    }
    return n;
}

GraphSource open_source(const std::string& source) {
    const auto colon = source.find(':');
    const std::string kind = colon == std::string::npos ? "" : source.substr(0, colon);
    if (kind == "all") {
        const int n = source_order(source, colon, 1, 7);
        return {labeled_graph_count(n), [n](std::uint64_t i) { return labeled_graph(n, i); }};
    }
    if (kind == "trees") {
        const int n = source_order(source, colon, 1, 12);
        std::uint64_t count = 1;
        for (int i = 0; i < n - 2; ++i) count *= static_cast<std::uint64_t>(n);
        return {count, [n](std::uint64_t i) {
                    if (n == 1) return Graph(1);
                    std::vector<int> seq(n - 2);
                    for (int k = n - 3; k >= 0; --k) {
                        seq[k] = static_cast<int>(i % n);
                        i /= n;
                    }
                    return tree_from_pruefer(n, seq);
                }};
    }
    if (kind == "free-trees") {
        const int n = source_order(source, colon, 1, 20);
        auto trees = std::make_shared<std::vector<Graph>>(free_trees(n));
        return {trees->size(), [trees](std::uint64_t i) { return (*trees)[i]; }};
    }
    std::ifstream in(source);
    if (!in) throw std::runtime_error("cannot open graph file '" + source + "'");
    auto graphs = std::make_shared<std::vector<Graph>>();
    Graph6Reader reader(in);
    while (auto g = reader.next()) graphs->push_back(*g);
    return {graphs->size(), [graphs](std::uint64_t i) { return (*graphs)[i]; }};
}

}  // namespace

SweepReport sweep(const std::string& source, const SweepOptions& options) {
    const GraphSource src = open_source(source);
    SweepReport report;
    report.source = source;
    const int jobs = std::max(1, options.jobs);
    const std::uint64_t block = 4096;

    for (std::uint64_t start = 0; start < src.count && !report.halted; start += block) {
        const std::uint64_t end = std::min(src.count, start + block);
        std::vector<TheoremReport> results(end - start);
        std::atomic<std::uint64_t> next{start};
        std::exception_ptr error;
        std::mutex error_mutex;
        auto work = [&] {
            try {
                for (std::uint64_t i = next++; i < end; i = next++) results[i - start] = check_graph(src.at(i), options.harness);
            } catch (...) {
                std::lock_guard lock(error_mutex);
                if (!error) error = std::current_exception();
                next = end;
            }
        };
        if (jobs == 1) {
            work();
        } else {
            std::vector<std::thread> pool;
            for (int t = 0; t < jobs; ++t) pool.emplace_back(work);
            for (auto& t : pool) t.join();
        }
        if (error) std::rethrow_exception(error);

        for (const auto& r : results) {
            ++report.graphs;
            if (!r.complete) ++report.incomplete;
            for (const auto& c : r.checks) {
                auto& cnt = report.counts[c.id];
                if (c.status == CheckStatus::pass) ++cnt.pass;
                if (c.status == CheckStatus::not_applicable) ++cnt.not_applicable;
                if (c.status == CheckStatus::fail) {
                    ++cnt.fail;
                    report.failures.push_back({r.graph6, c.id, c.detail});
                }
            }
            if (r.failed() && !options.keep_going) {
                report.halted = true;
                break;
            }
        }
    }
    std::sort(report.failures.begin(), report.failures.end());
    return report;
}

namespace {

nlohmann::ordered_json opt(const std::optional<int>& v) { return v ? nlohmann::ordered_json(*v) : nlohmann::ordered_json(); }

nlohmann::ordered_json params_json(const ParameterTable& p) {
    nlohmann::ordered_json j;
    j["n"] = p.n;
    j["m"] = p.m;
    j["max_degree"] = p.max_degree;
    j["girth"] = opt(p.girth);
    j["connected"] = p.connected;
    j["beta"] = opt(p.beta);
    j["beta2"] = opt(p.beta2);
    j["gamma"] = opt(p.gamma);
    j["gamma2"] = opt(p.gamma2);
    j["nabla"] = p.nabla;
    j["gamma_LD"] = opt(p.gamma_ld);
    j["gamma_DLD"] = opt(p.gamma_dld);
    j["gamma_SLD"] = opt(p.gamma_sld);
    j["gamma_DLD_complement"] = opt(p.gamma_dld_complement);
    j["forced_codewords"] = p.forced_count;
    j["threshold"] = p.threshold;
    j["twin_free"] = p.twin_free;
    j["leaves"] = opt(p.leaves);
    j["support_vertices"] = opt(p.support_vertices);
    return j;
}

std::string opt_text(const std::optional<int>& v) { return v ? std::to_string(*v) : "-"; }

}  // namespace

std::string to_json(const TheoremReport& r) {
    nlohmann::ordered_json j;
    j["graph6"] = r.graph6;
    j["complete"] = r.complete;
    j["parameters"] = params_json(r.params);
    auto checks = nlohmann::ordered_json::array();
    for (const auto& c : r.checks) checks.push_back({{"id", c.id}, {"status", to_string(c.status)}, {"detail", c.detail}});
    j["checks"] = checks;
    return j.dump(2);
}

std::string to_table(const TheoremReport& r) {
    std::ostringstream out;
    const auto& p = r.params;
    out << "graph6 " << r.graph6 << (r.complete ? "" : "  (incomplete)") << "\n";
    std::vector<std::pair<std::string, std::string>> rows{
        {"n", std::to_string(p.n)},
        {"m", std::to_string(p.m)},
        {"max_degree", std::to_string(p.max_degree)},
        {"girth", opt_text(p.girth)},
        {"connected", p.connected ? "yes" : "no"},
        {"beta", opt_text(p.beta)},
        {"beta2", opt_text(p.beta2)},
        {"gamma", opt_text(p.gamma)},
        {"gamma2", opt_text(p.gamma2)},
        {"nabla", std::to_string(p.nabla)},
        {"gamma_LD", opt_text(p.gamma_ld)},
        {"gamma_DLD", opt_text(p.gamma_dld)},
        {"gamma_SLD", opt_text(p.gamma_sld)},
        {"gamma_DLD_complement", opt_text(p.gamma_dld_complement)},
        {"forced_codewords", std::to_string(p.forced_count)},
        {"threshold", p.threshold ? "yes" : "no"},
        {"twin_free", p.twin_free ? "yes" : "no"},
        {"leaves", opt_text(p.leaves)},
        {"support_vertices", opt_text(p.support_vertices)},
    };
    for (const auto& [k, v] : rows) out << "  " << std::left << std::setw(22) << k << v << "\n";
    std::size_t w = 0;
    for (const auto& c : r.checks) w = std::max(w, c.id.size());
    for (const auto& c : r.checks) {
        out << std::left << std::setw(static_cast<int>(w) + 2) << c.id << std::setw(16) << to_string(c.status) << c.detail
            << "\n";
    }
    return out.str();
}

std::string to_json(const SweepReport& r) {
    nlohmann::ordered_json j;
    j["source"] = r.source;
    j["graphs"] = r.graphs;
    j["incomplete"] = r.incomplete;
    j["halted"] = r.halted;
    j["failures_total"] = r.failure_count();
    nlohmann::ordered_json counts = nlohmann::ordered_json::object();
    for (const auto& [id, c] : r.counts) {
        counts[id] = {{"pass", c.pass}, {"fail", c.fail}, {"not_applicable", c.not_applicable}};
    }
    j["checks"] = counts;
    auto fails = nlohmann::ordered_json::array();
    for (const auto& f : r.failures) fails.push_back({{"graph6", f.graph6}, {"check", f.check}, {"detail", f.detail}});
    j["failures"] = fails;
    return j.dump(2);
}

std::string to_table(const SweepReport& r) {
    std::ostringstream out;
    out << "source " << r.source << ": " << r.graphs << " graphs, " << r.failure_count() << " failures";
    if (r.incomplete) out << ", " << r.incomplete << " incomplete";
    if (r.halted) out << " (halted at first failure)";
    out << "\n";
    std::size_t w = 5;
    for (const auto& [id, c] : r.counts) w = std::max(w, id.size());
    out << std::left << std::setw(static_cast<int>(w) + 2) << "check" << std::right << std::setw(10) << "pass"
        << std::setw(10) << "fail" << std::setw(16) << "not_applicable" << "\n";
    for (const auto& [id, c] : r.counts) {
        out << std::left << std::setw(static_cast<int>(w) + 2) << id << std::right << std::setw(10) << c.pass
            << std::setw(10) << c.fail << std::setw(16) << c.not_applicable << "\n";
    }
    for (const auto& f : r.failures) out << "FAIL " << f.check << " on " << f.graph6 << ": " << f.detail << "\n";
    return out.str();
}

}  // namespace locdom
