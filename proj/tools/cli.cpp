#include "cli.hpp"

#include <filesystem>
#include <fstream>
#include <optional>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "locdom/closed_form.hpp"
#include "locdom/codes.hpp"
#include "locdom/constructions.hpp"
#include "locdom/errors.hpp"
#include "locdom/generators.hpp"
#include "locdom/graph_io.hpp"
#include "locdom/harness.hpp"
#include "locdom/locator.hpp"
#include "locdom/solvers.hpp"
#include "locdom/trees.hpp"

namespace locdom::cli {

namespace {

using json = nlohmann::ordered_json;

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct GraphInput {
    std::string graph;
    std::string family;
    int n = 0;
    int m = 0;
    std::string seq;

    void attach(CLI::App* cmd) {
        cmd->add_option("graph", graph, "graph6 string or path to a graph6/edge-list file");
        cmd->add_option("--family", family, "path, cycle, star, complete, complete_bipartite, discrete, ladder, threshold");
        cmd->add_option("--n", n, "family order parameter");
        cmd->add_option("--m", m, "second parameter (complete_bipartite)");
        cmd->add_option("--seq", seq, "threshold creation sequence of i/u steps");
    }

    Graph load() const {
        if (!family.empty()) {
            if (!graph.empty()) throw UsageError("give either a graph or --family, not both");
            const Family f = parse_family(family);
            if (f == Family::threshold) {
                if (seq.empty()) throw UsageError("--family threshold needs --seq");
                return generate(GraphFamily::threshold(parse_threshold_steps(seq)));
            }
            if (n < 1) throw UsageError("--family " + family + " needs --n >= 1");
            if (f == Family::complete_bipartite) {
                if (m < 1) throw UsageError("--family complete_bipartite needs --m >= 1");
                return generate(GraphFamily::complete_bipartite(m, n));
            }
            return generate(GraphFamily{f, {n}});
        }
        if (graph.empty()) throw UsageError("no graph given (pass a graph6 string, a file path, or --family)");
        if (std::filesystem::exists(graph)) return load_graph_file(graph);
        return parse_graph6(graph);
    }
};

struct Common {
    std::string format = "table";
    int cap = SolverOptions{}.max_vertices;

    void attach(CLI::App* cmd) {
        cmd->add_option("--format", format, "json or table")->check(CLI::IsMember({"json", "table"}));
        cmd->add_option("--cap", cap, "largest order accepted by exact search")->check(CLI::PositiveNumber);
    }
    bool as_json() const { return format == "json"; }
    SolverOptions solver() const {
        SolverOptions o;
        o.max_vertices = cap;
        return o;
    }
};

std::vector<Vertex> parse_vertex_list(const std::string& text) {
    std::vector<Vertex> out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        if (item.empty()) continue;
        try {
            std::size_t used = 0;
            int v = std::stoi(item, &used);
            if (used != item.size()) throw std::invalid_argument(item);
            out.push_back(v);
        } catch (const std::exception&) {
            throw UsageError("bad vertex '" + item + "' in list '" + text + "'");
        }
    }
    return out;
}

json result_json(const SolverResult& r, CodeKind kind) {
    json j;
    j["kind"] = to_string(kind);
    j["value"] = r.value;
    j["witness"] = r.witness.to_vector();
    j["method"] = to_string(r.method);
    j["nodes_explored"] = r.nodes_explored;
    j["lower_bound_used"] = r.lower_bound_used;
    return j;
}

std::string join(const std::vector<Vertex>& vs) {
    std::string s;
    for (std::size_t i = 0; i < vs.size(); ++i) s += (i ? " " : "") + std::to_string(vs[i]);
    return s;
}

int emit_construction(const ConstructionClaim& c, bool verify, const std::string& output, const SolverOptions& so,
                      bool as_json, std::ostream& out, json& collected) {
    json j = json::parse(claims_json(c));
    bool ok = true;
    if (verify) {
        json v = json::array();
        for (const auto& check : verify_claims(c, so)) {
            v.push_back({{"parameter", to_string(check.parameter)}, {"claimed", check.claimed}, {"computed", check.computed},
                         {"ok", check.ok()}});
            ok = ok && check.ok();
        }
        j["verification"] = v;
    }
    if (!output.empty()) {
        const std::string stem = output + (c.name == "complement-gap-complement" ? "-complement" : "");
        std::ofstream(stem + ".g6") << emit_graph6(c.graph) << "\n";
        std::ofstream(stem + ".json") << claims_json(c) << "\n";
    }
    if (as_json) {
        collected.push_back(j);
    } else {
        out << emit_graph6(c.graph) << "\n";
        out << c.name << " n=" << c.graph.order();
        for (const auto& cl : c.claims) out << " " << to_string(cl.parameter) << "=" << cl.value;
        out << "\n";
        if (verify) {
            for (const auto& v : j["verification"]) {
                out << "  " << v["parameter"].get<std::string>() << ": claimed " << v["claimed"].get<int>() << ", computed "
                    << v["computed"].get<int>() << (v["ok"].get<bool>() ? "  ok" : "  MISMATCH") << "\n";
            }
        }
    }
    return ok ? 0 : 1;
}

int positive(const std::string& text, const char* what) {
    try {
        std::size_t used = 0;
        int v = std::stoi(text, &used);
        if (used == text.size()) return v;
    } catch (const std::exception&) {
    }
    throw UsageError(std::string("expected an integer for ") + what + ", got '" + text + "'");
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Exact locating-dominating code computations and theorem checks", "locdom"};
    app.require_subcommand(1);

    // verify
    auto* verify = app.add_subcommand("verify", "Check whether a vertex set is a code of the given kind");
    GraphInput verify_in;
    Common verify_opts;
    std::string code_text;
    std::string kind_text;
    std::string form_text = "definition";
    verify_in.attach(verify);
    verify_opts.attach(verify);
    verify->add_option("--code", code_text, "comma-separated codewords")->required();
    verify->add_option("--kind", kind_text, "DOM, DOM2, LD, SLD or DLD")->required();
    verify->add_option("--form", form_text, "definition or characterization")
        ->check(CLI::IsMember({"definition", "characterization"}));

    // solve
    auto* solve = app.add_subcommand("solve", "Minimum code of the given kind");
    GraphInput solve_in;
    Common solve_opts;
    std::string solve_kind;
    std::string method = "bnb";
    bool no_pruning = false;
    solve_in.attach(solve);
    solve_opts.attach(solve);
    solve->add_option("--kind", solve_kind, "DOM, DOM2, LD, SLD or DLD")->required();
    solve->add_option("--method", method, "bnb, exhaustive or tree")->check(CLI::IsMember({"bnb", "exhaustive", "tree"}));
    solve->add_flag("--no-pruning", no_pruning, "search without the structural lower bounds");

    // params
    auto* params = app.add_subcommand("params", "Parameter table and theorem checks for one graph");
    GraphInput params_in;
    Common params_opts;
    params_in.attach(params);
    params_opts.attach(params);

    // construct
    auto* construct = app.add_subcommand("construct", "Emit an explicit construction with its claimed parameters");
    Common construct_opts;
    std::string construct_name;
    std::vector<std::string> construct_args;
    bool construct_verify = false;
    std::string construct_output;
    construct_opts.attach(construct);
    construct->add_option("name", construct_name, "sperner-extremal, complement-gap, realize-ld-sld, realize-ld-dld")
        ->required()
        ->check(CLI::IsMember({"sperner-extremal", "complement-gap", "realize-ld-sld", "realize-ld-dld"}));
    construct->add_option("args", construct_args, "integer parameters");
    construct->add_flag("--verify", construct_verify, "check every claim with the exact solver");
    construct->add_option("--output", construct_output, "write <prefix>.g6 and <prefix>.json");

    // sweep
    auto* sweep_cmd = app.add_subcommand("sweep", "Run the theorem checks over a stream of graphs");
    Common sweep_opts;
    std::string source;
    int jobs = 1;
    bool keep_going = false;
    sweep_opts.attach(sweep_cmd);
    sweep_cmd->add_option("source", source, "graph6 file, all:N, trees:N or free-trees:N")->required();
    sweep_cmd->add_option("--jobs", jobs, "worker threads")->check(CLI::PositiveNumber);
    sweep_cmd->add_flag("--keep-going", keep_going, "continue after the first failing graph");

    // simulate
    auto* simulate = app.add_subcommand("simulate", "Sensor reports and decoder outcome for a fault scenario");
    Common simulate_opts;
    std::string scenario_path;
    simulate_opts.attach(simulate);
    simulate->add_option("scenario", scenario_path, "scenario JSON file")->required();

    // closed-form
    auto* closed = app.add_subcommand("closed-form", "Exact value from a known formula");
    Common closed_opts;
    std::vector<std::string> closed_args;
    closed_opts.attach(closed);
    closed->add_option("args", closed_args, "<family> <params...> <kind>")->required();

    if (!args.empty() && !args[0].empty() && args[0][0] != '-') {
        bool known = false;
        for (const auto* s : app.get_subcommands({})) known = known || s->get_name() == args[0];
        if (!known) {
            err << "error: unknown subcommand '" << args[0]
                << "' (expected verify, solve, params, construct, sweep, simulate or closed-form)\n";
            return 2;
        }
    }

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return 0;
    } catch (const CLI::ParseError& e) {
        std::string sub;
        for (auto* s : app.get_subcommands()) sub = s->get_name() + ": ";
        err << "error: " << sub << e.what() << "\n";
        return 2;
    }

    try {
        if (verify->parsed()) {
            const Graph g = verify_in.load();
            const auto vs = parse_vertex_list(code_text);
            if (vs.empty()) throw UsageError("--code must list at least one vertex");
            for (Vertex v : vs)
                if (v < 0 || v >= g.order())
                    throw UsageError("codeword " + std::to_string(v) + " is not a vertex (graph has " +
                                     std::to_string(g.order()) + " vertices)");
            const CodeKind kind = parse_code_kind(kind_text);
            const Form form = form_text == "characterization" ? Form::characterization : Form::definition;
            const Code c = Code::from(vs);
            const bool ok = is_code(g, c, kind, form);
            if (verify_opts.as_json()) {
                json j{{"graph6", emit_graph6(g)}, {"kind", to_string(kind)}, {"form", form_text}, {"code", c.to_vector()},
                       {"is_code", ok}};
                out << j.dump(2) << "\n";
            } else {
                out << (ok ? "true" : "false") << "\n";
            }
            return ok ? 0 : 1;
        }

        if (solve->parsed()) {
            const Graph g = solve_in.load();
            const CodeKind kind = parse_code_kind(solve_kind);
            SolverOptions so = solve_opts.solver();
            so.theorem_pruning = !no_pruning;
            SolverResult r;
            if (method == "tree") {
                if (kind == CodeKind::dld) r = tree_gamma_dld(g);
                else if (kind == CodeKind::sld) r = tree_gamma_sld(g);
                else throw UsageError("--method tree supports only SLD and DLD");
            } else {
                so.method = method == "exhaustive" ? Method::exhaustive : Method::branch_and_bound;
                r = minimum_code(g, kind, so);
            }
            if (solve_opts.as_json()) {
                json j{{"graph6", emit_graph6(g)}};
                j.update(result_json(r, kind));
                out << j.dump(2) << "\n";
            } else {
                out << r.value << "\n";
                out << "witness: " << join(r.witness.to_vector()) << "\n";
                out << "method: " << to_string(r.method) << "\n";
                out << "nodes: " << r.nodes_explored << "\n";
            }
            return 0;
        }

        if (params->parsed()) {
            const Graph g = params_in.load();
            HarnessOptions h;
            h.solver = params_opts.solver();
            const TheoremReport r = check_graph(g, h);
            out << (params_opts.as_json() ? to_json(r) : to_table(r));
            if (params_opts.as_json()) out << "\n";
            return r.failed() ? 1 : 0;
        }

        if (construct->parsed()) {
            std::vector<int> a;
            for (const auto& s : construct_args) a.push_back(positive(s, construct_name.c_str()));
            auto need = [&](std::size_t k) {
                if (a.size() != k) {
                    throw UsageError(construct_name + " takes " + std::to_string(k) + " integer argument(s), got " +
                                     std::to_string(a.size()));
                }
            };
            std::vector<ConstructionClaim> built;
            if (construct_name == "sperner-extremal") {
                need(1);
                built.push_back(sperner_extremal(a[0]));
            } else if (construct_name == "complement-gap") {
                need(1);
                auto [g1, g2] = complement_gap(a[0]);
                built.push_back(g1);
                built.push_back(g2);
            } else if (construct_name == "realize-ld-sld") {
                need(2);
                built.push_back(realize_ld_sld(a[0], a[1]));
            } else {
                need(2);
                built.push_back(realize_ld_dld(a[0], a[1]));
            }
            SolverOptions so = construct_opts.solver();
            json collected = json::array();
            int code = 0;
            for (const auto& c : built) {
                code = std::max(code, emit_construction(c, construct_verify, construct_output, so, construct_opts.as_json(),
                                                        out, collected));
            }
            if (construct_opts.as_json()) out << (collected.size() == 1 ? collected[0] : collected).dump(2) << "\n";
            return code;
        }

        if (sweep_cmd->parsed()) {
            SweepOptions so;
            so.jobs = jobs;
            so.keep_going = keep_going;
            so.harness.solver = sweep_opts.solver();
            const SweepReport r = sweep(source, so);
            out << (sweep_opts.as_json() ? to_json(r) + "\n" : to_table(r));
            return r.failure_count() == 0 ? 0 : 1;
        }

        if (simulate->parsed()) {
            std::ifstream in(scenario_path);
            if (!in) throw UsageError("cannot open scenario file '" + scenario_path + "'");
            std::stringstream buf;
            buf << in.rdbuf();
            const Scenario s = parse_scenario(buf.str());
            const json j = json::parse(simulate_scenario_json(s));
            if (simulate_opts.as_json()) {
                out << j.dump(2) << "\n";
            } else {
                out << "outcome: " << j["outcome"].get<std::string>();
                if (!j["vertex"].is_null()) out << " " << j["vertex"].get<int>();
                out << "\nreports:";
                for (const auto& [k, v] : j["reports"].items()) out << " " << k << ":" << v.get<int>();
                out << "\n";
                if (!j["confirmed_faults"].empty()) out << "confirmed faults: " << j["confirmed_faults"].dump() << "\n";
            }
            return 0;
        }

        if (closed->parsed()) {
            if (closed_args.size() < 3) throw UsageError("closed-form needs <family> <params...> <kind>");
            ClosedFormQuery q{parse_closed_form_family(closed_args.front()), {}, parse_code_kind(closed_args.back())};
            for (std::size_t i = 1; i + 1 < closed_args.size(); ++i) q.params.push_back(positive(closed_args[i], "a family parameter"));
            const int v = closed_form(q);
            if (closed_opts.as_json()) {
                out << json{{"family", to_string(q.family)}, {"params", q.params}, {"kind", to_string(q.kind)}, {"value", v}}.dump(2)
                    << "\n";
            } else {
                out << v << "\n";
            }
            return 0;
        }
    } catch (const UsageError& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    } catch (const ParseError& e) {
        err << "error: bad input: " << e.what() << "\n";
        return 2;
    } catch (const CapExceeded& e) {
        err << "error: " << e.what() << " (use --cap)\n";
        return 2;
    } catch (const NotAvailable& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    } catch (const Infeasible& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::invalid_argument& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::out_of_range& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::length_error& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::runtime_error& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        // A self-check inside the library tripped.
        err << "internal error: " << e.what() << "\n";
        return 1;
    }
    err << "error: no subcommand given\n";
    return 2;
}

}  // namespace locdom::cli
