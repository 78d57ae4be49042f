#include "locdom/generators.hpp"

#include <stdexcept>

namespace locdom {

namespace {

void need(bool ok, const std::string& msg) {
    if (!ok) throw std::invalid_argument(msg);
}

int single_param(const GraphFamily& fam, int min_value) {
    need(fam.params.size() == 1, to_string(fam.family) + " takes exactly one parameter");
    int n = fam.params[0];
    need(n >= min_value, to_string(fam.family) + " needs n >= " + std::to_string(min_value) + ", got " +
                             std::to_string(n));
    return n;
}

}  // namespace

GraphFamily GraphFamily::threshold(const std::vector<ThresholdStep>& steps) {
    GraphFamily f{Family::threshold, {}};
    for (auto s : steps) f.params.push_back(s == ThresholdStep::universal ? 1 : 0);
    return f;
}

std::string to_string(Family f) {
    switch (f) {
        case Family::path: return "path";
        case Family::cycle: return "cycle";
        case Family::star: return "star";
        case Family::complete: return "complete";
        case Family::complete_bipartite: return "complete_bipartite";
        case Family::discrete: return "discrete";
        case Family::ladder: return "ladder";
        case Family::threshold: return "threshold";
    }
    return "?";
}

Family parse_family(const std::string& name) {
    for (auto f : {Family::path, Family::cycle, Family::star, Family::complete, Family::complete_bipartite,
                   Family::discrete, Family::ladder, Family::threshold}) {
        if (name == to_string(f)) return f;
    }
    if (name == "complete-bipartite") return Family::complete_bipartite;
    throw std::invalid_argument("unknown graph family '" + name + "'");
}

std::vector<ThresholdStep> parse_threshold_steps(const std::string& text) {
    std::vector<ThresholdStep> steps;
    for (char c : text) {
        if (c == 'i' || c == 'I') steps.push_back(ThresholdStep::isolated);
        else if (c == 'u' || c == 'U') steps.push_back(ThresholdStep::universal);
        else if (c != ',' && c != ' ') throw std::invalid_argument(std::string("threshold step must be 'i' or 'u', got '") + c + "'");
    }
    return steps;
}

Graph generate(const GraphFamily& fam) {
    switch (fam.family) {
        case Family::path: {
            int n = single_param(fam, 1);
            GraphBuilder b(n);
            for (int i = 0; i + 1 < n; ++i) b.add_edge(i, i + 1);
            return b.build();
        }
        case Family::cycle: {
            int n = single_param(fam, 3);
            GraphBuilder b(n);
            for (int i = 0; i < n; ++i) b.add_edge(i, (i + 1) % n);
            return b.build();
        }
        case Family::star: {
            int n = single_param(fam, 1);
            GraphBuilder b(n);
            for (int i = 1; i < n; ++i) b.add_edge(0, i);
            return b.build();
        }
        case Family::complete: {
            int n = single_param(fam, 1);
            GraphBuilder b(n);
            for (int i = 0; i < n; ++i)
                for (int j = i + 1; j < n; ++j) b.add_edge(i, j);
            return b.build();
        }
        case Family::discrete: return Graph(single_param(fam, 1));
        case Family::complete_bipartite: {
            need(fam.params.size() == 2, "complete_bipartite takes two parameters m n");
            int m = fam.params[0];
            int n = fam.params[1];
            need(m >= 1 && n >= 1, "complete_bipartite needs m, n >= 1");
            need(m + n <= Graph::max_order, "complete_bipartite order too large");
            GraphBuilder b(m + n);
            for (int i = 0; i < m; ++i)
                for (int j = 0; j < n; ++j) b.add_edge(i, m + j);
            return b.build();
        }
        case Family::ladder: {
            int n = single_param(fam, 1);
            need(2 * n <= Graph::max_order, "ladder order too large");
            // Same indexing as cartesian_product(path(n), path(2)): (i, j) -> 2i + j.
            GraphBuilder b(2 * n);
            for (int i = 0; i < n; ++i) {
                b.add_edge(2 * i, 2 * i + 1);
                if (i + 1 < n) {
                    b.add_edge(2 * i, 2 * i + 2);
                    b.add_edge(2 * i + 1, 2 * i + 3);
                }
            }
            return b.build();
        }
        case Family::threshold: {
            need(!fam.params.empty(), "threshold sequence must be non-empty");
            int n = static_cast<int>(fam.params.size());
            GraphBuilder b(n);
            for (int v = 0; v < n; ++v) {
                int step = fam.params[v];
                need(step == 0 || step == 1, "threshold steps are 0 (isolated) or 1 (universal)");
                if (step == 1)
                    for (int u = 0; u < v; ++u) b.add_edge(u, v);
            }
            return b.build();
        }
    }
    throw std::invalid_argument("unknown family");
}

}  // namespace locdom
