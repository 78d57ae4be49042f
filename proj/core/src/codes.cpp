#include "locdom/codes.hpp"

#include <algorithm>
#include <cctype>
#include <stdexcept>

namespace locdom {

std::string to_string(CodeKind k) {
    switch (k) {
        case CodeKind::dom: return "DOM";
        case CodeKind::dom2: return "DOM2";
        case CodeKind::ld: return "LD";
        case CodeKind::sld: return "SLD";
        case CodeKind::dld: return "DLD";
    }
    return "?";
}

CodeKind parse_code_kind(const std::string& text) {
    std::string up = text;
    std::transform(up.begin(), up.end(), up.begin(), [](unsigned char c) { return std::toupper(c); });
    for (auto k : all_code_kinds) {
        if (up == to_string(k)) return k;
    }
    throw std::invalid_argument("unknown code kind '" + text + "' (expected DOM, DOM2, LD, SLD or DLD)");
}

VertexSet identifying_set(const Graph& g, const Code& c, Vertex u) {
    return g.closed_neighbors(u) & c.members();
}

namespace {

/// ⋂_{c ∈ s} N[c]; the whole vertex set when s is empty.
VertexSet common_closed_neighborhood(const Graph& g, VertexSet s) {
    VertexSet acc = g.vertices();
    for (Vertex c : s) acc &= g.closed_neighbors(c);
    return acc;
}

bool dominating(const Graph& g, VertexSet code, int times) {
    for (Vertex u : g.vertices() - code) {
        if ((g.closed_neighbors(u) & code).size() < times) return false;
    }
    return true;
}

bool ld_definition(const Graph& g, VertexSet code) {
    const VertexSet outside = g.vertices() - code;
    for (Vertex u : outside) {
        VertexSet iu = g.closed_neighbors(u) & code;
        if (iu.empty()) return false;
        for (Vertex v : outside) {
            if (v > u && iu == (g.closed_neighbors(v) & code)) return false;
        }
    }
    return true;
}

bool sld_definition(const Graph& g, VertexSet code) {
    for (Vertex u : g.vertices() - code) {
        VertexSet iu = g.closed_neighbors(u) & code;
        if (iu.empty()) return false;
        if (common_closed_neighborhood(g, iu) != VertexSet::single(u)) return false;
    }
    return true;
}

bool sld_characterization(const Graph& g, VertexSet code) {
    for (Vertex u : g.vertices() - code) {
        VertexSet iu = g.closed_neighbors(u) & code;
        for (Vertex v : g.vertices()) {
            if (v != u && iu.subset_of(g.closed_neighbors(v) & code)) return false;
        }
    }
    return true;
}

bool dld_definition(const Graph& g, VertexSet code) {
    const VertexSet outside = g.vertices() - code;
    for (Vertex u : outside) {
        VertexSet iu = g.closed_neighbors(u) & code;
        if (iu.empty()) return false;
        for (Vertex v : outside) {
            if (v != u && iu.subset_of(g.closed_neighbors(v) & code)) return false;
        }
    }
    return true;
}

bool dld_characterization(const Graph& g, VertexSet code) {
    for (Vertex u : g.vertices() - code) {
        VertexSet iu = g.closed_neighbors(u) & code;
        if (iu.empty()) return false;
        if (common_closed_neighborhood(g, iu) - code != VertexSet::single(u)) return false;
    }
    return true;
}

}  // namespace

bool is_code(const Graph& g, const Code& c, CodeKind kind, Form form) {
    if (c.empty()) throw std::invalid_argument("a code must be non-empty");
    if (!c.members().subset_of(g.vertices())) {
        throw std::out_of_range("code mentions a vertex outside the graph");
    }
    const VertexSet code = c.members();
    const bool characterize = form == Form::characterization && g.order() >= 2;
    switch (kind) {
        case CodeKind::dom: return dominating(g, code, 1);
        case CodeKind::dom2: return dominating(g, code, 2);
        case CodeKind::ld: return ld_definition(g, code);
        case CodeKind::sld: return characterize ? sld_characterization(g, code) : sld_definition(g, code);
        case CodeKind::dld: return characterize ? dld_characterization(g, code) : dld_definition(g, code);
    }
    return false;
}

VertexSet forced_sld_codewords(const Graph& g) {
    if (g.order() == 1) return VertexSet::single(0);
    VertexSet forced;
    for (Vertex u : g.vertices()) {
        for (Vertex v : g.vertices()) {
            if (v != u && g.neighbors(u).subset_of(g.closed_neighbors(v))) {
                forced.insert(u);
                break;
            }
        }
    }
    return forced;
}

Code drop_one_dld_code(const Graph& g, Vertex u) {
    if (g.neighbors(u).empty()) {
        throw std::invalid_argument("vertex " + std::to_string(u) + " is isolated; V \\ {u} is not dominating");
    }
    Code c(g.vertices() - VertexSet::single(u));
    if (!is_code(g, c, CodeKind::dld)) throw std::logic_error("drop_one_dld_code: postcondition violated");
    return c;
}

}  // namespace locdom
