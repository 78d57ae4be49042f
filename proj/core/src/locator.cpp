#include "locdom/locator.hpp"

#include <stdexcept>

#include <json.hpp>

#include "locdom/errors.hpp"
#include "locdom/graph_io.hpp"

namespace locdom {

std::string to_string(OutcomeTag t) {
    switch (t) {
        case OutcomeTag::located: return "located";
        case OutcomeTag::multiple_or_inconsistent: return "multiple_or_inconsistent";
        case OutcomeTag::nothing: return "nothing";
    }
    return "?";
}

ReportVector sensor_reports(const Graph& g, const Code& c, VertexSet faults) {
    if (!faults.subset_of(g.vertices())) throw std::out_of_range("fault outside the graph");
    ReportVector out;
    for (Vertex s : c.members()) {
        if (faults.contains(s)) out.push_back(2);
        else if (g.neighbors(s).intersects(faults)) out.push_back(1);
        else out.push_back(0);
    }
    return out;
}

LocationOutcome locate(const Graph& g, const Code& c, const ReportVector& reports, DecodeMode mode) {
    if (c.empty()) throw std::invalid_argument("code must be non-empty");
    if (static_cast<int>(reports.size()) != c.size()) {
        throw std::invalid_argument("report vector has " + std::to_string(reports.size()) + " entries for a code of size " +
                                    std::to_string(c.size()));
    }
    const auto sensors = c.to_vector();
    LocationOutcome out;
    VertexSet ones;
    for (std::size_t i = 0; i < sensors.size(); ++i) {
        if (reports[i] < 0 || reports[i] > 2) throw std::invalid_argument("reports must be 0, 1 or 2");
        if (reports[i] == 2) out.confirmed_faults.push_back(sensors[i]);
        if (reports[i] == 1) ones.insert(sensors[i]);
    }

    auto explains = [&](Vertex v) { return sensor_reports(g, c, VertexSet::single(v)) == reports; };

    if (!out.confirmed_faults.empty()) {
        if (out.confirmed_faults.size() == 1 && explains(out.confirmed_faults[0])) {
            out.tag = OutcomeTag::located;
            out.vertex = out.confirmed_faults[0];
        } else {
            out.tag = OutcomeTag::multiple_or_inconsistent;
        }
        return out;
    }
    if (ones.empty()) {
        out.tag = OutcomeTag::nothing;
        return out;
    }
    VertexSet candidates = g.vertices();
    for (Vertex s : ones) candidates &= g.closed_neighbors(s);
    if (mode == DecodeMode::solid) candidates -= c.members();
    if (candidates.size() == 1 && explains(candidates.first())) {
        out.tag = OutcomeTag::located;
        out.vertex = candidates.first();
    } else {
        out.tag = OutcomeTag::multiple_or_inconsistent;
    }
    return out;
}

Scenario parse_scenario(const std::string& json_text) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(json_text);
    } catch (const nlohmann::json::parse_error& e) {
        throw ParseError(std::string("scenario is not valid JSON: ") + e.what(), e.byte);
    }
    auto require = [&](const char* key) -> const nlohmann::json& {
        if (!j.is_object() || !j.contains(key)) throw std::invalid_argument(std::string("scenario is missing \"") + key + "\"");
        return j.at(key);
    };
    auto vertex_list = [&](const char* key) {
        const auto& arr = require(key);
        if (!arr.is_array()) throw std::invalid_argument(std::string("\"") + key + "\" must be an array of vertex indices");
        std::vector<Vertex> out;
        for (const auto& v : arr) {
            if (!v.is_number_integer()) throw std::invalid_argument(std::string("\"") + key + "\" must hold integers");
            out.push_back(v.get<int>());
        }
        return out;
    };
    const auto& g6 = require("graph6");
    if (!g6.is_string()) throw std::invalid_argument("\"graph6\" must be a string");
    Scenario s{parse_graph6(g6.get<std::string>()), Code(), VertexSet(), DecodeMode::solid};
    for (Vertex v : vertex_list("code")) {
        if (v < 0 || v >= s.graph.order()) throw std::out_of_range("code vertex " + std::to_string(v) + " outside the graph");
        s.code = Code(s.code.members() | VertexSet::single(v));
    }
    if (s.code.empty()) throw std::invalid_argument("scenario code must be non-empty");
    for (Vertex v : vertex_list("faults")) {
        if (v < 0 || v >= s.graph.order()) throw std::out_of_range("fault vertex " + std::to_string(v) + " outside the graph");
        s.faults.insert(v);
    }
    if (j.contains("mode")) {
        const std::string mode = j.at("mode").get<std::string>();
        if (mode == "solid") s.mode = DecodeMode::solid;
        else if (mode == "self") s.mode = DecodeMode::self;
        else throw std::invalid_argument("\"mode\" must be \"solid\" or \"self\"");
    }
    return s;
}

std::string simulate_scenario_json(const Scenario& s) {
    const ReportVector reports = sensor_reports(s.graph, s.code, s.faults);
    const LocationOutcome out = locate(s.graph, s.code, reports, s.mode);
    nlohmann::ordered_json j;
    nlohmann::ordered_json rep = nlohmann::ordered_json::object();
    const auto sensors = s.code.to_vector();
    for (std::size_t i = 0; i < sensors.size(); ++i) rep[std::to_string(sensors[i])] = reports[i];
    j["reports"] = rep;
    j["outcome"] = to_string(out.tag);
    j["vertex"] = out.vertex ? nlohmann::ordered_json(*out.vertex) : nlohmann::ordered_json();
    j["confirmed_faults"] = out.confirmed_faults;
    return j.dump(2);
}

}  // namespace locdom
