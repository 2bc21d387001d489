#include "deltarig/json_io.hpp"

#include <json.hpp>

#include <stdexcept>

namespace deltarig {

namespace {

using nlohmann::json;

json parse_or_throw(const std::string& text) {
    try {
        return json::parse(text);
    } catch (const json::parse_error& e) {
        throw std::invalid_argument(e.what());
    }
}

const json& field(const json& j, const char* name) {
    auto it = j.find(name);
    if (it == j.end())
        throw std::invalid_argument(std::string("missing field \"") + name + "\"");
    return *it;
}

}  // namespace

DeltaMatroid dm_from_json(const std::string& text) {
    const json j = parse_or_throw(text);
    if (!j.is_object()) throw std::invalid_argument("expected a JSON object");
    std::vector<std::string> ground;
    for (const auto& g : field(j, "ground")) {
        if (!g.is_string()) throw std::invalid_argument("ground elements must be strings");
        ground.push_back(g.get<std::string>());
    }
    std::vector<std::string> labels = ground;  // index lookup before construction
    auto index_of = [&](const std::string& s) {
        for (std::size_t i = 0; i < labels.size(); ++i)
            if (labels[i] == s) return i;
        throw std::invalid_argument("feasible set uses unknown element \"" + s + "\"");
    };
    std::vector<Mask> feasible;
    for (const auto& fs : field(j, "feasible")) {
        if (!fs.is_array()) throw std::invalid_argument("feasible sets must be arrays");
        Mask m = 0;
        for (const auto& el : fs) {
            if (!el.is_string()) throw std::invalid_argument("feasible set entries must be strings");
            m |= Mask(1) << index_of(el.get<std::string>());
        }
        feasible.push_back(m);
    }
    return DeltaMatroid::validate(std::move(ground), std::move(feasible));
}

std::string dm_to_json(const DeltaMatroid& d) {
    json j;
    j["ground"] = d.ground();
    json fam = json::array();
    for (Mask f : d.feasible()) {
        json fs = json::array();
        for (int i = 0; i < d.size(); ++i)
            if (f & (Mask(1) << i)) fs.push_back(d.ground()[i]);
        fam.push_back(std::move(fs));
    }
    j["feasible"] = std::move(fam);
    return j.dump();
}

RibbonGraph rg_from_json(const std::string& text) {
    const json j = parse_or_throw(text);
    if (!j.is_object()) throw std::invalid_argument("expected a JSON object");
    std::vector<std::vector<int>> rotations;
    for (const auto& v : field(j, "vertices")) {
        if (!v.is_array()) throw std::invalid_argument("vertex rotations must be arrays");
        std::vector<int> rot;
        for (const auto& dart : v) {
            if (!dart.is_number_integer())
                throw std::invalid_argument("darts must be integers");
            rot.push_back(dart.get<int>());
        }
        rotations.push_back(std::move(rot));
    }
    std::vector<RibbonEdge> edges;
    for (const auto& e : field(j, "edges")) {
        const auto& darts = field(e, "darts");
        if (!darts.is_array() || darts.size() != 2)
            throw std::invalid_argument("edge darts must be a pair");
        RibbonEdge re;
        re.d1 = darts[0].get<int>();
        re.d2 = darts[1].get<int>();
        re.sign = field(e, "sign").get<int>();
        re.label = field(e, "label").get<std::string>();
        edges.push_back(std::move(re));
    }
    return RibbonGraph::validate(std::move(rotations), std::move(edges));
}

std::string rg_to_json(const RibbonGraph& g) {
    json j;
    j["vertices"] = g.rotations();
    json es = json::array();
    for (const auto& e : g.edges())
        es.push_back({{"darts", {e.d1, e.d2}}, {"sign", e.sign}, {"label", e.label}});
    j["edges"] = std::move(es);
    return j.dump();
}

}  // namespace deltarig
