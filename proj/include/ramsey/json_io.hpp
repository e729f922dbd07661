#pragma once

#include <fstream>
#include <sstream>
#include <stdexcept>
#include <string>

#include <json.hpp>

#include "ramsey/arrow.hpp"
#include "ramsey/hypergraph.hpp"

namespace ramsey {

// Key order is preserved so serialized artifacts are byte-stable.
using Json = nlohmann::ordered_json;

inline Json to_json(const Hypergraph& h) {
    Json j;
    j["k"] = h.k();
    j["vertices"] = h.vertex_count();
    j["edges"] = Json::array();
    for (const auto& e : h.edges()) j["edges"].push_back(e);
    return j;
}

inline Hypergraph hypergraph_from_json(const Json& j) {
    if (!j.contains("k") || !j.contains("vertices") || !j.contains("edges"))
        throw std::invalid_argument("hypergraph JSON needs k, vertices, edges");
    std::vector<Edge> edges;
    for (const auto& je : j.at("edges")) edges.push_back(je.get<Edge>());
    return Hypergraph(j.at("k").get<int>(), j.at("vertices").get<int>(), std::move(edges));
}

inline Json to_json(const Target& t) {
    Json j;
    if (std::holds_alternative<PathSpec>(t)) {
        const auto& p = std::get<PathSpec>(t);
        j["kind"] = "path";
        j["k"] = p.k;
        j["ell"] = p.ell;
        j["n"] = p.n;
    } else {
        const auto& c = std::get<CycleSpec>(t);
        j["kind"] = "cycle_geq";
        j["k"] = c.k;
        j["ell"] = c.k - 1;
        j["n"] = c.min_length;
    }
    return j;
}

inline Target target_from_json(const Json& j) {
    const std::string kind = j.at("kind").get<std::string>();
    if (kind == "path")
        return PathSpec(j.at("k").get<int>(), j.at("ell").get<int>(), j.at("n").get<int>());
    if (kind == "cycle_geq") return CycleSpec(j.at("k").get<int>(), j.at("n").get<int>());
    throw std::invalid_argument("unknown target kind: " + kind);
}

// Mini-syntax used on the command line: "path:k,l,n" or "cycle_geq:k,min".
inline Target target_from_string(const std::string& s) {
    auto colon = s.find(':');
    if (colon == std::string::npos) throw std::invalid_argument("target must be kind:params");
    const std::string kind = s.substr(0, colon);
    std::vector<int> nums;
    std::stringstream ss(s.substr(colon + 1));
    std::string item;
    while (std::getline(ss, item, ',')) nums.push_back(std::stoi(item));
    if (kind == "path" && nums.size() == 3) return PathSpec(nums[0], nums[1], nums[2]);
    if (kind == "cycle_geq" && nums.size() == 2) return CycleSpec(nums[0], nums[1]);
    throw std::invalid_argument("malformed target descriptor: " + s);
}

inline std::string target_to_string(const Target& t) {
    if (std::holds_alternative<PathSpec>(t)) {
        const auto& p = std::get<PathSpec>(t);
        return "path:" + std::to_string(p.k) + "," + std::to_string(p.ell) + "," +
               std::to_string(p.n);
    }
    const auto& c = std::get<CycleSpec>(t);
    return "cycle_geq:" + std::to_string(c.k) + "," + std::to_string(c.min_length);
}

inline Json load_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open " + path);
    Json j;
    in >> j;
    return j;
}

inline void save_json_file(const std::string& path, const Json& j) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot write " + path);
    out << j.dump(2) << "\n";
}

}  // namespace ramsey
