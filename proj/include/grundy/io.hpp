#pragma once

#include <json.hpp>

#include "grundy/graph.hpp"
#include "grundy/realizer.hpp"
#include "grundy/reduction.hpp"
#include "grundy/stair.hpp"

namespace grundy {

// JSON shapes used by the command-line tool. nlohmann::json keeps object keys
// sorted, so serialization is byte-stable for fixed input.

inline nlohmann::json coloring_to_json(const Coloring& c) {
    return {{"l", c.l}, {"colors", c.colors}};
}

inline Coloring coloring_from_json(const nlohmann::json& j) {
    if (!j.is_object() || !j.contains("colors"))
        throw std::invalid_argument("coloring document needs a colors array");
    Coloring c;
    c.colors = j.at("colors").get<std::vector<int>>();
    for (int col : c.colors) {
        if (col < 1) throw std::invalid_argument("colors must be positive");
        c.l = std::max(c.l, col);
    }
    if (j.contains("l") && j.at("l").get<int>() != c.l)
        throw std::invalid_argument("field l does not match the maximum color");
    return c;
}

inline nlohmann::json stair_report_to_json(const Decomposition& d, int gamma,
                                           const FeasibleSequence& s) {
    return {{"order", d.order}, {"residues", d.residues}, {"gamma", gamma}, {"sequence", s.vertices}};
}

inline nlohmann::json coloring_report_to_json(const Coloring& c, int k, const FeasibleSequence& s) {
    return {{"l", c.l}, {"colors", c.colors}, {"sequence", s.vertices}, {"k", k}};
}

inline nlohmann::json verdict_to_json(const Verdict& v) {
    nlohmann::json violations = nlohmann::json::array();
    for (const auto& viol : v.violations) {
        if (viol.kind == Violation::Kind::improper_edge)
            violations.push_back({{"kind", "improper-edge"}, {"u", viol.u}, {"v", viol.v}});
        else
            violations.push_back({{"kind", "class-no-grundy"}, {"class", viol.color_class}});
    }
    return {{"valid", v.valid}, {"violations", violations}};
}

inline const char* role_name(Role r) {
    switch (r) {
        case Role::source: return "source-vertex";
        case Role::companion: return "edge-companion";
        case Role::selector: return "selector";
        case Role::triangle: return "triangle";
    }
    return "?";
}

inline nlohmann::json instance_meta_to_json(const ReductionInstance& inst) {
    nlohmann::json roles = nlohmann::json::array();
    for (const auto& tag : inst.roles) roles.push_back({{"kind", role_name(tag.role)}, {"ref", tag.ref}});
    nlohmann::json edges = nlohmann::json::array();
    for (auto [a, b] : inst.orig_edges) edges.push_back({a, b});
    return {{"k", inst.k}, {"roles", roles}, {"orig", {{"n", inst.orig_n}, {"edges", edges}}}};
}

/// Rebuilds the instance from its sidecar: the construction is deterministic in
/// the source graph, so the roles and k in the file only need to match what the
/// rebuild produces. A mismatch means the sidecar was edited or corrupted.
inline ReductionInstance instance_from_meta_json(const nlohmann::json& j) {
    const auto& orig = j.at("orig");
    std::vector<std::pair<int, int>> edges;
    for (const auto& e : orig.at("edges")) {
        if (!e.is_array() || e.size() != 2) throw std::invalid_argument("bad edge entry in sidecar");
        edges.emplace_back(e[0].get<int>(), e[1].get<int>());
    }
    Graph g = Graph::from_edges(orig.at("n").get<int>(), edges);
    ReductionInstance inst = build_reduction(g);
    if (j.at("k").get<int>() != inst.k) throw std::invalid_argument("sidecar k does not match the rebuild");
    const auto& roles = j.at("roles");
    if (static_cast<int>(roles.size()) != inst.gprime.n)
        throw std::invalid_argument("sidecar roles do not match the rebuild");
    for (int x = 0; x < inst.gprime.n; ++x) {
        if (roles[x].at("kind").get<std::string>() != role_name(inst.roles[x].role) ||
            roles[x].at("ref").get<int>() != inst.roles[x].ref)
            throw std::invalid_argument("sidecar roles do not match the rebuild");
    }
    return inst;
}

}  // namespace grundy
