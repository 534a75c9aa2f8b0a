#pragma once

#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "grundy/graph.hpp"
#include "grundy/realizer.hpp"

namespace grundy {

/// A certificate handed to extract_3coloring does not certify what it claims.
class invalid_certificate : public std::runtime_error {
public:
    explicit invalid_certificate(const std::string& what_arg) : std::runtime_error(what_arg) {}
};

enum class Role { source, companion, selector, triangle };

struct RoleTag {
    Role role;
    int ref;  // vertex id, edge index, edge index, or 0..2 respectively
    bool operator==(const RoleTag&) const = default;
};

/// Output of the 3-colorability reduction: a graph whose partial Grundy number
/// reaches k = m+3 exactly when the source graph is 3-colorable. Roles are
/// carried explicitly so the lift and extraction never reverse-engineer ids.
struct ReductionInstance {
    Graph gprime;
    int k = 0;
    std::vector<RoleTag> roles;                   // one per vertex of gprime
    int orig_n = 0;
    std::vector<std::pair<int, int>> orig_edges;  // canonical order of the source graph
};

/// Structural audit of an instance, driven by the role tags alone. Throws
/// std::logic_error on the first violated property.
inline void validate_instance(const ReductionInstance& inst) {
    const Graph& gp = inst.gprime;
    const int n = inst.orig_n;
    const int m = static_cast<int>(inst.orig_edges.size());
    if (m < 1) throw std::logic_error("instance has no source edges");
    if (inst.k != m + 3) throw std::logic_error("k is not m+3");
    if (gp.n != n + 2 * m + 3) throw std::logic_error("vertex count is not n+2m+3");
    if (static_cast<int>(inst.roles.size()) != gp.n) throw std::logic_error("one role per vertex required");

    std::vector<int> vertex_id(n, -1), edge_id(m, -1), s_id(m, -1), k3_id(3, -1);
    for (int x = 0; x < gp.n; ++x) {
        auto [role, ref] = inst.roles[x];
        switch (role) {
            case Role::source:
                if (ref < 0 || ref >= n || vertex_id[ref] != -1) throw std::logic_error("bad source-vertex role");
                vertex_id[ref] = x;
                break;
            case Role::companion:
                if (ref < 0 || ref >= m || edge_id[ref] != -1) throw std::logic_error("bad companion role");
                edge_id[ref] = x;
                break;
            case Role::selector:
                if (ref < 0 || ref >= m || s_id[ref] != -1) throw std::logic_error("bad selector role");
                s_id[ref] = x;
                break;
            case Role::triangle:
                if (ref < 0 || ref >= 3 || k3_id[ref] != -1) throw std::logic_error("bad triangle role");
                k3_id[ref] = x;
                break;
        }
    }

    // selector clique: s_j adjacent to every other s, and outside the clique to
    // exactly the two endpoint vertices and the companion edge vertex of edge j
    for (int j = 0; j < m; ++j) {
        auto [a, b] = inst.orig_edges[j];
        if (a < 0 || b < 0 || a >= n || b >= n || a >= b) throw std::logic_error("bad source edge");
        int expected = (m - 1) + 3;
        if (gp.degree(s_id[j]) != expected) throw std::logic_error("selector degree is off");
        for (int i = 0; i < m; ++i)
            if (i != j && !gp.has_edge(s_id[j], s_id[i])) throw std::logic_error("selector clique broken");
        if (!gp.has_edge(s_id[j], vertex_id[a]) || !gp.has_edge(s_id[j], vertex_id[b]) ||
            !gp.has_edge(s_id[j], edge_id[j]))
            throw std::logic_error("selector misses its edge gadget");
    }
    // replicated vertices connect only into the selector clique
    for (int i = 0; i < n; ++i)
        for (int x : gp.adj[vertex_id[i]])
            if (inst.roles[x].role != Role::selector) throw std::logic_error("source vertex neighbor is not a selector");
    for (int j = 0; j < m; ++j)
        if (gp.degree(edge_id[j]) != 1 || gp.adj[edge_id[j]][0] != s_id[j])
            throw std::logic_error("edge companion must hang off its selector only");
    // the separate triangle
    for (int t = 0; t < 3; ++t) {
        if (gp.degree(k3_id[t]) != 2) throw std::logic_error("triangle vertex degree is off");
        for (int x : gp.adj[k3_id[t]])
            if (inst.roles[x].role != Role::triangle) throw std::logic_error("triangle touches the rest");
    }
    if (max_degree(gp) != inst.k - 1) throw std::logic_error("max degree is not k-1");
}

/// Builds the instance for a source graph with at least one edge. Ids are laid
/// out deterministically: source vertices first (0..n-1), then one companion
/// vertex per canonical edge, then one selector per canonical edge, then the
/// triangle. k = m+3 matches the max degree plus one.
inline ReductionInstance build_reduction(const Graph& g) {
    if (g.m < 1) throw std::invalid_argument("reduction needs at least one edge");
    ReductionInstance inst;
    inst.orig_n = g.n;
    inst.orig_edges = g.edges();
    const int n = g.n;
    const int m = static_cast<int>(g.m);
    inst.k = m + 3;

    const int first_edge_vertex = n;
    const int first_selector = n + m;
    const int first_triangle = n + 2 * m;

    std::vector<std::pair<int, int>> edges;
    edges.reserve(3 * m + m * (m - 1) / 2 + 3);
    for (int j = 0; j < m; ++j) {
        auto [a, b] = inst.orig_edges[j];
        edges.emplace_back(first_selector + j, a);
        edges.emplace_back(first_selector + j, b);
        edges.emplace_back(first_selector + j, first_edge_vertex + j);
    }
    for (int i = 0; i < m; ++i)
        for (int j = i + 1; j < m; ++j) edges.emplace_back(first_selector + i, first_selector + j);
    edges.emplace_back(first_triangle, first_triangle + 1);
    edges.emplace_back(first_triangle, first_triangle + 2);
    edges.emplace_back(first_triangle + 1, first_triangle + 2);

    inst.gprime = Graph::from_edges(n + 2 * m + 3, edges);
    inst.roles.reserve(inst.gprime.n);
    for (int i = 0; i < n; ++i) inst.roles.push_back({Role::source, i});
    for (int j = 0; j < m; ++j) inst.roles.push_back({Role::companion, j});
    for (int j = 0; j < m; ++j) inst.roles.push_back({Role::selector, j});
    for (int t = 0; t < 3; ++t) inst.roles.push_back({Role::triangle, t});

    validate_instance(inst);
    return inst;
}

/// Turns a proper 3-coloring of the source graph into a partial Grundy coloring
/// of the instance with exactly k colors: source vertices keep their colors, the
/// companion of edge j takes the {1,2,3}-color its endpoints left unused,
/// selector j takes 4+j, and the triangle takes 1,2,3 (so classes 2 and 3 have
/// their witnesses even when the source coloring is skewed).
inline Coloring lift_coloring(const ReductionInstance& inst, const Coloring& c3) {
    if (static_cast<int>(c3.colors.size()) != inst.orig_n)
        throw std::invalid_argument("coloring size does not match the source graph");
    for (int c : c3.colors)
        if (c < 1 || c > 3) throw std::invalid_argument("source coloring uses a color outside 1..3");
    for (auto [a, b] : inst.orig_edges)
        if (c3.colors[a] == c3.colors[b])
            throw std::invalid_argument("source coloring is not proper on edge " + std::to_string(a) +
                                        " " + std::to_string(b));

    Coloring out;
    out.colors.assign(inst.gprime.n, 0);
    out.l = inst.k;
    for (int x = 0; x < inst.gprime.n; ++x) {
        auto [role, ref] = inst.roles[x];
        switch (role) {
            case Role::source:
                out.colors[x] = c3.colors[ref];
                break;
            case Role::companion: {
                auto [a, b] = inst.orig_edges[ref];
                out.colors[x] = 6 - c3.colors[a] - c3.colors[b];
                break;
            }
            case Role::selector:
                out.colors[x] = 4 + ref;
                break;
            case Role::triangle:
                out.colors[x] = 1 + ref;
                break;
        }
    }
    if (!verify_partial_grundy(inst.gprime, out).valid)
        throw std::logic_error("lifted coloring failed verification");
    return out;
}

/// Reads a proper 3-coloring of the source graph off a partial Grundy k-coloring
/// of the instance: the restriction of f to the replicated source vertices. If f
/// does not verify, does not reach k colors, or the restriction is not a proper
/// 3-coloring, the certificate is rejected.
inline Coloring extract_3coloring(const ReductionInstance& inst, const Coloring& f) {
    if (static_cast<int>(f.colors.size()) != inst.gprime.n)
        throw std::invalid_argument("coloring size does not match the instance");
    int l = 0;
    for (int c : f.colors) l = std::max(l, c);
    if (l < inst.k) throw invalid_certificate("coloring uses fewer than k colors");
    if (!verify_partial_grundy(inst.gprime, f).valid)
        throw invalid_certificate("coloring is not a partial Grundy coloring of the instance");

    Coloring out;
    out.colors.assign(inst.orig_n, 0);
    for (int x = 0; x < inst.gprime.n; ++x)
        if (inst.roles[x].role == Role::source) out.colors[inst.roles[x].ref] = f.colors[x];
    for (int c : out.colors) out.l = std::max(out.l, c);

    for (int c : out.colors)
        if (c < 1 || c > 3) throw invalid_certificate("replicated vertices stray outside colors 1..3");
    for (auto [a, b] : inst.orig_edges)
        if (out.colors[a] == out.colors[b])
            throw invalid_certificate("extracted coloring is monochromatic on edge " +
                                      std::to_string(a) + " " + std::to_string(b));
    return out;
}

}  // namespace grundy
