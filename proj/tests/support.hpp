#pragma once

// Shared helpers for the test suites: exhaustive corpora, independent naive
// reference implementations to check the fast ones against, and small
// structural predicates. Everything is deterministic under a fixed seed.

#include <algorithm>
#include <functional>
#include <random>
#include <vector>

#include "grundy/graph.hpp"
#include "grundy/stair.hpp"

namespace testsupport {

using grundy::Graph;

inline std::vector<std::pair<int, int>> vertex_pairs(int n) {
    std::vector<std::pair<int, int>> pairs;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) pairs.emplace_back(u, v);
    return pairs;
}

inline Graph graph_from_mask(int n, const std::vector<std::pair<int, int>>& pairs,
                             std::uint64_t mask) {
    std::vector<std::pair<int, int>> edges;
    for (std::size_t i = 0; i < pairs.size(); ++i)
        if (mask & (std::uint64_t{1} << i)) edges.push_back(pairs[i]);
    return Graph::from_edges(n, edges);
}

/// Every labeled graph on exactly n vertices (2^(n choose 2) of them).
inline void for_each_graph(int n, const std::function<void(const Graph&)>& fn) {
    auto pairs = vertex_pairs(n);
    const std::uint64_t limit = std::uint64_t{1} << pairs.size();
    for (std::uint64_t mask = 0; mask < limit; ++mask) fn(graph_from_mask(n, pairs, mask));
}

/// Every labeled graph on 1..maxn vertices.
inline void for_each_graph_up_to(int maxn, const std::function<void(const Graph&)>& fn) {
    for (int n = 1; n <= maxn; ++n) for_each_graph(n, fn);
}

/// Every labeled tree on n vertices via Pruefer sequence enumeration
/// (n^(n-2) trees; n = 1 and 2 have one tree each).
inline void for_each_tree(int n, const std::function<void(const Graph&)>& fn) {
    if (n == 1) {
        fn(Graph::from_edges(1, {}));
        return;
    }
    std::vector<int> seq(n - 2, 0);
    while (true) {
        fn(grundy::decode_pruefer(n, seq));
        int i = static_cast<int>(seq.size()) - 1;
        while (i >= 0 && seq[i] == n - 1) seq[i--] = 0;
        if (i < 0) break;
        ++seq[i];
    }
}

inline Graph random_graph(int n, double p, std::mt19937_64& rng) {
    std::vector<std::pair<int, int>> edges;
    const double scale = static_cast<double>(std::mt19937_64::max());
    for (auto [u, v] : vertex_pairs(n))
        if (static_cast<double>(rng()) / scale < p) edges.emplace_back(u, v);
    return Graph::from_edges(n, edges);
}

enum class TieBreak { smallest_id, largest_id, random_choice };

/// Quadratic reference decomposition: recompute residual degrees from scratch at
/// every step and delete a maximum one under the requested tie rule. Used to
/// cross-check both the decomposition invariant and the tie independence of the
/// stair factor.
inline grundy::Decomposition naive_decomposition(const Graph& g, TieBreak tie,
                                                 std::mt19937_64* rng = nullptr) {
    std::vector<char> removed(g.n, 0);
    grundy::Decomposition out;
    for (int step = 0; step < g.n; ++step) {
        int best_deg = -1;
        std::vector<int> candidates;
        for (int v = 0; v < g.n; ++v) {
            if (removed[v]) continue;
            int d = 0;
            for (int u : g.adj[v])
                if (!removed[u]) ++d;
            if (d > best_deg) {
                best_deg = d;
                candidates.assign(1, v);
            } else if (d == best_deg) {
                candidates.push_back(v);
            }
        }
        int pick = candidates.front();
        if (tie == TieBreak::largest_id) pick = candidates.back();
        if (tie == TieBreak::random_choice) pick = candidates[(*rng)() % candidates.size()];
        removed[pick] = 1;
        out.order.push_back(pick);
        out.residues.push_back(best_deg);
    }
    return out;
}

/// Replays a decomposition against the graph: residues must equal the residual
/// degree at the moment of removal, and that degree must be the residual maximum.
inline bool decomposition_is_valid(const Graph& g, const grundy::Decomposition& d) {
    if (static_cast<int>(d.order.size()) != g.n || d.residues.size() != d.order.size()) return false;
    std::vector<char> removed(g.n, 0);
    std::vector<char> seen(g.n, 0);
    for (int v : d.order) {
        if (v < 0 || v >= g.n || seen[v]) return false;
        seen[v] = 1;
    }
    for (int i = 0; i < g.n; ++i) {
        int maxd = 0;
        for (int v = 0; v < g.n; ++v) {
            if (removed[v]) continue;
            int dv = 0;
            for (int u : g.adj[v])
                if (!removed[u]) ++dv;
            maxd = std::max(maxd, dv);
        }
        const int v = d.order[i];
        int dv = 0;
        for (int u : g.adj[v])
            if (!removed[u]) ++dv;
        if (dv != d.residues[i] || dv != maxd) return false;
        removed[v] = 1;
    }
    return true;
}

/// Girth by an independent route: delete one edge at a time and BFS the shortest
/// remaining path between its endpoints. Quadratic, for cross-checks only.
inline std::optional<int> naive_girth(const Graph& g) {
    int best = std::numeric_limits<int>::max();
    for (auto [s, t] : g.edges()) {
        std::vector<int> dist(g.n, -1);
        std::vector<int> queue{s};
        dist[s] = 0;
        for (std::size_t qi = 0; qi < queue.size(); ++qi) {
            int u = queue[qi];
            for (int v : g.adj[u]) {
                if (u == s && v == t) continue;  // the deleted edge
                if (u == t && v == s) continue;
                if (dist[v] == -1) {
                    dist[v] = dist[u] + 1;
                    queue.push_back(v);
                }
            }
        }
        if (dist[t] != -1) best = std::min(best, dist[t] + 1);
    }
    if (best == std::numeric_limits<int>::max()) return std::nullopt;
    return best;
}

/// Perfect-elimination test: repeatedly delete a vertex whose live neighborhood
/// is a clique. Succeeds on exactly the chordal graphs.
inline bool is_chordal(const Graph& g) {
    std::vector<char> removed(g.n, 0);
    for (int step = 0; step < g.n; ++step) {
        int pick = -1;
        for (int v = 0; v < g.n && pick == -1; ++v) {
            if (removed[v]) continue;
            bool simplicial = true;
            for (std::size_t i = 0; i < g.adj[v].size() && simplicial; ++i) {
                if (removed[g.adj[v][i]]) continue;
                for (std::size_t j = i + 1; j < g.adj[v].size() && simplicial; ++j) {
                    if (removed[g.adj[v][j]]) continue;
                    if (!g.has_edge(g.adj[v][i], g.adj[v][j])) simplicial = false;
                }
            }
            if (simplicial) pick = v;
        }
        if (pick == -1) return false;
        removed[pick] = 1;
    }
    return true;
}

}  // namespace testsupport
