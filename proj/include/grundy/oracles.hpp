#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <vector>

#include "grundy/graph.hpp"
#include "grundy/realizer.hpp"

namespace grundy {

/// Brute-force reference implementations. Exponential by design, so each checks
/// a hard size guard up front; callers that want bigger inputs are asking the
/// wrong tool. Everything here enumerates in a fixed vertex order and is
/// deterministic.

class oracle_too_large : public std::runtime_error {
public:
    oracle_too_large(const std::string& oracle, int n, int limit)
        : std::runtime_error(oracle + ": " + std::to_string(n) + " vertices exceeds the limit of " +
                             std::to_string(limit)) {}
};

/// Longest feasible Grundy sequence by exhaustive search (n <= 8). Sequences are
/// built back to front: position i is chosen once positions i+1..r are fixed, at
/// which point its degree requirement is checkable directly.
inline int brute_stair(const Graph& g) {
    constexpr int kLimit = 8;
    if (g.n > kLimit) throw oracle_too_large("brute_stair", g.n, kLimit);
    std::vector<char> used(g.n, 0);

    auto live_degree = [&](int v) {
        int d = 0;
        for (int u : g.adj[v])
            if (!used[u]) ++d;
        return d;
    };
    auto search = [&](auto&& self, int i) -> bool {
        if (i == 0) return true;
        for (int v = 0; v < g.n; ++v) {
            if (used[v] || live_degree(v) < i - 1) continue;
            used[v] = 1;
            if (self(self, i - 1)) return true;
            used[v] = 0;
        }
        return false;
    };

    for (int r = std::min(max_degree(g) + 1, g.n); r >= 1; --r)
        if (search(search, r)) return r;
    return 0;  // unreachable for n >= 1: a single vertex is always feasible
}

namespace detail {

// A partition of V into independent sets admits a partial Grundy coloring iff
// its classes can be ordered so that each class has a vertex adjacent to every
// class before it. Greedy from the back is complete: moving any class that sees
// all remaining others into the last open slot never invalidates an ordering
// that existed (positions of the other classes only shrink). Returns the
// position (1-based color) per class, or empty if no ordering exists.
inline std::vector<int> order_classes(const Graph& g, const std::vector<int>& class_of, int p) {
    std::vector<std::uint32_t> sees(g.n, 0);
    for (int v = 0; v < g.n; ++v)
        for (int u : g.adj[v]) sees[v] |= std::uint32_t{1} << class_of[u];

    std::vector<int> position(p, 0);
    std::uint32_t alive = (p == 32 ? ~std::uint32_t{0} : (std::uint32_t{1} << p) - 1);
    for (int pos = p; pos >= 2; --pos) {
        int chosen = -1;
        for (int x = 0; x < p && chosen == -1; ++x) {
            if (!(alive & (std::uint32_t{1} << x)) ) continue;
            const std::uint32_t need = alive ^ (std::uint32_t{1} << x);
            for (int v = 0; v < g.n; ++v)
                if (class_of[v] == x && (sees[v] & need) == need) {
                    chosen = x;
                    break;
                }
        }
        if (chosen == -1) return {};
        position[chosen] = pos;
        alive ^= std::uint32_t{1} << chosen;
    }
    for (int x = 0; x < p; ++x)
        if (alive & (std::uint32_t{1} << x)) position[x] = 1;
    return position;
}

struct PartialGrundySearch {
    int best = 0;
    std::vector<int> best_colors;  // empty unless witness requested
};

// Enumerates every partition of the vertices into independent sets, in canonical
// (first-occurrence) class order so each partition is visited exactly once, and
// keeps the largest one whose classes can be ordered per order_classes.
inline PartialGrundySearch partial_grundy_search(const Graph& g, bool want_witness) {
    PartialGrundySearch out;
    std::vector<int> class_of(g.n, -1);

    auto rec = [&](auto&& self, int v, int classes) -> void {
        if (classes + (g.n - v) <= out.best) return;  // cannot beat the best found
        if (v == g.n) {
            auto position = order_classes(g, class_of, classes);
            if (position.empty()) return;
            out.best = classes;
            if (want_witness) {
                out.best_colors.resize(g.n);
                for (int u = 0; u < g.n; ++u) out.best_colors[u] = position[class_of[u]];
            }
            return;
        }
        std::uint32_t conflict = 0;
        for (int u : g.adj[v])
            if (u < v) conflict |= std::uint32_t{1} << class_of[u];
        for (int c = 0; c <= classes && c < 32; ++c) {
            if (c < classes && (conflict & (std::uint32_t{1} << c))) continue;
            class_of[v] = c;
            self(self, v + 1, std::max(classes, c + 1));
        }
        class_of[v] = -1;
    };
    rec(rec, 0, 0);
    return out;
}

}  // namespace detail

/// Largest k for which some proper coloring with classes exactly 1..k gives every
/// class from 2 up a vertex adjacent to all smaller classes. Exhaustive over
/// independent-set partitions (n <= 10).
inline int brute_partial_grundy(const Graph& g) {
    constexpr int kLimit = 10;
    if (g.n > kLimit) throw oracle_too_large("brute_partial_grundy", g.n, kLimit);
    return detail::partial_grundy_search(g, false).best;
}

struct PartialGrundyWitness {
    int k = 0;
    Coloring coloring;
};

/// Same search with the optimal coloring kept.
inline PartialGrundyWitness brute_partial_grundy_witness(const Graph& g) {
    constexpr int kLimit = 10;
    if (g.n > kLimit) throw oracle_too_large("brute_partial_grundy", g.n, kLimit);
    auto found = detail::partial_grundy_search(g, true);
    PartialGrundyWitness out;
    out.k = found.best;
    out.coloring.colors = std::move(found.best_colors);
    out.coloring.l = found.best;
    return out;
}

/// A proper 3-coloring if one exists (n <= 20). Backtracking over vertices in id
/// order; the first vertex of a branch only tries canonical color choices, which
/// prunes the pure relabelings.
inline std::optional<Coloring> brute_3color(const Graph& g) {
    constexpr int kLimit = 20;
    if (g.n > kLimit) throw oracle_too_large("brute_3color", g.n, kLimit);
    std::vector<int> color(g.n, 0);

    auto rec = [&](auto&& self, int v, int used) -> bool {
        if (v == g.n) return true;
        for (int c = 1; c <= std::min(3, used + 1); ++c) {
            bool ok = true;
            for (int u : g.adj[v])
                if (u < v && color[u] == c) {
                    ok = false;
                    break;
                }
            if (!ok) continue;
            color[v] = c;
            if (self(self, v + 1, std::max(used, c))) return true;
        }
        color[v] = 0;
        return false;
    };
    if (!rec(rec, 0, 0)) return std::nullopt;
    Coloring out;
    out.colors = std::move(color);
    out.l = 0;
    for (int c : out.colors) out.l = std::max(out.l, c);
    return out;
}

}  // namespace grundy
