#pragma once

#include <cassert>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "grundy/graph.hpp"
#include "grundy/stair.hpp"

namespace grundy {

/// Total vertex coloring with colors 1..l; colors[v] is the color of v.
struct Coloring {
    std::vector<int> colors;
    int l = 0;
    bool operator==(const Coloring&) const = default;
};

struct Violation {
    enum class Kind { improper_edge, class_no_grundy };
    Kind kind;
    int u = -1, v = -1;       // endpoints of a monochromatic edge
    int color_class = -1;     // class without a vertex adjacent to all smaller colors
};

struct Verdict {
    bool valid = false;
    std::vector<Violation> violations;
};

/// Input has girth 8 or below and the caller did not force the attempt.
class girth_too_small : public std::runtime_error {
public:
    explicit girth_too_small(int girth_value)
        : std::runtime_error("girth " + std::to_string(girth_value) +
                             " is too small, need girth above 8 (pass force to try anyway)"),
          girth_(girth_value) {}
    int girth() const noexcept { return girth_; }

private:
    int girth_;
};

/// The round coloring ran out of usable colors. Only reachable on inputs that
/// bypass the girth gate; the failing round and vertex identify where.
class realization_stuck : public std::runtime_error {
public:
    realization_stuck(int round, int vertex)
        : std::runtime_error("no usable color in round " + std::to_string(round) + " at vertex " +
                             std::to_string(vertex)),
          round_(round),
          vertex_(vertex) {}
    int round() const noexcept { return round_; }
    int vertex() const noexcept { return vertex_; }

private:
    int round_, vertex_;
};

namespace detail {

/// Single-sweep core of the partial-Grundy check: each directed edge is read
/// once and feeds both the propriety check and the coverage count. Takes a raw
/// span so the realizer can verify its scratch buffer without copying first.
inline Verdict verify_colors(const FlatAdjacency& a, std::span<const int> colors) {
    const int n = a.size();
    if (static_cast<int>(colors.size()) != n)
        throw std::invalid_argument("coloring size does not match vertex count");
    int l = 0;
    for (int col : colors) {
        if (col < 1) throw std::invalid_argument("colors must be positive");
        l = std::max(l, col);
    }

    Verdict out;
    // covered[c] = some vertex of color c sees all of 1..c-1 on its neighbors
    std::vector<char> covered(l + 1, 0);
    std::vector<int> stamp(l + 1, -1);
    for (int v = 0; v < n; ++v) {
        // the neighbor ids a few vertices ahead are known now; warming their
        // colors hides most of the random-access latency of the scan below
        for (int u : a[std::min(v + 8, n - 1)]) __builtin_prefetch(&colors[u]);
        const int cv = colors[v];
        int seen = 0;
        for (int u : a[v]) {
            const int cu = colors[u];
            if (cu == cv && v < u)
                out.violations.push_back({Violation::Kind::improper_edge, v, u, -1});
            if (cu < cv && stamp[cu] != v) {
                stamp[cu] = v;
                ++seen;
            }
        }
        if (seen == cv - 1) covered[cv] = 1;
    }
    for (int col = 2; col <= l; ++col)
        if (!covered[col]) out.violations.push_back({Violation::Kind::class_no_grundy, -1, -1, col});

    out.valid = out.violations.empty();
    return out;
}

}  // namespace detail

/// Checks that c is a proper coloring of g in which every color class 2..l has a
/// vertex adjacent to all colors below it (class 1 is exempt: there is nothing
/// below it). Collects every violation instead of stopping at the first. O(n+m).
inline Verdict verify_partial_grundy(const FlatAdjacency& a, const Coloring& c) {
    return detail::verify_colors(a, c.colors);
}

inline Verdict verify_partial_grundy(const Graph& g, const Coloring& c) {
    return verify_partial_grundy(FlatAdjacency(g), c);
}

struct RealizeOptions {
    /// Recheck the incrementally maintained adjacent-color sets against a from-
    /// scratch scan after every round. Quadratic; for tests on small inputs.
    bool check_restriction_sets = false;
};

namespace detail {

// Recomputes, for every sequence vertex that is still pending after `round`,
// the set of colors on its neighbors, and compares with the maintained set.
inline void check_later_sets(const FlatAdjacency& a, std::span<const int> color,
                             const std::vector<int>& seq,
                             const std::vector<std::vector<int>>& later_colors, int round) {
    for (int pos = round + 1; pos <= static_cast<int>(seq.size()); ++pos) {
        int y = seq[pos - 1];
        std::vector<int> fresh;
        for (int x : a[y])
            if (color[x] != 0) fresh.push_back(color[x]);
        std::vector<int> kept = later_colors[pos - 1];
        std::sort(fresh.begin(), fresh.end());
        std::sort(kept.begin(), kept.end());
        if (std::adjacent_find(fresh.begin(), fresh.end()) != fresh.end())
            throw std::logic_error("two neighbors of a pending sequence vertex share a color");
        if (fresh != kept)
            throw std::logic_error("maintained adjacent-color set drifted from a fresh scan");
    }
}

}  // namespace detail

/// Turns a feasible Grundy sequence (g_1..g_k) into a coloring in which g_i has
/// color i and is adjacent to all of 1..i-1, witnessing that the graph's partial
/// Grundy number reaches k. On inputs of girth above 8 (forests included) this
/// always succeeds; on smaller girth it may throw realization_stuck.
///
/// Round i (i = 2..k) colors g_i with i, then picks i-1 of its neighbors to carry
/// the colors 1..i-1: already colored neighbors are reused (their colors are
/// pairwise distinct here, one representative per color), and the remaining
/// colors go to uncolored neighbors, smallest id first. An uncolored pick takes
/// the smallest color that is not on one of its own neighbors, not already used
/// inside the pick set, and not *restricted*: present on a neighbor of one of its
/// still-pending sequence neighbors, i.e. visible at distance 2 through a vertex
/// some later round must still satisfy. Per-pending-vertex adjacent-color sets
/// make that test incremental: every color assignment during the rounds pushes
/// its color to the sets of adjacent pending vertices, so a full recomputation
/// (quadratic on stars) is never needed. Picks with a live restriction are
/// colored before unrestricted ones; with girth above 8 the restrictions cannot
/// outnumber them and the greedy choice always completes.
///
/// Vertices left over after round k are first-fit colored in increasing id
/// order, which keeps every class above k covered by construction. The result
/// is re-verified before it is returned; a verification failure is a bug, not
/// an input condition, and surfaces as std::logic_error.
inline Coloring realize(const FlatAdjacency& a, const FeasibleSequence& s,
                        const RealizeOptions& opts = {}) {
    if (!verify_feasible(a, s)) throw std::invalid_argument("sequence is not feasible for this graph");
    const int n = a.size();
    const int k = static_cast<int>(s.vertices.size());

    detail::scratch_vector<int> color(n, 0);  // 0 = uncolored
    std::vector<int> seq_pos(n, 0);           // 1-based position in s, 0 = not in s
    for (int i = 0; i < k; ++i) seq_pos[s.vertices[i]] = i + 1;

    // later_colors[p-1]: colors currently on neighbors of the vertex at sequence
    // position p, maintained exactly while rounds below p are running.
    std::vector<std::vector<int>> later_colors(k);

    auto assign = [&](int u, int c, int round) {
        color[u] = c;
        for (int x : a[u])
            if (seq_pos[x] > round) later_colors[seq_pos[x] - 1].push_back(c);
    };

    // stamp arrays indexed by color; epochs avoid clearing
    std::vector<int> taken(n + 2, 0), forbid(n + 2, 0);
    int taken_epoch = 0, forbid_epoch = 0;

    std::vector<int> picks, missing;

    for (int round = 2; round <= k; ++round) {
        const int gi = s.vertices[round - 1];
        if (color[gi] != 0) throw std::logic_error("sequence vertex was colored ahead of its round");
        assign(gi, round, round);

        // one representative per color among usable colored neighbors
        ++taken_epoch;
        int have = 0;
        for (int u : a[gi]) {
            if (seq_pos[u] > round || color[u] == 0) continue;
            if (taken[color[u]] != taken_epoch) {
                taken[color[u]] = taken_epoch;
                ++have;
            }
        }
        const int need = (round - 1) - have;

        picks.clear();
        for (int u : a[gi]) {
            if (static_cast<int>(picks.size()) == need) break;
            if (seq_pos[u] > round || color[u] != 0) continue;
            picks.push_back(u);  // adjacency is sorted: smallest ids first
        }
        if (static_cast<int>(picks.size()) < need) throw realization_stuck(round, gi);

        missing.clear();
        for (int c = 1; c <= round - 1; ++c)
            if (taken[c] != taken_epoch) missing.push_back(c);
        assert(static_cast<int>(missing.size()) == need);

        // restricted picks first; only restrictions on colors we still have to
        // place matter (taken stamps double as the missing test)
        auto is_missing = [&](int c) { return c <= round - 1 && taken[c] != taken_epoch; };
        auto restricted = [&](int w) {
            for (int x : a[w]) {
                if (color[x] != 0) {
                    if (is_missing(color[x])) return true;
                } else if (seq_pos[x] > round) {
                    for (int c : later_colors[seq_pos[x] - 1])
                        if (is_missing(c)) return true;
                }
            }
            return false;
        };
        std::stable_partition(picks.begin(), picks.end(), restricted);

        for (int w : picks) {
            ++forbid_epoch;
            for (int x : a[w]) {
                if (color[x] != 0) forbid[color[x]] = forbid_epoch;
                if (seq_pos[x] > round)
                    for (int c : later_colors[seq_pos[x] - 1]) forbid[c] = forbid_epoch;
            }
            int chosen = 0;
            for (int c : missing)
                if (forbid[c] != forbid_epoch) {
                    chosen = c;
                    break;
                }
            if (chosen == 0) throw realization_stuck(round, w);
            assign(w, chosen, round);
            missing.erase(std::find(missing.begin(), missing.end(), chosen));
        }

        if (opts.check_restriction_sets)
            detail::check_later_sets(a, color, s.vertices, later_colors, round);
    }

    // first-fit tail: every vertex colored here sees all smaller colors at the
    // moment of assignment, so classes above k stay covered
    for (int v = 0; v < n; ++v) {
        for (int x : a[std::min(v + 8, n - 1)]) __builtin_prefetch(&color[x]);
        if (color[v] != 0) continue;
        ++forbid_epoch;
        for (int x : a[v])
            if (color[x] != 0) forbid[color[x]] = forbid_epoch;
        int c = 1;
        while (forbid[c] == forbid_epoch) ++c;
        color[v] = c;
    }

    int l = 0;
    for (int c : color) l = std::max(l, c);

    // self-check: the sequence vertices sit where the construction promised
    for (int i = 2; i <= k; ++i) {
        const int gi = s.vertices[i - 1];
        if (color[gi] != i) throw std::logic_error("sequence vertex lost its round color");
        ++forbid_epoch;
        int seen = 0;
        for (int x : a[gi]) {
            const int cx = color[x];
            if (cx < i && forbid[cx] != forbid_epoch) {
                forbid[cx] = forbid_epoch;
                ++seen;
            }
        }
        if (seen != i - 1) throw std::logic_error("sequence vertex does not see all smaller colors");
    }
    if (l < k) throw std::logic_error("fewer colors than the sequence length");
    if (!detail::verify_colors(a, {color.data(), color.size()}).valid)
        throw std::logic_error("realized coloring failed verification");
    return Coloring{{color.begin(), color.end()}, l};
}

inline Coloring realize(const Graph& g, const FeasibleSequence& s, const RealizeOptions& opts = {}) {
    return realize(FlatAdjacency(g), s, opts);
}

struct LargeGirthResult {
    int k = 0;
    Coloring coloring;
    FeasibleSequence sequence;
    Decomposition decomposition;
};

/// Grundy number of a graph with girth above 8 (forests included), with the
/// coloring that witnesses it. The stair factor is an upper bound on any graph;
/// here the realizer meets it, so the returned k is exact. `force` skips the
/// girth gate and attempts the construction anyway: it either returns a coloring
/// that passed verification (so k is exact for that input too) or throws
/// realization_stuck. Linear on forests; the gate itself costs O(n*m) BFS time
/// when the input has a cycle.
inline LargeGirthResult grundy_number_large_girth(const Graph& g, bool force = false,
                                                  const RealizeOptions& opts = {}) {
    // one flat copy of the adjacency, shared by every stage
    FlatAdjacency a(g);
    auto gv = girth(a);
    if (gv.has_value() && *gv <= 8 && !force) throw girth_too_small(*gv);
    LargeGirthResult out;
    out.decomposition = vertex_decomposition(a);
    out.k = stair_factor(out.decomposition);
    out.sequence = extract_feasible_sequence(g, out.decomposition);
    out.coloring = realize(a, out.sequence, opts);
    return out;
}

}  // namespace grundy
