#pragma once

#include <stdexcept>
#include <vector>

#include "grundy/graph.hpp"

namespace grundy {

/// Result of repeatedly deleting a maximum-degree vertex: order[i] is the i-th
/// vertex removed and residues[i] its degree in the graph that remained at that
/// moment. The sequence of residues need not be monotone, but its running
/// maximum never grows, which is what the bucket cursor exploits.
struct Decomposition {
    std::vector<int> order;
    std::vector<int> residues;
};

/// A sequence (g_1..g_k) such that g_i has degree >= i-1 once g_{i+1}..g_k are
/// deleted from the graph. The empty sequence is feasible by convention.
struct FeasibleSequence {
    std::vector<int> vertices;
    bool operator==(const FeasibleSequence&) const = default;
};

/// Max-degree vertex decomposition in O(n + m).
///
/// Degrees live in an array of buckets, one per degree value. Removing the
/// current maximum pops the highest non-empty bucket; each surviving neighbor
/// moves down one bucket, an O(1) operation. Degrees only ever decrease, so the
/// highest-bucket cursor only moves down and its total travel is O(n), and the
/// entry pool behind the buckets holds exactly n + m entries.
///
/// Tie handling is a consequence of the structure rather than a separate rule:
/// buckets are filled in ascending id order up front (so the first pop from an
/// untouched bucket is the smallest id) and demoted vertices enter at the front.
/// The resulting order is deterministic, and the stair factor does not depend
/// on it (any max-degree choice gives the same value; the tests exercise this
/// with reversed and randomized tie-breaking).
inline Decomposition vertex_decomposition(const FlatAdjacency& a) {
    const int n = a.size();
    Decomposition out;
    if (n == 0) return out;
    out.order.reserve(n);
    out.residues.reserve(n);

    // deg is the residual degree; -1 marks a removed vertex. It is the only
    // randomly indexed array, so it stays cache resident far longer than the
    // linked-list variant of this structure would.
    detail::scratch_vector<int> deg(n);
    int cur = 0;
    for (int v = 0; v < n; ++v) {
        deg[v] = a.degree(v);
        if (deg[v] > cur) cur = deg[v];
    }

    // Buckets are stacks with lazy deletion: a demotion pushes a fresh entry
    // instead of removing the old one, and pops discard entries whose vertex no
    // longer has the bucket's degree. Degrees only decrease, so each vertex has
    // at most one entry per bucket and the unique live entry is the most recent
    // one -- pops therefore see live vertices in exactly the order a
    // push-front/pop-front linked list would give. Each edge causes exactly one
    // demotion, so the buckets hold at most n + m entries in total.
    std::vector<std::vector<int>> bucket(cur + 1);
    {
        std::vector<int> cnt(cur + 1, 0);  // histogram: exact reserve for the initial fill
        for (int v = 0; v < n; ++v) ++cnt[deg[v]];
        for (int d = 0; d <= cur; ++d) bucket[d].reserve(cnt[d]);
    }
    for (int v = n - 1; v >= 0; --v) bucket[deg[v]].push_back(v);

    for (int step = 0; step < n; ++step) {
        int v;
        for (;;) {
            while (bucket[cur].empty()) --cur;
            v = bucket[cur].back();
            bucket[cur].pop_back();
            if (deg[v] == cur) break;  // otherwise the entry is stale
        }
        deg[v] = -1;
        out.order.push_back(v);
        out.residues.push_back(cur);
        for (int u : a[v]) {
            int d = deg[u];
            if (d < 0) continue;
            deg[u] = d - 1;
            bucket[d - 1].push_back(u);
        }
    }
    return out;
}

inline Decomposition vertex_decomposition(const Graph& g) {
    return vertex_decomposition(FlatAdjacency(g));
}

/// min over positions i (1-based) of residues[i] + i. Independent of how
/// max-degree ties were broken during the decomposition.
inline int stair_factor(const Decomposition& d) {
    if (d.order.empty()) throw std::invalid_argument("empty decomposition");
    int best = std::numeric_limits<int>::max();
    for (std::size_t j = 0; j < d.residues.size(); ++j)
        best = std::min(best, d.residues[j] + static_cast<int>(j) + 1);
    return best;
}

inline int stair_factor(const Graph& g) { return stair_factor(vertex_decomposition(g)); }

/// True iff s is a feasible Grundy sequence of g: entries distinct and in range,
/// and g_i keeps degree >= i-1 after g_{i+1}..g_k are deleted. Only the sequence
/// vertices' lists are touched, so this is cheap even on huge graphs; both the
/// Graph and the FlatAdjacency form exist because realize guards with whichever
/// representation it was handed.
template <class Adjacency>
inline bool verify_feasible_in(const Adjacency& a, int n, const FeasibleSequence& s) {
    const int k = static_cast<int>(s.vertices.size());
    std::vector<char> later(n, 0);
    for (int v : s.vertices) {
        if (v < 0 || v >= n) return false;
        if (later[v]) return false;  // duplicate
        later[v] = 1;
    }
    std::fill(later.begin(), later.end(), 0);
    for (int i = k; i >= 1; --i) {
        int v = s.vertices[i - 1];
        int live = 0;
        for (int u : a[v])
            if (!later[u]) ++live;
        if (live < i - 1) return false;
        later[v] = 1;
    }
    return true;
}

inline bool verify_feasible(const Graph& g, const FeasibleSequence& s) {
    return verify_feasible_in(g.adj, g.n, s);
}

inline bool verify_feasible(const FlatAdjacency& a, const FeasibleSequence& s) {
    return verify_feasible_in(a, a.size(), s);
}

/// The first k = stair_factor(d) removed vertices, reversed, form a feasible
/// Grundy sequence of maximum length: reversal puts the last-removed vertex
/// first, so the graph with the tail of the sequence deleted is exactly the
/// residual graph in which that vertex's degree was recorded.
inline FeasibleSequence extract_feasible_sequence(const Graph& g, const Decomposition& d) {
    if (static_cast<int>(d.order.size()) != g.n)
        throw std::invalid_argument("decomposition does not match graph");
    const int k = stair_factor(d);
    FeasibleSequence s;
    s.vertices.assign(d.order.begin(), d.order.begin() + k);
    std::reverse(s.vertices.begin(), s.vertices.end());
    return s;
}

inline FeasibleSequence extract_feasible_sequence(const Graph& g) {
    return extract_feasible_sequence(g, vertex_decomposition(g));
}

}  // namespace grundy
