#pragma once

#include <algorithm>
#include <cctype>
#include <cstdint>
#include <cstdlib>
#include <limits>
#include <new>
#include <optional>
#include <queue>
#include <random>
#include <span>
#include <sstream>
#include <stdexcept>
#include <string>
#include <unordered_set>
#include <utility>
#include <vector>

#if defined(__linux__)
#include <sys/mman.h>
#endif

namespace grundy {

namespace detail {

/// Thread-local cache of freed scratch blocks. The linear passes allocate and
/// free the same few block sizes over and over; under madvise-mode transparent
/// huge pages, handing such a block back to the kernel costs a fault (and
/// possibly a synchronous compaction) cycle on every reuse. Freed blocks are
/// kept and handed out again on exact size match instead.
class ScratchBlockCache {
public:
    void* take(std::size_t bytes) {
        for (std::size_t i = 0; i < blocks_.size(); ++i)
            if (blocks_[i].bytes == bytes) {
                void* p = blocks_[i].p;
                total_ -= bytes;
                blocks_[i] = blocks_.back();
                blocks_.pop_back();
                return p;
            }
        return nullptr;
    }
    bool keep(void* p, std::size_t bytes) {
        if (total_ + bytes > max_keep) return false;
        blocks_.push_back({p, bytes});
        total_ += bytes;
        return true;
    }
    ~ScratchBlockCache() {
        for (auto& b : blocks_) std::free(b.p);
    }

private:
    static constexpr std::size_t max_keep = std::size_t{256} << 20;
    struct Block {
        void* p;
        std::size_t bytes;
    };
    std::vector<Block> blocks_;
    std::size_t total_ = 0;
};

inline ScratchBlockCache& scratch_cache() {
    thread_local ScratchBlockCache cache;
    return cache;
}

/// Allocator for the scratch arrays of the linear passes. Buffers of two
/// megabytes or more are aligned to the huge-page size, advised as huge before
/// their first touch (which keeps randomly indexed arrays TLB-cheap once they
/// outgrow the reach of 4K pages), and recycled through the block cache above.
/// Falls back to plain allocation elsewhere; the advice is best effort and
/// changes nothing semantically.
template <class T>
struct ScratchAllocator {
    using value_type = T;
    ScratchAllocator() = default;
    template <class U>
    ScratchAllocator(const ScratchAllocator<U>&) {}

    static constexpr std::size_t huge_size = std::size_t{2} << 20;
    static constexpr std::size_t bytes_for(std::size_t n) {
        return n * sizeof(T) >= huge_size ? (n * sizeof(T) + huge_size - 1) & ~(huge_size - 1)
                                          : n * sizeof(T);
    }

    T* allocate(std::size_t n) {
#if defined(__linux__)
        if (n * sizeof(T) >= huge_size) {
            const std::size_t bytes = bytes_for(n);
            if (void* cached = scratch_cache().take(bytes)) return static_cast<T*>(cached);
            void* p = nullptr;
            if (posix_memalign(&p, huge_size, bytes) != 0) throw std::bad_alloc();
            madvise(p, bytes, MADV_HUGEPAGE);
            return static_cast<T*>(p);
        }
#endif
        return static_cast<T*>(::operator new(bytes_for(n)));
    }
    void deallocate(T* p, std::size_t n) {
#if defined(__linux__)
        if (n * sizeof(T) >= huge_size) {
            if (!scratch_cache().keep(p, bytes_for(n))) std::free(p);
            return;
        }
#endif
        ::operator delete(p);
    }
    template <class U>
    bool operator==(const ScratchAllocator<U>&) const {
        return true;
    }
};

/// std::vector over huge-page-advised storage; for internal arrays only, so the
/// public result types stay ordinary vectors.
template <class T>
using scratch_vector = std::vector<T, ScratchAllocator<T>>;

}  // namespace detail

/// Error thrown by the text parsers; carries the 1-based line of the offending input.
class parse_error : public std::runtime_error {
public:
    parse_error(int line, const std::string& what_arg)
        : std::runtime_error("line " + std::to_string(line) + ": " + what_arg), line_(line) {}
    int line() const noexcept { return line_; }

private:
    int line_;
};

/// Undirected simple graph on vertices 0..n-1. Adjacency lists are kept sorted
/// ascending, so neighbor iteration order (and everything derived from it) is
/// deterministic. Instances are treated as immutable once built; from_edges is
/// the single validating constructor path.
struct Graph {
    int n = 0;
    std::size_t m = 0;
    std::vector<std::vector<int>> adj;

    static Graph from_edges(int n, const std::vector<std::pair<int, int>>& edges);

    int degree(int v) const { return static_cast<int>(adj[v].size()); }

    bool has_edge(int u, int v) const {
        return std::binary_search(adj[u].begin(), adj[u].end(), v);
    }

    /// Edge list in canonical order: endpoints as (min,max), sorted lexicographically.
    std::vector<std::pair<int, int>> edges() const {
        std::vector<std::pair<int, int>> out;
        out.reserve(m);
        for (int u = 0; u < n; ++u)
            for (int v : adj[u])
                if (u < v) out.emplace_back(u, v);
        return out;  // u ascending, inner lists ascending: already canonical
    }

    bool operator==(const Graph&) const = default;
};

inline Graph Graph::from_edges(int n, const std::vector<std::pair<int, int>>& edges) {
    if (n < 1) throw std::invalid_argument("graph needs at least one vertex");
    Graph g;
    g.n = n;
    g.adj.assign(n, {});
    std::vector<std::pair<int, int>> norm;
    norm.reserve(edges.size());
    for (auto [u, v] : edges) {
        if (u < 0 || u >= n || v < 0 || v >= n)
            throw std::invalid_argument("vertex id out of range: " + std::to_string(u < 0 || u >= n ? u : v));
        if (u == v) throw std::invalid_argument("self-loop at vertex " + std::to_string(u));
        norm.emplace_back(std::min(u, v), std::max(u, v));
    }
    std::sort(norm.begin(), norm.end());
    if (std::adjacent_find(norm.begin(), norm.end()) != norm.end())
        throw std::invalid_argument("duplicate edge");
    for (auto [u, v] : norm) {
        g.adj[u].push_back(v);
        g.adj[v].push_back(u);
    }
    for (auto& list : g.adj) std::sort(list.begin(), list.end());
    g.m = norm.size();
    return g;
}

/// Scans the structural invariants (sorted symmetric simple adjacency, m consistent).
/// Meant for tests and for checking hand-assembled instances; throws std::logic_error.
inline void validate_graph(const Graph& g) {
    if (g.n < 1) throw std::logic_error("graph has no vertices");
    if (static_cast<int>(g.adj.size()) != g.n) throw std::logic_error("adjacency size mismatch");
    std::size_t half_sum = 0;
    for (int u = 0; u < g.n; ++u) {
        const auto& list = g.adj[u];
        if (!std::is_sorted(list.begin(), list.end())) throw std::logic_error("adjacency not sorted");
        if (std::adjacent_find(list.begin(), list.end()) != list.end())
            throw std::logic_error("parallel edge in adjacency");
        for (int v : list) {
            if (v < 0 || v >= g.n) throw std::logic_error("neighbor id out of range");
            if (v == u) throw std::logic_error("self-loop");
            if (!g.has_edge(v, u)) throw std::logic_error("asymmetric adjacency");
        }
        half_sum += list.size();
    }
    if (half_sum != 2 * g.m) throw std::logic_error("edge count mismatch");
}

/// Read-only CSR copy of a graph's adjacency: one offset array plus one flat
/// neighbor array instead of n separate heap blocks. Neighbor order matches the
/// source lists exactly. The algorithms that sweep adjacency many times take this
/// view so a pipeline can pay the pointer-chasing pass once and share the result.
class FlatAdjacency {
public:
    explicit FlatAdjacency(const Graph& g) : n_(g.n), m_(g.m), off_(g.n + 1, 0) {
        for (int v = 0; v < g.n; ++v) off_[v + 1] = off_[v] + g.degree(v);
        flat_.resize(off_[g.n]);
        for (int v = 0; v < g.n; ++v) {
            // source lists are scattered over the heap; start the next fetches early
            if (v + 4 < g.n) __builtin_prefetch(g.adj[v + 4].data());
            std::copy(g.adj[v].begin(), g.adj[v].end(), flat_.begin() + off_[v]);
        }
    }

    int size() const { return n_; }
    std::size_t edge_count() const { return m_; }
    int degree(int v) const { return off_[v + 1] - off_[v]; }
    std::span<const int> operator[](int v) const {
        return {flat_.data() + off_[v], flat_.data() + off_[v + 1]};
    }

private:
    int n_;
    std::size_t m_;
    detail::scratch_vector<int> off_;
    detail::scratch_vector<int> flat_;
};

// ---------------------------------------------------------------------------
// parsing / serialization
// ---------------------------------------------------------------------------

enum class GraphFormat { edge_list, dimacs };

namespace detail {

inline bool significant_line(const std::string& line, char comment_char) {
    for (char ch : line) {
        if (ch == comment_char) return false;
        if (!std::isspace(static_cast<unsigned char>(ch))) return true;
    }
    return false;  // blank
}

// Splits into (line_number, text) pairs, skipping blanks and comment lines.
inline std::vector<std::pair<int, std::string>> significant_lines(const std::string& text,
                                                                  char comment_char) {
    std::vector<std::pair<int, std::string>> out;
    std::istringstream in(text);
    std::string line;
    int no = 0;
    while (std::getline(in, line)) {
        ++no;
        if (significant_line(line, comment_char)) out.emplace_back(no, line);
    }
    out.emplace_back(no + 1, "");  // sentinel: one past the last physical line
    return out;
}

inline std::uint64_t edge_key(int u, int v) {
    if (u > v) std::swap(u, v);
    return (static_cast<std::uint64_t>(u) << 32) | static_cast<std::uint32_t>(v);
}

}  // namespace detail

/// Edge-list format: a header line "n m", then m lines "u v" with 0-based ids.
/// Lines starting with '#' (and blank lines) are ignored.
inline Graph parse_edge_list(const std::string& text) {
    auto lines = detail::significant_lines(text, '#');
    std::size_t at = 0;
    auto next = [&]() -> const std::pair<int, std::string>& { return lines[at]; };

    if (at + 1 == lines.size()) throw parse_error(next().first, "missing header line");
    int n = 0;
    long long m = 0;
    {
        std::istringstream ls(next().second);
        std::string rest;
        if (!(ls >> n >> m) || (ls >> rest))
            throw parse_error(next().first, "malformed header, expected \"n m\"");
        if (n < 1) throw parse_error(next().first, "vertex count must be at least 1");
        if (m < 0) throw parse_error(next().first, "negative edge count");
        ++at;
    }

    std::vector<std::pair<int, int>> edges;
    edges.reserve(static_cast<std::size_t>(m));
    std::unordered_set<std::uint64_t> seen;
    seen.reserve(static_cast<std::size_t>(m) * 2);
    for (long long i = 0; i < m; ++i) {
        if (at + 1 == lines.size())
            throw parse_error(next().first,
                              "expected " + std::to_string(m) + " edges, found " + std::to_string(i));
        auto [no, body] = next();
        std::istringstream ls(body);
        int u = 0, v = 0;
        std::string rest;
        if (!(ls >> u >> v) || (ls >> rest))
            throw parse_error(no, "malformed edge line, expected \"u v\"");
        if (u < 0 || u >= n || v < 0 || v >= n)
            throw parse_error(no, "vertex id out of range: " + std::to_string((u < 0 || u >= n) ? u : v));
        if (u == v) throw parse_error(no, "self-loop at vertex " + std::to_string(u));
        if (!seen.insert(detail::edge_key(u, v)).second)
            throw parse_error(no, "duplicate edge " + std::to_string(u) + " " + std::to_string(v));
        edges.emplace_back(u, v);
        ++at;
    }
    if (at + 1 != lines.size()) throw parse_error(next().first, "unexpected content after edge list");
    return Graph::from_edges(n, edges);
}

/// DIMACS format: "p edge n m" header, then m lines "e u v" with 1-based ids.
/// Lines starting with 'c' are comments.
inline Graph parse_dimacs(const std::string& text) {
    auto lines = detail::significant_lines(text, 'c');
    std::size_t at = 0;
    auto next = [&]() -> const std::pair<int, std::string>& { return lines[at]; };

    if (at + 1 == lines.size()) throw parse_error(next().first, "missing problem line");
    int n = 0;
    long long m = 0;
    {
        auto [no, body] = next();
        std::istringstream ls(body);
        std::string p, kind, rest;
        if (!(ls >> p >> kind >> n >> m) || (ls >> rest) || p != "p" || kind != "edge")
            throw parse_error(no, "malformed problem line, expected \"p edge n m\"");
        if (n < 1) throw parse_error(no, "vertex count must be at least 1");
        if (m < 0) throw parse_error(no, "negative edge count");
        ++at;
    }

    std::vector<std::pair<int, int>> edges;
    edges.reserve(static_cast<std::size_t>(m));
    std::unordered_set<std::uint64_t> seen;
    seen.reserve(static_cast<std::size_t>(m) * 2);
    for (long long i = 0; i < m; ++i) {
        if (at + 1 == lines.size())
            throw parse_error(next().first,
                              "expected " + std::to_string(m) + " edges, found " + std::to_string(i));
        auto [no, body] = next();
        std::istringstream ls(body);
        std::string e, rest;
        int u = 0, v = 0;
        if (!(ls >> e >> u >> v) || (ls >> rest) || e != "e")
            throw parse_error(no, "malformed edge line, expected \"e u v\"");
        if (u < 1 || u > n || v < 1 || v > n)
            throw parse_error(no, "vertex id out of range: " + std::to_string((u < 1 || u > n) ? u : v));
        if (u == v) throw parse_error(no, "self-loop at vertex " + std::to_string(u));
        if (!seen.insert(detail::edge_key(u - 1, v - 1)).second)
            throw parse_error(no, "duplicate edge " + std::to_string(u) + " " + std::to_string(v));
        edges.emplace_back(u - 1, v - 1);
        ++at;
    }
    if (at + 1 != lines.size()) throw parse_error(next().first, "unexpected content after edge list");
    return Graph::from_edges(n, edges);
}

inline Graph parse_graph(const std::string& text, GraphFormat format) {
    return format == GraphFormat::edge_list ? parse_edge_list(text) : parse_dimacs(text);
}

/// Canonical serialization; parse_edge_list(write_edge_list(g)) reproduces g bit-exactly.
inline std::string write_edge_list(const Graph& g) {
    std::string out = std::to_string(g.n) + " " + std::to_string(g.m) + "\n";
    for (auto [u, v] : g.edges()) out += std::to_string(u) + " " + std::to_string(v) + "\n";
    return out;
}

inline std::string write_dimacs(const Graph& g) {
    std::string out = "p edge " + std::to_string(g.n) + " " + std::to_string(g.m) + "\n";
    for (auto [u, v] : g.edges()) out += "e " + std::to_string(u + 1) + " " + std::to_string(v + 1) + "\n";
    return out;
}

inline std::string write_graph(const Graph& g, GraphFormat format) {
    return format == GraphFormat::edge_list ? write_edge_list(g) : write_dimacs(g);
}

// ---------------------------------------------------------------------------
// structural queries
// ---------------------------------------------------------------------------

inline int max_degree(const Graph& g) {
    int best = 0;
    for (int v = 0; v < g.n; ++v) best = std::max(best, g.degree(v));
    return best;
}

inline int component_count(const Graph& g) {
    std::vector<char> seen(g.n, 0);
    std::vector<int> stack;
    int comps = 0;
    for (int s = 0; s < g.n; ++s) {
        if (seen[s]) continue;
        ++comps;
        seen[s] = 1;
        stack.push_back(s);
        while (!stack.empty()) {
            int u = stack.back();
            stack.pop_back();
            for (int v : g.adj[u])
                if (!seen[v]) {
                    seen[v] = 1;
                    stack.push_back(v);
                }
        }
    }
    return comps;
}

inline bool is_acyclic(const FlatAdjacency& a) {
    // union-find over the edges; a rejected union is a cycle
    const int n = a.size();
    detail::scratch_vector<int> parent(n);
    for (int v = 0; v < n; ++v) parent[v] = v;
    auto find = [&](int x) {
        while (parent[x] != x) {
            parent[x] = parent[parent[x]];
            x = parent[x];
        }
        return x;
    };
    for (int u = 0; u < n; ++u) {
        for (int v : a[std::min(u + 8, n - 1)]) __builtin_prefetch(&parent[v]);
        for (int v : a[u]) {
            if (v < u) continue;
            int ru = find(u), rv = find(v);
            if (ru == rv) return false;
            parent[ru] = rv;
        }
    }
    return true;
}

inline bool is_acyclic(const Graph& g) { return is_acyclic(FlatAdjacency(g)); }

/// Length of a shortest cycle; std::nullopt when the graph is acyclic (infinite girth).
/// Runs a BFS from every vertex: any shortest cycle is found from one of its own
/// vertices, and every non-tree edge scan only ever reports a value >= the girth.
/// O(n*(n+m)) in the worst case, with an O(n+m) acyclic short-circuit so forests
/// (the inputs the linear pipeline cares about) never pay the quadratic cost.
inline std::optional<int> girth(const FlatAdjacency& a) {
    if (is_acyclic(a)) return std::nullopt;
    const int n = a.size();
    int best = std::numeric_limits<int>::max();
    detail::scratch_vector<int> dist(n), parent(n), queue;
    queue.reserve(n);
    for (int s = 0; s < n && best > 3; ++s) {
        std::fill(dist.begin(), dist.end(), -1);
        queue.clear();
        queue.push_back(s);
        dist[s] = 0;
        parent[s] = -1;
        for (std::size_t qi = 0; qi < queue.size(); ++qi) {
            int u = queue[qi];
            if (2 * dist[u] >= best) break;  // no shorter cycle can be found deeper
            for (int v : a[u]) {
                if (dist[v] == -1) {
                    dist[v] = dist[u] + 1;
                    parent[v] = u;
                    queue.push_back(v);
                } else if (v != parent[u]) {
                    best = std::min(best, dist[u] + dist[v] + 1);
                }
            }
        }
    }
    return best;
}

inline std::optional<int> girth(const Graph& g) { return girth(FlatAdjacency(g)); }

// ---------------------------------------------------------------------------
// derived graphs and generators
// ---------------------------------------------------------------------------

/// Replaces every edge by a path with t interior vertices. Original ids are kept;
/// interior vertices of the e-th canonical edge get ids n + e*t .. n + e*t + t - 1.
/// Multiplies the girth by t+1.
inline Graph subdivide(const Graph& g, int t) {
    if (t < 0) throw std::invalid_argument("subdivision count must be non-negative");
    auto orig = g.edges();
    std::vector<std::pair<int, int>> edges;
    edges.reserve(g.m * (t + 1));
    int fresh = g.n;
    for (auto [u, v] : orig) {
        int prev = u;
        for (int i = 0; i < t; ++i) {
            edges.emplace_back(prev, fresh);
            prev = fresh++;
        }
        edges.emplace_back(prev, v);
    }
    return Graph::from_edges(g.n + static_cast<int>(g.m) * t, edges);
}

/// Induced subgraph on V \ {w}; ids above w shift down by one.
inline Graph remove_vertex(const Graph& g, int w) {
    if (g.n < 2) throw std::invalid_argument("cannot remove the last vertex");
    if (w < 0 || w >= g.n) throw std::invalid_argument("vertex id out of range");
    std::vector<std::pair<int, int>> edges;
    edges.reserve(g.m);
    for (auto [u, v] : g.edges()) {
        if (u == w || v == w) continue;
        edges.emplace_back(u - (u > w ? 1 : 0), v - (v > w ? 1 : 0));
    }
    return Graph::from_edges(g.n - 1, edges);
}

/// Decodes a Pruefer sequence (length n-2, entries in 0..n-1) into the labeled tree
/// it encodes. Smallest-leaf-first, so the result is a function of the sequence only.
inline Graph decode_pruefer(int n, const std::vector<int>& seq) {
    if (n < 2) throw std::invalid_argument("a Pruefer sequence needs at least two vertices");
    if (static_cast<int>(seq.size()) != n - 2)
        throw std::invalid_argument("Pruefer sequence must have length n-2");
    std::vector<int> degree(n, 1);
    for (int x : seq) {
        if (x < 0 || x >= n) throw std::invalid_argument("Pruefer entry out of range");
        ++degree[x];
    }
    std::priority_queue<int, std::vector<int>, std::greater<int>> leaves;
    for (int v = 0; v < n; ++v)
        if (degree[v] == 1) leaves.push(v);
    std::vector<std::pair<int, int>> edges;
    edges.reserve(n - 1);
    for (int x : seq) {
        int leaf = leaves.top();
        leaves.pop();
        edges.emplace_back(leaf, x);
        --degree[leaf];
        if (--degree[x] == 1) leaves.push(x);
    }
    int a = leaves.top();
    leaves.pop();
    int b = leaves.top();
    edges.emplace_back(a, b);
    return Graph::from_edges(n, edges);
}

/// Uniform random labeled tree on n vertices (uniform Pruefer sequence, fixed
/// mt19937_64 stream, so a given (n, seed) pair names one tree on every platform).
inline Graph gen_random_tree(int n, std::uint64_t seed) {
    if (n < 1) throw std::invalid_argument("tree needs at least one vertex");
    if (n == 1) return Graph::from_edges(1, {});
    std::mt19937_64 rng(seed);
    std::vector<int> seq(n - 2);
    for (int& x : seq) x = static_cast<int>(rng() % static_cast<std::uint64_t>(n));
    return decode_pruefer(n, seq);
}

inline Graph gen_path(int n) {
    std::vector<std::pair<int, int>> edges;
    for (int v = 0; v + 1 < n; ++v) edges.emplace_back(v, v + 1);
    return Graph::from_edges(n, edges);
}

inline Graph gen_cycle(int n) {
    if (n < 3) throw std::invalid_argument("cycle needs at least three vertices");
    auto g = gen_path(n);
    std::vector<std::pair<int, int>> edges = g.edges();
    edges.emplace_back(0, n - 1);
    return Graph::from_edges(n, edges);
}

/// Star with center 0 and n-1 leaves.
inline Graph gen_star(int n) {
    std::vector<std::pair<int, int>> edges;
    for (int v = 1; v < n; ++v) edges.emplace_back(0, v);
    return Graph::from_edges(n, edges);
}

inline Graph gen_complete(int n) {
    std::vector<std::pair<int, int>> edges;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) edges.emplace_back(u, v);
    return Graph::from_edges(n, edges);
}

}  // namespace grundy
