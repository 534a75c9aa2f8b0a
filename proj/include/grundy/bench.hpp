#pragma once

#include <chrono>
#include <cstdint>
#include <string>
#include <vector>

#if defined(__GLIBC__)
#include <malloc.h>
#endif

#include "grundy/graph.hpp"
#include "grundy/realizer.hpp"
#include "grundy/stair.hpp"

namespace grundy {

struct BenchRow {
    std::string algorithm;
    int n = 0;
    std::size_t m = 0;
    int rep = 0;
    double seconds = 0.0;
};

/// Times vertex_decomposition and the full grundy_number_large_girth pipeline on
/// one random tree per size. Two untimed warm-up passes cover every (algorithm,
/// size) pair, then the timed repetitions cycle through all pairs round-robin so
/// a transient system stall spreads across sizes instead of skewing one of them.
/// Structure of the output is deterministic; the seconds, of course, are not.
inline std::vector<BenchRow> run_bench(const std::vector<int>& sizes, std::uint64_t seed, int reps) {
#if defined(__GLIBC__)
    // steady-state repetitions should recycle the result buffers in user space
    // instead of bouncing multi-megabyte blocks off the kernel on every call
    mallopt(M_MMAP_THRESHOLD, 256 << 20);
    mallopt(M_TRIM_THRESHOLD, -1);
#endif
    auto timed = [](auto&& fn) {
        auto t0 = std::chrono::steady_clock::now();
        fn();
        auto t1 = std::chrono::steady_clock::now();
        return std::chrono::duration<double>(t1 - t0).count();
    };
    std::vector<Graph> trees;
    trees.reserve(sizes.size());
    for (std::size_t i = 0; i < sizes.size(); ++i) trees.push_back(gen_random_tree(sizes[i], seed + i));
    for (int pass = 0; pass < 2; ++pass)
        for (const Graph& tree : trees) {
            vertex_decomposition(tree);
            grundy_number_large_girth(tree);
        }
    std::vector<BenchRow> rows;
    for (int r = 0; r < reps; ++r) {
        // rotate the starting size each cycle so a sustained stall cannot land
        // on the same (algorithm, size) slot in every repetition
        for (std::size_t j = 0; j < trees.size(); ++j) {
            const Graph& tree = trees[(j + static_cast<std::size_t>(r)) % trees.size()];
            rows.push_back({"vertex_decomposition", tree.n, tree.m, r,
                            timed([&] { vertex_decomposition(tree); })});
            rows.push_back({"grundy_number_large_girth", tree.n, tree.m, r,
                            timed([&] { grundy_number_large_girth(tree); })});
        }
    }
    return rows;
}

inline std::string bench_csv(const std::vector<BenchRow>& rows) {
    std::string out = "algorithm,n,m,rep,seconds\n";
    for (const auto& r : rows)
        out += r.algorithm + "," + std::to_string(r.n) + "," + std::to_string(r.m) + "," +
               std::to_string(r.rep) + "," + std::to_string(r.seconds) + "\n";
    return out;
}

}  // namespace grundy
