#include <gtest/gtest.h>

#include <random>

#include "grundy/io.hpp"
#include "grundy/oracles.hpp"
#include "grundy/realizer.hpp"
#include "grundy/reduction.hpp"
#include "support.hpp"

using namespace grundy;

TEST(Build, PathOfThreeLayout) {
    // 3 source vertices + 2 companions + 2 selectors + triangle = 10 vertices.
    Graph g = gen_path(3);
    auto inst = build_reduction(g);
    EXPECT_EQ(inst.gprime.n, 10);
    EXPECT_EQ(inst.k, 5);
    EXPECT_EQ(inst.orig_n, 3);
    ASSERT_EQ(inst.orig_edges.size(), 2u);
    EXPECT_EQ(max_degree(inst.gprime), inst.k - 1);
    EXPECT_NO_THROW(validate_instance(inst));
}

TEST(Build, SingleEdge) {
    Graph g = Graph::from_edges(2, {{0, 1}});
    auto inst = build_reduction(g);
    EXPECT_EQ(inst.gprime.n, 7);  // 2 + 1 + 1 + 3
    EXPECT_EQ(inst.k, 4);
    EXPECT_EQ(max_degree(inst.gprime), 3);
}

TEST(Build, Triangle) {
    auto inst = build_reduction(gen_complete(3));
    EXPECT_EQ(inst.gprime.n, 12);  // 3 + 3 + 3 + 3
    EXPECT_EQ(inst.k, 6);
    EXPECT_EQ(max_degree(inst.gprime), 5);
}

TEST(Build, RejectsEdgelessInput) {
    EXPECT_THROW(build_reduction(Graph::from_edges(3, {})), std::invalid_argument);
}

// Source edges are deliberately NOT copied into the instance; adjacency between
// source vertices exists only through selector vertices.
TEST(Build, SourceVerticesFormIndependentSet) {
    auto inst = build_reduction(gen_complete(3));
    for (int u = 0; u < inst.orig_n; ++u)
        for (int v = u + 1; v < inst.orig_n; ++v)
            EXPECT_FALSE(inst.gprime.has_edge(u, v));
}

TEST(Build, InstanceIsAlwaysChordal) {
    std::mt19937_64 rng(61);
    for (int trial = 0; trial < 60; ++trial) {
        int n = 2 + int(rng() % 5);
        Graph g = testsupport::random_graph(n, 0.5, rng);
        if (g.m == 0) continue;
        auto inst = build_reduction(g);
        EXPECT_TRUE(testsupport::is_chordal(inst.gprime)) << write_edge_list(g);
    }
}

TEST(Lift, TriangleCompanionColors) {
    Graph g = gen_complete(3);
    auto inst = build_reduction(g);
    Coloring c3{{1, 2, 3}, 3};
    Coloring f = lift_coloring(inst, c3);
    EXPECT_EQ(f.l, 6);
    // Canonical edge order (0,1),(0,2),(1,2): companions take 6-a-b.
    std::vector<int> lcolors;
    for (std::size_t x = 0; x < inst.roles.size(); ++x)
        if (inst.roles[x].role == Role::companion) lcolors.push_back(f.colors[x]);
    EXPECT_EQ(lcolors, (std::vector<int>{3, 2, 1}));
    EXPECT_TRUE(verify_partial_grundy(inst.gprime, f).valid);
}

TEST(Lift, PathOfThreeFrozen) {
    Graph g = gen_path(3);
    auto inst = build_reduction(g);
    auto c3 = brute_3color(g);
    ASSERT_TRUE(c3.has_value());
    ASSERT_EQ(c3->colors, (std::vector<int>{1, 2, 1}));
    Coloring f = lift_coloring(inst, *c3);
    EXPECT_EQ(f.colors, (std::vector<int>{1, 2, 1, 3, 3, 4, 5, 1, 2, 3}));
    EXPECT_EQ(f.l, 5);
    EXPECT_TRUE(verify_partial_grundy(inst.gprime, f).valid);
}

TEST(Lift, RejectsImproperThreeColoring) {
    Graph g = gen_path(3);
    auto inst = build_reduction(g);
    EXPECT_THROW(lift_coloring(inst, Coloring{{1, 1, 2}, 2}), std::invalid_argument);
    EXPECT_THROW(lift_coloring(inst, Coloring{{1, 2}, 2}), std::invalid_argument);
    EXPECT_THROW(lift_coloring(inst, Coloring{{1, 4, 1}, 4}), std::invalid_argument);
}

TEST(Extract, UndoesLift) {
    std::mt19937_64 rng(311);
    for (int trial = 0; trial < 80; ++trial) {
        int n = 2 + int(rng() % 5);
        Graph g = testsupport::random_graph(n, 0.4, rng);
        if (g.m == 0) continue;
        auto c3 = brute_3color(g);
        if (!c3) continue;
        auto inst = build_reduction(g);
        Coloring f = lift_coloring(inst, *c3);
        Coloring back = extract_3coloring(inst, f);
        EXPECT_EQ(back.colors, c3->colors) << write_edge_list(g);
    }
}

TEST(Extract, RejectsCertificatesThatUseTooFewColors) {
    Graph g = gen_path(3);
    auto inst = build_reduction(g);
    // A proper coloring of the instance that never reaches class k carries no
    // information about 3-colorability.
    Coloring weak{std::vector<int>(inst.gprime.n, 1), 1};
    for (int x = 0; x < inst.gprime.n; ++x) {
        // greedy proper coloring
        std::vector<bool> used(inst.gprime.n + 2, false);
        for (int y : inst.gprime.adj[x])
            if (y < x) used[weak.colors[y]] = true;
        int c = 1;
        while (used[c]) ++c;
        weak.colors[x] = c;
        weak.l = std::max(weak.l, c);
    }
    ASSERT_LT(weak.l, inst.k);
    EXPECT_THROW(extract_3coloring(inst, weak), invalid_certificate);
}

TEST(Extract, RejectsMalformedCertificates) {
    Graph g = gen_path(3);
    auto inst = build_reduction(g);
    EXPECT_THROW(extract_3coloring(inst, Coloring{{1, 2, 3}, 3}), std::invalid_argument);
    // Right size, claimed l == k, but not a valid coloring of the instance.
    Coloring junk{std::vector<int>(inst.gprime.n, 1), inst.k};
    EXPECT_THROW(extract_3coloring(inst, junk), invalid_certificate);
}

// The equivalence both ways on every tiny graph the oracle can reach: G is
// 3-colorable iff the instance admits a partial Grundy coloring with k classes.
TEST(Equivalence, ForwardDirectionOnTinyGraphs) {
    std::mt19937_64 rng(401);
    int checked = 0;
    for (int trial = 0; trial < 200 && checked < 40; ++trial) {
        int n = 2 + int(rng() % 4);
        Graph g = testsupport::random_graph(n, 0.5, rng);
        if (g.m == 0) continue;
        auto inst = build_reduction(g);
        if (inst.gprime.n > 10) continue;  // oracle guard
        ++checked;
        auto c3 = brute_3color(g);
        int pg = brute_partial_grundy(inst.gprime);
        EXPECT_LE(pg, inst.k);
        if (c3)
            EXPECT_EQ(pg, inst.k) << write_edge_list(g);
        else
            EXPECT_LT(pg, inst.k) << write_edge_list(g);
    }
    EXPECT_GT(checked, 0);
}

TEST(Equivalence, OracleWitnessExtractsOnPathOfThree) {
    Graph g = gen_path(3);
    auto inst = build_reduction(g);
    ASSERT_EQ(inst.gprime.n, 10);
    auto w = brute_partial_grundy_witness(inst.gprime);
    ASSERT_EQ(w.k, inst.k);
    Coloring c3 = extract_3coloring(inst, w.coloring);
    for (auto [u, v] : g.edges()) EXPECT_NE(c3.colors[u], c3.colors[v]);
    for (int c : c3.colors) {
        EXPECT_GE(c, 1);
        EXPECT_LE(c, 3);
    }
}

TEST(Meta, RoundTripsThroughJson) {
    Graph g = gen_path(3);
    auto inst = build_reduction(g);
    auto j = instance_meta_to_json(inst);
    auto back = instance_from_meta_json(j);
    EXPECT_EQ(back.gprime, inst.gprime);
    EXPECT_EQ(back.k, inst.k);
    EXPECT_EQ(back.roles, inst.roles);
}

TEST(Meta, RejectsTamperedSidecar) {
    auto j = instance_meta_to_json(build_reduction(gen_path(3)));
    auto bad = j;
    bad["k"] = 7;
    EXPECT_THROW(instance_from_meta_json(bad), std::invalid_argument);
}
