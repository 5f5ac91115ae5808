#include <gtest/gtest.h>

#include "girth/embed.hpp"
#include "girth/generator.hpp"
#include "girth/io.hpp"
#include "girth/oracle.hpp"

namespace girth {
namespace {

TEST(BruteGirth, Basics) {
  EXPECT_EQ(oracle::brute_girth(gen::cycle(5)), DistVal(5));
  PlaneGraph tri = parse_graph("p planar 3 3\ne 1 2 1\ne 2 3 1\ne 1 3 1\n");
  EXPECT_EQ(oracle::brute_girth(tri), DistVal(3));
  PlaneGraph tree = parse_graph("p planar 4 3\ne 1 2 1\ne 2 3 1\ne 2 4 1\n");
  EXPECT_TRUE(oracle::brute_girth(tree).is_inf());
}

TEST(BruteGirth, Fig1FixturesAreFour) {
  EXPECT_EQ(oracle::brute_girth(gen::figure_fixture(gen::Figure::Fig1a)), DistVal(4));
  EXPECT_EQ(oracle::brute_girth(gen::figure_fixture(gen::Figure::Fig1b)), DistVal(4));
  EXPECT_EQ(oracle::brute_girth(gen::figure_fixture(gen::Figure::Fig1c)), DistVal(4));
}

TEST(BfsGirth, MatchesBruteOnUnweighted) {
  for (std::uint64_t seed = 1; seed <= 60; ++seed) {
    PlaneGraph g = gen::random_planar(8 + seed % 40, 0.1 + 0.045 * (seed % 20), seed);
    EXPECT_EQ(oracle::brute_girth_bfs(g), oracle::brute_girth(g)) << "seed " << seed;
  }
}

TEST(BfsGirth, PetersenAndK4) {
  // The oracle has no planarity precondition; Petersen is a cross-check.
  PlaneGraph p;
  p.n = 10;
  for (int i = 0; i < 5; ++i) p.edges.push_back({i, (i + 1) % 5, 1});
  for (int i = 0; i < 5; ++i) p.edges.push_back({i, i + 5, 1});
  for (int i = 0; i < 5; ++i) p.edges.push_back({5 + i, 5 + (i + 2) % 5, 1});
  p.labels.resize(10);
  p.rot.resize(10);
  for (int e = 0; e < p.m(); ++e) {
    p.rot[p.edges[e].u].push_back(e);
    p.rot[p.edges[e].v].push_back(e);
  }
  EXPECT_EQ(oracle::brute_girth_bfs(p), DistVal(5));

  EXPECT_EQ(oracle::brute_girth_bfs(gen::wheel(3)), DistVal(3));  // K4
  PlaneGraph weighted = parse_graph("p planar 3 3\ne 1 2 2\ne 2 3 1\ne 1 3 1\n");
  EXPECT_THROW(oracle::brute_girth_bfs(weighted), GirthError);
}

TEST(DistWithoutEdge, Basics) {
  PlaneGraph single = parse_graph("p planar 2 1\ne 1 2 5\n");
  EXPECT_TRUE(oracle::dist_without_edge(single, 0, 1, 0).is_inf());
  EXPECT_THROW(oracle::dist_without_edge(single, 0, 1, 3), GirthError);

  // G[below(S)] of the figure instance: deleting (7,8) reroutes 7..10 to 10.
  PlaneGraph g = gen::figure_fixture(gen::Figure::Fig3a);
  std::vector<int> below = {1, 2, 3, 6, 7, 9, 10, 11};  // labels 2,3,4,7,8,10,11,12
  Induced sub = induced_subgraph(g, below);
  int n7 = -1, n10 = -1, e78 = -1;
  for (int v = 0; v < sub.graph.n; ++v) {
    if (sub.graph.labels[v] == 7) n7 = v;
    if (sub.graph.labels[v] == 10) n10 = v;
  }
  for (int e = 0; e < sub.graph.m(); ++e) {
    auto lu = sub.graph.labels[sub.graph.edges[e].u];
    auto lv = sub.graph.labels[sub.graph.edges[e].v];
    if (std::minmax(lu, lv) == std::minmax<std::int64_t>(7, 8)) e78 = e;
  }
  ASSERT_NE(e78, -1);
  EXPECT_EQ(oracle::dist_without_edge(sub.graph, n7, n10, e78), DistVal(10));
}

TEST(DistWithoutEdge, MatchesRecompute) {
  for (std::uint64_t seed = 1; seed <= 25; ++seed) {
    PlaneGraph g = gen::random_weights(gen::random_planar(25, 0.5, seed), 6, seed + 99);
    Adjacency a(g);
    for (int e = 0; e < g.m(); e += 5) {
      int u = g.edges[e].u;
      SpTree t = dijkstra(a, u, e);
      for (int v = 0; v < g.n; v += 3)
        EXPECT_EQ(oracle::dist_without_edge(g, u, v, e), to_distval(t.dist[v]));
    }
  }
}

TEST(VerifyCycle, Basics) {
  PlaneGraph tri = parse_graph("p planar 3 3\ne 1 2 1\ne 2 3 1\ne 1 3 1\n");
  auto ok = oracle::verify_cycle(tri, {0, 1, 2});
  EXPECT_TRUE(ok.simple);
  EXPECT_EQ(ok.weight, DistVal(3));
  EXPECT_FALSE(oracle::verify_cycle(tri, {0, 1, 0, 2}).simple);
  EXPECT_FALSE(oracle::verify_cycle(tri, {0, 1}).simple);
  PlaneGraph sq = gen::cycle(4);
  EXPECT_FALSE(oracle::verify_cycle(sq, {0, 1, 3}).simple);  // 1-3 not an edge
}

TEST(Sweep, MatchesBrute) {
  for (std::uint64_t seed = 1; seed <= 60; ++seed) {
    PlaneGraph g = gen::random_weights(gen::random_planar(10 + seed % 45, 0.4, seed), 7,
                                       seed * 3 + 5);
    DistVal expected = oracle::brute_girth(g);
    oracle::SweepResult sw = oracle::sweep_girth(g);
    EXPECT_EQ(sw.girth, expected) << "seed " << seed;
    if (sw.girth.is_finite()) {
      std::vector<int> cyc = oracle::min_simple_cycle_in_walk(g, sw.closed_walk);
      auto chk = oracle::verify_cycle(g, cyc);
      EXPECT_TRUE(chk.simple);
      EXPECT_EQ(chk.weight, expected);
    }
  }
}

TEST(Sweep, RespectsUpperBound) {
  PlaneGraph g = gen::grid(9, 9);
  oracle::SweepResult sw = oracle::sweep_girth(g, DistVal(4));
  EXPECT_EQ(sw.girth, DistVal(4));
  std::vector<int> cyc = oracle::min_simple_cycle_in_walk(g, sw.closed_walk);
  EXPECT_TRUE(oracle::verify_cycle(g, cyc).simple);
}

TEST(Sweep, CycleExtractionOnBrute) {
  for (std::uint64_t seed = 1; seed <= 30; ++seed) {
    PlaneGraph g = gen::random_weights(gen::random_planar(30, 0.5, seed), 5, seed);
    oracle::CycleResult r = oracle::brute_girth_cycle(g);
    if (r.girth.is_inf()) continue;
    auto chk = oracle::verify_cycle(g, r.cycle);
    EXPECT_TRUE(chk.simple);
    EXPECT_EQ(chk.weight, r.girth);
  }
}

}  // namespace
}  // namespace girth
