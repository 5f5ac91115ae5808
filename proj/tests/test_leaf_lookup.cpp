#include <gtest/gtest.h>

#include <cstdio>
#include <random>

#include "girth/generator.hpp"
#include "girth/io.hpp"
#include "girth/oracle.hpp"
#include "girth/peel.hpp"
#include "girth/solver.hpp"

namespace girth {
namespace {

using dissection::EllPolicy;
using leaf_lookup::LookupTable;

PlaneGraph relabeled(const PlaneGraph& g, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::vector<int> perm(g.n);
  for (int v = 0; v < g.n; ++v) perm[v] = v;
  for (int i = g.n - 1; i > 0; --i) std::swap(perm[i], perm[rng() % (i + 1)]);
  PlaneGraph h;
  h.n = g.n;
  h.labels.assign(g.n, 0);
  h.rot.assign(g.n, {});
  for (const auto& e : g.edges) h.edges.push_back({perm[e.u], perm[e.v], e.w});
  for (int v = 0; v < g.n; ++v)
    for (int e : g.rot[v]) h.rot[perm[v]].push_back(e);
  return h;
}

TEST(Lookup, TriangleAndWeightedSquare) {
  LookupTable lt3(3, 1);
  PlaneGraph tri = parse_graph("p planar 3 3\ne 1 2 1\ne 2 3 1\ne 1 3 1\n");
  EXPECT_EQ(leaf_lookup::lookup_girth(lt3, tri), DistVal(3));

  LookupTable lt4(4, 3);
  PlaneGraph c4 = parse_graph("p planar 4 4\ne 1 2 1\ne 2 3 2\ne 3 4 3\ne 4 1 1\n");
  EXPECT_EQ(leaf_lookup::lookup_girth(lt4, c4), oracle::brute_girth(c4));
  EXPECT_EQ(leaf_lookup::lookup_girth(lt4, c4), DistVal(7));
}

TEST(Lookup, CacheHitCounter) {
  LookupTable lt(5, 2);
  PlaneGraph tri = parse_graph("p planar 3 3\ne 1 2 1\ne 2 3 1\ne 1 3 1\n");
  leaf_lookup::lookup_girth(lt, tri);
  auto before = lt.stats();
  EXPECT_EQ(leaf_lookup::lookup_girth(lt, tri), DistVal(3));
  auto after = lt.stats();
  EXPECT_EQ(after.hits, before.hits + 1);
  EXPECT_EQ(after.misses, before.misses);
}

TEST(Lookup, Errors) {
  LookupTable lt(4, 2);
  PlaneGraph big = gen::cycle(6);
  EXPECT_THROW(leaf_lookup::lookup_girth(lt, big), GirthError);
  PlaneGraph heavy = parse_graph("p planar 3 3\ne 1 2 9\ne 2 3 1\ne 1 3 1\n");
  try {
    leaf_lookup::lookup_girth(lt, heavy);
    FAIL();
  } catch (const GirthError& e) {
    EXPECT_EQ(e.code(), ErrorCode::WeightTooLarge);
  }
}

TEST(Lookup, BorderTables) {
  LookupTable lt(16, 16);
  PlaneGraph single = parse_graph("p planar 2 1\ne 1 2 4\n");
  auto sol = leaf_lookup::lookup_border(lt, single, {0, 1});
  EXPECT_EQ(sol.d(0, 1), DistVal(4));
  EXPECT_TRUE(sol.d_avoid(0, 1, 0).is_inf());

  auto empty = leaf_lookup::lookup_border(lt, single, {});
  EXPECT_EQ(empty.size(), 0);

  PlaneGraph f7 = gen::figure_fixture(gen::Figure::Fig7a);
  std::vector<int> b;
  for (int v = 0; v < f7.n; ++v)
    if (f7.labels[v] == 2 || f7.labels[v] == 7 || f7.labels[v] == 8) b.push_back(v);
  auto s7 = leaf_lookup::lookup_border(lt, f7, b);
  Adjacency adj(f7);
  for (int u : b)
    for (int v : b) EXPECT_EQ(s7.d(u, v), to_distval(dijkstra(adj, u).dist[v]));
  for (const auto& [e, m] : s7.avoid)
    for (int u : b) {
      SpTree t = dijkstra(adj, u, e);
      for (int v : b)
        EXPECT_EQ((*m)[s7.index_of(u) * s7.size() + s7.index_of(v)], to_distval(t.dist[v]));
    }
}

TEST(Lookup, GirthMatchesOracleOnCorpus) {
  LookupTable lt(10, 8);
  for (std::uint64_t seed = 1; seed <= 300; ++seed) {
    int n = 3 + static_cast<int>(seed % 8);
    PlaneGraph g = gen::random_weights(gen::random_planar(n, 0.12 * (seed % 9), seed), 8,
                                       seed * 17 + 1);
    EXPECT_EQ(leaf_lookup::lookup_girth(lt, g), oracle::brute_girth(g)) << "seed " << seed;
  }
  auto st = lt.stats();
  EXPECT_GT(st.hits, 0);  // small graphs repeat up to isomorphism
}

TEST(Lookup, TreeIsInfinite) {
  LookupTable lt(8, 4);
  PlaneGraph path = parse_graph("p planar 4 3\ne 1 2 2\ne 2 3 1\ne 3 4 4\n");
  EXPECT_TRUE(leaf_lookup::lookup_girth(lt, path).is_inf());
  PlaneGraph t222 = parse_graph("p planar 3 3\ne 1 2 2\ne 2 3 2\ne 1 3 2\n");
  EXPECT_EQ(leaf_lookup::lookup_girth(lt, t222), DistVal(6));
}

TEST(Canonical, InvariantUnderRelabeling) {
  for (std::uint64_t seed = 1; seed <= 25; ++seed) {
    PlaneGraph g = gen::random_weights(gen::random_planar(9, 0.5, seed), 3, seed);
    std::string key = leaf_lookup::canonical_key(g);
    for (std::uint64_t r = 0; r < 200; ++r)
      ASSERT_EQ(leaf_lookup::canonical_key(relabeled(g, r * 31 + seed)), key)
          << "seed " << seed << " relabel " << r;
  }
}

TEST(Canonical, DistinguishesWeights) {
  PlaneGraph a = parse_graph("p planar 3 3\ne 1 2 1\ne 2 3 1\ne 1 3 1\n");
  PlaneGraph b = parse_graph("p planar 3 3\ne 1 2 2\ne 2 3 1\ne 1 3 1\n");
  EXPECT_NE(leaf_lookup::canonical_key(a), leaf_lookup::canonical_key(b));
}

TEST(Lookup, LazyEqualsEager) {
  LookupTable lazy(4, 2);
  LookupTable eager(4, 2, true);
  for (std::uint64_t seed = 1; seed <= 120; ++seed) {
    PlaneGraph g = gen::random_weights(gen::random_planar(4, 0.2 * (seed % 5), seed), 2, seed);
    EXPECT_EQ(leaf_lookup::lookup_girth(lazy, g), leaf_lookup::lookup_girth(eager, g));
    std::vector<int> b{0, static_cast<int>(seed % 4)};
    auto s1 = leaf_lookup::lookup_border(lazy, g, b);
    auto s2 = leaf_lookup::lookup_border(eager, g, b);
    EXPECT_EQ(*s1.dist, *s2.dist);
  }
  EXPECT_THROW(LookupTable(6, 2, true), GirthError);
}

TEST(Lookup, PersistRoundTrip) {
  std::string path = testing::TempDir() + "lookup_cache_test.bin";
  LookupTable a(8, 4);
  std::vector<PlaneGraph> gs;
  for (std::uint64_t seed = 1; seed <= 20; ++seed) {
    gs.push_back(gen::random_weights(gen::random_planar(7, 0.4, seed), 4, seed));
    leaf_lookup::lookup_girth(a, gs.back());
  }
  a.save(path);
  LookupTable b(8, 4);
  b.load(path);
  for (const auto& g : gs) EXPECT_EQ(leaf_lookup::lookup_girth(b, g), leaf_lookup::lookup_girth(a, g));
  auto st = b.stats();
  EXPECT_EQ(st.misses, 0);
  LookupTable wrong(9, 4);
  EXPECT_THROW(wrong.load(path), GirthError);
  std::remove(path.c_str());
}

TEST(LeafProblem, SingleLeafTriangle) {
  PlaneGraph tri = parse_graph("p planar 3 3\ne 1 2 1\ne 2 3 1\ne 1 3 1\n");
  auto t = dissection::build_dissection(tri, EllPolicy::fixed(8));
  LookupTable lt(48, 16);
  auto res = leaf_lookup::solve_leaf_problem(tri, t, lt, 1, EllPolicy::fixed(8));
  EXPECT_EQ(res.girth, DistVal(3));
}

TEST(LeafProblem, MatchesPerLeafOracle) {
  LookupTable lt(48, 16);
  for (std::uint64_t seed = 1; seed <= 15; ++seed) {
    PlaneGraph raw = gen::random_planar(60, 0.55, seed);
    auto rd = preprocess::reduce_all_degrees(raw);
    Components c = connected_components(rd.graph);
    std::vector<std::vector<int>> comps(c.count);
    for (int v = 0; v < rd.graph.n; ++v) comps[c.comp_of[v]].push_back(v);
    for (auto& nodes : comps) {
      if (nodes.size() < 4) continue;
      Induced piece = induced_subgraph(rd.graph, nodes);
      EllPolicy pol = EllPolicy::fixed(7);
      auto t = dissection::build_dissection(piece.graph, pol);
      auto res = leaf_lookup::solve_leaf_problem(piece.graph, t, lt,
                                                 outerplane_radius(piece.graph), pol);
      DistVal expect = DistVal::infinity();
      for (std::size_t s = 0; s < t.v.size(); ++s) {
        if (!t.is_leaf(static_cast<int>(s))) continue;
        Induced leaf = induced_subgraph(piece.graph, t.v[s].set);
        expect = std::min(expect, oracle::brute_girth(leaf.graph));
      }
      EXPECT_EQ(res.girth, expect) << "seed " << seed;
    }
  }
}

}  // namespace
}  // namespace girth
