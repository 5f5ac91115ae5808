#include <gtest/gtest.h>

#include "girth/blocks.hpp"
#include "girth/embed.hpp"
#include "girth/generator.hpp"
#include "girth/io.hpp"
#include "girth/oracle.hpp"
#include "girth/peel.hpp"
#include "girth/plane_graph.hpp"
#include "girth/preprocess.hpp"

namespace girth {
namespace {

PlaneGraph triangle() {
  return parse_graph("p planar 3 3\ne 1 2 1\ne 2 3 1\ne 1 3 1\n");
}

int index_of_label(const PlaneGraph& g, std::int64_t label) {
  for (int v = 0; v < g.n; ++v)
    if (g.labels[v] == label) return v;
  ADD_FAILURE() << "label " << label << " not present";
  return -1;
}

TEST(Parse, Triangle) {
  PlaneGraph g = triangle();
  EXPECT_EQ(g.n, 3);
  EXPECT_EQ(g.m(), 3);
  EXPECT_TRUE(validate(g).ok);
  EXPECT_EQ(oracle::brute_girth(g), DistVal(3));
}

TEST(Parse, Fig1aDensity) {
  PlaneGraph g = gen::figure_fixture(gen::Figure::Fig1a);
  EXPECT_EQ(g.n, 6);
  EXPECT_EQ(preprocess::density(g), Rational(3, 2));
}

TEST(Parse, SelfLoopRejected) {
  EXPECT_THROW(parse_graph("p planar 2 1\ne 1 1 2\n"), GirthError);
  try {
    parse_graph("p planar 2 1\ne 1 1 2\n");
  } catch (const GirthError& e) {
    EXPECT_EQ(e.code(), ErrorCode::NonSimple);
  }
}

TEST(Parse, ErrorsAndRoundTrip) {
  EXPECT_THROW(parse_graph("p planar 2 1\ne 1 2 -1\n"), GirthError);
  EXPECT_THROW(parse_graph("p planar 2 2\ne 1 2 1\ne 2 1 1\n"), GirthError);
  EXPECT_THROW(parse_graph("p planar 2 1\nbogus\n"), GirthError);
  EXPECT_THROW(parse_graph("p planar 2 2\ne 1 2 1\n"), GirthError);

  PlaneGraph g = gen::figure_fixture(gen::Figure::Fig3a);
  PlaneGraph h = parse_graph(serialize_graph(g), GraphFormat::EdgelistWithRotation);
  EXPECT_TRUE(graphs_equal(g, h));
}

TEST(Embed, FourCycleAndK4) {
  PlaneGraph c4 = embed(parse_graph("p planar 4 4\ne 1 2 1\ne 2 3 1\ne 3 4 1\ne 4 1 1\n"));
  EXPECT_TRUE(validate(c4).ok);

  PlaneGraph k4;
  k4.n = 4;
  for (int u = 0; u < 4; ++u)
    for (int v = u + 1; v < 4; ++v) k4.edges.push_back({u, v, 1});
  k4.labels = {1, 2, 3, 4};
  PlaneGraph ek4 = embed(k4);
  ValidationReport r = validate(ek4);
  EXPECT_TRUE(r.ok);
  EXPECT_EQ(r.faces, 4);  // 4 - 6 + 4 == 2
}

TEST(Embed, K5NotPlanar) {
  PlaneGraph k5;
  k5.n = 5;
  for (int u = 0; u < 5; ++u)
    for (int v = u + 1; v < 5; ++v) k5.edges.push_back({u, v, 1});
  k5.labels = {1, 2, 3, 4, 5};
  EXPECT_FALSE(is_planar(k5));
  try {
    embed(k5);
    FAIL() << "embed(K5) should throw";
  } catch (const GirthError& e) {
    EXPECT_EQ(e.code(), ErrorCode::NotPlanar);
  }
}

TEST(Depths, Fig1aInternalNode) {
  PlaneGraph g = gen::figure_fixture(gen::Figure::Fig1a);
  DepthMap dm = outerplane_depths(g);
  EXPECT_EQ(dm.radius, 2);
  int deep = 0;
  for (int v = 0; v < g.n; ++v)
    if (dm.depth[v] == 2) {
      ++deep;
      EXPECT_EQ(g.labels[v], 6);
    }
  EXPECT_EQ(deep, 1);
}

TEST(Depths, OuterplanarAllOne) {
  PlaneGraph g = gen::figure_fixture(gen::Figure::Fig1c);
  DepthMap dm = outerplane_depths(g);
  EXPECT_EQ(dm.radius, 1);
}

TEST(Depths, GridRadius) {
  for (int k : {3, 4, 5, 8, 9}) {
    PlaneGraph g = gen::grid(k, k);
    EXPECT_EQ(outerplane_radius(g), (k + 1) / 2) << "k=" << k;
  }
}

TEST(Depths, IdempotentForOuterplanar) {
  PlaneGraph g = gen::cycle(12);
  DepthMap dm = outerplane_depths(g);
  for (int v = 0; v < g.n; ++v) EXPECT_EQ(dm.depth[v], 1);
  PlaneGraph re = embed(g);
  DepthMap dm2 = outerplane_depths(re);
  for (int v = 0; v < re.n; ++v) EXPECT_EQ(dm2.depth[v], 1);
}

TEST(Induced, IdentityAndFig3c) {
  PlaneGraph g = gen::figure_fixture(gen::Figure::Fig3a);
  std::vector<int> all(g.n);
  for (int v = 0; v < g.n; ++v) all[v] = v;
  Induced same = induced_subgraph(g, all);
  EXPECT_TRUE(graphs_equal(g, same.graph));

  // below({7,8}) = {2,3,4,7,8,10,11,12} in labels
  std::vector<int> below;
  for (std::int64_t lbl : {2, 3, 4, 7, 8, 10, 11, 12})
    below.push_back(index_of_label(g, lbl));
  Induced sub = induced_subgraph(g, below);
  EXPECT_EQ(sub.graph.n, 8);
  EXPECT_EQ(sub.graph.m(), 9);
  int a = index_of_label(sub.graph, 7), b = index_of_label(sub.graph, 10);
  Adjacency adj(sub.graph);
  EXPECT_EQ(to_distval(dijkstra(adj, a).dist[b]), DistVal(7));
}

TEST(Induced, RestrictionComposes) {
  PlaneGraph g = gen::random_planar(40, 0.7, 1234);
  std::vector<int> a, b;
  for (int v = 0; v < g.n; ++v) {
    if (v % 3 != 0) a.push_back(v);
    if (v % 2 == 0) b.push_back(v);
  }
  std::vector<int> ab;
  for (int v : a)
    if (v % 2 == 0) ab.push_back(v);
  Induced direct = induced_subgraph(g, ab);
  Induced ga = induced_subgraph(g, a);
  std::vector<int> ab_in_a;
  for (int v : ab) ab_in_a.push_back(ga.new_node[v]);
  Induced nested = induced_subgraph(ga.graph, ab_in_a);
  EXPECT_EQ(direct.graph.labels, nested.graph.labels);
  EXPECT_EQ(direct.graph.m(), nested.graph.m());
}

TEST(Induced, UnknownNode) {
  PlaneGraph g = triangle();
  EXPECT_THROW(induced_subgraph(g, {0, 5}), GirthError);
}

TEST(Blocks, TwoTrianglesSharingNode) {
  PlaneGraph g = parse_graph(
      "p planar 5 6\n"
      "e 1 2 1\ne 2 3 1\ne 1 3 1\n"
      "e 3 4 1\ne 4 5 1\ne 3 5 1\n");
  auto blocks = biconnected_components(g);
  ASSERT_EQ(blocks.size(), 2u);
  EXPECT_EQ(blocks[0].graph.n, 3);
  EXPECT_EQ(blocks[1].graph.n, 3);
}

TEST(Blocks, TreeHasOnlyBridges) {
  PlaneGraph g = parse_graph("p planar 5 4\ne 1 2 1\ne 2 3 1\ne 2 4 1\ne 4 5 1\n");
  auto blocks = biconnected_components(g);
  EXPECT_EQ(blocks.size(), 4u);
  for (const auto& b : blocks) EXPECT_EQ(b.graph.m(), 1);
}

TEST(Blocks, GirthIsMinOverBlocks) {
  for (std::uint64_t seed = 1; seed <= 40; ++seed) {
    PlaneGraph g = gen::random_weights(gen::random_planar(10 + seed % 50, 0.35, seed), 5,
                                       seed * 7 + 1);
    DistVal whole = oracle::brute_girth(g);
    DistVal blocks_min = DistVal::infinity();
    for (const auto& b : biconnected_components(g))
      blocks_min = std::min(blocks_min, oracle::brute_girth(b.graph));
    EXPECT_EQ(whole, blocks_min) << "seed " << seed;
  }
}

TEST(Invariants, EulerOnCorpus) {
  for (std::uint64_t seed = 1; seed <= 30; ++seed) {
    PlaneGraph g = gen::random_planar(30, 0.2 + 0.02 * (seed % 20), seed);
    ValidationReport r = validate(g);
    EXPECT_TRUE(r.ok) << (r.violations.empty() ? "" : r.violations[0]);
    Components c = connected_components(g);
    int edgeless = 0;
    std::vector<char> has_edge(c.count, 0);
    for (int v = 0; v < g.n; ++v)
      if (!g.rot[v].empty()) has_edge[c.comp_of[v]] = 1;
    for (char h : has_edge)
      if (!h) ++edgeless;
    EXPECT_EQ(g.n - g.m() + r.faces + edgeless, 2 * r.components);
  }
}

}  // namespace
}  // namespace girth
