#include <gtest/gtest.h>

#include "girth/dissection.hpp"
#include "girth/generator.hpp"
#include "girth/io.hpp"
#include "girth/peel.hpp"
#include "girth/preprocess.hpp"

namespace girth {
namespace {

using dissection::DissectionTree;
using dissection::EllPolicy;

int tree_diameter(const dissection::Triangulated& t) {
  std::vector<std::vector<int>> adj(t.delta.n);
  for (int v = 0; v < t.delta.n; ++v)
    if (t.parent[v] != -1) {
      adj[v].push_back(t.parent[v]);
      adj[t.parent[v]].push_back(v);
    }
  auto bfs = [&](int s) {
    std::vector<int> dist(t.delta.n, -1), q{s};
    dist[s] = 0;
    int far = s;
    for (std::size_t i = 0; i < q.size(); ++i)
      for (int u : adj[q[i]])
        if (dist[u] == -1) {
          dist[u] = dist[q[i]] + 1;
          if (dist[u] > dist[far]) far = u;
          q.push_back(u);
        }
    return std::pair{far, dist[far]};
  };
  auto [far, d0] = bfs(t.root);
  (void)d0;
  return bfs(far).second;
}

bool all_faces_triangular(const PlaneGraph& g) {
  Faces f = trace_faces(g);
  for (const auto& w : f.darts_of)
    if (w.size() != 3) return false;
  return true;
}

// Vertex sets by 1-based labels, matching the parser's labeling.
DissectionTree make_tree(const std::vector<std::vector<int>>& sets,
                         const std::vector<std::pair<int, int>>& children, int host_n) {
  DissectionTree t;
  t.v.resize(sets.size());
  for (std::size_t i = 0; i < sets.size(); ++i) {
    for (int lbl : sets[i]) t.v[i].set.push_back(lbl - 1);
    std::sort(t.v[i].set.begin(), t.v[i].set.end());
  }
  for (std::size_t i = 0; i < children.size(); ++i) {
    auto [l, r] = children[i];
    t.v[i].left = l;
    t.v[i].right = r;
    if (l != -1) {
      t.v[l].parent = static_cast<int>(i);
      t.v[r].parent = static_cast<int>(i);
    }
  }
  t.root = 0;
  t.index(host_n);
  return t;
}

// The dissection tree of the running figure: root {2,7,10}, left branch
// {5,10} with leaves {1,2,5,6,7,10} and {5,9,10}, right branch {7,8} with
// leaves {2,3,4,7,8} and {7,8,10,11,12}.
DissectionTree fig3_tree(int host_n = 12) {
  return make_tree(
      {{2, 7, 10}, {5, 10}, {7, 8}, {1, 2, 5, 6, 7, 10}, {5, 9, 10}, {2, 3, 4, 7, 8},
       {7, 8, 10, 11, 12}},
      {{1, 2}, {3, 4}, {5, 6}, {-1, -1}, {-1, -1}, {-1, -1}, {-1, -1}}, host_n);
}

std::vector<int> labels_of(const PlaneGraph& g, const std::vector<int>& nodes) {
  std::vector<int> out;
  for (int v : nodes) out.push_back(static_cast<int>(g.labels[v]));
  std::sort(out.begin(), out.end());
  return out;
}

TEST(EllPolicyTest, Values) {
  EXPECT_EQ(EllPolicy::scaled().ell(4096), 144);
  EXPECT_EQ(EllPolicy::scaled().ell(2), 8);
  EXPECT_EQ(EllPolicy::fixed(20).ell(1000000), 20);
  // The literal rule swallows any desk-scale graph into one leaf.
  EXPECT_GE(EllPolicy::paper().ell(1000000), 1000000);
  EXPECT_THROW(EllPolicy::fixed(1), GirthError);
  EXPECT_GE(EllPolicy::scaled().special_threshold(4096), 4);
}

TEST(Triangulate, TriangleIdentity) {
  PlaneGraph tri = parse_graph("p planar 3 3\ne 1 2 1\ne 2 3 1\ne 1 3 1\n");
  auto t = dissection::triangulate_low_diameter(tri);
  EXPECT_EQ(t.delta.m(), 3);
  EXPECT_LE(tree_diameter(t), 2);
}

TEST(Triangulate, Fig5aShape) {
  PlaneGraph g = gen::figure_fixture(gen::Figure::Fig5a);
  int r = outerplane_radius(g);
  auto t = dissection::triangulate_low_diameter(g);
  EXPECT_EQ(t.delta.n, g.n);
  EXPECT_TRUE(all_faces_triangular(t.delta));
  EXPECT_LE(tree_diameter(t), 4 * r + 2);
}

TEST(Triangulate, GridDiameterBound) {
  for (int k : {4, 7, 10, 13}) {
    PlaneGraph g = gen::grid(k, k);
    auto t = dissection::triangulate_low_diameter(g);
    EXPECT_TRUE(all_faces_triangular(t.delta));
    EXPECT_LE(tree_diameter(t), 4 * ((k + 1) / 2) + 2) << "k=" << k;
  }
}

TEST(Triangulate, RandomPiecesStayValidAndTriangular) {
  for (std::uint64_t seed = 1; seed <= 30; ++seed) {
    PlaneGraph g = gen::random_planar(40, 0.05 + 0.03 * (seed % 25), seed);
    Components c = connected_components(g);
    std::vector<std::vector<int>> comps(c.count);
    for (int v = 0; v < g.n; ++v) comps[c.comp_of[v]].push_back(v);
    for (auto& nodes : comps) {
      if (nodes.size() < 3) continue;
      Induced piece = induced_subgraph(g, nodes);
      auto t = dissection::triangulate_low_diameter(piece.graph);
      EXPECT_TRUE(all_faces_triangular(t.delta)) << "seed " << seed;
      EXPECT_TRUE(validate(t.delta).ok) << "seed " << seed;
    }
  }
}

TEST(Decomposition, K4TwoLevels) {
  PlaneGraph k4 = gen::wheel(3);
  DissectionTree t = dissection::decomposition_tree(k4, 2);
  EXPECT_EQ(t.v.size(), 3u);
  EXPECT_EQ(t.v[t.root].set.size(), 3u);  // one fundamental triangle
}

TEST(Decomposition, PropertiesOnRandom) {
  for (std::uint64_t seed = 1; seed <= 15; ++seed) {
    PlaneGraph g = gen::random_planar(120, 0.5, seed);
    DissectionTree t = dissection::decomposition_tree(g, 12);
    // vertices partition V(g)
    std::vector<int> cnt(g.n, 0);
    for (const auto& vx : t.v)
      for (int u : vx.set) ++cnt[u];
    for (int u = 0; u < g.n; ++u) EXPECT_EQ(cnt[u], 1);
    // leaves small; dissected children
    for (std::size_t s = 0; s < t.v.size(); ++s) {
      if (t.is_leaf(static_cast<int>(s))) continue;
      auto bl = t.below_set(t.v[s].left), br = t.below_set(t.v[s].right);
      std::vector<char> left(g.n, 0), right(g.n, 0);
      for (int x : bl) left[x] = 1;
      for (int x : br) right[x] = 1;
      for (const auto& e : g.edges)
        EXPECT_FALSE((left[e.u] && right[e.v]) || (right[e.u] && left[e.v]))
            << "seed " << seed;
    }
  }
}

TEST(Decomposition, BalanceWithinLiptonTarjan) {
  PlaneGraph g = gen::random_planar(500, 1.0, 7);
  DissectionTree t = dissection::decomposition_tree(g, 20);
  for (std::size_t s = 0; s < t.v.size(); ++s) {
    if (t.is_leaf(static_cast<int>(s)) || t.v[s].set.empty()) continue;
    auto bl = t.below_set(t.v[s].left), br = t.below_set(t.v[s].right);
    std::size_t total = bl.size() + br.size() + t.v[s].set.size();
    std::size_t big = std::max(bl.size(), br.size());
    EXPECT_LE(big, (2 * total) / 3 + t.v[s].set.size());
  }
}

TEST(Descend, Fig4bToFig4c) {
  PlaneGraph g = gen::figure_fixture(gen::Figure::Fig4a);
  DissectionTree t = make_tree(
      {{2, 7, 10}, {5}, {8}, {1, 6}, {9}, {3, 4}, {11, 12}},
      {{1, 2}, {3, 4}, {5, 6}, {-1, -1}, {-1, -1}, {-1, -1}, {-1, -1}}, g.n);
  dissection::descend(t, g);
  EXPECT_EQ(labels_of(g, t.v[0].set), (std::vector<int>{2, 7, 10}));
  EXPECT_EQ(labels_of(g, t.v[1].set), (std::vector<int>{5, 10}));
  EXPECT_EQ(labels_of(g, t.v[2].set), (std::vector<int>{7, 8}));
  EXPECT_EQ(labels_of(g, t.v[3].set), (std::vector<int>{1, 2, 5, 6, 7, 10}));
  EXPECT_EQ(labels_of(g, t.v[4].set), (std::vector<int>{5, 9, 10}));
  EXPECT_EQ(labels_of(g, t.v[5].set), (std::vector<int>{2, 3, 4, 7, 8}));
  EXPECT_EQ(labels_of(g, t.v[6].set), (std::vector<int>{7, 8, 10, 11, 12}));
}

TEST(Descend, EmptySeparatorsLeaveLeavesAlone) {
  PlaneGraph g = parse_graph("p planar 6 6\ne 1 2 1\ne 2 3 1\ne 1 3 1\ne 4 5 1\ne 5 6 1\ne 4 6 1\n");
  DissectionTree t = make_tree({{}, {1, 2, 3}, {4, 5, 6}},
                               {{1, 2}, {-1, -1}, {-1, -1}}, g.n);
  dissection::descend(t, g);
  EXPECT_TRUE(t.v[0].set.empty());
  EXPECT_EQ(t.v[1].set.size(), 3u);
  EXPECT_EQ(t.v[2].set.size(), 3u);
}

TEST(Borders, Fig3Values) {
  PlaneGraph g = gen::figure_fixture(gen::Figure::Fig3a);
  DissectionTree t = fig3_tree();
  dissection::compute_borders(t, g.n);
  EXPECT_EQ(labels_of(g, t.v[0].border), (std::vector<int>{2, 7, 10}));
  EXPECT_EQ(labels_of(g, t.v[1].border), (std::vector<int>{2, 5, 7, 10}));
  EXPECT_EQ(labels_of(g, t.v[2].border), (std::vector<int>{2, 7, 8, 10}));
  EXPECT_EQ(labels_of(g, t.v[5].border), (std::vector<int>{2, 7, 8}));
  EXPECT_EQ(labels_of(g, t.v[6].border), (std::vector<int>{7, 8, 10}));

  auto rep = dissection::validate_dissection(t, g, outerplane_radius(g), EllPolicy::fixed(8));
  EXPECT_TRUE(rep.ok) << (rep.violations.empty() ? "" : rep.violations[0]);
}

TEST(Borders, ConstructedNegativeIsCaught) {
  PlaneGraph g = gen::figure_fixture(gen::Figure::Fig3a);
  DissectionTree t = fig3_tree();
  // drop a copied node from a below-set: remove label 7 from leaf {2,3,4,7,8}
  auto& s = t.v[5].set;
  s.erase(std::find(s.begin(), s.end(), 6));
  t.index(g.n);
  dissection::compute_borders(t, g.n);
  auto rep = dissection::validate_dissection(t, g, outerplane_radius(g), EllPolicy::fixed(8));
  EXPECT_FALSE(rep.ok);
}

TEST(Build, SingleLeafWhenSmall) {
  PlaneGraph g = gen::cycle(6);
  DissectionTree t = dissection::build_dissection(g, EllPolicy::fixed(10));
  EXPECT_EQ(t.v.size(), 1u);
  EXPECT_EQ(t.v[t.root].set.size(), 6u);
}

TEST(Build, Fig3aValidates) {
  PlaneGraph g = gen::figure_fixture(gen::Figure::Fig3a);
  DissectionTree t = dissection::build_dissection(g, EllPolicy::fixed(5));
  auto rep = dissection::validate_dissection(t, g, outerplane_radius(g), EllPolicy::fixed(5));
  EXPECT_TRUE(rep.ok) << (rep.violations.empty() ? "" : rep.violations[0]);
}

TEST(Build, GridLeafCount) {
  PlaneGraph g = gen::grid(64, 64);
  DissectionTree t = dissection::build_dissection(g, EllPolicy::fixed(64));
  auto rep = dissection::validate_dissection(t, g, outerplane_radius(g), EllPolicy::fixed(64));
  EXPECT_TRUE(rep.ok) << (rep.violations.empty() ? "" : rep.violations[0]);
  EXPECT_GE(rep.leaves, 4096 / 64 / 2);
  EXPECT_LE(rep.leaves, 4096 / 64 * 8);
}

TEST(Build, CorpusValidates) {
  int built = 0;
  for (std::uint64_t seed = 1; seed <= 60; ++seed) {
    PlaneGraph raw = gen::random_planar(30 + static_cast<int>(seed * 3), 0.6, seed);
    // Degree-bounded hosts, as the pipeline provides.
    auto rd = preprocess::reduce_all_degrees(raw);
    const PlaneGraph& g = rd.graph;
    Components c = connected_components(g);
    std::vector<std::vector<int>> comps(c.count);
    for (int v = 0; v < g.n; ++v) comps[c.comp_of[v]].push_back(v);
    for (auto& nodes : comps) {
      if (nodes.size() < 3) continue;
      Induced piece = induced_subgraph(g, nodes);
      EllPolicy pol = EllPolicy::scaled();
      DissectionTree t = dissection::build_dissection(piece.graph, pol);
      auto rep = dissection::validate_dissection(t, piece.graph,
                                                 outerplane_radius(piece.graph), pol);
      EXPECT_TRUE(rep.ok) << "seed " << seed << ": "
                          << (rep.violations.empty() ? "" : rep.violations[0]);
      ++built;
    }
  }
  EXPECT_GT(built, 50);
}

TEST(Build, MembershipsStaySmall) {
  PlaneGraph raw = gen::random_planar(200, 0.9, 11);
  auto rd = preprocess::reduce_all_degrees(raw);
  DissectionTree t = dissection::build_dissection(rd.graph, EllPolicy::fixed(16));
  auto rep = dissection::validate_dissection(t, rd.graph, outerplane_radius(rd.graph),
                                             EllPolicy::fixed(16));
  EXPECT_TRUE(rep.ok);
  EXPECT_LE(rep.max_memberships, 32);
}

}  // namespace
}  // namespace girth
