#pragma once

#include <array>
#include <random>
#include <string>
#include <vector>

#include "girth/embed.hpp"
#include "girth/io.hpp"
#include "girth/plane_graph.hpp"

namespace girth {
namespace gen {

namespace detail {
// mt19937_64 + modulo keeps generated graphs byte-stable across platforms
// (std::uniform_int_distribution is not portable).
inline std::uint64_t below(std::mt19937_64& rng, std::uint64_t k) { return rng() % k; }
}  // namespace detail

inline PlaneGraph cycle(int n) {
  require(n >= 3, ErrorCode::BadParameter, "cycle needs n >= 3");
  PlaneGraph g;
  g.n = n;
  for (int i = 0; i < n; ++i) g.edges.push_back({i, (i + 1) % n, 1});
  g.rot.assign(n, {});
  for (int i = 0; i < n; ++i) g.rot[i] = {(i + n - 1) % n, i};
  g.labels.resize(n);
  for (int i = 0; i < n; ++i) g.labels[i] = i + 1;
  g.outer = choose_outer_faces(g);
  require_valid(g, "cycle");
  return g;
}

inline PlaneGraph grid(int rows, int cols) {
  require(rows >= 1 && cols >= 1 && rows * static_cast<std::int64_t>(cols) >= 2,
          ErrorCode::BadParameter, "grid needs at least two nodes");
  PlaneGraph g;
  g.n = rows * cols;
  auto id = [cols](int i, int j) { return i * cols + j; };
  std::vector<std::vector<int>> right(rows, std::vector<int>(cols, -1));
  std::vector<std::vector<int>> down(rows, std::vector<int>(cols, -1));
  for (int i = 0; i < rows; ++i)
    for (int j = 0; j + 1 < cols; ++j) {
      right[i][j] = g.m();
      g.edges.push_back({id(i, j), id(i, j + 1), 1});
    }
  for (int i = 0; i + 1 < rows; ++i)
    for (int j = 0; j < cols; ++j) {
      down[i][j] = g.m();
      g.edges.push_back({id(i, j), id(i + 1, j), 1});
    }
  g.rot.assign(g.n, {});
  for (int i = 0; i < rows; ++i)
    for (int j = 0; j < cols; ++j) {
      auto& r = g.rot[id(i, j)];
      if (i > 0) r.push_back(down[i - 1][j]);          // up
      if (j + 1 < cols) r.push_back(right[i][j]);      // right
      if (i + 1 < rows) r.push_back(down[i][j]);       // down
      if (j > 0) r.push_back(right[i][j - 1]);         // left
    }
  g.labels.resize(g.n);
  for (int v = 0; v < g.n; ++v) g.labels[v] = v + 1;
  g.outer = choose_outer_faces(g);
  require_valid(g, "grid");
  return g;
}

inline PlaneGraph wheel(int rim) {
  require(rim >= 3, ErrorCode::BadParameter, "wheel needs rim >= 3");
  PlaneGraph g;
  g.n = rim + 1;
  for (int i = 1; i <= rim; ++i) g.edges.push_back({0, i, 1});
  for (int i = 1; i <= rim; ++i) g.edges.push_back({i, i % rim + 1, 1});
  g.labels.resize(g.n);
  for (int v = 0; v < g.n; ++v) g.labels[v] = v + 1;
  return embed(g);
}

// Random maximal planar graph by repeated face splitting, then a random
// edge subset is deleted. extra in [0,1] scales edge count between a
// spanning-tree-sized subset (0) and the full triangulation (1).
inline PlaneGraph random_planar(int n, double extra, std::uint64_t seed) {
  require(n >= 3, ErrorCode::BadParameter, "random_planar needs n >= 3");
  require(extra >= 0.0 && extra <= 1.0, ErrorCode::BadParameter, "extra in [0,1]");
  std::mt19937_64 rng(seed);
  std::vector<std::array<int, 3>> faces{{0, 1, 2}, {0, 2, 1}};
  PlaneGraph g;
  g.n = n;
  g.edges = {{0, 1, 1}, {1, 2, 1}, {0, 2, 1}};
  for (int x = 3; x < n; ++x) {
    std::size_t at = detail::below(rng, faces.size());
    auto [a, b, c] = faces[at];
    faces.erase(faces.begin() + at);
    g.edges.push_back({a, x, 1});
    g.edges.push_back({b, x, 1});
    g.edges.push_back({c, x, 1});
    faces.push_back({a, b, x});
    faces.push_back({b, c, x});
    faces.push_back({c, a, x});
  }
  int maximal = g.m();
  int keep = n - 1 + static_cast<int>(extra * (maximal - (n - 1)) + 0.5);
  keep = std::min(keep, maximal);
  std::vector<int> order(maximal);
  for (int i = 0; i < maximal; ++i) order[i] = i;
  for (int i = maximal - 1; i > 0; --i)
    std::swap(order[i], order[detail::below(rng, i + 1)]);
  std::vector<char> keep_edge(maximal, 0);
  for (int i = 0; i < keep; ++i) keep_edge[order[i]] = 1;
  std::vector<PlaneGraph::Edge> kept;
  for (int e = 0; e < maximal; ++e)
    if (keep_edge[e]) kept.push_back(g.edges[e]);
  g.edges = std::move(kept);
  g.labels.resize(n);
  for (int v = 0; v < n; ++v) g.labels[v] = v + 1;
  return embed(g);
}

inline PlaneGraph random_weights(const PlaneGraph& g, Weight wmax, std::uint64_t seed,
                                 Weight wmin = 1) {
  require(wmax >= wmin && wmin >= 0, ErrorCode::BadParameter, "bad weight range");
  std::mt19937_64 rng(seed);
  PlaneGraph out = g;
  for (auto& e : out.edges)
    e.w = wmin + static_cast<Weight>(detail::below(rng, wmax - wmin + 1));
  return out;
}

enum class Figure { Fig1a, Fig1b, Fig1c, Fig3a, Fig4a, Fig5a, Fig7a };

// Hand-checked transcriptions; every stated quantity about them is pinned in
// tests (weights, girth, density, radius, distance tables).
inline PlaneGraph figure_fixture(Figure which) {
  switch (which) {
    case Figure::Fig1a: {
      // Outer 5-ring 1..5, node 6 inside adjacent to 5, 2, 3.
      return parse_graph(
          "p planar 6 8\n"
          "e 1 2 2\ne 2 3 2\ne 3 4 2\ne 4 5 1\ne 5 1 1\n"
          "e 5 6 0\ne 6 2 1\ne 6 3 2\n",
          GraphFormat::Edgelist);
    }
    case Figure::Fig1b: {
      // Unweighted: ring 1-6-2-7-3-8-4-5 with chords 2-5 and 3-9-5.
      return parse_graph(
          "p planar 9 11\n"
          "e 1 6 1\ne 6 2 1\ne 2 7 1\ne 7 3 1\ne 3 8 1\ne 8 4 1\n"
          "e 4 5 1\ne 5 1 1\ne 2 5 1\ne 3 9 1\ne 9 5 1\n",
          GraphFormat::Edgelist);
    }
    case Figure::Fig1c: {
      // Pentagon 1..5 with chords 2-5 and 3-5.
      return parse_graph(
          "p planar 5 7\n"
          "e 1 2 2\ne 2 3 2\ne 3 4 2\ne 4 5 1\ne 5 1 1\ne 2 5 1\ne 3 5 2\n",
          GraphFormat::Edgelist);
    }
    case Figure::Fig3a: {
      // 3x4 weighted grid; columns (4,3,2,1), (8,7,6,5), (12,11,10,9).
      return parse_graph(
          "p planar 12 17\n"
          "e 4 3 2\ne 3 2 1\ne 2 1 2\n"
          "e 8 7 2\ne 7 6 1\ne 6 5 2\n"
          "e 12 11 2\ne 11 10 1\ne 10 9 2\n"
          "e 4 8 2\ne 8 12 2\n"
          "e 3 7 1\ne 7 11 10\n"
          "e 2 6 10\ne 6 10 1\n"
          "e 1 5 2\ne 5 9 2\n",
          GraphFormat::Edgelist);
    }
    case Figure::Fig4a: {
      PlaneGraph g = figure_fixture(Figure::Fig3a);
      for (auto& e : g.edges) e.w = 1;
      return g;
    }
    case Figure::Fig5a: {
      // Outer diamond 1..4, inner pentagon 5..9, four spokes; the stated
      // depth profile (four nodes depth 1, five depth 2) is what matters.
      PlaneGraph g = parse_graph(
          "p planar 9 13\n"
          "e 1 2 1\ne 2 3 1\ne 3 4 1\ne 4 1 1\n"
          "e 5 6 1\ne 6 7 1\ne 7 8 1\ne 8 9 1\ne 9 5 1\n"
          "e 1 5 1\ne 2 6 1\ne 3 7 1\ne 4 8 1\n",
          GraphFormat::Edgelist);
      // Force the diamond to be the outer face.
      Faces f = trace_faces(g);
      for (int id = 0; id < f.count; ++id) {
        if (f.darts_of[id].size() != 4) continue;
        bool diamond = true;
        for (int d : f.darts_of[id])
          if (g.dart_tail(d) > 3) diamond = false;
        if (diamond) {
          g.outer = {f.darts_of[id][0]};
          break;
        }
      }
      require_valid(g, "fig5a");
      return g;
    }
    case Figure::Fig7a: {
      PlaneGraph fig3a = figure_fixture(Figure::Fig3a);
      return induced_subgraph(fig3a, {1, 2, 3, 6, 7}).graph;  // labels 2,3,4,7,8
    }
  }
  fail(ErrorCode::BadParameter, "unknown figure id");
}

inline Figure figure_by_name(const std::string& name) {
  if (name == "fig1a") return Figure::Fig1a;
  if (name == "fig1b") return Figure::Fig1b;
  if (name == "fig1c") return Figure::Fig1c;
  if (name == "fig3a") return Figure::Fig3a;
  if (name == "fig4a") return Figure::Fig4a;
  if (name == "fig5a") return Figure::Fig5a;
  if (name == "fig7a") return Figure::Fig7a;
  fail(ErrorCode::BadParameter, "unknown figure '" + name + "'");
}

}  // namespace gen
}  // namespace girth
