#pragma once

#include <algorithm>
#include <cstdint>
#include <string>
#include <vector>

#include "girth/dist_val.hpp"
#include "girth/errors.hpp"

namespace girth {

// Weighted undirected simple graph with a rotation system (per-node clockwise
// order of incident edges). A dart is a directed half of an edge:
// dart 2e runs edges[e].u -> edges[e].v, dart 2e+1 the reverse.
struct PlaneGraph {
  struct Edge {
    int u = -1;
    int v = -1;
    Weight w = 1;
  };

  int n = 0;
  std::vector<Edge> edges;
  std::vector<std::vector<int>> rot;  // per node: incident edge ids, cyclic order
  std::vector<std::int64_t> labels;   // external node ids, carried through transforms
  std::vector<int> outer;             // outer-face darts, at most one per component

  int m() const { return static_cast<int>(edges.size()); }
  int degree(int v) const { return static_cast<int>(rot[v].size()); }

  static int dart(int e, int side) { return 2 * e + side; }
  static int dart_edge(int d) { return d >> 1; }
  static int dart_reverse(int d) { return d ^ 1; }
  int dart_tail(int d) const { const Edge& e = edges[d >> 1]; return (d & 1) ? e.v : e.u; }
  int dart_head(int d) const { const Edge& e = edges[d >> 1]; return (d & 1) ? e.u : e.v; }
  int dart_from(int e, int tail) const {
    return edges[e].u == tail ? 2 * e : 2 * e + 1;
  }
  int other_end(int e, int x) const {
    const Edge& ed = edges[e];
    return ed.u == x ? ed.v : ed.u;
  }

  Weight total_weight() const {
    Weight s = 0;
    for (const Edge& e : edges) s += e.w;
    return s;
  }
  Weight max_weight() const {
    Weight s = 0;
    for (const Edge& e : edges) s = std::max(s, e.w);
    return s;
  }
  bool unweighted() const {
    for (const Edge& e : edges)
      if (e.w != 1) return false;
    return true;
  }
};

// For dart d = (a -> b), position of edge(d) in rot[b]. Needed to walk faces.
inline std::vector<int> rotation_positions(const PlaneGraph& g) {
  std::vector<int> pos(2 * g.edges.size(), -1);
  for (int v = 0; v < g.n; ++v) {
    for (int i = 0; i < static_cast<int>(g.rot[v].size()); ++i) {
      int e = g.rot[v][i];
      int entering = g.dart_from(e, g.other_end(e, v));  // dart whose head is v
      pos[entering] = i;
    }
  }
  return pos;
}

struct Faces {
  std::vector<int> face_of;                // dart -> face id
  std::vector<std::vector<int>> darts_of;  // face id -> dart cycle
  int count = 0;
};

// Face successor: after arriving at b via d, leave along the rotation
// successor of d's edge at b. Orbits of this map are the faces.
inline int face_next(const PlaneGraph& g, const std::vector<int>& pos, int d) {
  int b = g.dart_head(d);
  int deg = g.degree(b);
  int idx = pos[d];
  int e2 = g.rot[b][(idx + 1) % deg];
  return g.dart_from(e2, b);
}

inline Faces trace_faces(const PlaneGraph& g) {
  Faces f;
  int nd = 2 * g.m();
  f.face_of.assign(nd, -1);
  std::vector<int> pos = rotation_positions(g);
  for (int d0 = 0; d0 < nd; ++d0) {
    if (f.face_of[d0] != -1) continue;
    int id = f.count++;
    f.darts_of.emplace_back();
    int d = d0;
    do {
      f.face_of[d] = id;
      f.darts_of[id].push_back(d);
      d = face_next(g, pos, d);
    } while (d != d0);
  }
  return f;
}

// Connected components over nodes; isolated nodes form their own components.
struct Components {
  std::vector<int> comp_of;  // node -> component id
  int count = 0;
};

inline Components connected_components(const PlaneGraph& g) {
  Components c;
  c.comp_of.assign(g.n, -1);
  std::vector<int> stack;
  for (int s = 0; s < g.n; ++s) {
    if (c.comp_of[s] != -1) continue;
    int id = c.count++;
    stack.push_back(s);
    c.comp_of[s] = id;
    while (!stack.empty()) {
      int v = stack.back();
      stack.pop_back();
      for (int e : g.rot[v]) {
        int u = g.other_end(e, v);
        if (c.comp_of[u] == -1) {
          c.comp_of[u] = id;
          stack.push_back(u);
        }
      }
    }
  }
  return c;
}

// Outer face per component with edges: most boundary darts, ties by lowest dart.
inline std::vector<int> choose_outer_faces(const PlaneGraph& g) {
  Faces f = trace_faces(g);
  Components c = connected_components(g);
  std::vector<int> best_face(c.count, -1);
  std::vector<int> comp_of_face(f.count, -1);
  for (int id = 0; id < f.count; ++id)
    comp_of_face[id] = c.comp_of[g.dart_tail(f.darts_of[id][0])];
  for (int id = 0; id < f.count; ++id) {
    int comp = comp_of_face[id];
    int cur = best_face[comp];
    if (cur == -1 || f.darts_of[id].size() > f.darts_of[cur].size() ||
        (f.darts_of[id].size() == f.darts_of[cur].size() &&
         f.darts_of[id][0] < f.darts_of[cur][0]))
      best_face[comp] = id;
  }
  std::vector<int> outer;
  for (int comp = 0; comp < c.count; ++comp)
    if (best_face[comp] != -1) outer.push_back(f.darts_of[best_face[comp]][0]);
  std::sort(outer.begin(), outer.end());
  return outer;
}

struct ValidationReport {
  bool ok = true;
  std::vector<std::string> violations;
  int faces = 0;
  int components = 0;

  void flag(const std::string& what) {
    ok = false;
    violations.push_back(what);
  }
};

// Structural contract: simple, nonnegative weights, rotation lists each
// incident edge exactly once, and the rotation embeds in the plane
// (per component n - m + f = 2, counted over traced face orbits).
inline ValidationReport validate(const PlaneGraph& g) {
  ValidationReport r;
  if (static_cast<int>(g.rot.size()) != g.n) r.flag("rotation table size mismatch");
  if (static_cast<int>(g.labels.size()) != g.n) r.flag("label table size mismatch");
  if (!r.ok) return r;

  std::vector<std::vector<int>> seen(g.n);
  for (int e = 0; e < g.m(); ++e) {
    const auto& ed = g.edges[e];
    if (ed.u < 0 || ed.u >= g.n || ed.v < 0 || ed.v >= g.n) {
      r.flag("edge " + std::to_string(e) + " endpoint out of range");
      return r;
    }
    if (ed.u == ed.v) r.flag("self-loop at edge " + std::to_string(e));
    if (ed.w < 0) r.flag("negative weight at edge " + std::to_string(e));
    seen[ed.u].push_back(ed.v);
  }
  for (int v = 0; v < g.n; ++v) std::sort(seen[v].begin(), seen[v].end());
  for (int e = 0; e < g.m(); ++e) {
    const auto& ed = g.edges[e];
    int lo = std::min(ed.u, ed.v), hi = std::max(ed.u, ed.v);
    auto& row = seen[lo];
    if (std::count(row.begin(), row.end(), hi) +
            std::count(seen[hi].begin(), seen[hi].end(), lo) >
        1) {
      r.flag("parallel edge between " + std::to_string(lo) + " and " + std::to_string(hi));
      break;
    }
  }

  std::vector<int> incidences(g.m(), 0);
  for (int v = 0; v < g.n; ++v) {
    for (int e : g.rot[v]) {
      if (e < 0 || e >= g.m()) {
        r.flag("rotation of node " + std::to_string(v) + " names unknown edge");
        return r;
      }
      if (g.edges[e].u != v && g.edges[e].v != v)
        r.flag("rotation of node " + std::to_string(v) + " lists non-incident edge " +
               std::to_string(e));
      ++incidences[e];
    }
  }
  for (int e = 0; e < g.m(); ++e)
    if (incidences[e] != 2) r.flag("edge " + std::to_string(e) + " not listed exactly twice");
  if (!r.ok) return r;

  Faces f = trace_faces(g);
  Components c = connected_components(g);
  r.faces = f.count;
  r.components = c.count;
  int edgeless = 0;
  {
    std::vector<char> has_edge(c.count, 0);
    for (int v = 0; v < g.n; ++v)
      if (!g.rot[v].empty()) has_edge[c.comp_of[v]] = 1;
    for (char h : has_edge)
      if (!h) ++edgeless;
  }
  // Per-component Euler; edgeless components trace no orbit but own one face.
  if (g.n - g.m() + f.count + edgeless != 2 * c.count)
    r.flag("rotation system fails the Euler check: n-m+f = " +
           std::to_string(g.n - g.m() + f.count + edgeless) + ", expected " +
           std::to_string(2 * c.count));

  if (!g.outer.empty()) {
    std::vector<int> comps;
    for (int d : g.outer) {
      if (d < 0 || d >= 2 * g.m()) {
        r.flag("outer dart out of range");
        continue;
      }
      comps.push_back(c.comp_of[g.dart_tail(d)]);
    }
    std::sort(comps.begin(), comps.end());
    if (std::adjacent_find(comps.begin(), comps.end()) != comps.end())
      r.flag("two outer darts in one component");
  }
  return r;
}

inline void require_valid(const PlaneGraph& g, const std::string& who) {
  ValidationReport r = validate(g);
  if (!r.ok) fail(ErrorCode::Internal, who + ": " + r.violations.front());
}

struct Induced {
  PlaneGraph graph;
  std::vector<int> orig_node;  // new node -> node of the source graph
  std::vector<int> orig_edge;  // new edge -> edge of the source graph
  std::vector<int> new_node;   // source node -> new node or -1
};

// G[S]: induced subgraph with rotation inherited by restriction.
inline Induced induced_subgraph(const PlaneGraph& g, std::vector<int> nodes) {
  std::sort(nodes.begin(), nodes.end());
  nodes.erase(std::unique(nodes.begin(), nodes.end()), nodes.end());
  Induced out;
  out.new_node.assign(g.n, -1);
  for (int v : nodes) {
    require(v >= 0 && v < g.n, ErrorCode::UnknownNode,
            "induced_subgraph: node " + std::to_string(v));
    out.new_node[v] = static_cast<int>(out.orig_node.size());
    out.orig_node.push_back(v);
  }
  PlaneGraph& h = out.graph;
  h.n = static_cast<int>(nodes.size());
  h.labels.resize(h.n);
  for (int i = 0; i < h.n; ++i) h.labels[i] = g.labels[out.orig_node[i]];
  std::vector<int> edge_map(g.m(), -1);
  for (int e = 0; e < g.m(); ++e) {
    int u = out.new_node[g.edges[e].u], v = out.new_node[g.edges[e].v];
    if (u == -1 || v == -1) continue;
    edge_map[e] = h.m();
    h.edges.push_back({u, v, g.edges[e].w});
    out.orig_edge.push_back(e);
  }
  h.rot.resize(h.n);
  for (int i = 0; i < h.n; ++i)
    for (int e : g.rot[out.orig_node[i]])
      if (edge_map[e] != -1) h.rot[i].push_back(edge_map[e]);
  h.outer = choose_outer_faces(h);
  return out;
}

inline bool graphs_equal(const PlaneGraph& a, const PlaneGraph& b) {
  if (a.n != b.n || a.m() != b.m()) return false;
  for (int e = 0; e < a.m(); ++e)
    if (a.edges[e].u != b.edges[e].u || a.edges[e].v != b.edges[e].v ||
        a.edges[e].w != b.edges[e].w)
      return false;
  return a.rot == b.rot && a.labels == b.labels && a.outer == b.outer;
}

}  // namespace girth
