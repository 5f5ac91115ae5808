#pragma once

#include <vector>

#include "girth/plane_graph.hpp"

namespace girth {

struct DepthMap {
  std::vector<int> depth;  // per node, >= 1
  int radius = 0;
};

struct PeelData {
  DepthMap dm;
  Faces faces;
  // Level at which a face merges into the outer region = min node depth on
  // its boundary; 0 for the outer faces themselves.
  std::vector<int> face_level;
};

// Iterative peeling of external nodes. A node is external when it lies on the
// outer region; removing level-k nodes merges every face that touched them
// into that region, so level k+1 is exactly the nodes sharing a face with
// level k. Runs as a node/face BFS seeded at the outer faces.
inline PeelData peel_structure(const PlaneGraph& g) {
  PeelData p;
  DepthMap& dm = p.dm;
  dm.depth.assign(g.n, 0);
  if (g.n == 0) return p;
  p.faces = trace_faces(g);
  const Faces& f = p.faces;
  Components comps = connected_components(g);
  std::vector<char> comp_has_outer(comps.count, 0);
  p.face_level.assign(f.count, -1);
  std::vector<int>& face_level = p.face_level;
  std::vector<std::vector<int>> faces_of_node(g.n);
  for (int id = 0; id < f.count; ++id)
    for (int d : f.darts_of[id]) faces_of_node[g.dart_tail(d)].push_back(id);

  std::vector<int> frontier;
  for (int d : g.outer) {
    int id = f.face_of[d];
    if (face_level[id] == -1) {
      face_level[id] = 0;
      frontier.push_back(id);
      comp_has_outer[comps.comp_of[g.dart_tail(d)]] = 1;
    }
  }
  for (int v = 0; v < g.n; ++v)
    if (g.rot[v].empty()) dm.depth[v] = 1;  // isolated node
    else
      require(comp_has_outer[comps.comp_of[v]], ErrorCode::NotEmbedded,
              "outerplane_depths: component without an outer face");

  int level = 0;
  while (!frontier.empty()) {
    ++level;
    std::vector<int> next;
    for (int id : frontier)
      for (int d : f.darts_of[id]) {
        int v = g.dart_tail(d);
        if (dm.depth[v] == 0) {
          dm.depth[v] = level;
          for (int f2 : faces_of_node[v])
            if (face_level[f2] == -1) {
              face_level[f2] = level;
              next.push_back(f2);
            }
        }
      }
    frontier = std::move(next);
  }
  for (int v = 0; v < g.n; ++v) dm.radius = std::max(dm.radius, dm.depth[v]);
  return p;
}

inline DepthMap outerplane_depths(const PlaneGraph& g) { return peel_structure(g).dm; }

inline int outerplane_radius(const PlaneGraph& g) { return outerplane_depths(g).radius; }

}  // namespace girth
