#pragma once

#include <vector>

#include "girth/plane_graph.hpp"

namespace girth {

// Biconnected components as induced plane subgraphs. Every simple cycle lies
// in exactly one block, so girth(g) = min over blocks. Bridges show up as
// two-node one-edge blocks; isolated nodes are dropped.
inline std::vector<Induced> biconnected_components(const PlaneGraph& g) {
  std::vector<int> disc(g.n, -1), low(g.n, 0);
  std::vector<int> edge_stack;
  std::vector<std::vector<int>> block_edges;

  struct Frame {
    int v;
    int parent_edge;
    std::size_t next;
  };
  std::vector<Frame> stack;
  int timer = 0;
  for (int s = 0; s < g.n; ++s) {
    if (disc[s] != -1 || g.rot[s].empty()) continue;
    stack.push_back({s, -1, 0});
    disc[s] = low[s] = timer++;
    while (!stack.empty()) {
      Frame& fr = stack.back();
      int v = fr.v;
      if (fr.next < g.rot[v].size()) {
        int e = g.rot[v][fr.next++];
        if (e == fr.parent_edge) continue;
        int u = g.other_end(e, v);
        if (disc[u] == -1) {
          edge_stack.push_back(e);
          disc[u] = low[u] = timer++;
          stack.push_back({u, e, 0});
        } else if (disc[u] < disc[v]) {
          edge_stack.push_back(e);
          low[v] = std::min(low[v], disc[u]);
        }
      } else {
        int pe = fr.parent_edge;
        stack.pop_back();
        if (!stack.empty()) {
          int p = stack.back().v;
          low[p] = std::min(low[p], low[v]);
          if (low[v] >= disc[p]) {
            std::vector<int> blk;
            while (!edge_stack.empty()) {
              int e = edge_stack.back();
              edge_stack.pop_back();
              blk.push_back(e);
              if (e == pe) break;
            }
            block_edges.push_back(std::move(blk));
          }
        }
      }
    }
  }

  std::vector<Induced> blocks;
  blocks.reserve(block_edges.size());
  for (auto& edges : block_edges) {
    std::vector<int> nodes;
    for (int e : edges) {
      nodes.push_back(g.edges[e].u);
      nodes.push_back(g.edges[e].v);
    }
    blocks.push_back(induced_subgraph(g, nodes));
  }
  return blocks;
}

}  // namespace girth
