#pragma once

#include <cstdint>
#include <queue>
#include <vector>

#include "girth/plane_graph.hpp"

namespace girth {

constexpr std::int64_t kUnreached = std::numeric_limits<std::int64_t>::max() / 4;

// CSR adjacency over a PlaneGraph; weights copied so callers may override.
struct Adjacency {
  std::vector<int> head;
  std::vector<int> to;
  std::vector<int> eid;
  std::vector<Weight> w;
  int n = 0;

  explicit Adjacency(const PlaneGraph& g) : n(g.n) {
    head.assign(n + 1, 0);
    for (int v = 0; v < n; ++v) head[v + 1] = head[v] + g.degree(v);
    to.resize(head[n]);
    eid.resize(head[n]);
    w.resize(head[n]);
    std::vector<int> fill(head.begin(), head.end() - 1);
    for (int v = 0; v < n; ++v)
      for (int e : g.rot[v]) {
        int i = fill[v]++;
        to[i] = g.other_end(e, v);
        eid[i] = e;
        w[i] = g.edges[e].w;
      }
  }
};

struct SpTree {
  std::vector<std::int64_t> dist;
  std::vector<int> parent_edge;  // -1 at source and unreached nodes
};

// Dijkstra; zero weights allowed, no negative weights exist here.
// forbidden < 0 means no edge removed. cutoff < 0 means no truncation;
// otherwise nodes are not expanded once dist exceeds cutoff.
inline SpTree dijkstra(const Adjacency& a, int src, int forbidden = -1,
                       std::int64_t cutoff = -1) {
  SpTree t;
  t.dist.assign(a.n, kUnreached);
  t.parent_edge.assign(a.n, -1);
  using Item = std::pair<std::int64_t, int>;
  std::priority_queue<Item, std::vector<Item>, std::greater<Item>> pq;
  t.dist[src] = 0;
  pq.push({0, src});
  while (!pq.empty()) {
    auto [d, v] = pq.top();
    pq.pop();
    if (d != t.dist[v]) continue;
    if (cutoff >= 0 && d > cutoff) continue;
    for (int i = a.head[v]; i < a.head[v + 1]; ++i) {
      if (a.eid[i] == forbidden) continue;
      std::int64_t nd = d + a.w[i];
      int u = a.to[i];
      if (nd < t.dist[u]) {
        t.dist[u] = nd;
        t.parent_edge[u] = a.eid[i];
        pq.push({nd, u});
      }
    }
  }
  return t;
}

inline DistVal to_distval(std::int64_t d) {
  return d >= kUnreached ? DistVal::infinity() : DistVal(d);
}

// Path src..dst as node ids following parent edges; empty if unreached.
inline std::vector<int> tree_path(const PlaneGraph& g, const SpTree& t, int src, int dst) {
  if (t.dist[dst] >= kUnreached) return {};
  std::vector<int> rev;
  int v = dst;
  rev.push_back(v);
  while (v != src) {
    int e = t.parent_edge[v];
    v = g.other_end(e, v);
    rev.push_back(v);
  }
  std::reverse(rev.begin(), rev.end());
  return rev;
}

}  // namespace girth
