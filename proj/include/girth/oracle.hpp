#pragma once

#include <unordered_map>
#include <vector>

#include "girth/plane_graph.hpp"
#include "girth/shortest_paths.hpp"

namespace girth {
namespace oracle {

// girth(G) = min over edges e=(x,y) of w(e) + dist_{G \ e}(x, y).
// Exact for simple graphs with nonnegative weights.
inline DistVal brute_girth(const PlaneGraph& g) {
  Adjacency a(g);
  DistVal best = DistVal::infinity();
  for (int e = 0; e < g.m(); ++e) {
    SpTree t = dijkstra(a, g.edges[e].u, e);
    best = std::min(best, to_distval(t.dist[g.edges[e].v]) + g.edges[e].w);
  }
  return best;
}

// Same identity, returning one optimal cycle as a node list (no closing repeat).
struct CycleResult {
  DistVal girth = DistVal::infinity();
  std::vector<int> cycle;
};

inline CycleResult brute_girth_cycle(const PlaneGraph& g) {
  Adjacency a(g);
  CycleResult r;
  int best_edge = -1;
  for (int e = 0; e < g.m(); ++e) {
    SpTree t = dijkstra(a, g.edges[e].u, e);
    DistVal cand = to_distval(t.dist[g.edges[e].v]) + g.edges[e].w;
    if (cand < r.girth) {
      r.girth = cand;
      best_edge = e;
    }
  }
  if (best_edge >= 0) {
    SpTree t = dijkstra(a, g.edges[best_edge].u, best_edge);
    r.cycle = tree_path(g, t, g.edges[best_edge].u, g.edges[best_edge].v);
  }
  return r;
}

// BFS girth for unweighted graphs: from every start node, the lightest
// closure d(u)+d(v)+1 over scanned edges; the minimum over starts is exact.
inline DistVal brute_girth_bfs(const PlaneGraph& g) {
  require(g.unweighted(), ErrorCode::BadParameter, "brute_girth_bfs needs unit weights");
  Adjacency a(g);
  std::int64_t best = kUnreached;
  std::vector<std::int64_t> dist(g.n);
  std::vector<int> pedge(g.n);
  std::vector<int> queue;
  for (int s = 0; s < g.n; ++s) {
    std::fill(dist.begin(), dist.end(), kUnreached);
    std::fill(pedge.begin(), pedge.end(), -1);
    queue.clear();
    dist[s] = 0;
    queue.push_back(s);
    for (std::size_t qi = 0; qi < queue.size(); ++qi) {
      int v = queue[qi];
      if (2 * dist[v] >= best) break;
      for (int i = a.head[v]; i < a.head[v + 1]; ++i) {
        int u = a.to[i];
        if (dist[u] == kUnreached) {
          dist[u] = dist[v] + 1;
          pedge[u] = a.eid[i];
          queue.push_back(u);
        } else if (a.eid[i] != pedge[v] && a.eid[i] != pedge[u]) {
          best = std::min(best, dist[v] + dist[u] + 1);
        }
      }
    }
  }
  return to_distval(best);
}

inline DistVal dist_without_edge(const PlaneGraph& g, int u, int v, int e) {
  require(u >= 0 && u < g.n && v >= 0 && v < g.n, ErrorCode::UnknownNode, "dist_without_edge");
  require(e >= 0 && e < g.m(), ErrorCode::UnknownEdge, "dist_without_edge");
  Adjacency a(g);
  return to_distval(dijkstra(a, u, e).dist[v]);
}

struct CycleCheck {
  bool simple = false;
  DistVal weight = DistVal::infinity();
};

// Consecutive adjacency, closure, node-simplicity; weight of the cycle.
inline CycleCheck verify_cycle(const PlaneGraph& g, const std::vector<int>& cycle) {
  CycleCheck c;
  int k = static_cast<int>(cycle.size());
  if (k < 3) return c;
  std::unordered_map<std::int64_t, Weight> ew;
  for (int e = 0; e < g.m(); ++e) {
    std::int64_t lo = std::min(g.edges[e].u, g.edges[e].v);
    std::int64_t hi = std::max(g.edges[e].u, g.edges[e].v);
    ew[lo * g.n + hi] = g.edges[e].w;
  }
  std::vector<int> sorted(cycle);
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) return c;
  Weight total = 0;
  for (int i = 0; i < k; ++i) {
    int x = cycle[i], y = cycle[(i + 1) % k];
    if (x < 0 || x >= g.n || y < 0 || y >= g.n) return c;
    auto it = ew.find(static_cast<std::int64_t>(std::min(x, y)) * g.n + std::max(x, y));
    if (it == ew.end()) return c;
    total += it->second;
  }
  c.simple = true;
  c.weight = DistVal(total);
  return c;
}

// Exact min-cycle sweep: for each node v, a Dijkstra ball truncated at half
// the best cycle found so far; closures d(x)+w+d(y) over non-tree meetings.
// upper_bound seeds the truncation; pass infinity when no bound is known.
struct SweepResult {
  DistVal girth = DistVal::infinity();
  std::vector<int> closed_walk;  // first == last when nonempty
};

inline SweepResult sweep_girth(const PlaneGraph& g,
                               DistVal upper_bound = DistVal::infinity()) {
  Adjacency a(g);
  SweepResult r;
  std::int64_t bound = upper_bound.is_inf() ? kUnreached : upper_bound.raw();
  std::int64_t found = kUnreached;
  std::vector<std::int64_t> dist(g.n);
  std::vector<int> pedge(g.n);
  std::vector<char> settled(g.n);
  using Item = std::pair<std::int64_t, int>;
  for (int s = 0; s < g.n; ++s) {
    std::fill(dist.begin(), dist.end(), kUnreached);
    std::fill(pedge.begin(), pedge.end(), -1);
    std::fill(settled.begin(), settled.end(), 0);
    std::priority_queue<Item, std::vector<Item>, std::greater<Item>> pq;
    dist[s] = 0;
    pq.push({0, s});
    while (!pq.empty()) {
      auto [d, v] = pq.top();
      pq.pop();
      if (d != dist[v] || settled[v]) continue;
      settled[v] = 1;
      if (2 * d > std::min(bound, found)) break;
      for (int i = a.head[v]; i < a.head[v + 1]; ++i) {
        int u = a.to[i];
        int e = a.eid[i];
        std::int64_t nd = d + a.w[i];
        if (dist[u] < kUnreached && e != pedge[v] && e != pedge[u]) {
          std::int64_t cand = d + a.w[i] + dist[u];
          if (cand < found) {
            found = cand;
            // Record the closed walk v..s..u plus the meeting edge now,
            // while the parent pointers for this source are live.
            std::vector<int> left, right;
            for (int x = v; x != s; x = g.other_end(pedge[x], x)) left.push_back(x);
            left.push_back(s);
            for (int x = u; x != s; x = g.other_end(pedge[x], x)) right.push_back(x);
            right.push_back(s);
            std::reverse(right.begin(), right.end());
            r.closed_walk = std::move(right);  // s .. u
            r.closed_walk.insert(r.closed_walk.end(), left.begin(), left.end());  // v .. s
          }
        }
        if (nd < dist[u] && !settled[u]) {
          dist[u] = nd;
          pedge[u] = e;
          pq.push({nd, u});
        }
      }
    }
  }
  r.girth = found >= kUnreached ? DistVal::infinity() : DistVal(found);
  return r;
}

// Min-weight node-simple cycle inside a closed walk (first == last).
// Loops are cut at repeated nodes; two-step backtracks over one edge are not
// cycles and are skipped. Returns empty when no simple cycle exists.
inline std::vector<int> min_simple_cycle_in_walk(const PlaneGraph& g,
                                                 const std::vector<int>& walk) {
  std::unordered_map<std::int64_t, Weight> ew;
  for (int e = 0; e < g.m(); ++e) {
    std::int64_t lo = std::min(g.edges[e].u, g.edges[e].v);
    std::int64_t hi = std::max(g.edges[e].u, g.edges[e].v);
    ew[lo * g.n + hi] = g.edges[e].w;
  }
  auto weight_of = [&](const std::vector<int>& cyc) {
    Weight t = 0;
    for (std::size_t i = 0; i < cyc.size(); ++i) {
      int x = cyc[i], y = cyc[(i + 1) % cyc.size()];
      t += ew.at(static_cast<std::int64_t>(std::min(x, y)) * g.n + std::max(x, y));
    }
    return t;
  };
  std::vector<int> best;
  Weight best_w = 0;
  std::vector<int> stack;
  std::vector<int> pos(g.n, -1);
  for (std::size_t i = 0; i < walk.size(); ++i) {
    int v = walk[i];
    if (pos[v] == -1) {
      pos[v] = static_cast<int>(stack.size());
      stack.push_back(v);
      continue;
    }
    std::vector<int> loop(stack.begin() + pos[v], stack.end());
    while (static_cast<int>(stack.size()) > pos[v] + 1) {
      pos[stack.back()] = -1;
      stack.pop_back();
    }
    if (loop.size() >= 3) {
      Weight w = weight_of(loop);
      if (best.empty() || w < best_w) {
        best = loop;
        best_w = w;
      }
    }
  }
  return best;
}

}  // namespace oracle
}  // namespace girth
