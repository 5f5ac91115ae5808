#pragma once

#include <map>
#include <memory>
#include <unordered_map>
#include <vector>

#include "girth/dissection.hpp"
#include "girth/plane_graph.hpp"
#include "girth/shortest_paths.hpp"

namespace girth {
namespace border_dp {

// Recompute-based point-to-point distance structure over one graph: single
// source trees are memoized per source and dropped whenever a weight changes.
class DistanceOracle {
 public:
  static constexpr Weight kInfiniteWeight = kUnreached / 2;

  explicit DistanceOracle(const PlaneGraph& h) : g_(h), adj_(h) {}

  DistVal distance(int u, int v) {
    require(u >= 0 && u < g_.n && v >= 0 && v < g_.n, ErrorCode::UnknownNode, "oracle");
    return to_distval(tree(u).dist[v]);
  }

  void set_weight(int e, Weight w) {
    require(e >= 0 && e < g_.m(), ErrorCode::UnknownEdge, "oracle set_weight");
    for (int i = adj_.head[g_.edges[e].u]; i < adj_.head[g_.edges[e].u + 1]; ++i)
      if (adj_.eid[i] == e) adj_.w[i] = w;
    for (int i = adj_.head[g_.edges[e].v]; i < adj_.head[g_.edges[e].v + 1]; ++i)
      if (adj_.eid[i] == e) adj_.w[i] = w;
    trees_.clear();
    avoid_trees_.clear();
  }

  Weight weight(int e) const { return g_.edges[e].w; }

  const SpTree& tree(int u) {
    auto it = trees_.find(u);
    if (it != trees_.end()) return it->second;
    return trees_.emplace(u, run(u, -1)).first->second;
  }

  // Distances from u with edge e removed; shares the base tree when e is not
  // a tree edge of the base run (removing a non-tree edge changes nothing).
  const SpTree& tree_avoiding(int u, int e) {
    const SpTree& base = tree(u);
    bool on_tree = false;
    for (int x : {g_.edges[e].u, g_.edges[e].v})
      if (base.parent_edge[x] == e) on_tree = true;
    if (!on_tree) return base;
    auto key = std::pair<int, int>{u, e};
    auto it = avoid_trees_.find(key);
    if (it != avoid_trees_.end()) return it->second;
    return avoid_trees_.emplace(key, run(u, e)).first->second;
  }

  const PlaneGraph& graph() const { return g_; }

 private:
  SpTree run(int src, int forbidden) const {
    Adjacency a = adj_;
    for (std::size_t i = 0; i < a.w.size(); ++i)
      if (a.w[i] >= kInfiniteWeight) a.w[i] = kUnreached;  // impassable
    SpTree t = dijkstra(a, src, forbidden);
    for (auto& d : t.dist)
      if (d >= kInfiniteWeight) d = kUnreached;
    return t;
  }

  PlaneGraph g_;
  Adjacency adj_;
  std::map<int, SpTree> trees_;
  std::map<std::pair<int, int>, SpTree> avoid_trees_;
};

inline DistanceOracle oracle_build(const PlaneGraph& h) { return DistanceOracle(h); }
inline DistVal oracle_distance(DistanceOracle& o, int u, int v) { return o.distance(u, v); }
inline void oracle_set_weight(DistanceOracle& o, int e, Weight w) { o.set_weight(e, w); }

using Matrix = std::shared_ptr<std::vector<DistVal>>;

// Border-problem tables for one tree vertex: distances between border nodes
// of G[below(S)], a first edge per ordered pair, and per-avoided-edge
// distance tables. Avoided tables share the base matrix whenever removing
// the edge changes nothing.
struct BorderSolution {
  std::vector<int> border;  // sorted host node ids
  Matrix dist;              // B x B
  std::vector<int> first_edge;  // B x B host edge ids, -1 when none
  std::map<int, Matrix> avoid;  // host edge id -> B x B

  int size() const { return static_cast<int>(border.size()); }
  int index_of(int node) const {
    auto it = std::lower_bound(border.begin(), border.end(), node);
    return it != border.end() && *it == node ? static_cast<int>(it - border.begin()) : -1;
  }
  DistVal d(int u, int v) const {
    int a = index_of(u), b = index_of(v);
    require(a != -1 && b != -1, ErrorCode::UnknownNode, "border lookup");
    return (*dist)[a * size() + b];
  }
  int e(int u, int v) const {
    int a = index_of(u), b = index_of(v);
    require(a != -1 && b != -1, ErrorCode::UnknownNode, "border lookup");
    return first_edge[a * size() + b];
  }
  // d_S(u, v; edge) with the edge incident to u, matching the problem shape.
  DistVal d_avoid(int u, int v, int edge) const {
    int a = index_of(u), b = index_of(v);
    require(a != -1 && b != -1, ErrorCode::UnknownNode, "border lookup");
    auto it = avoid.find(edge);
    const auto& m = it == avoid.end() ? *dist : *it->second;
    return m[a * size() + b];
  }
};

// Edges of G[below(S)] with at least one endpoint in border(S), sorted.
inline std::vector<int> avoided_edge_set(const PlaneGraph& g,
                                         const dissection::DissectionTree& t, int s,
                                         const std::vector<int>& border) {
  std::vector<int> edges;
  for (int u : border)
    for (int e : g.rot[u])
      if (t.node_below(g.other_end(e, u), s)) edges.push_back(e);
  std::sort(edges.begin(), edges.end());
  edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
  return edges;
}

// Leaf border tables, straight from the oracle on G[L].
inline BorderSolution solve_leaf_border(const PlaneGraph& g,
                                        const dissection::DissectionTree& t, int leaf) {
  BorderSolution sol;
  sol.border = t.v[leaf].border;
  int b = sol.size();
  Induced sub = induced_subgraph(g, t.v[leaf].set);
  DistanceOracle oracle(sub.graph);
  std::vector<int> local(b);
  for (int i = 0; i < b; ++i) {
    local[i] = sub.new_node[sol.border[i]];
    require(local[i] != -1, ErrorCode::Internal, "border node outside its leaf");
  }

  sol.dist = std::make_shared<std::vector<DistVal>>(b * b, DistVal::infinity());
  sol.first_edge.assign(b * b, -1);
  for (int i = 0; i < b; ++i) {
    const SpTree& ti = oracle.tree(local[i]);
    for (int j = 0; j < b; ++j) (*sol.dist)[i * b + j] = to_distval(ti.dist[local[j]]);
  }
  for (int i = 0; i < b; ++i) {
    for (int j = 0; j < b; ++j) {
      if (i == j || (*sol.dist)[i * b + j].is_inf()) continue;
      // first edge: a neighbor x of u with d(u,v) = w(u,x) + d(x,v)
      for (int e : sub.graph.rot[local[i]]) {
        int x = sub.graph.other_end(e, local[i]);
        const SpTree& tj = oracle.tree(local[j]);
        if (to_distval(tj.dist[x]) + sub.graph.edges[e].w == (*sol.dist)[i * b + j]) {
          int host = sub.orig_edge[e];
          int& slot = sol.first_edge[i * b + j];
          if (slot == -1 || host < slot) slot = host;
        }
      }
    }
  }
  for (int host_e : avoided_edge_set(g, t, leaf, sol.border)) {
    // host edge -> local edge
    int le = -1;
    for (int e = 0; e < sub.graph.m(); ++e)
      if (sub.orig_edge[e] == host_e) le = e;
    require(le != -1, ErrorCode::Internal, "avoided edge missing from leaf graph");
    Matrix m = sol.dist;
    for (int i = 0; i < b; ++i) {
      const SpTree& av = oracle.tree_avoiding(local[i], le);
      if (&av == &oracle.tree(local[i])) continue;  // row unchanged
      if (m == sol.dist) m = std::make_shared<std::vector<DistVal>>(*sol.dist);
      for (int j = 0; j < b; ++j) (*m)[i * b + j] = to_distval(av.dist[local[j]]);
    }
    sol.avoid[host_e] = m;
  }
  return sol;
}

namespace detail {

struct ChildView {
  const BorderSolution* sol;
  std::vector<int> idx;  // parent border index -> child border index or -1
};

// min over the two children, infinity when a node misses a child region.
inline void base_level(const ChildView& l, const ChildView& r, int b,
                       std::vector<DistVal>& out) {
  out.assign(b * b, DistVal::infinity());
  for (int i = 0; i < b; ++i) {
    out[i * b + i] = DistVal::zero();
    for (int j = 0; j < b; ++j) {
      if (i == j) continue;
      DistVal best = DistVal::infinity();
      if (l.idx[i] != -1 && l.idx[j] != -1)
        best = (*l.sol->dist)[l.idx[i] * l.sol->size() + l.idx[j]];
      if (r.idx[i] != -1 && r.idx[j] != -1)
        best = std::min(best, (*r.sol->dist)[r.idx[i] * r.sol->size() + r.idx[j]]);
      out[i * b + j] = best;
    }
  }
}

inline void base_level_avoiding(const ChildView& l, const ChildView& r, int b, int edge,
                                std::vector<DistVal>& out) {
  auto table = [&](const ChildView& c) -> const std::vector<DistVal>* {
    auto it = c.sol->avoid.find(edge);
    return it == c.sol->avoid.end() ? c.sol->dist.get() : it->second.get();
  };
  const std::vector<DistVal>* tl = table(l);
  const std::vector<DistVal>* tr = table(r);
  out.assign(b * b, DistVal::infinity());
  for (int i = 0; i < b; ++i) {
    out[i * b + i] = DistVal::zero();
    for (int j = 0; j < b; ++j) {
      if (i == j) continue;
      DistVal best = DistVal::infinity();
      if (l.idx[i] != -1 && l.idx[j] != -1) best = (*tl)[l.idx[i] * l.sol->size() + l.idx[j]];
      if (r.idx[i] != -1 && r.idx[j] != -1)
        best = std::min(best, (*tr)[r.idx[i] * r.sol->size() + r.idx[j]]);
      out[i * b + j] = best;
    }
  }
}

// One switch step: d_i(u,v) = min over y in S u {v} minus {u} of
// d_{i-1}(u,y) + d_0(y,v). Returns true when nothing moved.
inline bool switch_step(const std::vector<DistVal>& prev, const std::vector<DistVal>& base,
                        const std::vector<int>& s_idx, int b, std::vector<DistVal>& next) {
  bool stable = true;
  next = prev;
  for (int i = 0; i < b; ++i)
    for (int j = 0; j < b; ++j) {
      if (i == j) continue;
      DistVal best = prev[i * b + j];  // y = v
      for (int y : s_idx) {
        if (y == i) continue;
        DistVal cand = prev[i * b + y] + base[y * b + j];
        if (cand < best) best = cand;
      }
      if (best < next[i * b + j]) {
        next[i * b + j] = best;
        stable = false;
      }
    }
  return stable;
}

}  // namespace detail

struct MergeStages {
  std::vector<std::vector<DistVal>> dist_by_i;  // per switch count
  std::map<int, std::vector<std::vector<DistVal>>> avoid_by_i;
};

// Combine the children's border solutions into the parent's. Distances are
// switch-count limited paths; |S| switches reach every simple path, and the
// iteration stops early at a fixpoint. Stage recordings are for tests.
inline BorderSolution merge_children(const PlaneGraph& g, const dissection::DissectionTree& t,
                                     int s, const BorderSolution& sol_l,
                                     const BorderSolution& sol_r,
                                     MergeStages* stages = nullptr) {
  BorderSolution out;
  out.border = t.v[s].border;
  int b = out.size();
  detail::ChildView l{&sol_l, {}}, r{&sol_r, {}};
  for (int i = 0; i < b; ++i) {
    l.idx.push_back(sol_l.index_of(out.border[i]));
    r.idx.push_back(sol_r.index_of(out.border[i]));
  }
  std::vector<int> s_idx;
  for (int u : t.v[s].set) {
    int i = out.index_of(u);
    require(i != -1, ErrorCode::Internal, "S not inside border(S)");
    s_idx.push_back(i);
    require(sol_l.index_of(u) != -1 && sol_r.index_of(u) != -1, ErrorCode::InclusionViolated,
            "S must lie in both children's borders");
  }
  int switches = static_cast<int>(s_idx.size());

  std::vector<DistVal> base;
  detail::base_level(l, r, b, base);
  std::vector<DistVal> cur = base, next;
  if (stages) stages->dist_by_i = {cur};
  // first edges ride along the same recurrence
  std::vector<int> fe(b * b, -1);
  for (int i = 0; i < b; ++i)
    for (int j = 0; j < b; ++j) {
      if (i == j) continue;
      DistVal dl = l.idx[i] != -1 && l.idx[j] != -1
                       ? (*sol_l.dist)[l.idx[i] * sol_l.size() + l.idx[j]]
                       : DistVal::infinity();
      DistVal dr = r.idx[i] != -1 && r.idx[j] != -1
                       ? (*sol_r.dist)[r.idx[i] * sol_r.size() + r.idx[j]]
                       : DistVal::infinity();
      if (dl.is_inf() && dr.is_inf()) continue;
      fe[i * b + j] = dl <= dr ? sol_l.first_edge[l.idx[i] * sol_l.size() + l.idx[j]]
                               : sol_r.first_edge[r.idx[i] * sol_r.size() + r.idx[j]];
    }
  for (int it = 1; it <= switches; ++it) {
    bool stable = detail::switch_step(cur, base, s_idx, b, next);
    std::vector<int> fe_next = fe;
    for (int i = 0; i < b; ++i)
      for (int j = 0; j < b; ++j) {
        if (i == j) continue;
        DistVal target = next[i * b + j];
        if (target.is_inf()) continue;
        // Smallest host node id achieving the recurrence minimum picks the
        // edge; y = v enters with base[v][v] = 0.
        int y_star = -1;
        auto consider = [&](int y) {
          if (y == i) return;
          if (cur[i * b + y] + base[y * b + j] != target) return;
          if (y_star == -1 || out.border[y] < out.border[y_star]) y_star = y;
        };
        consider(j);
        for (int y : s_idx) consider(y);
        if (y_star != -1) fe_next[i * b + j] = fe[i * b + y_star];
      }
    fe = std::move(fe_next);
    cur = std::move(next);
    if (stages) stages->dist_by_i.push_back(cur);
    if (stable) break;
  }
  out.dist = std::make_shared<std::vector<DistVal>>(cur);
  out.first_edge = std::move(fe);

  for (int e : avoided_edge_set(g, t, s, out.border)) {
    // A child whose region holds e must have solved for it.
    for (auto [child, sol] : {std::pair{t.v[s].left, &sol_l}, {t.v[s].right, &sol_r}})
      if (t.node_below(g.edges[e].u, child) && t.node_below(g.edges[e].v, child))
        require(sol->avoid.count(e) > 0, ErrorCode::Internal,
                "child border solution lacks an avoided-edge table");
    auto table_ptr = [&](const BorderSolution& sol) {
      auto it = sol.avoid.find(e);
      return it == sol.avoid.end() ? sol.dist : it->second;
    };
    if (table_ptr(sol_l) == sol_l.dist && table_ptr(sol_r) == sol_r.dist) {
      out.avoid[e] = out.dist;
      continue;
    }
    std::vector<DistVal> abase;
    detail::base_level_avoiding(l, r, b, e, abase);
    std::vector<DistVal> acur = abase, anext;
    if (stages) stages->avoid_by_i[e] = {acur};
    for (int it = 1; it <= switches; ++it) {
      bool stable = detail::switch_step(acur, abase, s_idx, b, anext);
      acur = std::move(anext);
      if (stages) stages->avoid_by_i[e].push_back(acur);
      if (stable) break;
    }
    if (acur == *out.dist) out.avoid[e] = out.dist;
    else out.avoid[e] = std::make_shared<std::vector<DistVal>>(std::move(acur));
  }
  return out;
}

}  // namespace border_dp
}  // namespace girth
