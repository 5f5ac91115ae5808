#pragma once

#include <map>

#include "girth/border_dp.hpp"
#include "girth/leaf_lookup.hpp"
#include "girth/preprocess.hpp"

namespace girth {
namespace border_dp {

namespace detail {

inline BorderSolution remap_solution(const BorderSolution& sol, const std::vector<int>& node_of,
                                     const std::vector<int>& edge_of) {
  BorderSolution out;
  out.border.reserve(sol.border.size());
  for (int u : sol.border) out.border.push_back(node_of[u]);
  // induced subgraphs keep node order, so the mapping is monotone
  for (std::size_t i = 1; i < out.border.size(); ++i)
    require(out.border[i - 1] < out.border[i], ErrorCode::Internal,
            "border remap must stay sorted");
  out.dist = sol.dist;
  out.first_edge.reserve(sol.first_edge.size());
  for (int e : sol.first_edge) out.first_edge.push_back(e == -1 ? -1 : edge_of[e]);
  for (const auto& [e, m] : sol.avoid) out.avoid[edge_of[e]] = m == sol.dist ? out.dist : m;
  return out;
}

inline BorderSolution restrict_solution(const BorderSolution& sol,
                                        const std::vector<int>& keep) {
  BorderSolution out;
  out.border = keep;
  int b = out.size(), old = sol.size();
  std::vector<int> idx(b);
  for (int i = 0; i < b; ++i) {
    idx[i] = sol.index_of(keep[i]);
    require(idx[i] != -1, ErrorCode::Internal, "restriction outside the solved border");
  }
  auto slice = [&](const std::vector<DistVal>& m) {
    auto res = std::make_shared<std::vector<DistVal>>(b * b);
    for (int i = 0; i < b; ++i)
      for (int j = 0; j < b; ++j) (*res)[i * b + j] = m[idx[i] * old + idx[j]];
    return res;
  };
  out.dist = slice(*sol.dist);
  out.first_edge.resize(b * b);
  for (int i = 0; i < b; ++i)
    for (int j = 0; j < b; ++j)
      out.first_edge[i * b + j] = sol.first_edge[idx[i] * old + idx[j]];
  for (const auto& [e, m] : sol.avoid)
    out.avoid[e] = m == sol.dist ? out.dist : slice(*m);
  return out;
}

}  // namespace detail

// Border problem for one special leaf: dissect G[L] with the leaf's border
// folded into every vertex, answer the innermost leaves from the lookup
// table, and merge back up to the root.
inline BorderSolution solve_special_leaf(const PlaneGraph& g,
                                         const dissection::DissectionTree& t, int leaf,
                                         const dissection::EllPolicy& policy,
                                         leaf_lookup::LookupTable& lt) {
  Induced sub = induced_subgraph(g, t.v[leaf].set);
  std::vector<int> border_local;
  for (int u : t.v[leaf].border) {
    int l = sub.new_node[u];
    require(l != -1, ErrorCode::Internal, "leaf border outside the leaf");
    border_local.push_back(l);
  }

  dissection::DissectionTree inner = dissection::build_dissection(sub.graph, policy);
  bool progress = inner.v.size() > 1;
  if (!progress) return solve_leaf_border(g, t, leaf);  // nothing to recurse into
  for (auto& vx : inner.v) {
    vx.set.insert(vx.set.end(), border_local.begin(), border_local.end());
    std::sort(vx.set.begin(), vx.set.end());
    vx.set.erase(std::unique(vx.set.begin(), vx.set.end()), vx.set.end());
  }
  dissection::compute_borders(inner, sub.graph.n);

  std::map<int, BorderSolution> sols;
  std::vector<std::pair<int, bool>> stack{{inner.root, false}};
  while (!stack.empty()) {
    auto [s, post] = stack.back();
    stack.pop_back();
    if (!post) {
      stack.push_back({s, true});
      if (!inner.is_leaf(s)) {
        stack.push_back({inner.v[s].left, false});
        stack.push_back({inner.v[s].right, false});
      }
      continue;
    }
    if (inner.is_leaf(s)) {
      Induced h = induced_subgraph(sub.graph, inner.v[s].set);
      bool fits = progress && h.graph.n <= lt.k() && h.graph.max_weight() <= lt.w();
      if (fits) {
        std::vector<int> b_local;
        for (int u : inner.v[s].border) b_local.push_back(h.new_node[u]);
        BorderSolution hs = leaf_lookup::lookup_border(lt, h.graph, b_local);
        sols[s] = detail::remap_solution(hs, h.orig_node, h.orig_edge);
      } else {
        sols[s] = solve_leaf_border(sub.graph, inner, s);
      }
    } else {
      sols[s] = merge_children(sub.graph, inner, s, sols.at(inner.v[s].left),
                               sols.at(inner.v[s].right));
      sols.erase(inner.v[s].left);
      sols.erase(inner.v[s].right);
    }
  }
  BorderSolution at_root = detail::restrict_solution(sols.at(inner.root), border_local);
  return detail::remap_solution(at_root, sub.orig_node, sub.orig_edge);
}

inline bool is_special_leaf(const dissection::DissectionTree& t, int leaf, int r,
                            const dissection::EllPolicy& policy, int host_n) {
  return static_cast<int>(t.v[leaf].border.size()) + r <=
         policy.special_threshold(std::max(1, host_n));
}

// Border problems for every vertex of the tree, bottom-up. keep_all retains
// every vertex's tables (tests want them); otherwise only nonleaf ones stay.
inline std::map<int, BorderSolution> solve_all_borders(const PlaneGraph& g,
                                                       const dissection::DissectionTree& t,
                                                       int r,
                                                       const dissection::EllPolicy& policy,
                                                       leaf_lookup::LookupTable& lt,
                                                       bool keep_all = true) {
  std::map<int, BorderSolution> done;
  std::map<int, BorderSolution> live;
  std::vector<std::pair<int, bool>> stack{{t.root, false}};
  while (!stack.empty()) {
    auto [s, post] = stack.back();
    stack.pop_back();
    if (!post) {
      stack.push_back({s, true});
      if (!t.is_leaf(s)) {
        stack.push_back({t.v[s].left, false});
        stack.push_back({t.v[s].right, false});
      }
      continue;
    }
    BorderSolution sol;
    if (t.is_leaf(s)) {
      sol = is_special_leaf(t, s, r, policy, g.n) ? solve_special_leaf(g, t, s, policy, lt)
                                                  : solve_leaf_border(g, t, s);
    } else {
      sol = merge_children(g, t, s, live.at(t.v[s].left), live.at(t.v[s].right));
      if (keep_all) {
        done[t.v[s].left] = std::move(live.at(t.v[s].left));
        done[t.v[s].right] = std::move(live.at(t.v[s].right));
      }
      live.erase(t.v[s].left);
      live.erase(t.v[s].right);
    }
    live[s] = std::move(sol);
  }
  if (keep_all) done[t.root] = std::move(live.at(t.root));
  else done = std::move(live);
  return done;
}

// Spec surface: tables for the nonleaf vertices (plus the rest, harmless).
inline std::map<int, BorderSolution> solve_nonleaf_problem(const PlaneGraph& g,
                                                           const dissection::DissectionTree& t,
                                                           int r,
                                                           const dissection::EllPolicy& policy,
                                                           leaf_lookup::LookupTable& lt) {
  return solve_all_borders(g, t, r, policy, lt, true);
}

inline std::map<int, BorderSolution> solve_special_leaves(const PlaneGraph& g,
                                                          const dissection::DissectionTree& t,
                                                          int r,
                                                          const dissection::EllPolicy& policy,
                                                          leaf_lookup::LookupTable& lt) {
  std::map<int, BorderSolution> out;
  for (std::size_t s = 0; s < t.v.size(); ++s)
    if (t.is_leaf(static_cast<int>(s)) && is_special_leaf(t, static_cast<int>(s), r, policy, g.n))
      out[static_cast<int>(s)] = solve_special_leaf(g, t, static_cast<int>(s), policy, lt);
  return out;
}

struct NonleafCandidate {
  DistVal value = DistVal::infinity();
  int vertex = -1;
  int u = -1, v = -1;  // host node ids of the winning pair
};

// min over nonleaf S and u != v in S of d_S(u,v) + d_S(u,v; e_S(u,v)).
inline NonleafCandidate nonleaf_minimum(const dissection::DissectionTree& t,
                                        const std::map<int, BorderSolution>& sols) {
  NonleafCandidate best;
  for (std::size_t s = 0; s < t.v.size(); ++s) {
    if (t.is_leaf(static_cast<int>(s))) continue;
    auto it = sols.find(static_cast<int>(s));
    require(it != sols.end(), ErrorCode::Internal, "missing nonleaf border solution");
    const BorderSolution& sol = it->second;
    for (int u : t.v[s].set)
      for (int v : t.v[s].set) {
        if (u == v) continue;
        int e = sol.e(u, v);
        if (e == -1) continue;
        DistVal cand = sol.d(u, v) + sol.d_avoid(u, v, e);
        if (cand < best.value) {
          best.value = cand;
          best.vertex = static_cast<int>(s);
          best.u = u;
          best.v = v;
        }
      }
  }
  return best;
}

}  // namespace border_dp

namespace leaf_lookup {

struct LeafProblemResult {
  DistVal girth = DistVal::infinity();
  int argmin_leaf = -1;
};

namespace detail {

// girth(h) for one small region, recursing through one more dissection level
// when h outgrows the lookup table.
inline DistVal region_girth(const PlaneGraph& h, LookupTable& lt, int r,
                            const dissection::EllPolicy& policy) {
  if (h.m() < 3) return DistVal::infinity();
  if (h.n <= lt.k() && h.max_weight() <= lt.w()) return lookup_girth(lt, h);
  dissection::DissectionTree inner = dissection::build_dissection(h, policy);
  if (inner.v.size() == 1) return oracle::brute_girth(h);  // no progress possible
  DistVal leaf_min = DistVal::infinity();
  for (std::size_t s = 0; s < inner.v.size(); ++s) {
    if (!inner.is_leaf(static_cast<int>(s))) continue;
    Induced piece = induced_subgraph(h, inner.v[s].set);
    if (piece.graph.n <= lt.k() && piece.graph.max_weight() <= lt.w())
      leaf_min = std::min(leaf_min, lookup_girth(lt, piece.graph));
    else
      leaf_min = std::min(leaf_min, oracle::brute_girth(piece.graph));
  }
  auto sols = border_dp::solve_all_borders(h, inner, r, policy, lt, true);
  return std::min(leaf_min, border_dp::nonleaf_minimum(inner, sols).value);
}

}  // namespace detail

// Min girth over the leaf regions. Dense hosts go straight to the exact
// oracle per leaf; otherwise each leaf is answered by the lookup table or
// through one more dissection level.
inline LeafProblemResult solve_leaf_problem(const PlaneGraph& g,
                                            const dissection::DissectionTree& t,
                                            LookupTable& lt, int r,
                                            const dissection::EllPolicy& policy) {
  LeafProblemResult out;
  bool dense = Rational::integer(policy.special_threshold(std::max(1, g.n))) <=
               preprocess::density(g);
  for (std::size_t s = 0; s < t.v.size(); ++s) {
    if (!t.is_leaf(static_cast<int>(s))) continue;
    Induced piece = induced_subgraph(g, t.v[s].set);
    DistVal val = dense ? oracle::brute_girth(piece.graph)
                        : detail::region_girth(piece.graph, lt, r, policy);
    if (val < out.girth) {
      out.girth = val;
      out.argmin_leaf = static_cast<int>(s);
    }
  }
  return out;
}

}  // namespace leaf_lookup
}  // namespace girth
