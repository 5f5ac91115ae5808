#pragma once

#include <cmath>
#include <map>
#include <unordered_set>
#include <vector>

#include "girth/blocks.hpp"
#include "girth/embed.hpp"
#include "girth/oracle.hpp"
#include "girth/peel.hpp"
#include "girth/plane_graph.hpp"

namespace girth {
namespace preprocess {

// |V(expand(G))| / |V(G)| = (w(G) - |E(G)| + |V(G)|) / |V(G)|, exactly.
inline Rational density(const PlaneGraph& g) {
  if (g.n == 0) return Rational(1, 1);
  return Rational(g.total_weight() - g.m() + g.n, g.n);
}

struct ExpandResult {
  PlaneGraph graph;
  // Min-weight cycle that disappears during zero-edge contraction (zero-weight
  // cycles, or the two-edge cycles left by merged parallel pairs). Infinite
  // when nothing collapsed; girth(src) = min(collapsed, girth(graph)).
  DistVal collapsed = DistVal::infinity();
  std::vector<int> collapsed_cycle;  // source node ids, may be empty
  std::vector<int> node_orig;        // new node -> source node or -1 (subdivision)
  std::vector<int> edge_orig;        // new edge -> source edge
  std::vector<int> rep;              // source node -> image node
};

namespace detail {

// Path between two nodes of one zero-forest class, as source node ids.
inline std::vector<int> zero_path(const PlaneGraph& g, int from, int to, int skip = -1) {
  if (from == to) return {from};
  std::vector<int> prev(g.n, -1);
  std::vector<int> queue{from};
  prev[from] = from;
  for (std::size_t qi = 0; qi < queue.size() && prev[to] == -1; ++qi) {
    int v = queue[qi];
    for (int e : g.rot[v]) {
      if (g.edges[e].w != 0 || e == skip) continue;
      int u = g.other_end(e, v);
      if (prev[u] == -1) {
        prev[u] = v;
        queue.push_back(u);
      }
    }
  }
  std::vector<int> path;
  for (int v = to; v != from; v = prev[v]) path.push_back(v);
  path.push_back(from);
  std::reverse(path.begin(), path.end());
  return path;
}

struct Dsu {
  std::vector<int> p;
  explicit Dsu(int n) : p(n) {
    for (int i = 0; i < n; ++i) p[i] = i;
  }
  int find(int x) { return p[x] == x ? x : p[x] = find(p[x]); }
  void unite(int a, int b) { p[find(b)] = find(a); }
};

}  // namespace detail

// Subdivide each weight-k edge into k unit edges and contract zero-weight
// edges. Result is unweighted with w(G) - |E(G)| + |V(G)| nodes (before any
// parallel-pair dedup, which only happens when zero edges merged endpoints).
inline ExpandResult expand(const PlaneGraph& g) {
  ExpandResult out;
  if (g.unweighted()) {
    out.graph = g;
    out.node_orig.resize(g.n);
    out.rep.resize(g.n);
    for (int v = 0; v < g.n; ++v) out.node_orig[v] = out.rep[v] = v;
    out.edge_orig.resize(g.m());
    for (int e = 0; e < g.m(); ++e) out.edge_orig[e] = e;
    return out;
  }

  detail::Dsu dsu(g.n);
  for (int e = 0; e < g.m(); ++e) {
    if (g.edges[e].w != 0) continue;
    int a = dsu.find(g.edges[e].u), b = dsu.find(g.edges[e].v);
    if (a == b) {
      // A cycle of zero-weight edges: girth 0, nothing lighter exists.
      if (out.collapsed > DistVal(0)) {
        out.collapsed = DistVal(0);
        out.collapsed_cycle = detail::zero_path(g, g.edges[e].u, g.edges[e].v, e);
      }
    } else {
      dsu.unite(a, b);
    }
  }

  out.rep.assign(g.n, -1);
  PlaneGraph h;
  for (int v = 0; v < g.n; ++v) {
    if (dsu.find(v) != v) continue;
    out.rep[v] = h.n++;
    out.node_orig.push_back(v);
  }
  for (int v = 0; v < g.n; ++v) out.rep[v] = out.rep[dsu.find(v)];

  // Merge-aware edge pass: drop intra-class edges and heavier parallels,
  // recording the cycle each drop witnesses.
  std::map<std::pair<int, int>, int> kept;  // (lo, hi) -> edge id in g
  auto consider_cycle = [&](DistVal w, std::vector<int>&& cyc) {
    if (w < out.collapsed) {
      out.collapsed = w;
      out.collapsed_cycle = std::move(cyc);
    }
  };
  std::vector<int> chosen;  // source edge ids that survive
  for (int e = 0; e < g.m(); ++e) {
    if (g.edges[e].w == 0) continue;
    int a = out.rep[g.edges[e].u], b = out.rep[g.edges[e].v];
    if (a == b) {
      std::vector<int> cyc = detail::zero_path(g, g.edges[e].u, g.edges[e].v);
      consider_cycle(DistVal(g.edges[e].w), std::move(cyc));
      continue;
    }
    auto key = std::minmax(a, b);
    auto it = kept.find({key.first, key.second});
    if (it == kept.end()) {
      kept[{key.first, key.second}] = e;
      continue;
    }
    int e0 = it->second;
    // Two parallel images: a source cycle through both classes.
    int u0 = g.edges[e0].u, v0 = g.edges[e0].v;
    int u1 = g.edges[e].u, v1 = g.edges[e].v;
    if (out.rep[u0] != out.rep[u1]) std::swap(u1, v1);
    std::vector<int> cyc = detail::zero_path(g, u0, u1);
    std::vector<int> back = detail::zero_path(g, v1, v0);
    cyc.insert(cyc.end(), back.begin(), back.end());
    consider_cycle(DistVal(g.edges[e0].w + g.edges[e].w), std::move(cyc));
    if (g.edges[e].w < g.edges[e0].w) it->second = e;
  }
  for (auto& pair_edge : kept) chosen.push_back(pair_edge.second);
  std::sort(chosen.begin(), chosen.end());

  h.labels.assign(h.n, 0);
  for (int i = 0; i < h.n; ++i) h.labels[i] = g.labels[out.node_orig[i]];
  std::int64_t synthetic = -1;
  for (int e : chosen) {
    int a = out.rep[g.edges[e].u], b = out.rep[g.edges[e].v];
    Weight w = g.edges[e].w;
    int prev = a;
    for (Weight step = 1; step <= w; ++step) {
      int next;
      if (step == w) {
        next = b;
      } else {
        next = h.n++;
        h.labels.push_back(synthetic--);
        out.node_orig.push_back(-1);
      }
      h.edges.push_back({prev, next, 1});
      out.edge_orig.push_back(e);
      prev = next;
    }
  }
  out.graph = embed(h);
  return out;
}

// Pointwise min of edge weights with w.
inline PlaneGraph round_weights(const PlaneGraph& g, Weight w) {
  require(w >= 1, ErrorCode::BadParameter, "round_weights needs w >= 1");
  PlaneGraph out = g;
  for (auto& e : out.edges) e.w = std::min(e.w, w);
  return out;
}

struct ContractResult {
  PlaneGraph graph;
  std::vector<int> node_orig;                 // new node -> source node
  std::vector<std::vector<int>> chain_nodes;  // new edge -> interior source nodes, u->v
  std::vector<std::vector<int>> chain_edges;  // new edge -> source edge ids, u->v
};

// Compress maximal chains through degree-2 nodes whose endpoints are not yet
// adjacent; stops a chain as soon as its endpoints become adjacent, so the
// graph stays simple. expand(result) recovers the input.
inline ContractResult contract(const PlaneGraph& g0) {
  require(g0.unweighted(), ErrorCode::BadParameter, "contract expects a unit-weight graph");
  require(g0.n >= 3, ErrorCode::NotBiconnected, "contract expects a biconnected graph");
  require(biconnected_components(g0).size() == 1, ErrorCode::NotBiconnected,
          "contract expects a biconnected graph");

  PlaneGraph g = g0;
  std::vector<char> dead_node(g.n, 0), dead_edge(g.m(), 0);
  std::vector<std::vector<int>> nodes_of(g.m()), edges_of(g.m());
  for (int e = 0; e < g.m(); ++e) edges_of[e] = {e};
  std::unordered_set<std::int64_t> adj;
  auto key = [&](int a, int b) {
    return static_cast<std::int64_t>(std::min(a, b)) * g0.n + std::max(a, b);
  };
  for (const auto& e : g.edges) adj.insert(key(e.u, e.v));

  auto replace_in_rot = [&](int at, int from, int to) {
    for (int& e : g.rot[at])
      if (e == from) {
        e = to;
        return;
      }
    fail(ErrorCode::Internal, "contract: rotation slot not found");
  };

  std::vector<int> work(g.n);
  for (int v = 0; v < g.n; ++v) work[v] = g.n - 1 - v;  // pop ascending
  while (!work.empty()) {
    int cur = work.back();
    work.pop_back();
    {
      if (!dead_node[cur] && g.rot[cur].size() == 2) {
      int e1 = g.rot[cur][0], e2 = g.rot[cur][1];
      int a = g.other_end(e1, cur), b = g.other_end(e2, cur);
      if (a == b || adj.count(key(a, b))) continue;
      int ne = g.m();
      g.edges.push_back({a, b, g.edges[e1].w + g.edges[e2].w});
      dead_edge.push_back(0);
      // Orient stored chains a -> b.
      std::vector<int> cn, ce;
      auto append_edge = [&](int e, int tail) {
        // walk e's chain from the endpoint `tail`
        bool fwd = g.edges[e].u == tail;
        const auto& ns = nodes_of[e];
        const auto& es = edges_of[e];
        if (fwd) {
          ce.insert(ce.end(), es.begin(), es.end());
          cn.insert(cn.end(), ns.begin(), ns.end());
        } else {
          ce.insert(ce.end(), es.rbegin(), es.rend());
          cn.insert(cn.end(), ns.rbegin(), ns.rend());
        }
      };
      append_edge(e1, a);
      cn.push_back(cur);
      append_edge(e2, cur);
      nodes_of.push_back(std::move(cn));
      edges_of.push_back(std::move(ce));
      replace_in_rot(a, e1, ne);
      replace_in_rot(b, e2, ne);
      dead_edge[e1] = dead_edge[e2] = 1;
      dead_node[cur] = 1;
      g.rot[cur].clear();
      adj.insert(key(a, b));
      work.push_back(b);  // endpoints may now be mergeable
      work.push_back(a);
      }
    }
  }

  // Compact.
  ContractResult out;
  std::vector<int> node_map(g.n, -1), edge_map(g.m(), -1);
  for (int v = 0; v < g.n; ++v)
    if (!dead_node[v]) {
      node_map[v] = out.graph.n++;
      out.node_orig.push_back(v);
      out.graph.labels.push_back(g.labels[v]);
    }
  for (int e = 0; e < g.m(); ++e)
    if (!dead_edge[e]) {
      edge_map[e] = out.graph.m();
      out.graph.edges.push_back(
          {node_map[g.edges[e].u], node_map[g.edges[e].v], g.edges[e].w});
      out.chain_nodes.push_back(nodes_of[e]);
      out.chain_edges.push_back(edges_of[e]);
    }
  out.graph.rot.resize(out.graph.n);
  for (int v = 0; v < g.n; ++v)
    if (!dead_node[v])
      for (int e : g.rot[v]) out.graph.rot[node_map[v]].push_back(edge_map[e]);
  out.graph.outer = choose_outer_faces(out.graph);
  require_valid(out.graph, "contract");
  return out;
}

struct ReduceResult {
  PlaneGraph graph;
  std::vector<int> node_orig;  // new node -> source node
  std::vector<int> edge_orig;  // new edge -> source edge, -1 for zero path edges
};

namespace detail {

// Replace every node in `targets` (degree >= 4) by a zero-weight path
// (v_1..v_d) with the i-th former edge reattached at v_i; the path starts at
// the given anchor neighbor. Single pass over the graph.
inline ReduceResult reduce_nodes(const PlaneGraph& g, const std::vector<int>& targets,
                                 const std::vector<int>& anchor) {
  std::vector<char> is_target(g.n, 0);
  std::vector<int> anchor_of(g.n, -1);
  for (std::size_t i = 0; i < targets.size(); ++i) {
    is_target[targets[i]] = 1;
    anchor_of[targets[i]] = anchor[i];
  }
  ReduceResult out;
  PlaneGraph& h = out.graph;
  std::vector<int> base(g.n, -1);          // kept node -> new id
  std::vector<int> rotated_start(g.n, 0);  // target -> index of anchor edge in rot
  for (int v = 0; v < g.n; ++v) {
    if (is_target[v]) continue;
    base[v] = h.n++;
    h.labels.push_back(g.labels[v]);
    out.node_orig.push_back(v);
  }
  std::vector<int> slot_node(2 * g.m(), -1);  // dart entering target -> v_i id
  for (int v : targets) {
    int d = g.degree(v);
    int start = 0;
    for (int i = 0; i < d; ++i)
      if (g.other_end(g.rot[v][i], v) == anchor_of[v]) start = i;
    rotated_start[v] = start;
    for (int i = 0; i < d; ++i) {
      int e = g.rot[v][(start + i) % d];
      slot_node[g.dart_from(e, g.other_end(e, v))] = h.n + i;
    }
    for (int i = 0; i < d; ++i) {
      h.n++;
      h.labels.push_back(g.labels[v]);
      out.node_orig.push_back(v);
    }
  }
  auto image = [&](int e, int endpoint) {
    if (!is_target[endpoint]) return base[endpoint];
    return slot_node[g.dart_from(e, g.other_end(e, endpoint))];
  };
  std::vector<int> edge_map(g.m());
  for (int e = 0; e < g.m(); ++e) {
    edge_map[e] = h.m();
    h.edges.push_back({image(e, g.edges[e].u), image(e, g.edges[e].v), g.edges[e].w});
    out.edge_orig.push_back(e);
  }
  std::vector<std::vector<int>> path_edges_of(g.n);
  for (int v : targets) {
    int d = g.degree(v);
    auto& pe = path_edges_of[v];
    for (int i = 0; i + 1 < d; ++i) {
      int a = slot_node[g.dart_from(g.rot[v][(rotated_start[v] + i) % d],
                                    g.other_end(g.rot[v][(rotated_start[v] + i) % d], v))];
      pe.push_back(h.m());
      h.edges.push_back({a, a + 1, 0});
      out.edge_orig.push_back(-1);
    }
  }
  h.rot.resize(h.n);
  for (int v = 0; v < g.n; ++v) {
    if (is_target[v]) continue;
    for (int e : g.rot[v]) h.rot[base[v]].push_back(edge_map[e]);
  }
  for (int v : targets) {
    int d = g.degree(v);
    const auto& pe = path_edges_of[v];
    for (int i = 0; i < d; ++i) {
      int e = g.rot[v][(rotated_start[v] + i) % d];
      int vi = slot_node[g.dart_from(e, g.other_end(e, v))];
      auto& r = h.rot[vi];
      r.push_back(edge_map[e]);            // spoke
      if (i + 1 < d) r.push_back(pe[i]);   // toward v_{i+1}
      if (i > 0) r.push_back(pe[i - 1]);   // toward v_{i-1}
    }
  }
  // The outer region is unchanged; carry the old outer darts over.
  for (int d : g.outer) h.outer.push_back(2 * edge_map[d >> 1] + (d & 1));
  std::sort(h.outer.begin(), h.outer.end());
  require_valid(h, "reduce");
  return out;
}

}  // namespace detail

// The split path is laid along the corner of v that precedes the edge to u1
// in rotation. For peeling to leave depths alone, that corner must open into
// a face of minimal merge level (the face through which v gets exposed), so
// the anchor is picked per corner, preferring shallow neighbors among the
// minimal-level corners. A min-depth neighbor alone does not determine the
// right corner when v's exposure comes through non-neighbor face-mates.
inline int choose_reduce_anchor(const PlaneGraph& g, const PeelData& peel, int v) {
  int d = g.degree(v);
  int best_level = -1, best_u = -1;
  for (int i = 0; i < d; ++i) {
    int ei = g.rot[v][i];
    int enext = g.rot[v][(i + 1) % d];
    int corner_face = peel.faces.face_of[g.dart_from(ei, g.other_end(ei, v))];
    int level = peel.face_level[corner_face];
    int u = g.other_end(enext, v);
    if (best_u == -1 || level < best_level ||
        (level == best_level && (peel.dm.depth[u] < peel.dm.depth[best_u] ||
                                 (peel.dm.depth[u] == peel.dm.depth[best_u] && u < best_u)))) {
      best_level = level;
      best_u = u;
    }
  }
  return best_u;
}

inline ReduceResult reduce_degree(const PlaneGraph& g, int v, int u1) {
  require(v >= 0 && v < g.n, ErrorCode::UnknownNode, "reduce_degree");
  require(g.degree(v) >= 4, ErrorCode::DegreeTooSmall, "reduce_degree needs degree >= 4");
  DepthMap dm = outerplane_depths(g);
  bool neighbor = false;
  int best = g.n + 1;
  for (int e : g.rot[v]) {
    int u = g.other_end(e, v);
    if (u == u1) neighbor = true;
    best = std::min(best, dm.depth[u]);
  }
  require(neighbor, ErrorCode::NotNeighbor, "u1 is not a neighbor of v");
  require(dm.depth[u1] == best, ErrorCode::NotMinDepthNeighbor,
          "u1 must have minimum outerplane depth among v's neighbors");
  return detail::reduce_nodes(g, {v}, {u1});
}

// Eliminate every node of degree >= 4 in one pass; anchors are corner-aware
// min-depth neighbors under the depth map of the input, which peeling leaves
// intact.
inline ReduceResult reduce_all_degrees(const PlaneGraph& g) {
  std::vector<int> targets, anchors;
  PeelData peel;
  for (int v = 0; v < g.n; ++v)
    if (g.degree(v) >= 4) {
      if (targets.empty()) peel = peel_structure(g);
      targets.push_back(v);
      anchors.push_back(choose_reduce_anchor(g, peel, v));
    }
  if (targets.empty()) {
    ReduceResult out;
    out.graph = g;
    out.node_orig.resize(g.n);
    for (int v = 0; v < g.n; ++v) out.node_orig[v] = v;
    out.edge_orig.resize(g.m());
    for (int e = 0; e < g.m(); ++e) out.edge_orig[e] = e;
    return out;
  }
  return detail::reduce_nodes(g, targets, anchors);
}

struct SliceResult {
  PlaneGraph graph;
  std::vector<int> node_orig;  // new node -> source node
  std::vector<int> edge_orig;  // new edge -> source edge
  std::vector<int> band_of;    // new node -> band index
  bool identity = false;
  int bands = 1;
};

// Overlapping depth bands 36*i*D < depth <= 36*(i+2)*D, as a disjoint union.
// Bands fully covered by their predecessor are skipped; any cycle spanning at
// most 36*D depth levels still lies inside an emitted band.
inline SliceResult slice_outerplane(const PlaneGraph& g) {
  for (const auto& e : g.edges)
    require(e.w >= 1, ErrorCode::PreconditionViolated, "slice needs positive weights");
  Rational dens = density(g);
  DepthMap dm = outerplane_depths(g);

  SliceResult out;
  if (Rational::integer(dm.radius) <= 72 * dens) {
    out.graph = g;
    out.identity = true;
    out.node_orig.resize(g.n);
    for (int v = 0; v < g.n; ++v) out.node_orig[v] = v;
    out.edge_orig.resize(g.m());
    for (int e = 0; e < g.m(); ++e) out.edge_orig[e] = e;
    out.band_of.assign(g.n, 0);
    return out;
  }

  auto in_band = [&](int depth, int i) {
    return 36 * i * dens < depth && Rational::integer(depth) <= 36 * (i + 2) * dens;
  };
  PlaneGraph& h = out.graph;
  for (int i = 0; 36 * i * dens < dm.radius; ++i) {
    bool emit = i == 0 || 36 * (i + 1) * dens < dm.radius;
    if (!emit) continue;
    std::vector<int> nodes;
    for (int v = 0; v < g.n; ++v)
      if (in_band(dm.depth[v], i)) nodes.push_back(v);
    if (nodes.empty()) continue;
    Induced band = induced_subgraph(g, nodes);
    // Outer face per band component: most boundary hits on nodes of minimal
    // original depth, so peeling the band starts where the source peeled.
    {
      Faces f = trace_faces(band.graph);
      Components comps = connected_components(band.graph);
      std::vector<int> min_depth(comps.count, 1 << 30);
      for (int v = 0; v < band.graph.n; ++v)
        min_depth[comps.comp_of[v]] =
            std::min(min_depth[comps.comp_of[v]], dm.depth[band.orig_node[v]]);
      std::vector<int> best(comps.count, -1);
      std::vector<std::int64_t> best_score(comps.count, -1);
      for (int id = 0; id < f.count; ++id) {
        int comp = comps.comp_of[band.graph.dart_tail(f.darts_of[id][0])];
        std::int64_t hits = 0;
        for (int d : f.darts_of[id])
          if (dm.depth[band.orig_node[band.graph.dart_tail(d)]] == min_depth[comp]) ++hits;
        std::int64_t score = hits * (2LL * band.graph.m() + 1) +
                             static_cast<std::int64_t>(f.darts_of[id].size());
        if (score > best_score[comp]) {
          best_score[comp] = score;
          best[comp] = id;
        }
      }
      band.graph.outer.clear();
      for (int comp = 0; comp < comps.count; ++comp)
        if (best[comp] != -1) band.graph.outer.push_back(f.darts_of[best[comp]][0]);
      std::sort(band.graph.outer.begin(), band.graph.outer.end());
    }
    int node_off = h.n, edge_off = h.m();
    h.n += band.graph.n;
    for (const auto& e : band.graph.edges)
      h.edges.push_back({e.u + node_off, e.v + node_off, e.w});
    for (const auto& r : band.graph.rot) {
      h.rot.emplace_back();
      for (int e : r) h.rot.back().push_back(e + edge_off);
    }
    for (std::int64_t lbl : band.graph.labels) h.labels.push_back(lbl);
    for (int d : band.graph.outer) h.outer.push_back(d + 2 * edge_off);
    for (int v = 0; v < band.graph.n; ++v) {
      out.node_orig.push_back(band.orig_node[v]);
      out.band_of.push_back(out.bands - 1);
    }
    for (int e = 0; e < band.graph.m(); ++e) out.edge_orig.push_back(band.orig_edge[e]);
    ++out.bands;
  }
  out.bands -= 1;
  require_valid(h, "slice_outerplane");
  return out;
}

// Signature of a graph up to relabeling of its degree-2 interior nodes:
// chains between branch nodes keyed by branch labels, plus bare cycle
// components by length. Two unweighted graphs are subdivisions of the same
// labeled graph iff their signatures match.
inline std::string subdivision_signature(const PlaneGraph& g) {
  std::vector<int> deg(g.n);
  for (int v = 0; v < g.n; ++v) deg[v] = g.degree(v);
  std::vector<std::string> parts;
  std::vector<char> done_edge(g.m(), 0);
  for (int s = 0; s < g.n; ++s) {
    if (deg[s] == 2) continue;
    if (deg[s] == 0) {
      parts.push_back("iso:" + std::to_string(g.labels[s]));
      continue;
    }
    for (int e0 : g.rot[s]) {
      if (done_edge[e0]) continue;
      Weight len = g.edges[e0].w;
      int prev = s, e = e0;
      done_edge[e] = 1;
      int cur = g.other_end(e, s);
      while (deg[cur] == 2) {
        int nxt = g.rot[cur][0] == e ? g.rot[cur][1] : g.rot[cur][0];
        done_edge[nxt] = 1;
        len += g.edges[nxt].w;
        prev = cur;
        cur = g.other_end(nxt, cur);
        e = nxt;
      }
      (void)prev;
      auto lo = std::min(g.labels[s], g.labels[cur]);
      auto hi = std::max(g.labels[s], g.labels[cur]);
      parts.push_back("ch:" + std::to_string(lo) + "," + std::to_string(hi) + "," +
                      std::to_string(len));
    }
  }
  // Components that are bare cycles (every node degree 2).
  std::vector<char> seen(g.n, 0);
  for (int s = 0; s < g.n; ++s) {
    if (seen[s] || deg[s] != 2) continue;
    bool pure = true;
    Weight len = 0;
    int prev = -1, cur = s;
    do {
      seen[cur] = 1;
      if (deg[cur] != 2) {
        pure = false;
        break;
      }
      int e = g.rot[cur][0];
      int cand = g.other_end(e, cur);
      if (cand == prev && g.rot[cur].size() > 1) {
        e = g.rot[cur][1];
        cand = g.other_end(e, cur);
      }
      len += g.edges[e].w;
      prev = cur;
      cur = cand;
    } while (cur != s);
    if (pure) parts.push_back("cy:" + std::to_string(len));
  }
  std::sort(parts.begin(), parts.end());
  std::string sig;
  for (const auto& p : parts) {
    sig += p;
    sig += ';';
  }
  return sig;
}

inline bool subdivision_isomorphic(const PlaneGraph& a, const PlaneGraph& b) {
  return subdivision_signature(a) == subdivision_signature(b);
}

struct BlockStats {
  int nodes_in = 0;
  int nodes_contracted = 0;
  bool shortcut = false;
  bool sliced = false;
  Rational density_in{1, 1};
  Weight wmax_out = 0;
  int radius_out = 0;
};

struct NormalizeResult {
  // Disjoint union of the transformed cyclic blocks (may be empty when every
  // block took the exact fallback). Degree <= 3, nonnegative weights.
  PlaneGraph graph;
  std::vector<int> node_src;               // graph node -> node of the input
  std::vector<std::vector<int>> edge_src;  // graph edge -> input edge ids, from .u
  // Exact answers for blocks that bypassed the transform chain, and for any
  // zero-collapse candidates; infinite when every block was transformed.
  DistVal shortcut_girth = DistVal::infinity();
  std::vector<int> shortcut_cycle;  // input node ids, closed walk (first==last)
  std::vector<BlockStats> blocks;
};

namespace detail {

// dst += block-local graph, composing provenance into input coordinates.
inline void append_block(NormalizeResult& out, const PlaneGraph& g,
                         const std::vector<int>& node_src,
                         const std::vector<std::vector<int>>& edge_src) {
  PlaneGraph& h = out.graph;
  int node_off = h.n, edge_off = h.m();
  h.n += g.n;
  for (const auto& e : g.edges) h.edges.push_back({e.u + node_off, e.v + node_off, e.w});
  for (const auto& r : g.rot) {
    h.rot.emplace_back();
    for (int e : r) h.rot.back().push_back(e + edge_off);
  }
  for (std::int64_t lbl : g.labels) h.labels.push_back(lbl);
  for (int d : g.outer) h.outer.push_back(d + 2 * edge_off);
  for (int v : node_src) out.node_src.push_back(v);
  for (const auto& p : edge_src) out.edge_src.push_back(p);
}

}  // namespace detail

// Three-stage normalization of an unweighted plane graph, block by block:
// contract, bound the maximum weight by repeated rounding, bound the
// outerplane radius by depth slicing, bound the degree by node splitting.
// Blocks where the contraction saves nothing fall back to the exact sweep.
inline NormalizeResult normalize(const PlaneGraph& g0) {
  require(g0.unweighted(), ErrorCode::BadParameter, "normalize expects a unit-weight graph");
  NormalizeResult out;

  auto blocks = biconnected_components(g0);
  for (const auto& blk : blocks) {
    if (blk.graph.m() < blk.graph.n) continue;  // bridge or otherwise acyclic
    BlockStats stats;
    stats.nodes_in = blk.graph.n;

    ContractResult con = contract(blk.graph);
    stats.nodes_contracted = con.graph.n;
    stats.density_in = density(con.graph);

    // Walk in contracted coordinates -> closed walk in input node ids.
    auto walk_to_input = [&](const std::vector<int>& walk) {
      std::vector<int> res;
      for (std::size_t i = 0; i + 1 < walk.size(); ++i) {
        int a = walk[i], b = walk[i + 1];
        int e = -1;
        for (int cand : con.graph.rot[a])
          if (con.graph.other_end(cand, a) == b) e = cand;
        res.push_back(blk.orig_node[con.node_orig[a]]);
        const auto& chain = con.chain_nodes[e];
        if (con.graph.edges[e].u == a)
          for (int x : chain) res.push_back(blk.orig_node[x]);
        else
          for (auto it = chain.rbegin(); it != chain.rend(); ++it)
            res.push_back(blk.orig_node[*it]);
      }
      if (!walk.empty())
        res.push_back(blk.orig_node[con.node_orig[walk.back()]]);
      return res;
    };

    double logm = std::log2(std::max(2, con.graph.n));
    bool shortcut = static_cast<double>(blk.graph.n) >
                    static_cast<double>(con.graph.n) * logm * logm;
    if (shortcut) {
      stats.shortcut = true;
      Rational b = 36 * density(con.graph);
      oracle::SweepResult sw = oracle::sweep_girth(con.graph, DistVal(b.num / b.den));
      if (sw.girth < out.shortcut_girth) {
        out.shortcut_girth = sw.girth;
        std::vector<int> closed = sw.closed_walk;
        out.shortcut_cycle = walk_to_input(closed);
      }
      out.blocks.push_back(stats);
      continue;
    }

    // Stage 1: cap weights at ceil(36 * density); each pass drops wmax.
    PlaneGraph cur = con.graph;
    Weight prev_wmax = cur.max_weight() + 1;
    for (Weight guard = 0; guard <= con.graph.max_weight() + 1; ++guard) {
      Weight cap = std::max<Weight>(1, (36 * density(cur)).ceil());
      if (cur.max_weight() <= cap) break;
      cur = round_weights(cur, cap);
      require(cur.max_weight() < prev_wmax, ErrorCode::Internal,
              "normalize: rounding did not reduce the maximum weight");
      prev_wmax = cur.max_weight();
    }
    std::vector<int> node_src(cur.n);
    for (int v = 0; v < cur.n; ++v) node_src[v] = blk.orig_node[con.node_orig[v]];
    std::vector<std::vector<int>> edge_src(cur.m());
    for (int e = 0; e < cur.m(); ++e) {
      edge_src[e].reserve(con.chain_edges[e].size());
      for (int be : con.chain_edges[e]) edge_src[e].push_back(blk.orig_edge[be]);
    }

    // Stage 2: depth bands.
    SliceResult sl = slice_outerplane(cur);
    stats.sliced = !sl.identity;
    if (!sl.identity) {
      std::vector<int> ns(sl.graph.n);
      for (int v = 0; v < sl.graph.n; ++v) ns[v] = node_src[sl.node_orig[v]];
      std::vector<std::vector<int>> es(sl.graph.m());
      for (int e = 0; e < sl.graph.m(); ++e) es[e] = edge_src[sl.edge_orig[e]];
      cur = sl.graph;
      node_src = std::move(ns);
      edge_src = std::move(es);
    }

    // Stage 3: degree <= 3.
    ReduceResult rd = reduce_all_degrees(cur);
    {
      std::vector<int> ns(rd.graph.n);
      for (int v = 0; v < rd.graph.n; ++v) ns[v] = node_src[rd.node_orig[v]];
      std::vector<std::vector<int>> es(rd.graph.m());
      for (int e = 0; e < rd.graph.m(); ++e)
        if (rd.edge_orig[e] != -1) es[e] = edge_src[rd.edge_orig[e]];
      cur = rd.graph;
      node_src = std::move(ns);
      edge_src = std::move(es);
    }
    for (int v = 0; v < cur.n; ++v)
      require(cur.degree(v) <= 3, ErrorCode::Internal, "normalize: degree bound failed");
    stats.wmax_out = cur.max_weight();
    stats.radius_out = outerplane_radius(cur);
    out.blocks.push_back(stats);
    detail::append_block(out, cur, node_src, edge_src);
  }
  require_valid(out.graph, "normalize");
  return out;
}

}  // namespace preprocess
}  // namespace girth
