#pragma once

#include <array>
#include <fstream>
#include <map>
#include <mutex>
#include <string>
#include <unordered_map>
#include <vector>

#include "girth/border_dp.hpp"
#include "girth/oracle.hpp"
#include "girth/plane_graph.hpp"
#include "girth/shortest_paths.hpp"

namespace girth {
namespace leaf_lookup {

struct Canon {
  std::string key;        // isomorphism-invariant certificate
  std::vector<int> perm;  // node -> canonical position
};

namespace detail {

// Weight-aware color refinement. New ids are ranks in signature order, so
// the outcome does not depend on node numbering.
inline std::vector<int> refine(const PlaneGraph& g, std::vector<int> color) {
  using Sig = std::pair<int, std::vector<std::pair<Weight, int>>>;
  while (true) {
    std::vector<Sig> sig(g.n);
    for (int v = 0; v < g.n; ++v) {
      std::vector<std::pair<Weight, int>> around;
      for (int e : g.rot[v]) around.push_back({g.edges[e].w, color[g.other_end(e, v)]});
      std::sort(around.begin(), around.end());
      sig[v] = {color[v], std::move(around)};
    }
    std::vector<Sig> uniq(sig);
    std::sort(uniq.begin(), uniq.end());
    uniq.erase(std::unique(uniq.begin(), uniq.end()), uniq.end());
    std::vector<int> next(g.n);
    for (int v = 0; v < g.n; ++v)
      next[v] = static_cast<int>(std::lower_bound(uniq.begin(), uniq.end(), sig[v]) -
                                 uniq.begin());
    if (next == color) return color;
    color = std::move(next);
  }
}

inline std::string certificate(const PlaneGraph& g, const std::vector<int>& perm) {
  // n then the upper triangle of the weight matrix under the ordering
  std::vector<int> at(g.n);
  for (int v = 0; v < g.n; ++v) at[perm[v]] = v;
  std::vector<Weight> mat(g.n * g.n, -1);
  for (const auto& e : g.edges) {
    mat[perm[e.u] * g.n + perm[e.v]] = e.w;
    mat[perm[e.v] * g.n + perm[e.u]] = e.w;
  }
  std::string s;
  s.reserve(2 + g.n * g.n * 3);
  s += static_cast<char>('0' + g.n / 100);
  s += std::to_string(g.n);
  s += ':';
  for (int i = 0; i < g.n; ++i)
    for (int j = i + 1; j < g.n; ++j) {
      s += std::to_string(mat[i * g.n + j]);
      s += ',';
    }
  return s;
}

struct CanonSearch {
  const PlaneGraph& g;
  std::string best;
  std::vector<int> best_perm;
  long budget = 200000;

  void rec(std::vector<int> color) {
    if (--budget < 0) return;
    color = refine(g, color);
    int pick = -1, pick_color = 1 << 30;
    std::vector<int> count(g.n + 1, 0);
    for (int v = 0; v < g.n; ++v) ++count[color[v]];
    for (int v = 0; v < g.n; ++v)
      if (count[color[v]] > 1 && color[v] < pick_color) {
        pick_color = color[v];
        pick = v;
      }
    if (pick == -1) {
      // discrete coloring: colors are a permutation
      std::vector<int> perm(g.n);
      for (int v = 0; v < g.n; ++v) perm[v] = color[v];
      std::string cert = certificate(g, perm);
      if (best.empty() || cert < best) {
        best = std::move(cert);
        best_perm = std::move(perm);
      }
      return;
    }
    for (int v = 0; v < g.n; ++v) {
      if (color[v] != pick_color) continue;
      std::vector<int> next = color;
      for (int u = 0; u < g.n; ++u)
        if (next[u] >= g.n) next[u] += 1;  // keep room
      next[v] = g.n + 1000000;             // individualize
      rec(std::move(next));
    }
  }
};

}  // namespace detail

// Canonical form by refinement plus backtracking individualization. Exact on
// anything small; a search budget guards against adversarial symmetry (a
// budget overrun degrades to a per-instance key, which only costs cache hits).
inline Canon canonicalize(const PlaneGraph& g) {
  detail::CanonSearch s{g, {}, {}, 200000};
  std::vector<int> init(g.n);
  for (int v = 0; v < g.n; ++v) init[v] = 0;
  s.rec(init);
  Canon c;
  if (s.best.empty() || s.budget < 0) {
    c.key = "raw:" + detail::certificate(g, [&] {
              std::vector<int> id(g.n);
              for (int v = 0; v < g.n; ++v) id[v] = v;
              return id;
            }());
    c.perm.resize(g.n);
    for (int v = 0; v < g.n; ++v) c.perm[v] = v;
  } else {
    c.key = std::move(s.best);
    c.perm = std::move(s.best_perm);
  }
  return c;
}

inline std::string canonical_key(const PlaneGraph& g) { return canonicalize(g).key; }

// Memoized answers for small graphs keyed by canonical form: girth and the
// all-pairs distance matrix in canonical coordinates. Avoided-edge rows are
// cheap enough to recompute per query at these sizes.
class LookupTable {
 public:
  struct Stats {
    std::int64_t hits = 0;
    std::int64_t misses = 0;
  };

  LookupTable(int k, Weight w, bool eager = false) : k_(k), w_(w) {
    require(k >= 1 && w >= 1, ErrorCode::BadParameter, "lookup table needs k, w >= 1");
    if (eager) {
      require(k <= 4 && w <= 2, ErrorCode::TooLarge, "eager enumeration is for k<=4, w<=2");
      enumerate_all();
    }
  }

  int k() const { return k_; }
  Weight w() const { return w_; }
  Stats stats() const {
    std::lock_guard<std::mutex> lock(mu_);
    return stats_;
  }

  DistVal girth_of(const PlaneGraph& h) {
    check(h);
    Canon c = canonicalize(h);
    return entry_for(h, c).girth;
  }

  // Full border tables of h over B, in h's node/edge ids.
  border_dp::BorderSolution border_of(const PlaneGraph& h, std::vector<int> border) {
    check(h);
    Canon c = canonicalize(h);
    const Entry& ent = entry_for(h, c);
    border_dp::BorderSolution sol;
    std::sort(border.begin(), border.end());
    border.erase(std::unique(border.begin(), border.end()), border.end());
    sol.border = std::move(border);
    int b = sol.size();
    sol.dist = std::make_shared<std::vector<DistVal>>(b * b, DistVal::infinity());
    sol.first_edge.assign(b * b, -1);
    auto dist_of = [&](int u, int v) { return ent.dist[c.perm[u] * h.n + c.perm[v]]; };
    for (int i = 0; i < b; ++i)
      for (int j = 0; j < b; ++j) (*sol.dist)[i * b + j] = dist_of(sol.border[i], sol.border[j]);
    for (int i = 0; i < b; ++i)
      for (int j = 0; j < b; ++j) {
        if (i == j || (*sol.dist)[i * b + j].is_inf()) continue;
        int u = sol.border[i];
        for (int e : h.rot[u]) {
          int x = h.other_end(e, u);
          if (dist_of(x, sol.border[j]) + h.edges[e].w == (*sol.dist)[i * b + j]) {
            int& slot = sol.first_edge[i * b + j];
            if (slot == -1 || e < slot) slot = e;
          }
        }
      }
    // Avoided-edge tables for edges incident to the border, recomputed here.
    Adjacency adj(h);
    std::vector<int> avoided;
    for (int u : sol.border)
      for (int e : h.rot[u]) avoided.push_back(e);
    std::sort(avoided.begin(), avoided.end());
    avoided.erase(std::unique(avoided.begin(), avoided.end()), avoided.end());
    for (int e : avoided) {
      Matrixish m = sol.dist;
      for (int i = 0; i < b; ++i) {
        SpTree t = dijkstra(adj, sol.border[i], e);
        for (int j = 0; j < b; ++j) {
          DistVal d = to_distval(t.dist[sol.border[j]]);
          if (d != (*m)[i * b + j]) {
            if (m == sol.dist) m = std::make_shared<std::vector<DistVal>>(*sol.dist);
            (*m)[i * b + j] = d;
          }
        }
      }
      sol.avoid[e] = m;
    }
    return sol;
  }

  void save(const std::string& path) const {
    std::lock_guard<std::mutex> lock(mu_);
    std::ofstream out(path, std::ios::binary);
    require(out.good(), ErrorCode::BadParameter, "cannot write lookup cache: " + path);
    auto wr = [&](const void* p, std::size_t n) { out.write(static_cast<const char*>(p), n); };
    const char magic[4] = {'G', 'L', 'T', '1'};
    wr(magic, 4);
    std::int64_t kk = k_, ww = w_, count = cache_.size();
    wr(&kk, 8);
    wr(&ww, 8);
    wr(&count, 8);
    for (const auto& [key, ent] : cache_) {
      std::int64_t len = key.size(), n = ent.n, girth = ent.girth.raw();
      wr(&len, 8);
      wr(key.data(), key.size());
      wr(&n, 8);
      wr(&girth, 8);
      for (const DistVal& d : ent.dist) {
        std::int64_t raw = d.raw();
        wr(&raw, 8);
      }
    }
  }

  void load(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    require(in.good(), ErrorCode::BadParameter, "cannot read lookup cache: " + path);
    auto rd = [&](void* p, std::size_t n) {
      in.read(static_cast<char*>(p), n);
      require(in.good(), ErrorCode::ParseError, "truncated lookup cache");
    };
    char magic[4];
    rd(magic, 4);
    require(std::string(magic, 4) == "GLT1", ErrorCode::ParseError, "bad lookup cache magic");
    std::int64_t kk, ww, count;
    rd(&kk, 8);
    rd(&ww, 8);
    rd(&count, 8);
    require(kk == k_ && ww == w_, ErrorCode::BadParameter,
            "lookup cache was built for different (k, w)");
    std::lock_guard<std::mutex> lock(mu_);
    for (std::int64_t i = 0; i < count; ++i) {
      std::int64_t len, n, girth;
      rd(&len, 8);
      std::string key(len, '\0');
      rd(key.data(), len);
      rd(&n, 8);
      rd(&girth, 8);
      Entry ent;
      ent.n = static_cast<int>(n);
      ent.girth = DistVal(girth);
      ent.dist.resize(n * n);
      for (auto& d : ent.dist) {
        std::int64_t raw;
        rd(&raw, 8);
        d = DistVal(raw);
      }
      cache_.emplace(std::move(key), std::move(ent));
    }
  }

 private:
  using Matrixish = std::shared_ptr<std::vector<DistVal>>;

  struct Entry {
    int n = 0;
    DistVal girth;
    std::vector<DistVal> dist;  // canonical n x n
  };

  void check(const PlaneGraph& h) const {
    require(h.n <= k_, ErrorCode::TooLarge,
            "graph has " + std::to_string(h.n) + " nodes, table limit " + std::to_string(k_));
    require(h.max_weight() <= w_, ErrorCode::WeightTooLarge,
            "edge weight exceeds the table limit");
  }

  const Entry& entry_for(const PlaneGraph& h, const Canon& c) {
    {
      std::lock_guard<std::mutex> lock(mu_);
      auto it = cache_.find(c.key);
      if (it != cache_.end()) {
        ++stats_.hits;
        return it->second;
      }
      ++stats_.misses;
    }
    Entry ent = compute(h, c);
    std::lock_guard<std::mutex> lock(mu_);
    return cache_.emplace(c.key, std::move(ent)).first->second;
  }

  static Entry compute(const PlaneGraph& h, const Canon& c) {
    Entry ent;
    ent.n = h.n;
    ent.girth = oracle::brute_girth(h);
    ent.dist.assign(h.n * h.n, DistVal::infinity());
    Adjacency adj(h);
    for (int u = 0; u < h.n; ++u) {
      SpTree t = dijkstra(adj, u);
      for (int v = 0; v < h.n; ++v)
        ent.dist[c.perm[u] * h.n + c.perm[v]] = to_distval(t.dist[v]);
    }
    return ent;
  }

  void enumerate_all() {
    for (int n = 1; n <= k_; ++n) {
      int pairs = n * (n - 1) / 2;
      std::int64_t states = 1;
      for (int i = 0; i < pairs; ++i) states *= (w_ + 1);
      for (std::int64_t code = 0; code < states; ++code) {
        PlaneGraph h;
        h.n = n;
        h.labels.assign(n, 0);
        h.rot.assign(n, {});
        std::int64_t c = code;
        for (int i = 0; i < n; ++i)
          for (int j = i + 1; j < n; ++j) {
            Weight w = static_cast<Weight>(c % (w_ + 1));
            c /= (w_ + 1);
            if (w == 0) continue;  // no edge
            int e = h.m();
            h.edges.push_back({i, j, w});
            h.rot[i].push_back(e);
            h.rot[j].push_back(e);
          }
        Canon cn = canonicalize(h);
        std::lock_guard<std::mutex> lock(mu_);
        if (!cache_.count(cn.key)) cache_.emplace(cn.key, compute(h, cn));
      }
    }
  }

  int k_;
  Weight w_;
  mutable std::mutex mu_;
  std::unordered_map<std::string, Entry> cache_;
  mutable Stats stats_;
};

inline LookupTable build_lookup(int k, Weight w, bool eager = false) {
  return LookupTable(k, w, eager);
}

inline border_dp::BorderSolution lookup_border(LookupTable& lt, const PlaneGraph& h,
                                               const std::vector<int>& border) {
  return lt.border_of(h, border);
}

inline DistVal lookup_girth(LookupTable& lt, const PlaneGraph& h) { return lt.girth_of(h); }

}  // namespace leaf_lookup
}  // namespace girth
