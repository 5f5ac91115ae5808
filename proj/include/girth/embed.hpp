#pragma once

#include <boost/graph/adjacency_list.hpp>
#include <boost/graph/boyer_myrvold_planar_test.hpp>
#include <boost/property_map/property_map.hpp>
#include <vector>

#include "girth/plane_graph.hpp"

namespace girth {

namespace detail {
using BoostGraph =
    boost::adjacency_list<boost::vecS, boost::vecS, boost::undirectedS, boost::no_property,
                          boost::property<boost::edge_index_t, int>>;
}  // namespace detail

inline bool is_planar(const PlaneGraph& g) {
  detail::BoostGraph bg(g.n);
  for (int e = 0; e < g.m(); ++e)
    boost::add_edge(g.edges[e].u, g.edges[e].v, e, bg);
  return boost::boyer_myrvold_planarity_test(bg);
}

// Equip the (abstract) graph with a rotation system; rotation present on the
// input is discarded and recomputed.
inline PlaneGraph embed(const PlaneGraph& g) {
  PlaneGraph out = g;
  detail::BoostGraph bg(g.n);
  for (int e = 0; e < g.m(); ++e)
    boost::add_edge(g.edges[e].u, g.edges[e].v, e, bg);
  using EdgeDesc = boost::graph_traits<detail::BoostGraph>::edge_descriptor;
  std::vector<std::vector<EdgeDesc>> storage(g.n);
  bool planar = boost::boyer_myrvold_planarity_test(
      boost::boyer_myrvold_params::graph = bg,
      boost::boyer_myrvold_params::embedding =
          boost::make_iterator_property_map(storage.begin(),
                                            boost::get(boost::vertex_index, bg)));
  require(planar, ErrorCode::NotPlanar, "graph has a K5/K3,3 obstruction");
  auto index = boost::get(boost::edge_index, bg);
  out.rot.assign(g.n, {});
  for (int v = 0; v < g.n; ++v) {
    out.rot[v].reserve(storage[v].size());
    for (const EdgeDesc& ed : storage[v]) out.rot[v].push_back(boost::get(index, ed));
  }
  out.outer = choose_outer_faces(out);
  require_valid(out, "embed");
  return out;
}

}  // namespace girth
