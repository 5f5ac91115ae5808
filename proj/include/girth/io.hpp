#pragma once

#include <charconv>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "girth/embed.hpp"
#include "girth/plane_graph.hpp"

namespace girth {

enum class GraphFormat { Edgelist, EdgelistWithRotation, Auto };

namespace detail {

inline std::vector<std::string_view> split_ws(std::string_view line) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && (line[i] == ' ' || line[i] == '\t' || line[i] == '\r')) ++i;
    std::size_t j = i;
    while (j < line.size() && line[j] != ' ' && line[j] != '\t' && line[j] != '\r') ++j;
    if (j > i) out.push_back(line.substr(i, j - i));
    i = j;
  }
  return out;
}

inline std::int64_t parse_int(std::string_view tok, int lineno) {
  std::int64_t v = 0;
  auto [p, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
  require(ec == std::errc() && p == tok.data() + tok.size(), ErrorCode::ParseError,
          "bad integer '" + std::string(tok) + "' on line " + std::to_string(lineno));
  return v;
}

}  // namespace detail

// Line grammar:
//   c <comment>
//   p planar <n> <m>
//   e <u> <v> <w>                 1-based node ids, nonnegative integer weight
//   r <v> <e1> <e2> ...           incident edge indices (1-based, input order), clockwise
inline PlaneGraph parse_graph(const std::string& text,
                              GraphFormat format = GraphFormat::Auto) {
  PlaneGraph g;
  bool have_p = false;
  int declared_m = 0;
  std::vector<std::pair<int, std::vector<int>>> rot_lines;
  std::istringstream in(text);
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    auto toks = detail::split_ws(line);
    if (toks.empty() || toks[0] == "c") continue;
    if (toks[0] == "p") {
      require(!have_p, ErrorCode::ParseError, "duplicate p line at line " + std::to_string(lineno));
      require(toks.size() == 4 && toks[1] == "planar", ErrorCode::ParseError,
              "expected 'p planar <n> <m>' at line " + std::to_string(lineno));
      g.n = static_cast<int>(detail::parse_int(toks[2], lineno));
      declared_m = static_cast<int>(detail::parse_int(toks[3], lineno));
      require(g.n >= 0 && declared_m >= 0, ErrorCode::ParseError, "negative sizes in p line");
      have_p = true;
    } else if (toks[0] == "e") {
      require(have_p, ErrorCode::ParseError, "e line before p line");
      require(toks.size() == 4, ErrorCode::ParseError,
              "expected 'e <u> <v> <w>' at line " + std::to_string(lineno));
      std::int64_t u = detail::parse_int(toks[1], lineno);
      std::int64_t v = detail::parse_int(toks[2], lineno);
      std::int64_t w = detail::parse_int(toks[3], lineno);
      require(u >= 1 && u <= g.n && v >= 1 && v <= g.n, ErrorCode::ParseError,
              "node id out of range at line " + std::to_string(lineno));
      require(w >= 0, ErrorCode::NegativeWeight,
              "edge weight at line " + std::to_string(lineno));
      require(u != v, ErrorCode::NonSimple, "self-loop at line " + std::to_string(lineno));
      g.edges.push_back({static_cast<int>(u - 1), static_cast<int>(v - 1), w});
    } else if (toks[0] == "r") {
      require(have_p, ErrorCode::ParseError, "r line before p line");
      require(toks.size() >= 2, ErrorCode::ParseError,
              "expected 'r <v> <edges...>' at line " + std::to_string(lineno));
      std::int64_t v = detail::parse_int(toks[1], lineno);
      require(v >= 1 && v <= g.n, ErrorCode::ParseError,
              "node id out of range at line " + std::to_string(lineno));
      std::vector<int> order;
      for (std::size_t i = 2; i < toks.size(); ++i)
        order.push_back(static_cast<int>(detail::parse_int(toks[i], lineno)) - 1);
      rot_lines.emplace_back(static_cast<int>(v - 1), std::move(order));
    } else {
      fail(ErrorCode::ParseError,
           "unknown line type '" + std::string(toks[0]) + "' at line " + std::to_string(lineno));
    }
  }
  require(have_p, ErrorCode::ParseError, "missing p line");
  require(g.m() == declared_m, ErrorCode::ParseError,
          "edge count mismatch: declared " + std::to_string(declared_m) + ", found " +
              std::to_string(g.m()));
  {
    std::vector<std::pair<int, int>> pairs;
    for (const auto& e : g.edges)
      pairs.emplace_back(std::min(e.u, e.v), std::max(e.u, e.v));
    std::sort(pairs.begin(), pairs.end());
    require(std::adjacent_find(pairs.begin(), pairs.end()) == pairs.end(), ErrorCode::NonSimple,
            "parallel edge in input");
  }
  g.labels.resize(g.n);
  for (int v = 0; v < g.n; ++v) g.labels[v] = v + 1;

  bool want_rotation = format == GraphFormat::EdgelistWithRotation ||
                       (format == GraphFormat::Auto && !rot_lines.empty());
  if (!want_rotation) {
    require(rot_lines.empty(), ErrorCode::ParseError, "unexpected r lines in edgelist input");
    return embed(g);
  }
  g.rot.assign(g.n, {});
  for (auto& [v, order] : rot_lines) {
    require(g.rot[v].empty(), ErrorCode::ParseError,
            "duplicate r line for node " + std::to_string(v + 1));
    for (int e : order)
      require(e >= 0 && e < g.m(), ErrorCode::ParseError, "rotation names unknown edge");
    g.rot[v] = std::move(order);
  }
  ValidationReport r = validate(g);
  if (!r.ok) {
    const std::string& first = r.violations.front();
    if (first.find("Euler") != std::string::npos)
      fail(ErrorCode::NotPlanar, "rotation is not a planar embedding: " + first);
    fail(ErrorCode::ParseError, first);
  }
  g.outer = choose_outer_faces(g);
  return g;
}

inline std::string serialize_graph(const PlaneGraph& g, bool with_rotation = true) {
  std::ostringstream out;
  out << "p planar " << g.n << " " << g.m() << "\n";
  for (const auto& e : g.edges)
    out << "e " << e.u + 1 << " " << e.v + 1 << " " << e.w << "\n";
  if (with_rotation)
    for (int v = 0; v < g.n; ++v) {
      if (g.rot[v].empty()) continue;
      out << "r " << v + 1;
      for (int e : g.rot[v]) out << " " << e + 1;
      out << "\n";
    }
  return out.str();
}

}  // namespace girth
