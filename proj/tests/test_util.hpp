#pragma once

#include <set>
#include <string>
#include <utility>

#include "tolkit/model.hpp"

namespace tolkit::testing {

inline Coord q(const std::string& s) { return parse_coord(s); }

inline std::set<std::pair<VertexId, VertexId>> edge_set(const Graph& g) {
  const auto e = g.edges();
  return {e.begin(), e.end()};
}

inline Graph make_graph(int n, std::initializer_list<std::pair<VertexId, VertexId>> edges) {
  Graph g(n);
  for (auto [a, b] : edges) g.add_edge(a, b);
  return g;
}

// Translation that moves the smallest endpoint on each line to zero.
inline ProjectionRep shifted_to_origin(const ProjectionRep& rep) {
  if (rep.size() == 0) return rep;
  const Coord a = endpoints_upper(rep).front();
  const Coord b = endpoints_lower(rep).front();
  ProjectionRep out = rep;
  for (Pgram& p : out.v) {
    p.L -= a;
    p.R -= a;
    p.l -= b;
    p.r -= b;
  }
  return out;
}

}  // namespace tolkit::testing
