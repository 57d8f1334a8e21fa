#pragma once

#include <map>
#include <optional>
#include <string>

#include "tolkit/model.hpp"

namespace tolkit {

struct NamedInstance {
  ProjectionRep rep;
  std::optional<TrapezoidRep> rt;
  std::map<std::string, VertexId> names;

  VertexId id(const std::string& name) const { return names.at(name); }
};

// Path z - u - v - w where w is an unbounded line crossing P_u below u's slope.
NamedInstance path_instance();

// Six vertices u, w1, w2, u*, x, y; u unbounded with N(u) = {w1, w2} and V0(u) = {u*, x}.
// The sentinel t is added by the elimination itself.
NamedInstance landmark_instance();

// u is a line crossed by its low-slope covering vertex u*; V0(u) = {u*, x, x'} reaches both sides, with
// w before x and x' before w', so neither border property holds. rt is an interval model of the graph.
NamedInstance two_sided_instance();

}  // namespace tolkit
