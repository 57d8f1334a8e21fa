#pragma once

#include <string>
#include <vector>

#include "tolkit/model.hpp"

namespace tolkit {

enum class RoundMethod { Canonicalize, Components, Reinsert, Border, General };

const char* round_method_name(RoundMethod m);

struct RoundRecord {
  int round = 0;
  VertexId u = -1;
  RoundMethod method = RoundMethod::Border;
  int unbounded_before = 0, unbounded_after = 0;
};

struct PipelineReport {
  std::vector<RoundRecord> rounds;
  // Representation after each round; rounds run on a component hold only that component.
  std::vector<ProjectionRep> reps;
};

// Bounded representation of the same graph. Needs Condition 3 on (rep, rt).
ProjectionRep eliminate_all(const ProjectionRep& rep, const TrapezoidRep& rt, PipelineReport* report = nullptr);

// A bounded parallelogram for u, added to a representation of G - u, that reproduces u's neighbourhood.
// `rest` has ids of g with u removed (order kept); the result has u back at its own id.
ProjectionRep insert_bounded_vertex(const ProjectionRep& rest, const Graph& g, VertexId u);

}  // namespace tolkit
