#pragma once

#include <map>
#include <optional>
#include <utility>
#include <vector>

#include "tolkit/model.hpp"

namespace tolkit {

struct BorderEliminationState {
  VertexId u = -1;
  VertexId sentinel_t = -1;
  bool reversed = false;  // the stages ran on reverse(rep)
  VSet Nu;                // N(u) in the target graph
  VSet V0;                // V0(u) in the target graph
  std::map<VertexId, Coord> L0_of;
  Coord ell0;
  VSet N1, N2;
  std::optional<Coord> r0;
  Coord L0;
  // R, R', R'', R''' in the working frame, sentinel included.
  std::vector<ProjectionRep> stage_reps;
};

// Squeeze bands around a segment; endpoints of band members lie in (a_lo, a_hi) on L1 and (b_lo, b_hi) on L2.
struct Band {
  VSet members;
  Coord a_lo, a_hi, b_lo, b_hi;
};

struct StageOptions {
  // The stage reps only represent G - u; u's adjacencies are checked after the last stage.
  bool verify_without_u = false;
  std::optional<Band> band;
};

// Appends a bounded vertex strictly right of every parallelogram.
std::pair<ProjectionRep, VertexId> add_sentinel(const ProjectionRep& rep);

// g is the target graph including the sentinel.
BorderEliminationState border_landmarks(const ProjectionRep& rep, const Graph& g, VertexId u, VertexId t);

ProjectionRep transformation1(const ProjectionRep& rep, const Graph& g, BorderEliminationState& st,
                              const StageOptions& opt = {});
ProjectionRep transformation2(const ProjectionRep& rep, const Graph& g, BorderEliminationState& st,
                              const StageOptions& opt = {});
ProjectionRep transformation3(const ProjectionRep& rep, const Graph& g, BorderEliminationState& st,
                              const StageOptions& opt = {});

// Landmarks, then the three stages. rep must contain the sentinel t; u must have the right border property.
ProjectionRep run_border_stages(const ProjectionRep& rep, const Graph& g, VertexId u, VertexId t,
                                BorderEliminationState& st, const StageOptions& opt = {});

std::pair<ProjectionRep, BorderEliminationState> eliminate_border(const ProjectionRep& rep, VertexId u);

}  // namespace tolkit
