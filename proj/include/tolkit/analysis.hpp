#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "tolkit/model.hpp"

namespace tolkit {

struct CoveringReport {
  VertexId subject = -1;
  VSet covering_set;
  std::vector<VSet> v0_components;
  VSet v0_union;
};

CoveringReport covering(const Graph& g, VertexId u);
// Union of the components of G - N[u] that contain a covering vertex of u.
VSet v0(const Graph& g, VertexId u);

bool is_inevitable(const ProjectionRep& rep, VertexId u);
ProjectionRep canonicalize(const ProjectionRep& rep);
bool is_canonical(const ProjectionRep& rep);

enum class Side { Right, Left };
bool border_property(const ProjectionRep& rep, const Graph& g, VertexId u, Side side);
// Same test, without re-deriving g from rep; used on stage reps whose own graph differs from g.
bool border_property_unchecked(const ProjectionRep& rep, const Graph& g, VertexId u, Side side);

struct QSets {
  VSet Qu, Q1, Q2;
  bool v0_left = true;  // all trapezoids of V0(u) lie left of T_u
};

QSets q_sets(const ProjectionRep& rep, const TrapezoidRep& rt, VertexId u);

struct ConditionReport {
  bool condition1 = false, condition2 = false, condition3 = false;
  std::array<VSet, 3> witnesses;
};

ConditionReport check_conditions(const ProjectionRep& rep, const TrapezoidRep& rt);
// Condition 2 needs no trapezoid model: no unbounded vertex has a strictly nested unbounded neighbourhood.
bool condition2_holds(const ProjectionRep& rep);

std::optional<std::array<VertexId, 3>> nested_independent_triple(const Graph& g);

bool is_module(const Graph& g, const VSet& m);

bool is_unbounded_maximal(const ProjectionRep& rep, VertexId u);
bool is_unbounded_maximal(const ProjectionRep& rep, const Graph& g, VertexId u);

bool strict_subset(const VSet& a, const VSet& b);
bool subset(const VSet& a, const VSet& b);
VSet set_minus(const VSet& a, const VSet& b);
VSet set_union(const VSet& a, const VSet& b);
VSet set_inter(const VSet& a, const VSet& b);

// Structural checks on a representation; each returns the first violation as text.
std::optional<std::string> check_unbounded_neighbors(const ProjectionRep& rep);     // neighbors of unbounded u
std::optional<std::string> check_low_slope_crossing(const ProjectionRep& rep);      // crossings below u's slope
std::optional<std::string> check_crossing_containment(const ProjectionRep& rep);    // N(u) inside N(v)
std::optional<std::string> check_bounded_covering(const ProjectionRep& rep);        // canonical reps only

}  // namespace tolkit
