#pragma once

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "tolkit/model.hpp"

namespace tolkit {

struct ToleranceVertex {
  Coord lo, hi, t;
  bool operator==(const ToleranceVertex& o) const { return lo == o.lo && hi == o.hi && t == o.t; }
};

struct ToleranceRep {
  std::vector<ToleranceVertex> v;
  int size() const { return static_cast<int>(v.size()); }
  bool operator==(const ToleranceRep& o) const { return v == o.v; }
};

Graph tolerance_graph(const ToleranceRep& tr);
ProjectionRep tolerance_to_projection(const ToleranceRep& tr);

ToleranceRep gen_tolerance_rep(int n, std::uint64_t seed, double unbounded_fraction = 0.3);
ProjectionRep gen_parallelogram_rep(int n, std::uint64_t seed);
// Random parallelograms plus k random lines; no trapezoid model is implied.
ProjectionRep gen_projection_rep(int n, int k, std::uint64_t seed);

std::optional<ProjectionRep> unbind_vertex(const ProjectionRep& rep, VertexId v);
// Line placed anywhere on the grid of endpoint gaps; inevitable placements are preferred.
std::optional<ProjectionRep> unbind_vertex_anywhere(const ProjectionRep& rep, VertexId v, bool prefer_inevitable);

std::optional<std::pair<ProjectionRep, TrapezoidRep>> gen_condition1_instance(int n, std::uint64_t seed);

// Parallelogram rep as trapezoid model, then up to k vertices unbound anywhere and canonicalized.
std::optional<std::pair<ProjectionRep, TrapezoidRep>> gen_unbounded_instance(int n, int k, std::uint64_t seed);

// Trapezoid model of g built by inserting vertices in random order on the midpoint grid of the corners
// placed so far; nullopt when every attempt dead-ends.
std::optional<TrapezoidRep> find_trapezoid_model(const Graph& g, std::uint64_t seed, int attempts = 40);

// One unbounded vertex with connected V0 and neither border property, plus a trapezoid model.
std::optional<std::pair<ProjectionRep, TrapezoidRep>> gen_general_instance(int n, std::uint64_t seed);

}  // namespace tolkit
