#pragma once

#include <utility>
#include <vector>

#include "tolkit/model.hpp"

namespace tolkit {

struct Segment {
  Coord a_ell;  // on L1
  Coord b_ell;  // on L2
  bool operator==(const Segment& o) const { return a_ell == o.a_ell && b_ell == o.b_ell; }
};

enum class Direction { Before, After };
enum class Line { L1, L2 };

struct Placement {
  Coord target;
  Direction direction = Direction::Before;
  Line line = Line::L1;
};

// Rotation by pi: x on L1 goes to -x on L2 and vice versa. Slope keys are unchanged.
ProjectionRep reverse(const ProjectionRep& rep);
TrapezoidRep flip_vertical(const TrapezoidRep& rt);

// Midpoint between target and its nearest neighbour in `pts` on the requested side (target -/+ 1 if none).
Coord resolve_among(const std::vector<Coord>& pts, const Coord& target, Direction dir);
Coord resolve(const Placement& p, const ProjectionRep& rep);

// Half the smallest gap between consecutive distinct endpoints (both lines) and slope keys of rep.
Coord ambient_epsilon(const ProjectionRep& rep);

ProjectionRep squeeze(const ProjectionRep& sub, const Segment& ell, const Coord& eps);

ProjectionRep lower_slope_of_nested(const ProjectionRep& rep, VertexId u, VertexId v);

std::pair<ProjectionRep, VertexId> ensure_min_slope_maximal(const ProjectionRep& rep);

}  // namespace tolkit
