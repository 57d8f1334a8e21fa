#include <gtest/gtest.h>

#include "test_util.hpp"
#include "tolkit/analysis.hpp"
#include "tolkit/samples.hpp"
#include "tolkit/instances.hpp"
#include "tolkit/transforms.hpp"

using namespace tolkit;
using tolkit::testing::edge_set;
using tolkit::testing::q;
using tolkit::testing::shifted_to_origin;

namespace {

// x=0, y=1 bounded; line 2 sees x only, line 3 sees x and y. Line 2 has the smaller slope key.
ProjectionRep nested_lines(const Coord& inner_top = 2, const Coord& inner_bottom = 3) {
  ProjectionRep rep;
  rep.v = {Pgram::box(0, 4, 10, 14), Pgram::box(6, 8, 17, 19), Pgram::line(inner_top, inner_bottom),
           Pgram::line(7, 12)};
  return rep;
}

}  // namespace

TEST(Reverse, PathKeepsEdges) {
  const NamedInstance f = path_instance();
  const ProjectionRep r = reverse(f.rep);
  EXPECT_TRUE(validate(r).empty());
  EXPECT_EQ(edge_set(induced_graph(r)), edge_set(induced_graph(f.rep)));
}

TEST(Reverse, SingleVertex) {
  ProjectionRep rep;
  rep.v.push_back(Pgram::line(3, 5));
  const ProjectionRep r = reverse(rep);
  ASSERT_EQ(r.size(), 1);
  EXPECT_TRUE(r[0].unbounded());
  EXPECT_EQ(slope_key(r[0]), slope_key(rep[0]));
}

TEST(Reverse, Properties) {
  for (std::uint64_t seed = 0; seed < 100; ++seed) {
    const ProjectionRep rep = gen_projection_rep(8, static_cast<int>(seed % 3), seed);
    const ProjectionRep r = reverse(rep);
    EXPECT_EQ(induced_graph(r), induced_graph(rep));
    EXPECT_EQ(shifted_to_origin(reverse(r)), shifted_to_origin(rep));
    for (VertexId a = 0; a < rep.size(); ++a) {
      EXPECT_EQ(slope_key(r[a]), slope_key(rep[a]));
      for (VertexId b = 0; b < rep.size(); ++b) EXPECT_EQ(precedes(rep[a], rep[b]), precedes(r[b], r[a]));
    }
  }
}

TEST(FlipVertical, Properties) {
  const TrapezoidRep chain{{{0, 1, 0, 1}, {2, 3, 2, 3}}};
  const TrapezoidRep fc = flip_vertical(chain);
  EXPECT_TRUE(precedes(fc[1], fc[0]));
  EXPECT_EQ(flip_vertical(fc), chain);
  for (std::uint64_t seed = 0; seed < 100; ++seed) {
    const TrapezoidRep rt = as_trapezoids(gen_parallelogram_rep(8, seed));
    const TrapezoidRep f = flip_vertical(rt);
    EXPECT_EQ(induced_graph_trapezoid(f), induced_graph_trapezoid(rt));
    EXPECT_EQ(flip_vertical(f), rt);
  }
}

TEST(Resolve, Examples) {
  EXPECT_EQ(resolve_among({0, 2}, 2, Direction::Before), 1);
  EXPECT_EQ(resolve_among({0}, 0, Direction::After), 1);
  EXPECT_EQ(resolve_among({0, ratio(1, 3), 2}, ratio(1, 3), Direction::After), q("7/6"));
  EXPECT_EQ(resolve_among({0}, 0, Direction::Before), -1);
}

TEST(Resolve, UsesTheRequestedLine) {
  ProjectionRep rep;
  rep.v = {Pgram::box(0, 4, 10, 14)};
  EXPECT_EQ(resolve(Placement{4, Direction::Before, Line::L1}, rep), 2);
  EXPECT_EQ(resolve(Placement{14, Direction::After, Line::L2}, rep), 15);
}

TEST(AmbientEpsilon, HalfTheSmallestGap) {
  ProjectionRep rep;
  rep.v = {Pgram::box(0, 4, 10, 14), Pgram::box(5, 9, 20, 24)};
  // upper gaps 4,1,4; lower gaps 4,6,4; keys 10 and 15
  EXPECT_EQ(ambient_epsilon(rep), ratio(1, 2));
}

TEST(Squeeze, SingleVertex) {
  ProjectionRep rep;
  rep.v.push_back(Pgram::box(0, 4, 1, 5));
  const ProjectionRep s = squeeze(rep, Segment{10, 20}, 1);
  EXPECT_TRUE(validate(s).empty());
  EXPECT_LE(abs(s[0].L - 10), ratio(1, 2));
  EXPECT_LE(abs(s[0].r - 20), ratio(1, 2));
}

TEST(Squeeze, PathKeepsEdges) {
  const NamedInstance f = path_instance();
  const ProjectionRep s = squeeze(f.rep, Segment{-3, q("17/2")}, ratio(1, 10));
  EXPECT_TRUE(validate(s).empty());
  EXPECT_EQ(edge_set(induced_graph(s)), edge_set(induced_graph(f.rep)));
}

TEST(Squeeze, RejectsNonPositiveEps) {
  const NamedInstance f = path_instance();
  EXPECT_THROW(squeeze(f.rep, Segment{0, 0}, 0), Error);
  try {
    squeeze(f.rep, Segment{0, 0}, -1);
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::EpsNonPositive);
  }
}

TEST(Squeeze, StaysInBandAndKeepsOrder) {
  for (std::uint64_t seed = 0; seed < 80; ++seed) {
    const ProjectionRep rep = gen_projection_rep(7, 2, seed);
    const Segment ell{ratio(static_cast<long>(seed) - 40, 3), ratio(static_cast<long>(seed) * 7, 5)};
    const Coord eps = ratio(1, 1 + static_cast<long>(seed % 9));
    const ProjectionRep s = squeeze(rep, ell, eps);
    EXPECT_EQ(induced_graph(s), induced_graph(rep));
    for (VertexId a = 0; a < rep.size(); ++a) {
      for (const Coord* c : {&s[a].L, &s[a].R}) EXPECT_LE(abs(*c - ell.a_ell), eps / 2);
      for (const Coord* c : {&s[a].l, &s[a].r}) EXPECT_LE(abs(*c - ell.b_ell), eps / 2);
      for (VertexId b = 0; b < rep.size(); ++b) {
        EXPECT_EQ(rep[a].L < rep[b].L, s[a].L < s[b].L);
        EXPECT_EQ(rep[a].r < rep[b].r, s[a].r < s[b].r);
        EXPECT_EQ(slope_key(rep[a]) < slope_key(rep[b]), slope_key(s[a]) < slope_key(s[b]));
      }
    }
  }
}

TEST(LowerSlope, PreconditionWhenAlreadyOrdered) {
  const ProjectionRep rep = nested_lines(1, 9);  // key 8 above the outer line's 5
  ASSERT_EQ(induced_graph(rep).neighbors(2), (VSet{0}));
  try {
    lower_slope_of_nested(rep, 3, 2);
    FAIL() << "expected PreconditionFailed";
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::PreconditionFailed);
  }
  EXPECT_THROW(lower_slope_of_nested(rep, 2, 3), Error);
  EXPECT_THROW(lower_slope_of_nested(rep, 0, 2), Error);
}

TEST(LowerSlope, NestedLineLeftOfOuter) {
  const ProjectionRep rep = nested_lines();
  ASSERT_TRUE(precedes(rep[2], rep[3]));
  const ProjectionRep out = lower_slope_of_nested(rep, 3, 2);
  EXPECT_LT(slope_key(out[3]), slope_key(out[2]));
  EXPECT_EQ(induced_graph(out), induced_graph(rep));
  EXPECT_EQ(out[2].L, rep[2].L);  // the lower endpoint moves
  EXPECT_EQ(out[3], rep[3]);
}

TEST(LowerSlope, NestedLineRightOfOuter) {
  const ProjectionRep rep = reverse(nested_lines());
  ASSERT_TRUE(precedes(rep[3], rep[2]));
  const ProjectionRep out = lower_slope_of_nested(rep, 3, 2);
  EXPECT_LT(slope_key(out[3]), slope_key(out[2]));
  EXPECT_EQ(induced_graph(out), induced_graph(rep));
  EXPECT_EQ(out[2].r, rep[2].r);  // the upper endpoint moves
}

TEST(EnsureMinSlope, Examples) {
  const NamedInstance f = path_instance();
  const auto [same, w] = ensure_min_slope_maximal(f.rep);
  EXPECT_EQ(same, f.rep);
  EXPECT_EQ(w, f.id("w"));

  const auto [moved, u] = ensure_min_slope_maximal(nested_lines());
  EXPECT_EQ(u, 3);
  EXPECT_LT(slope_key(moved[3]), slope_key(moved[2]));
  EXPECT_EQ(induced_graph(moved), induced_graph(nested_lines()));

  ProjectionRep twins = nested_lines();
  twins[3] = Pgram::line(1, 5);  // now both lines see only x, so neither is nested
  const auto [kept, m] = ensure_min_slope_maximal(twins);
  EXPECT_EQ(kept, twins);
  EXPECT_EQ(m, 2);

  EXPECT_THROW(ensure_min_slope_maximal(gen_parallelogram_rep(4, 1)), Error);
}

TEST(EnsureMinSlope, Properties) {
  int nested = 0;
  for (std::uint64_t seed = 0; seed < 150; ++seed) {
    const ProjectionRep rep = canonicalize(gen_projection_rep(8, 3, seed));
    if (rep.unbounded().empty()) continue;
    const auto [out, u] = ensure_min_slope_maximal(rep);
    if (!(out == rep)) ++nested;
    EXPECT_EQ(out.unbounded(), rep.unbounded());
    EXPECT_EQ(induced_graph(out), induced_graph(rep));
    EXPECT_TRUE(is_unbounded_maximal(out, u));
    for (VertexId x : out.unbounded()) EXPECT_LE(slope_key(out[u]), slope_key(out[x]));
  }
  RecordProperty("changed", nested);
}
