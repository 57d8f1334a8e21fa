#include <gtest/gtest.h>

#include "test_util.hpp"
#include "tolkit/analysis.hpp"
#include "tolkit/samples.hpp"
#include "tolkit/instances.hpp"

using namespace tolkit;
using tolkit::testing::make_graph;
using tolkit::testing::q;

namespace {

// x, y bounded; u a line crossing x only; v a line crossing x and y below their slopes.
ProjectionRep nested_lines() {
  ProjectionRep rep;
  rep.v = {Pgram::box(0, 4, 10, 14), Pgram::box(6, 8, 17, 19), Pgram::line(2, 3), Pgram::line(7, 12)};
  return rep;
}

// x, y bounded; u and w lines that both see only x.
ProjectionRep twin_lines() {
  ProjectionRep rep;
  rep.v = {Pgram::box(0, 4, 10, 14), Pgram::box(6, 8, 17, 19), Pgram::line(2, 3), Pgram::line(1, 5)};
  return rep;
}

VSet brute_covering(const Graph& g, VertexId u) {
  VSet out;
  const VSet nu = g.neighbors(u);
  for (VertexId x = 0; x < g.size(); ++x)
    if (x != u && !g.has_edge(u, x) && subset(nu, g.neighbors(x))) out.insert(x);
  return out;
}

}  // namespace

TEST(Covering, IsolatedVertexIsCoveredByAll) {
  const Graph g = make_graph(4, {{1, 2}, {2, 3}});
  const CoveringReport c = covering(g, 0);
  EXPECT_EQ(c.covering_set, (VSet{1, 2, 3}));
  EXPECT_EQ(c.v0_union, (VSet{1, 2, 3}));
}

TEST(Covering, PathEndpoint) {
  // z=0, u=1, v=2, w=3
  const Graph g = make_graph(4, {{0, 1}, {1, 2}, {2, 3}});
  const CoveringReport c = covering(g, 3);
  EXPECT_EQ(c.covering_set, (VSet{1}));
  ASSERT_EQ(c.v0_components.size(), 1u);
  EXPECT_EQ(c.v0_components[0], (VSet{0, 1}));
  EXPECT_EQ(v0(g, 3), (VSet{0, 1}));
}

TEST(Covering, CompleteGraph) {
  const Graph g = make_graph(4, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}});
  for (VertexId u = 0; u < 4; ++u) {
    EXPECT_TRUE(covering(g, u).covering_set.empty());
    EXPECT_TRUE(v0(g, u).empty());
  }
}

TEST(Covering, MatchesBruteForce) {
  for (std::uint64_t seed = 0; seed < 60; ++seed) {
    const Graph g = induced_graph(gen_projection_rep(9, 2, seed));
    for (VertexId u = 0; u < g.size(); ++u) {
      const CoveringReport c = covering(g, u);
      EXPECT_EQ(c.covering_set, brute_covering(g, u));
      VSet outside;
      for (VertexId x = 0; x < g.size(); ++x)
        if (x != u && !g.has_edge(u, x)) outside.insert(x);
      VSet expect;
      for (const VSet& comp : g.components(outside))
        if (!set_inter(comp, c.covering_set).empty()) expect = set_union(expect, comp);
      EXPECT_EQ(c.v0_union, expect);
    }
  }
}

TEST(Inevitable, Examples) {
  const NamedInstance f = path_instance();
  EXPECT_TRUE(is_inevitable(f.rep, f.id("w")));

  ProjectionRep lonely;
  lonely.v = {Pgram::line(0, 0), Pgram::box(10, 11, 12, 13)};
  EXPECT_FALSE(is_inevitable(lonely, 0));

  ProjectionRep crossing;
  crossing.v = {Pgram::box(0, 4, 1, 5), Pgram::line(2, q("7/2"))};
  EXPECT_TRUE(is_inevitable(crossing, 1));
}

TEST(Canonicalize, Examples) {
  const NamedInstance f = path_instance();
  EXPECT_EQ(canonicalize(f.rep), f.rep);
  EXPECT_TRUE(is_canonical(f.rep));

  ProjectionRep lonely;
  lonely.v = {Pgram::line(0, 0), Pgram::box(10, 11, 12, 13)};
  const ProjectionRep c = canonicalize(lonely);
  EXPECT_TRUE(c[0].bounded());
  EXPECT_EQ(induced_graph(c), induced_graph(lonely));
  EXPECT_TRUE(is_canonical(c));

  const ProjectionRep boxes = gen_parallelogram_rep(7, 4);
  EXPECT_EQ(canonicalize(boxes), boxes);
}

TEST(Canonicalize, Properties) {
  for (std::uint64_t seed = 0; seed < 80; ++seed) {
    const ProjectionRep rep = gen_projection_rep(8, 1 + static_cast<int>(seed % 4), seed);
    const ProjectionRep c = canonicalize(rep);
    EXPECT_EQ(induced_graph(c), induced_graph(rep)) << "seed " << seed;
    EXPECT_TRUE(subset(c.unbounded(), rep.unbounded()));
    for (VertexId u : c.unbounded()) EXPECT_TRUE(is_inevitable(c, u));
    EXPECT_EQ(canonicalize(c), c);
  }
}

TEST(BorderProperty, TrivialCases) {
  ProjectionRep lonely;
  lonely.v = {Pgram::line(0, 0), Pgram::box(10, 11, 12, 13)};
  const Graph g = induced_graph(lonely);
  EXPECT_TRUE(border_property(lonely, g, 0, Side::Right));
  EXPECT_TRUE(border_property(lonely, g, 0, Side::Left));

  const NamedInstance f = path_instance();
  const Graph gf = induced_graph(f.rep);
  // N(w) = {v} and the covering vertex u is inside N(v), so both sides are trivially fine.
  EXPECT_TRUE(border_property(f.rep, gf, f.id("w"), Side::Right));
}

TEST(BorderProperty, TwoSidedInstanceFailsBoth) {
  const NamedInstance f = two_sided_instance();
  const Graph g = induced_graph(f.rep);
  EXPECT_FALSE(border_property(f.rep, g, f.id("u"), Side::Right));
  EXPECT_FALSE(border_property(f.rep, g, f.id("u"), Side::Left));
}

TEST(BorderProperty, RejectsWrongGraph) {
  const NamedInstance f = path_instance();
  EXPECT_THROW(border_property(f.rep, Graph(4), f.id("w"), Side::Right), Error);
}

TEST(UnboundedMaximal, Examples) {
  const NamedInstance f = path_instance();
  EXPECT_TRUE(is_unbounded_maximal(f.rep, f.id("w")));

  const ProjectionRep nested = nested_lines();
  const Graph g = induced_graph(nested);
  ASSERT_EQ(g.neighbors(2), (VSet{0}));
  ASSERT_EQ(g.neighbors(3), (VSet{0, 1}));
  EXPECT_FALSE(is_unbounded_maximal(nested, 2));
  EXPECT_TRUE(is_unbounded_maximal(nested, 3));
  EXPECT_FALSE(condition2_holds(nested));

  const ProjectionRep twins = twin_lines();
  ASSERT_EQ(induced_graph(twins).neighbors(3), (VSet{0}));
  EXPECT_TRUE(is_unbounded_maximal(twins, 2));
  EXPECT_TRUE(is_unbounded_maximal(twins, 3));
  EXPECT_TRUE(condition2_holds(twins));
}

TEST(QSets, EqualNeighbourhoodsAreNotNested) {
  const ProjectionRep twins = twin_lines();
  // Interval model of edges x-u, x-w: x spans both lines, y far right.
  const TrapezoidRep rt{{{0, 10, 0, 10}, {20, 21, 20, 21}, {1, 2, 1, 2}, {3, 4, 3, 4}}};
  ASSERT_EQ(induced_graph_trapezoid(rt), induced_graph(twins));
  const QSets qs = q_sets(twins, rt, 2);
  EXPECT_TRUE(qs.Qu.empty());
  EXPECT_FALSE(qs.v0_left);  // V0(u) = {w}, which lies right of T_u

  const ConditionReport c = check_conditions(twins, rt);
  EXPECT_FALSE(c.condition1);
  EXPECT_TRUE(c.condition2);
  EXPECT_TRUE(c.condition3);
}

TEST(QSets, RejectsDisagreeingModel) {
  const ProjectionRep twins = twin_lines();
  const TrapezoidRep rt{{{0, 1, 0, 1}, {20, 21, 20, 21}, {2, 3, 2, 3}, {4, 5, 4, 5}}};
  EXPECT_THROW(q_sets(twins, rt, 2), Error);
}

TEST(QSets, PartitionMatchesSides) {
  int exercised = 0;
  for (std::uint64_t seed = 0; seed < 150; ++seed) {
    const auto inst = gen_unbounded_instance(7, 3, seed);
    if (!inst) continue;
    const auto& [rep, rt] = *inst;
    const Graph g = induced_graph(rep);
    for (VertexId u : rep.unbounded()) {
      QSets qs;
      try {
        qs = q_sets(rep, rt, u);
      } catch (const Error&) {
        continue;
      }
      ++exercised;
      EXPECT_EQ(set_union(qs.Q1, qs.Q2), qs.Qu);
      EXPECT_TRUE(set_inter(qs.Q1, qs.Q2).empty());
      for (VertexId v : qs.Qu) EXPECT_TRUE(strict_subset(g.neighbors(v), g.neighbors(u)));
      for (VertexId v : qs.Q2) EXPECT_TRUE(qs.v0_left ? precedes(rt[u], rt[v]) : precedes(rt[v], rt[u]));
    }
  }
  EXPECT_GT(exercised, 0);
}

TEST(Conditions, OneUnboundedGivesAll) {
  int seen = 0;
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    const auto inst = gen_condition1_instance(7, seed);
    if (!inst) continue;
    ++seen;
    const ConditionReport c = check_conditions(inst->first, inst->second);
    EXPECT_TRUE(c.condition1 && c.condition2 && c.condition3);
  }
  EXPECT_GT(seen, 0);
}

TEST(Conditions, AllBounded) {
  const ProjectionRep rep = gen_parallelogram_rep(6, 11);
  const ConditionReport c = check_conditions(rep, as_trapezoids(rep));
  EXPECT_FALSE(c.condition1);
  EXPECT_TRUE(c.condition2);
  EXPECT_TRUE(c.condition3);
}

TEST(NestedTriple, Examples) {
  EXPECT_FALSE(nested_independent_triple(make_graph(3, {{0, 1}, {0, 2}, {1, 2}})));
  // star centred at c=0 with leaves 1,2,3 plus isolated a=4
  EXPECT_FALSE(nested_independent_triple(make_graph(5, {{0, 1}, {0, 2}, {0, 3}})));
  // a=0, b=1, c=2, p=3, q=4, r=5
  const Graph w = make_graph(6, {{0, 3}, {1, 3}, {1, 4}, {2, 3}, {2, 4}, {2, 5}});
  const auto t = nested_independent_triple(w);
  ASSERT_TRUE(t);
  EXPECT_EQ(*t, (std::array<VertexId, 3>{0, 1, 2}));
}

TEST(NestedTriple, WitnessIsValid) {
  for (std::uint64_t seed = 0; seed < 60; ++seed) {
    const Graph g = induced_graph(gen_projection_rep(8, 0, seed));
    const auto t = nested_independent_triple(g);
    if (!t) continue;
    const auto [a, b, c] = *t;
    EXPECT_FALSE(g.has_edge(a, b) || g.has_edge(b, c) || g.has_edge(a, c));
    EXPECT_TRUE(strict_subset(g.neighbors(a), g.neighbors(b)));
    EXPECT_TRUE(strict_subset(g.neighbors(b), g.neighbors(c)));
  }
}

TEST(Module, Examples) {
  const Graph p4 = make_graph(4, {{0, 1}, {1, 2}, {2, 3}});
  EXPECT_TRUE(is_module(p4, {}));
  EXPECT_TRUE(is_module(p4, {0, 1, 2, 3}));
  EXPECT_TRUE(is_module(p4, {2}));
  EXPECT_FALSE(is_module(p4, {1, 2}));
  // 1 and 2 are twins: both see exactly 0 and 3
  const Graph twins = make_graph(4, {{0, 1}, {0, 2}, {1, 3}, {2, 3}});
  EXPECT_TRUE(is_module(twins, {1, 2}));
}

TEST(SetHelpers, Basics) {
  EXPECT_TRUE(strict_subset({1}, {1, 2}));
  EXPECT_FALSE(strict_subset({1, 2}, {1, 2}));
  EXPECT_TRUE(subset({1, 2}, {1, 2}));
  EXPECT_EQ(set_minus({1, 2, 3}, {2}), (VSet{1, 3}));
  EXPECT_EQ(set_union({1}, {3}), (VSet{1, 3}));
  EXPECT_EQ(set_inter({1, 2}, {2, 3}), (VSet{2}));
}

TEST(StructuralChecks, HoldOnGeneratedReps) {
  for (std::uint64_t seed = 0; seed < 120; ++seed) {
    const ProjectionRep rep = gen_projection_rep(8, 1 + static_cast<int>(seed % 3), seed);
    EXPECT_FALSE(check_unbounded_neighbors(rep)) << *check_unbounded_neighbors(rep);
    EXPECT_FALSE(check_low_slope_crossing(rep)) << *check_low_slope_crossing(rep);
    EXPECT_FALSE(check_crossing_containment(rep)) << *check_crossing_containment(rep);
    const ProjectionRep c = canonicalize(rep);
    EXPECT_FALSE(check_bounded_covering(c)) << *check_bounded_covering(c);
  }
}
