#include <gtest/gtest.h>

#include "test_util.hpp"
#include "tolkit/analysis.hpp"
#include "tolkit/border.hpp"
#include "tolkit/samples.hpp"
#include "tolkit/instances.hpp"

using namespace tolkit;

namespace {

Graph with_isolated(const Graph& g) {
  Graph h(g.size() + 1);
  for (auto [a, b] : g.edges()) h.add_edge(a, b);
  return h;
}

}  // namespace

TEST(Sentinel, EmptyRep) {
  const auto [rep, t] = add_sentinel(ProjectionRep{});
  EXPECT_EQ(rep.size(), 1);
  EXPECT_EQ(t, 0);
  EXPECT_TRUE(rep[0].bounded());
}

TEST(Sentinel, RightOfEverything) {
  for (std::uint64_t seed = 0; seed < 40; ++seed) {
    const ProjectionRep rep = gen_projection_rep(7, 2, seed);
    const auto [out, t] = add_sentinel(rep);
    EXPECT_EQ(t, rep.size());
    EXPECT_TRUE(validate(out).empty());
    for (VertexId v = 0; v < rep.size(); ++v) EXPECT_TRUE(precedes(out[v], out[t]));
    EXPECT_EQ(induced_graph(out), with_isolated(induced_graph(rep)));
  }
}

TEST(LandmarkInstance, Landmarks) {
  const NamedInstance f = landmark_instance();
  const VertexId u = f.id("u"), w1 = f.id("w1"), w2 = f.id("w2"), us = f.id("u*"), x = f.id("x"), y = f.id("y");
  const Graph g = induced_graph(f.rep);
  EXPECT_EQ(g.neighbors(u), (VSet{w1, w2}));
  EXPECT_EQ(v0(g, u), (VSet{us, x}));
  EXPECT_TRUE(border_property(f.rep, g, u, Side::Right));

  auto [out, st] = eliminate_border(f.rep, u);
  ASSERT_EQ(st.stage_reps.size(), 4u);
  const ProjectionRep& r0 = st.stage_reps[0];
  const ProjectionRep& r1 = st.stage_reps[1];
  const ProjectionRep& r2 = st.stage_reps[2];
  const ProjectionRep& r3 = st.stage_reps[3];
  EXPECT_FALSE(st.reversed);
  EXPECT_EQ(st.N1, (VSet{w1, w2}));
  EXPECT_EQ(st.N2, (VSet{w1}));
  EXPECT_EQ(st.L0, r1[y].L);
  ASSERT_TRUE(st.r0);
  EXPECT_EQ(*st.r0, r1[w1].r);

  // First stage only moves right lines of N1.
  for (VertexId v = 0; v < r0.size(); ++v) {
    EXPECT_EQ(r1[v].L, r0[v].L);
    EXPECT_EQ(r1[v].l, r0[v].l);
    if (!st.N1.count(v)) EXPECT_EQ(r1[v], r0[v]);
  }
  // Second stage pulls r(x) before r0; r(u*) already lies before it.
  EXPECT_LT(r2[x].r, *st.r0);
  EXPECT_LT(r2[us].r, *st.r0);
  EXPECT_EQ(r2[y], r1[y]);
  // Third stage makes u bounded and keeps every edge.
  EXPECT_TRUE(r3[u].bounded());
  EXPECT_EQ(induced_graph(out), g);
  EXPECT_TRUE(out.unbounded().empty());
  EXPECT_EQ(out.size(), f.rep.size());
}

TEST(LandmarkInstance, StageGraphs) {
  const NamedInstance f = landmark_instance();
  auto [out, st] = eliminate_border(f.rep, f.id("u"));
  const Graph g = with_isolated(induced_graph(f.rep));
  for (const ProjectionRep& r : st.stage_reps) {
    EXPECT_TRUE(validate(r).empty());
    EXPECT_EQ(induced_graph(r), g);
  }
}

TEST(Transformations, EmptyN2IsIdentity) {
  const NamedInstance f = landmark_instance();
  const auto [rep, t] = add_sentinel(f.rep);
  const Graph g = induced_graph(rep);
  BorderEliminationState st = border_landmarks(rep, g, f.id("u"), t);
  const ProjectionRep r1 = transformation1(rep, g, st);
  ASSERT_FALSE(st.N2.empty());
  st.N2.clear();
  st.r0.reset();
  EXPECT_EQ(transformation2(r1, g, st), r1);
}

TEST(Transformations, EmptyN1IsIdentity) {
  // u has no neighbours; its covering vertex is the only other vertex.
  ProjectionRep rep;
  rep.v = {Pgram::line(0, 0), Pgram::box(2, 4, 3, 5)};
  const auto [with_t, t] = add_sentinel(rep);
  const Graph g = induced_graph(with_t);
  BorderEliminationState st = border_landmarks(with_t, g, 0, t);
  EXPECT_TRUE(st.N1.empty());
  EXPECT_EQ(transformation1(with_t, g, st), with_t);
}

TEST(EliminateBorder, IsolatedUnboundedVertex) {
  ProjectionRep rep;
  rep.v = {Pgram::line(0, 0), Pgram::box(2, 4, 3, 5)};
  auto [out, st] = eliminate_border(rep, 0);
  EXPECT_TRUE(out[0].bounded());
  EXPECT_TRUE(validate(out).empty());
  EXPECT_EQ(induced_graph(out), induced_graph(rep));
}

TEST(EliminateBorder, LeftOnlyRunsReversed) {
  // Canonical random instance frozen from the generator; vertex 2 has only the left property.
  ProjectionRep rep;
  rep.v = {Pgram::box(786, 936, 454, 604), Pgram::box(62, 77, 548, 563), Pgram::line(472, 373),
           Pgram::box(842, 1032, 38, 228), Pgram::box(775, 888, 675, 788)};
  const Graph g = induced_graph(rep);
  ASSERT_TRUE(border_property(rep, g, 2, Side::Left));
  ASSERT_FALSE(border_property(rep, g, 2, Side::Right));
  auto [out, st] = eliminate_border(rep, 2);
  EXPECT_TRUE(st.reversed);
  EXPECT_TRUE(validate(out).empty());
  EXPECT_EQ(induced_graph(out), g);
  EXPECT_TRUE(out.unbounded().empty());
}

TEST(EliminateBorder, NeitherPropertyIsRejected) {
  const NamedInstance f = two_sided_instance();
  try {
    eliminate_border(f.rep, f.id("u"));
    FAIL() << "expected PreconditionFailed";
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::PreconditionFailed);
  }
}

TEST(EliminateBorder, RejectsBoundedVertex) {
  const NamedInstance f = landmark_instance();
  EXPECT_THROW(eliminate_border(f.rep, f.id("x")), Error);
  EXPECT_THROW(eliminate_border(f.rep, 99), Error);
}

TEST(EliminateBorder, GeneratedInstances) {
  int ran = 0;
  for (std::uint64_t seed = 0; seed < 120 && ran < 30; ++seed) {
    const ProjectionRep rep = canonicalize(gen_projection_rep(6, 2, seed));
    const Graph g = induced_graph(rep);
    for (VertexId u : rep.unbounded()) {
      if (covering(g, u).v0_components.size() != 1) continue;
      if (!border_property(rep, g, u, Side::Right) && !border_property(rep, g, u, Side::Left)) continue;
      auto [out, st] = eliminate_border(rep, u);
      ++ran;
      EXPECT_TRUE(validate(out).empty()) << "seed " << seed;
      EXPECT_EQ(induced_graph(out), g) << "seed " << seed;
      EXPECT_EQ(out.unbounded(), set_minus(rep.unbounded(), {u})) << "seed " << seed;
      break;
    }
  }
  EXPECT_GT(ran, 10);
}
