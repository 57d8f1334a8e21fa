#include <gtest/gtest.h>

#include "test_util.hpp"
#include "tolkit/analysis.hpp"
#include "tolkit/samples.hpp"
#include "tolkit/instances.hpp"
#include "tolkit/pipeline.hpp"

using namespace tolkit;

TEST(EliminateAll, AllBoundedIsIdentity) {
  const ProjectionRep rep = gen_parallelogram_rep(7, 3);
  PipelineReport report;
  EXPECT_EQ(eliminate_all(rep, as_trapezoids(rep), &report), rep);
  EXPECT_TRUE(report.rounds.empty());
}

TEST(EliminateAll, SingleUnboundedVertex) {
  int ran = 0;
  for (std::uint64_t seed = 0; seed < 30; ++seed) {
    const auto inst = gen_condition1_instance(3 + static_cast<int>(seed % 6), seed);
    if (!inst) continue;
    ++ran;
    PipelineReport report;
    const ProjectionRep out = eliminate_all(inst->first, inst->second, &report);
    EXPECT_TRUE(validate(out).empty()) << "seed " << seed;
    EXPECT_TRUE(out.unbounded().empty()) << "seed " << seed;
    EXPECT_EQ(induced_graph(out), induced_graph(inst->first)) << "seed " << seed;
    EXPECT_FALSE(report.rounds.empty());
    for (const RoundRecord& r : report.rounds) EXPECT_LE(r.unbounded_after, r.unbounded_before);
  }
  EXPECT_GT(ran, 10);
}

TEST(EliminateAll, SeveralUnboundedVertices) {
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    const auto inst = gen_unbounded_instance(7, 3, 300 + seed);
    if (!inst) continue;
    const auto& [rep, rt] = *inst;
    if (!check_conditions(rep, rt).condition3) continue;
    const ProjectionRep out = eliminate_all(rep, rt);
    EXPECT_TRUE(out.unbounded().empty()) << "seed " << seed;
    EXPECT_EQ(induced_graph(out), induced_graph(rep)) << "seed " << seed;
  }
}

TEST(EliminateAll, TwoSidedInstanceUsesGeneralRound) {
  const NamedInstance f = two_sided_instance();
  PipelineReport report;
  const ProjectionRep out = eliminate_all(f.rep, *f.rt, &report);
  EXPECT_EQ(induced_graph(out), induced_graph(f.rep));
  bool general = false;
  for (const RoundRecord& r : report.rounds) general |= r.method == RoundMethod::General;
  EXPECT_TRUE(general);
}

TEST(EliminateAll, RejectsDisagreeingModel) {
  const NamedInstance f = two_sided_instance();
  const TrapezoidRep rt = as_trapezoids(gen_parallelogram_rep(f.rep.size(), 1));
  EXPECT_THROW(eliminate_all(f.rep, rt), Error);
}

TEST(InsertBoundedVertex, RebuildsNeighbourhood) {
  int ok = 0;
  for (std::uint64_t seed = 0; seed < 40; ++seed) {
    const ProjectionRep rep = gen_parallelogram_rep(6, seed);
    const Graph g = induced_graph(rep);
    const VertexId u = static_cast<VertexId>(seed % 6);
    std::vector<VertexId> keep;
    for (VertexId v = 0; v < rep.size(); ++v)
      if (v != u) keep.push_back(v);
    try {
      const ProjectionRep out = insert_bounded_vertex(restrict_rep(rep, keep), g, u);
      ++ok;
      EXPECT_TRUE(out[u].bounded());
      EXPECT_EQ(induced_graph(out), g) << "seed " << seed;
    } catch (const Error&) {
    }
  }
  EXPECT_GT(ok, 20);
}

TEST(RoundMethod, Names) {
  EXPECT_STREQ(round_method_name(RoundMethod::Border), "border");
  EXPECT_STREQ(round_method_name(RoundMethod::General), "general");
}
