#include "tolkit/pipeline.hpp"

#include <algorithm>

#include "tolkit/analysis.hpp"
#include "tolkit/border.hpp"
#include "tolkit/general.hpp"
#include "tolkit/transforms.hpp"

namespace tolkit {

const char* round_method_name(RoundMethod m) {
  switch (m) {
    case RoundMethod::Canonicalize: return "canonicalize";
    case RoundMethod::Components: return "components";
    case RoundMethod::Reinsert: return "reinsert";
    case RoundMethod::Border: return "border";
    case RoundMethod::General: return "general";
  }
  return "?";
}

namespace {

// Sorted distinct points, one step beyond each end, and the midpoints between neighbours.
std::vector<Coord> candidate_grid(std::vector<Coord> pts) {
  std::sort(pts.begin(), pts.end());
  pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
  if (pts.empty()) return {Coord(0)};
  std::vector<Coord> out{pts.front() - 1};
  for (size_t i = 0; i + 1 < pts.size(); ++i) out.push_back((pts[i] + pts[i + 1]) / 2);
  out.push_back(pts.back() + 1);
  return out;
}

ProjectionRep with_vertex(const ProjectionRep& rest, VertexId u, const Pgram& p) {
  ProjectionRep out = rest;
  out.v.insert(out.v.begin() + u, p);
  return out;
}

// Places component reps side by side, left to right.
ProjectionRep concatenate(const std::vector<VSet>& comps, const std::vector<ProjectionRep>& reps, int n) {
  ProjectionRep out;
  out.v.resize(n);
  Coord offset = 0;
  for (size_t c = 0; c < comps.size(); ++c) {
    const ProjectionRep& r = reps[c];
    const auto up = endpoints_upper(r);
    const auto low = endpoints_lower(r);
    const Coord lo = std::min(up.front(), low.front());
    const Coord hi = std::max(up.back(), low.back());
    const Coord shift = offset - lo;
    int i = 0;
    for (VertexId v : comps[c]) {
      Pgram p = r[i++];
      p.L += shift;
      p.R += shift;
      p.l += shift;
      p.r += shift;
      out[v] = p;
    }
    offset += hi - lo + 1;
  }
  return perturb_distinct(out);
}

ProjectionRep solve(const ProjectionRep& rep, const TrapezoidRep& rt, PipelineReport* report, int& round);

ProjectionRep solve_components(const ProjectionRep& cur, const TrapezoidRep& rt, const std::vector<VSet>& comps,
                               PipelineReport* report, int& round) {
  std::vector<ProjectionRep> parts;
  for (const VSet& c : comps) {
    const std::vector<VertexId> ids(c.begin(), c.end());
    parts.push_back(solve(restrict_rep(cur, ids), restrict_rep(rt, ids), report, round));
  }
  return concatenate(comps, parts, cur.size());
}

ProjectionRep solve(const ProjectionRep& rep, const TrapezoidRep& rt, PipelineReport* report, int& round) {
  const Graph g = induced_graph(rep);
  if (g != induced_graph_trapezoid(rt)) throw Error(ErrorKind::RepsDisagree, "eliminate_all");
  ProjectionRep cur = rep;
  while (!cur.unbounded().empty()) {
    ++round;
    RoundRecord rec;
    rec.round = round;
    rec.unbounded_before = static_cast<int>(cur.unbounded().size());
    try {
      if (!check_conditions(cur, rt).condition3)
        throw Error(ErrorKind::PreconditionFailed, "a nested unbounded vertex lies opposite its V0 (condition 3)");
      const ProjectionRep canon = canonicalize(cur);
      if (canon.unbounded().size() < cur.unbounded().size()) {
        cur = canon;
        rec.method = RoundMethod::Canonicalize;
      } else {
        VSet all;
        for (int i = 0; i < g.size(); ++i) all.insert(i);
        const auto comps = g.components(all);
        if (comps.size() > 1) {
          cur = solve_components(cur, rt, comps, report, round);
          rec.method = RoundMethod::Components;
        } else {
          auto [moved, u] = ensure_min_slope_maximal(cur);
          cur = moved;
          rec.u = u;
          const CoveringReport cov = covering(g, u);
          if (cov.v0_components.size() != 1) {
            std::vector<VertexId> ids;
            for (int i = 0; i < cur.size(); ++i)
              if (i != u) ids.push_back(i);
            const ProjectionRep rest = solve(restrict_rep(cur, ids), restrict_rep(rt, ids), report, round);
            cur = insert_bounded_vertex(rest, g, u);
            rec.method = RoundMethod::Reinsert;
          } else if (border_property(cur, g, u, Side::Right) || border_property(cur, g, u, Side::Left)) {
            cur = eliminate_border(cur, u).first;
            rec.method = RoundMethod::Border;
          } else {
            cur = eliminate_general(cur, rt, u).first;
            rec.method = RoundMethod::General;
          }
        }
      }
      const Graph h = induced_graph(cur);
      if (h != g) throw Error(ErrorKind::GraphChanged, graph_diff(g, h));
      rec.unbounded_after = static_cast<int>(cur.unbounded().size());
      if (rec.unbounded_after >= rec.unbounded_before)
        throw Error(ErrorKind::AssertionFailed, "unbounded count did not decrease");
    } catch (const Error& e) {
      throw Error(e.kind(), "round " + std::to_string(round) + ": " + e.what());
    }
    if (report) {
      report->rounds.push_back(rec);
      report->reps.push_back(cur);
    }
  }
  return cur;
}

}  // namespace

ProjectionRep insert_bounded_vertex(const ProjectionRep& rest, const Graph& g, VertexId u) {
  std::vector<VertexId> others;
  for (int i = 0; i < g.size(); ++i)
    if (i != u) others.push_back(i);
  const auto tops = candidate_grid(endpoints_upper(rest));
  const auto bottoms = candidate_grid(endpoints_lower(rest));
  for (size_t i = 0; i < tops.size(); ++i)
    for (size_t j = i; j < tops.size(); ++j)
      for (const Coord& l : bottoms) {
        const Pgram p = Pgram::box(tops[i], tops[j], l, l + tops[j] - tops[i]);
        bool ok = true;
        for (size_t k = 0; k < others.size() && ok; ++k)
          ok = adjacent(p, rest[static_cast<VertexId>(k)]) == g.has_edge(u, others[k]);
        if (!ok) continue;
        ProjectionRep out = with_vertex(rest, u, p);
        if (!validate(out).empty()) continue;
        if (induced_graph(out) == g) return out;
      }
  throw Error(ErrorKind::PreconditionFailed, "no bounded placement of vertex " + std::to_string(u) +
                                                 " reproduces its neighbourhood");
}

ProjectionRep eliminate_all(const ProjectionRep& rep, const TrapezoidRep& rt, PipelineReport* report) {
  require_valid(rep, "eliminate_all");
  if (rt.size() != rep.size()) throw Error(ErrorKind::RepsDisagree, "eliminate_all: sizes differ");
  int round = 0;
  ProjectionRep out = solve(rep, rt, report, round);
  const Graph g = induced_graph(rep);
  const Graph h = induced_graph(out);
  if (h != g) throw Error(ErrorKind::GraphChanged, "eliminate_all: " + graph_diff(g, h));
  return out;
}

}  // namespace tolkit
