#include "tolkit/border.hpp"

#include <algorithm>

#include "tolkit/analysis.hpp"
#include "tolkit/transforms.hpp"

namespace tolkit {

namespace {

std::string vname(VertexId v) { return std::to_string(v); }

// Endpoints on one line, leaving out the right endpoint of every vertex in `movers`.
std::vector<Coord> points_except(const ProjectionRep& rep, Line line, const VSet& movers) {
  std::vector<Coord> out;
  for (int i = 0; i < rep.size(); ++i) {
    const Pgram& p = rep[i];
    const Coord& left = line == Line::L1 ? p.L : p.l;
    const Coord& right = line == Line::L1 ? p.R : p.r;
    const bool moving = movers.count(i) > 0;
    if (!moving || left != right) out.push_back(left);
    if (!moving && right != left) out.push_back(right);
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::optional<Coord> max_below(const std::vector<Coord>& pts, const Coord& x) {
  std::optional<Coord> best;
  for (const Coord& c : pts)
    if (c < x && (!best || c > *best)) best = c;
  return best;
}

std::optional<Coord> min_above(const std::vector<Coord>& pts, const Coord& x) {
  std::optional<Coord> best;
  for (const Coord& c : pts)
    if (c > x && (!best || c < *best)) best = c;
  return best;
}

const std::vector<Coord>& thetas() {
  static const std::vector<Coord> t = [] {
    std::vector<Coord> out;
    for (int d = 2; d <= 24; ++d)
      for (int k = 1; k < d; ++k) out.emplace_back(k, d);
    return out;
  }();
  return t;
}

void shift_right_line(Pgram& p, const Coord& d) {
  p.R += d;
  p.r += d;
}

// Moves the right lines of `order` (in that order) so their right endpoints on `line` land inside (lo, hi),
// keeping the order. Tries several spacings until no endpoint or slope coincides.
ProjectionRep pack_right_lines(const ProjectionRep& rep, const std::vector<VertexId>& order, Line line,
                               const Coord& lo, const Coord& hi, const char* where) {
  if (order.empty()) return rep;
  if (!(lo < hi)) throw Error(ErrorKind::GeometryViolated, std::string(where) + ": empty placement gap");
  const int k = static_cast<int>(order.size());
  for (const Coord& th : thetas()) {
    ProjectionRep out = rep;
    for (int j = 0; j < k; ++j) {
      Pgram& p = out[order[j]];
      const Coord target = lo + (hi - lo) * (j + th) / k;
      shift_right_line(p, target - (line == Line::L1 ? p.R : p.r));
    }
    if (validate(out).empty()) return out;
  }
  throw Error(ErrorKind::GeometryViolated, std::string(where) + ": no coincidence-free placement");
}

VSet bounded_set(const ProjectionRep& rep) { return rep.bounded(); }

void verify_stage(const ProjectionRep& rep, const Graph& g, VertexId u, bool without_u, const char* where) {
  require_valid(rep, where);
  Graph h = induced_graph(rep);
  if (without_u) {
    Graph a = g, b = h;
    for (int x = 0; x < g.size(); ++x) {
      a.remove_edge(u, x);
      b.remove_edge(u, x);
    }
    if (a != b) throw Error(ErrorKind::GraphChanged, std::string(where) + " (u excluded): " + graph_diff(a, b));
    return;
  }
  if (h != g) throw Error(ErrorKind::GraphChanged, std::string(where) + ": " + graph_diff(g, h));
}

// L0 over the bounded non-neighbours outside V0 lying strictly after P_u.
Coord compute_L0(const ProjectionRep& rep, const BorderEliminationState& st) {
  std::optional<Coord> best;
  for (VertexId x : rep.bounded()) {
    if (x == st.u || st.Nu.count(x) || st.V0.count(x)) continue;
    if (precedes(rep[st.u], rep[x]) && (!best || rep[x].L < *best)) best = rep[x].L;
  }
  if (!best) throw Error(ErrorKind::AssertionFailed, "L0 undefined: nothing bounded right of u");
  return *best;
}

// Every R(w), w in N1 \ N2 with R(w) < L0, has only such R values between itself and L0.
void check_packed_before_L0(const ProjectionRep& rep, const BorderEliminationState& st, const char* where) {
  VSet group;
  for (VertexId w : set_minus(st.N1, st.N2))
    if (rep[w].R < st.L0) group.insert(w);
  if (group.empty()) return;
  Coord lowest = st.L0;
  for (VertexId w : group) lowest = std::min(lowest, rep[w].R);
  for (int i = 0; i < rep.size(); ++i) {
    const Pgram& p = rep[i];
    for (const Coord* c : {&p.L, &p.R}) {
      if (!(lowest < *c && *c < st.L0)) continue;
      if (c == &p.R && group.count(i)) continue;
      throw Error(ErrorKind::AssertionFailed, std::string(where) + ": endpoint of " + vname(i) +
                                                  " lies between the packed R(w) values and L0");
    }
  }
}

}  // namespace

std::pair<ProjectionRep, VertexId> add_sentinel(const ProjectionRep& rep) {
  ProjectionRep out = rep;
  if (rep.size() == 0) {
    out.v.push_back(Pgram::box(0, 1, 0, 1));
    return {out, 0};
  }
  const auto up = endpoints_upper(rep);
  const auto low = endpoints_lower(rep);
  std::vector<Coord> keys;
  for (const auto& p : rep.v) keys.push_back(slope_key(p));
  std::sort(keys.begin(), keys.end());
  keys.erase(std::unique(keys.begin(), keys.end()), keys.end());
  Coord k;
  if (keys.size() == 1)
    k = keys[0] + 1;
  else {
    const size_t m = keys.size() / 2;
    k = (keys[m - 1] + keys[m]) / 2;
  }
  Coord L = std::max(up.back(), Coord(low.back() - k)) + 1;
  out.v.push_back(Pgram::box(L, L + 1, L + k, L + k + 1));
  return {out, rep.size()};
}

BorderEliminationState border_landmarks(const ProjectionRep& rep, const Graph& g, VertexId u, VertexId t) {
  BorderEliminationState st;
  st.u = u;
  st.sentinel_t = t;
  st.Nu = g.neighbors(u);
  st.V0 = v0(g, u);
  st.V0.erase(t);
  if (st.V0.empty()) throw Error(ErrorKind::V0Empty, "V0(" + vname(u) + ") is empty");
  const VSet vb = bounded_set(rep);
  for (VertexId w : st.Nu) {
    std::optional<Coord> best;
    for (VertexId x : vb)
      if (!st.Nu.count(x) && precedes(rep[w], rep[x]) && (!best || rep[x].L < *best)) best = rep[x].L;
    if (!best) throw Error(ErrorKind::AssertionFailed, "L0(" + vname(w) + ") undefined");
    st.L0_of[w] = *best;
  }
  bool first = true;
  for (VertexId x : st.V0)
    if (first || rep[x].l > st.ell0) {
      st.ell0 = rep[x].l;
      first = false;
    }
  for (VertexId w : st.Nu)
    if (rep[w].r < st.ell0) st.N1.insert(w);
  return st;
}

ProjectionRep transformation1(const ProjectionRep& rep, const Graph& g, BorderEliminationState& st,
                              const StageOptions& opt) {
  ProjectionRep out = rep;
  // Split N1 by which landmark is reached first; the r-case is grouped by its L2 target.
  std::map<Coord, std::vector<VertexId>> to_ell0;
  std::map<Coord, std::vector<VertexId>> to_L0;
  for (VertexId w : st.N1) {
    Coord target = st.ell0;
    if (opt.band && !opt.band->members.count(w) && opt.band->b_lo < st.ell0 && st.ell0 < opt.band->b_hi)
      target = opt.band->b_hi;
    const Coord d1 = target - rep[w].r;
    const Coord d2 = st.L0_of.at(w) - rep[w].R;
    if (d1 < d2)
      to_ell0[target].push_back(w);
    else
      to_L0[st.L0_of.at(w)].push_back(w);
  }
  for (auto& [target, ws] : to_ell0) {
    std::sort(ws.begin(), ws.end(), [&](VertexId a, VertexId b) { return rep[a].r < rep[b].r; });
    VSet movers(ws.begin(), ws.end());
    const auto pts = points_except(out, Line::L2, movers);
    Coord hi = min_above(pts, target).value_or(target + 1);
    for (VertexId w : ws) hi = std::min(hi, Coord(rep[w].r + st.L0_of.at(w) - rep[w].R));
    out = pack_right_lines(out, ws, Line::L2, target, hi, "transformation1");
  }
  for (auto& [target, ws] : to_L0) {
    std::sort(ws.begin(), ws.end(), [&](VertexId a, VertexId b) { return rep[a].R < rep[b].R; });
    VSet movers(ws.begin(), ws.end());
    const auto pts = points_except(out, Line::L1, movers);
    Coord lo = max_below(pts, target).value_or(target - 1);
    for (VertexId w : ws) lo = std::max(lo, rep[w].R);
    out = pack_right_lines(out, ws, Line::L1, lo, target, "transformation1");
  }
  verify_stage(out, g, st.u, opt.verify_without_u, "transformation1");

  for (VertexId x : st.V0)
    if (out[x].l != rep[x].l) throw Error(ErrorKind::AssertionFailed, "transformation1 moved a left line");
  st.N2.clear();
  st.r0.reset();
  for (VertexId w : st.Nu)
    if (st.ell0 < out[w].r) {
      st.N2.insert(w);
      if (!st.r0 || out[w].r < *st.r0) st.r0 = out[w].r;
    }
  if (!subset(set_minus(st.Nu, st.N2), st.N1) || set_union(st.N2, set_minus(st.N1, st.N2)) != st.Nu)
    throw Error(ErrorKind::AssertionFailed, "N(u) is not covered by N2 and N1 \\ N2");
  if (st.r0 && !(*st.r0 > out[st.u].r)) throw Error(ErrorKind::AssertionFailed, "r0 does not exceed r(u)");
  st.L0 = compute_L0(out, st);
  check_packed_before_L0(out, st, "after transformation1");
  return out;
}

ProjectionRep transformation2(const ProjectionRep& rep, const Graph& g, BorderEliminationState& st,
                              const StageOptions& opt) {
  if (!st.r0) return rep;
  const Coord r0 = *st.r0;
  std::vector<VertexId> movers;
  for (VertexId v : st.V0)
    if (rep[v].bounded() && rep[v].r > r0) movers.push_back(v);
  if (movers.empty()) return rep;
  std::sort(movers.begin(), movers.end(), [&](VertexId a, VertexId b) { return rep[a].r < rep[b].r; });
  for (VertexId v : movers)
    if (!(rep[v].l < r0))
      throw Error(ErrorKind::GeometryViolated, "transformation2: l(" + vname(v) + ") is not before r0");
  const auto pts = points_except(rep, Line::L2, VSet(movers.begin(), movers.end()));
  const Coord lo = max_below(pts, r0).value_or(r0 - 1);
  ProjectionRep out = pack_right_lines(rep, movers, Line::L2, lo, r0, "transformation2");
  verify_stage(out, g, st.u, opt.verify_without_u, "transformation2");
  if (compute_L0(out, st) != st.L0) throw Error(ErrorKind::AssertionFailed, "transformation2 changed L0");
  check_packed_before_L0(out, st, "after transformation2");
  return out;
}

ProjectionRep transformation3(const ProjectionRep& rep, const Graph& g, BorderEliminationState& st,
                              const StageOptions& opt) {
  (void)opt;
  Coord m = st.L0;
  for (VertexId w : set_minus(st.N1, st.N2)) m = std::min(m, rep[w].R);
  std::optional<Coord> M;
  for (VertexId v : st.V0)
    if (rep[v].bounded() && (!M || rep[v].r > *M)) M = rep[v].r;
  if (!M) throw Error(ErrorKind::PreconditionFailed, "V0(u) has no bounded vertex");
  // u is a line, so points_except drops its only endpoint on each line.
  const VSet self{st.u};
  const auto up = points_except(rep, Line::L1, self);
  const auto low = points_except(rep, Line::L2, self);
  const Coord a_lo = max_below(up, m).value_or(m - 1);
  const Coord b_hi = min_above(low, *M).value_or(*M + 1);
  for (const Coord& th : thetas()) {
    ProjectionRep out = rep;
    const Coord a = a_lo + (m - a_lo) * th;
    const Coord b = *M + (b_hi - *M) * (1 - th);
    out[st.u] = Pgram::line(a, b, Kind::Bounded);
    if (!validate(out).empty()) continue;
    verify_stage(out, g, st.u, false, "transformation3");
    return out;
  }
  throw Error(ErrorKind::GeometryViolated, "transformation3: no coincidence-free placement");
}

ProjectionRep run_border_stages(const ProjectionRep& rep, const Graph& g, VertexId u, VertexId t,
                                BorderEliminationState& st, const StageOptions& opt) {
  st = border_landmarks(rep, g, u, t);
  st.stage_reps.push_back(rep);
  ProjectionRep r1 = transformation1(rep, g, st, opt);
  st.stage_reps.push_back(r1);
  ProjectionRep r2 = transformation2(r1, g, st, opt);
  st.stage_reps.push_back(r2);
  ProjectionRep r3 = transformation3(r2, g, st, opt);
  st.stage_reps.push_back(r3);
  return r3;
}

std::pair<ProjectionRep, BorderEliminationState> eliminate_border(const ProjectionRep& rep, VertexId u) {
  auto fail = [](const std::string& m) { return Error(ErrorKind::PreconditionFailed, "eliminate_border: " + m); };
  if (u < 0 || u >= rep.size()) throw fail("unknown vertex " + vname(u));
  if (!rep[u].unbounded()) throw fail("vertex " + vname(u) + " is bounded");
  const Graph g = induced_graph(rep);
  const CoveringReport cov = covering(g, u);
  if (cov.v0_components.empty()) throw fail("V0(" + vname(u) + ") is empty");
  if (cov.v0_components.size() > 1) throw fail("V0(" + vname(u) + ") is disconnected");
  bool reversed = false;
  if (!border_property(rep, g, u, Side::Right)) {
    if (!border_property(rep, g, u, Side::Left)) throw fail("vertex " + vname(u) + " has no border property");
    reversed = true;
  }
  const ProjectionRep work = reversed ? reverse(rep) : rep;
  auto [with_t, t] = add_sentinel(work);
  Graph gt(with_t.size());
  for (auto [a, b] : g.edges()) gt.add_edge(a, b);

  BorderEliminationState st;
  ProjectionRep r3 = run_border_stages(with_t, gt, u, t, st, {});
  st.reversed = reversed;
  r3.v.pop_back();
  ProjectionRep result = reversed ? reverse(r3) : r3;

  const Graph h = induced_graph(result);
  if (h != g) throw Error(ErrorKind::GraphChanged, "eliminate_border: " + graph_diff(g, h));
  VSet want = rep.unbounded();
  want.erase(u);
  if (result.unbounded() != want) throw Error(ErrorKind::AssertionFailed, "unbounded set not reduced by u");
  return {result, st};
}

}  // namespace tolkit
