#include "tolkit/transforms.hpp"

#include <algorithm>

#include "tolkit/analysis.hpp"

namespace tolkit {

ProjectionRep reverse(const ProjectionRep& rep) {
  ProjectionRep out;
  out.v.reserve(rep.v.size());
  for (const Pgram& p : rep.v) out.v.push_back(Pgram{-p.r, -p.l, -p.R, -p.L, p.kind});
  return out;
}

TrapezoidRep flip_vertical(const TrapezoidRep& rt) {
  TrapezoidRep out;
  out.v.reserve(rt.v.size());
  for (const Trapezoid& t : rt.v) out.v.push_back(Trapezoid{-t.B, -t.A, -t.b, -t.a});
  return out;
}

Coord resolve_among(const std::vector<Coord>& pts, const Coord& target, Direction dir) {
  bool found = false;
  Coord best;
  for (const Coord& c : pts) {
    const bool side = dir == Direction::Before ? c < target : c > target;
    if (!side) continue;
    if (!found || (dir == Direction::Before ? c > best : c < best)) best = c;
    found = true;
  }
  if (!found) return dir == Direction::Before ? Coord(target - 1) : Coord(target + 1);
  return (best + target) / 2;
}

Coord resolve(const Placement& p, const ProjectionRep& rep) {
  return resolve_among(p.line == Line::L1 ? endpoints_upper(rep) : endpoints_lower(rep), p.target, p.direction);
}

Coord ambient_epsilon(const ProjectionRep& rep) {
  std::vector<Coord> keys;
  for (const auto& p : rep.v) keys.push_back(slope_key(p));
  std::sort(keys.begin(), keys.end());
  Coord best = 0;
  auto scan = [&](const std::vector<Coord>& xs) {
    for (size_t i = 1; i < xs.size(); ++i) {
      Coord d = xs[i] - xs[i - 1];
      if (d > 0 && (best == 0 || d < best)) best = d;
    }
  };
  scan(endpoints_upper(rep));
  scan(endpoints_lower(rep));
  scan(keys);
  if (best == 0) best = 1;
  return best / 2;
}

ProjectionRep squeeze(const ProjectionRep& sub, const Segment& ell, const Coord& eps) {
  if (eps <= 0) throw Error(ErrorKind::EpsNonPositive, "eps = " + to_string(eps));
  if (sub.size() == 0) return sub;
  const auto up = endpoints_upper(sub);
  const auto low = endpoints_lower(sub);
  const Coord cu = (up.front() + up.back()) / 2;
  const Coord cl = (low.front() + low.back()) / 2;
  Coord span = std::max(up.back() - up.front(), low.back() - low.front());
  if (span < 1) span = 1;
  // One scale for both lines keeps l - L = r - R and the order of slope keys.
  const Coord s = eps / (2 * span);
  ProjectionRep out;
  for (const Pgram& p : sub.v)
    out.v.push_back(Pgram{ell.a_ell + s * (p.L - cu), ell.a_ell + s * (p.R - cu), ell.b_ell + s * (p.l - cl),
                          ell.b_ell + s * (p.r - cl), p.kind});
  const Graph before = induced_graph_loose(sub);
  const Graph after = induced_graph_loose(out);
  if (before != after) throw Error(ErrorKind::GraphChanged, "squeeze: " + graph_diff(before, after));
  return out;
}

ProjectionRep lower_slope_of_nested(const ProjectionRep& rep, VertexId u, VertexId v) {
  auto fail = [](const std::string& m) { return Error(ErrorKind::PreconditionFailed, "lower_slope_of_nested: " + m); };
  if (u < 0 || v < 0 || u >= rep.size() || v >= rep.size() || u == v) throw fail("bad vertex ids");
  if (!rep[u].unbounded() || !rep[v].unbounded()) throw fail("u and v must be unbounded");
  const Graph g = induced_graph(rep);
  if (!strict_subset(g.neighbors(v), g.neighbors(u))) throw fail("N(v) is not a proper subset of N(u)");
  if (!(slope_key(rep[v]) < slope_key(rep[u]))) throw fail("slope_key(v) is not below slope_key(u)");
  if (!is_unbounded_maximal(rep, g, u)) throw fail("u is not unbounded-maximal");
  if (intersects(rep[u], rep[v])) throw Error(ErrorKind::AssertionFailed, "nested lines intersect");

  const Pgram& pu = rep[u];
  const Coord ku = slope_key(pu);
  // Keys strictly above ku bound how far v's new key may go.
  Coord key_room = 0;
  for (int x = 0; x < rep.size(); ++x) {
    if (x == v) continue;
    Coord d = slope_key(rep[x]) - ku;
    if (d > 0 && (key_room == 0 || d < key_room)) key_room = d;
  }
  ProjectionRep rest = rep;
  rest.v.erase(rest.v.begin() + v);

  ProjectionRep out = rep;
  Pgram& pv = out[v];
  if (precedes(pu, rep[v])) {
    const Coord delta = rep[v].r - pu.r;
    const Coord target = pu.L + delta;
    Coord eps = target - resolve(Placement{target, Direction::Before, Line::L1}, rest);
    eps = std::min(eps, Coord(delta / 2));
    if (key_room > 0) eps = std::min(eps, Coord(key_room / 2));
    pv.L = pv.R = target - eps;
  } else {
    const Coord delta = pu.L - rep[v].L;
    const Coord target = pu.r - delta;
    Coord eps = resolve(Placement{target, Direction::After, Line::L2}, rest) - target;
    eps = std::min(eps, Coord(delta / 2));
    if (key_room > 0) eps = std::min(eps, Coord(key_room / 2));
    pv.l = pv.r = target + eps;
  }
  require_valid(out, "lower_slope_of_nested");
  const Graph h = induced_graph(out);
  if (h != g) throw Error(ErrorKind::GraphChanged, "lower_slope_of_nested: " + graph_diff(g, h));
  return out;
}

std::pair<ProjectionRep, VertexId> ensure_min_slope_maximal(const ProjectionRep& rep) {
  if (rep.unbounded().empty()) throw Error(ErrorKind::NoUnbounded, "ensure_min_slope_maximal");
  const Graph g = induced_graph(rep);
  ProjectionRep cur = rep;
  std::vector<VertexId> s;
  for (VertexId u : rep.unbounded())
    if (is_unbounded_maximal(rep, g, u)) s.push_back(u);
  std::sort(s.begin(), s.end(), [&](VertexId a, VertexId b) { return slope_key(rep[a]) < slope_key(rep[b]); });
  for (VertexId u : s) {
    for (;;) {
      VertexId pick = -1;
      for (VertexId v : cur.unbounded())
        if (v != u && strict_subset(g.neighbors(v), g.neighbors(u)) && slope_key(cur[v]) < slope_key(cur[u])) {
          pick = v;
          break;
        }
      if (pick < 0) break;
      cur = lower_slope_of_nested(cur, u, pick);
    }
  }
  VertexId best = -1;
  for (VertexId x : cur.unbounded())
    if (best < 0 || slope_key(cur[x]) < slope_key(cur[best])) best = x;
  if (!is_unbounded_maximal(cur, g, best))
    throw Error(ErrorKind::AssertionFailed, "minimum-slope unbounded vertex is not unbounded-maximal");
  return {cur, best};
}

}  // namespace tolkit
