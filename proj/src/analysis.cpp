#include "tolkit/analysis.hpp"

#include <algorithm>
#include <sstream>

namespace tolkit {

bool subset(const VSet& a, const VSet& b) { return std::includes(b.begin(), b.end(), a.begin(), a.end()); }

bool strict_subset(const VSet& a, const VSet& b) { return a.size() < b.size() && subset(a, b); }

VSet set_minus(const VSet& a, const VSet& b) {
  VSet out;
  std::set_difference(a.begin(), a.end(), b.begin(), b.end(), std::inserter(out, out.end()));
  return out;
}

VSet set_union(const VSet& a, const VSet& b) {
  VSet out = a;
  out.insert(b.begin(), b.end());
  return out;
}

VSet set_inter(const VSet& a, const VSet& b) {
  VSet out;
  std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::inserter(out, out.end()));
  return out;
}

namespace {

void check_vertex(const Graph& g, VertexId u) {
  if (u < 0 || u >= g.size()) throw Error(ErrorKind::UnknownVertex, "vertex " + std::to_string(u));
}

VSet all_vertices(int n) {
  VSet s;
  for (int i = 0; i < n; ++i) s.insert(i);
  return s;
}

}  // namespace

CoveringReport covering(const Graph& g, VertexId u) {
  check_vertex(g, u);
  CoveringReport rep;
  rep.subject = u;
  const VSet nu = g.neighbors(u);
  VSet rest = all_vertices(g.size());
  rest.erase(u);
  for (VertexId x : nu) rest.erase(x);
  for (VertexId v : rest)
    if (subset(nu, g.neighbors(v))) rep.covering_set.insert(v);
  for (auto& comp : g.components(rest)) {
    if (set_inter(comp, rep.covering_set).empty()) continue;
    rep.v0_union.insert(comp.begin(), comp.end());
    rep.v0_components.push_back(std::move(comp));
  }
  return rep;
}

VSet v0(const Graph& g, VertexId u) { return covering(g, u).v0_union; }

bool is_inevitable(const ProjectionRep& rep, VertexId u) {
  if (u < 0 || u >= rep.size()) throw Error(ErrorKind::UnknownVertex, "vertex " + std::to_string(u));
  if (!rep[u].unbounded()) throw Error(ErrorKind::NotUnbounded, "vertex " + std::to_string(u));
  ProjectionRep flipped = rep;
  flipped[u].kind = Kind::Bounded;
  return induced_graph_loose(flipped) != induced_graph_loose(rep);
}

bool is_canonical(const ProjectionRep& rep) {
  for (VertexId u : rep.unbounded())
    if (!is_inevitable(rep, u)) return false;
  return true;
}

ProjectionRep canonicalize(const ProjectionRep& rep) {
  ProjectionRep cur = rep;
  for (;;) {
    const VSet unb = cur.unbounded();
    std::vector<VertexId> order(unb.begin(), unb.end());
    std::sort(order.begin(), order.end(),
              [&](VertexId a, VertexId b) { return slope_key(cur[a]) < slope_key(cur[b]); });
    bool flipped = false;
    for (VertexId u : order)
      if (!is_inevitable(cur, u)) {
        cur[u].kind = Kind::Bounded;
        flipped = true;
        break;
      }
    if (!flipped) return cur;
  }
}

bool border_property_unchecked(const ProjectionRep& rep, const Graph& g, VertexId u, Side side) {
  const VSet nu = g.neighbors(u);
  const VSet v0u = v0(g, u);
  for (VertexId w : nu)
    for (VertexId x : v0u) {
      const bool bad = side == Side::Right ? precedes(rep[w], rep[x]) : precedes(rep[x], rep[w]);
      if (bad) return false;
    }
  return true;
}

bool border_property(const ProjectionRep& rep, const Graph& g, VertexId u, Side side) {
  check_vertex(g, u);
  const Graph h = induced_graph(rep);
  if (h != g) throw Error(ErrorKind::GraphMismatch, graph_diff(g, h));
  return border_property_unchecked(rep, g, u, side);
}

QSets q_sets(const ProjectionRep& rep, const TrapezoidRep& rt, VertexId u) {
  const Graph g = induced_graph(rep);
  const Graph gt = induced_graph_trapezoid(rt);
  if (g != gt) throw Error(ErrorKind::RepsDisagree, graph_diff(g, gt));
  check_vertex(g, u);
  if (!rep[u].unbounded()) throw Error(ErrorKind::NotUnbounded, "vertex " + std::to_string(u));
  QSets q;
  const VSet nu = g.neighbors(u);
  for (VertexId v : rep.unbounded())
    if (v != u && strict_subset(g.neighbors(v), nu)) q.Qu.insert(v);
  const VSet v0u = v0(g, u);
  if (v0u.empty()) throw Error(ErrorKind::V0Empty, "V0(" + std::to_string(u) + ") is empty");
  int left = 0, right = 0;
  for (VertexId x : v0u) {
    if (precedes(rt[x], rt[u])) ++left;
    else if (precedes(rt[u], rt[x])) ++right;
  }
  if (left > 0 && right > 0)
    throw Error(ErrorKind::PreconditionFailed, "V0(" + std::to_string(u) + ") lies on both sides of T_u");
  q.v0_left = right == 0;
  for (VertexId v : q.Qu) {
    const bool opposite = q.v0_left ? precedes(rt[u], rt[v]) : precedes(rt[v], rt[u]);
    (opposite ? q.Q2 : q.Q1).insert(v);
  }
  return q;
}

ConditionReport check_conditions(const ProjectionRep& rep, const TrapezoidRep& rt) {
  const Graph g = induced_graph(rep);
  const Graph gt = induced_graph_trapezoid(rt);
  if (g != gt) throw Error(ErrorKind::RepsDisagree, graph_diff(g, gt));
  ConditionReport c;
  const VSet vu = rep.unbounded();
  c.condition1 = vu.size() == 1;
  if (!c.condition1) c.witnesses[0] = vu;
  c.condition2 = true;
  c.condition3 = true;
  for (VertexId u : vu) {
    VSet qu;
    for (VertexId v : vu)
      if (v != u && strict_subset(g.neighbors(v), g.neighbors(u))) qu.insert(v);
    if (qu.empty()) continue;
    c.condition2 = false;
    c.witnesses[1].insert(u);
    try {
      if (!q_sets(rep, rt, u).Q2.empty()) {
        c.condition3 = false;
        c.witnesses[2].insert(u);
      }
    } catch (const Error&) {
      c.condition3 = false;
      c.witnesses[2].insert(u);
    }
  }
  if ((c.condition1 && !c.condition2) || (c.condition2 && !c.condition3))
    throw Error(ErrorKind::AssertionFailed, "condition implication chain broken");
  return c;
}

bool condition2_holds(const ProjectionRep& rep) {
  const Graph g = induced_graph(rep);
  const VSet vu = rep.unbounded();
  for (VertexId u : vu)
    for (VertexId v : vu)
      if (v != u && strict_subset(g.neighbors(v), g.neighbors(u))) return false;
  return true;
}

std::optional<std::array<VertexId, 3>> nested_independent_triple(const Graph& g) {
  const int n = g.size();
  std::vector<VSet> nb(n);
  for (int i = 0; i < n; ++i) nb[i] = g.neighbors(i);
  for (int b = 0; b < n; ++b)
    for (int a = 0; a < n; ++a) {
      if (a == b || g.has_edge(a, b) || !strict_subset(nb[a], nb[b])) continue;
      for (int c = 0; c < n; ++c) {
        if (c == a || c == b || g.has_edge(a, c) || g.has_edge(b, c)) continue;
        if (strict_subset(nb[b], nb[c])) return std::array<VertexId, 3>{a, b, c};
      }
    }
  return std::nullopt;
}

bool is_module(const Graph& g, const VSet& m) {
  for (int x = 0; x < g.size(); ++x) {
    if (m.count(x)) continue;
    int adj = 0;
    for (VertexId v : m) adj += g.has_edge(x, v) ? 1 : 0;
    if (adj != 0 && adj != static_cast<int>(m.size())) return false;
  }
  return true;
}

bool is_unbounded_maximal(const ProjectionRep& rep, const Graph& g, VertexId u) {
  if (!rep[u].unbounded()) throw Error(ErrorKind::NotUnbounded, "vertex " + std::to_string(u));
  const VSet nu = g.neighbors(u);
  for (VertexId v : rep.unbounded())
    if (v != u && strict_subset(nu, g.neighbors(v))) return false;
  return true;
}

bool is_unbounded_maximal(const ProjectionRep& rep, VertexId u) {
  if (u < 0 || u >= rep.size()) throw Error(ErrorKind::UnknownVertex, "vertex " + std::to_string(u));
  return is_unbounded_maximal(rep, induced_graph(rep), u);
}

namespace {

std::string pair_msg(const char* what, VertexId u, VertexId v) {
  std::ostringstream os;
  os << what << " (u=" << u << ", v=" << v << ")";
  return os.str();
}

}  // namespace

std::optional<std::string> check_unbounded_neighbors(const ProjectionRep& rep) {
  const Graph g = induced_graph(rep);
  for (VertexId u : rep.unbounded())
    for (VertexId v : g.neighbors(u)) {
      const Pgram& pu = rep[u];
      const Pgram& pv = rep[v];
      if (!(pu.r < pv.r && pv.L < pu.L && pv.bounded()))
        return pair_msg("neighbor of unbounded vertex not to its lower right/upper left", u, v);
    }
  return std::nullopt;
}

std::optional<std::string> check_low_slope_crossing(const ProjectionRep& rep) {
  for (VertexId u : rep.unbounded())
    for (VertexId v = 0; v < rep.size(); ++v) {
      if (v == u || !intersects(rep[u], rep[v]) || !(slope_key(rep[v]) < slope_key(rep[u]))) continue;
      if (!(rep[v].l < rep[u].l && rep[u].R < rep[v].R))
        return pair_msg("low-slope crossing not enclosing the line", u, v);
    }
  return std::nullopt;
}

std::optional<std::string> check_crossing_containment(const ProjectionRep& rep) {
  const Graph g = induced_graph(rep);
  for (VertexId u = 0; u < rep.size(); ++u)
    for (VertexId v = 0; v < rep.size(); ++v) {
      if (u == v || g.has_edge(u, v) || !intersects(rep[u], rep[v])) continue;
      if (!(slope_key(rep[v]) < slope_key(rep[u]))) continue;
      if (!subset(g.neighbors(u), g.neighbors(v))) return pair_msg("N(u) not contained in N(v)", u, v);
    }
  return std::nullopt;
}

std::optional<std::string> check_bounded_covering(const ProjectionRep& rep) {
  const Graph g = induced_graph(rep);
  for (VertexId u : rep.unbounded()) {
    const CoveringReport c = covering(g, u);
    bool found = false;
    for (VertexId s : c.covering_set)
      if (rep[s].bounded() && intersects(rep[s], rep[u]) && slope_key(rep[s]) < slope_key(rep[u])) found = true;
    if (!found) return "unbounded vertex " + std::to_string(u) + " has no bounded covering vertex";
  }
  return std::nullopt;
}

}  // namespace tolkit
