#include "tolkit/general.hpp"

#include <algorithm>
#include <mutex>

#include "tolkit/analysis.hpp"

namespace tolkit {

namespace {

std::string vname(VertexId v) { return std::to_string(v); }

std::string set_str(const VSet& s) {
  std::string out = "{";
  for (VertexId v : s) out += (out.size() > 1 ? "," : "") + vname(v);
  return out + "}";
}

Error assertion(const std::string& label, const std::string& what) {
  return Error(ErrorKind::AssertionFailed, label + ": " + what);
}

std::mutex& sink_mutex() {
  static std::mutex m;
  return m;
}

std::function<void(const ModuleAudit&)>& audit_sink() {
  static std::function<void(const ModuleAudit&)> s;
  return s;
}

VSet all_vertices(int n) {
  VSet out;
  for (int i = 0; i < n; ++i) out.insert(i);
  return out;
}

VSet neighbors_of_set(const Graph& g, const VSet& s) { return g.neighbors(s); }

VSet closed(const Graph& g, const VSet& s) { return g.closed_neighbors(s); }

// N1(v) = N(v) restricted to N(X1).
VSet n1(const Graph& g, VertexId v, const VSet& N) { return set_inter(g.neighbors(v), N); }

// Vertices outside Q_u, N[u] and V0(u).
VSet foreigners(const Graph& g, const GeneralEliminationState& st) {
  VSet out = set_minus(all_vertices(g.size()), st.Qu);
  out = set_minus(out, closed(g, {st.u}));
  return set_minus(out, st.V0);
}

bool all_adjacent(const Graph& g, VertexId x, const VSet& s) {
  for (VertexId y : s)
    if (!g.has_edge(x, y)) return false;
  return true;
}

// Recursive layers L_i = {x in pool minus earlier layers : L_{i-1} not inside N(x)}, starting after `first`.
std::vector<VSet> peel_layers(const Graph& g, const VSet& pool, const VSet& first) {
  std::vector<VSet> layers;
  VSet prev = first;
  VSet used;
  while (true) {
    VSet next;
    for (VertexId x : set_minus(pool, used))
      if (!subset(prev, g.neighbors(x))) next.insert(x);
    if (next.empty()) break;
    layers.push_back(next);
    used = set_union(used, next);
    prev = next;
  }
  return layers;
}

// Walks back from v through the layers, each step to the lowest non-neighbour of the previous layer.
std::vector<VertexId> chain_for(const Graph& g, VertexId v, const std::vector<VSet>& layers, size_t index) {
  std::vector<VertexId> chain{v};
  VertexId cur = v;
  for (size_t i = index; i-- > 0;) {
    VertexId pick = -1;
    for (VertexId y : layers[i])
      if (!g.has_edge(cur, y)) {
        pick = y;
        break;
      }
    if (pick < 0) throw Error(ErrorKind::ChainNotFound, "no non-neighbour of " + vname(cur) + " in layer " +
                                                            std::to_string(i));
    chain.push_back(pick);
    cur = pick;
  }
  std::reverse(chain.begin(), chain.end());
  return chain;
}

// forward(j) tells whether v_{j-1} should precede v_j at step j.
void check_alternation(const ProjectionRep& rep, const TrapezoidRep& rt, const std::vector<VertexId>& c,
                       bool (*forward)(size_t), const char* tag, std::vector<std::string>& findings) {
  const size_t i = c.size() - 1;
  const size_t last = i >= 2 ? i - 1 : i;
  for (size_t j = 1; j <= last; ++j) {
    const VertexId a = c[j - 1], b = c[j];
    const bool fw = forward(j);
    const bool p_ok = fw ? precedes(rep[a], rep[b]) : precedes(rep[b], rep[a]);
    const bool t_ok = fw ? precedes(rt[a], rt[b]) : precedes(rt[b], rt[a]);
    if (!p_ok || !t_ok) {
      std::string s = std::string(tag) + " chain";
      for (VertexId x : c) s += " " + vname(x);
      s += ": step " + std::to_string(j) + (p_ok ? "" : " parallelogram order") + (t_ok ? "" : " trapezoid order");
      findings.push_back(s);
    }
  }
}

bool odd_forward(size_t j) { return j % 2 == 1; }
bool even_forward(size_t j) { return j % 2 == 0; }

// R_ell''' to R#: u back to a line far enough right on L1 that its slope key is the smallest.
ProjectionRep reunbind_far_right(const ProjectionRep& r3, VertexId u) {
  ProjectionRep out = r3;
  std::optional<Coord> top_max;
  std::optional<Coord> key_min;
  for (int i = 0; i < r3.size(); ++i) {
    if (i == u) continue;
    const Coord& R = r3[i].R;
    if (!top_max || R > *top_max) top_max = R;
    const Coord k = slope_key(r3[i]);
    if (!key_min || k < *key_min) key_min = k;
  }
  if (top_max && !(r3[u].L > *top_max))
    throw assertion("single-unbounded re-unbinding", "u's upper endpoint is not the rightmost on L1");
  Coord top = r3[u].L;
  if (key_min) top = std::max(top, Coord(r3[u].l - *key_min + 1));
  out[u] = Pgram::line(top, r3[u].l);
  return out;
}

struct CoreResult {
  ProjectionRep rep;  // R_ell''' in the working frame, sentinel removed
  GeneralEliminationState st;
};

CoreResult general_core(const ProjectionRep& rep_in, const TrapezoidRep& rt_in, const Graph& g, VertexId u,
                        int depth);

}  // namespace

void set_module_audit_sink(std::function<void(const ModuleAudit&)> sink) {
  std::lock_guard<std::mutex> lock(sink_mutex());
  audit_sink() = std::move(sink);
}

void classify_v0(const ProjectionRep& rep, const VSet& V0, VertexId u, VSet& D1, VSet& D2, VSet& S2) {
  if (V0.empty()) throw Error(ErrorKind::V0Empty, "V0(" + vname(u) + ") is empty");
  D1.clear();
  D2.clear();
  S2.clear();
  for (VertexId v : V0) {
    if (precedes(rep[v], rep[u]))
      D1.insert(v);
    else
      S2.insert(v);
    if (precedes(rep[u], rep[v])) D2.insert(v);
  }
  if (set_union(D1, S2) != V0 || !subset(D2, S2)) throw assertion("V0 split", "D1, D2, S2 inconsistent");
}

void select_anchors(ProjectionRep& rep, const TrapezoidRep& rt, const Graph& g, GeneralEliminationState& st) {
  const VertexId u = st.u;
  classify_v0(rep, st.V0, u, st.D1, st.D2, st.S2);
  if (st.D1.empty() || st.D2.empty())
    throw assertion("V0 split", "D1 or D2 empty for a vertex without border property");
  const VSet pool = set_union(st.D1, st.D2);
  st.x1 = -1;
  for (VertexId x : pool) {
    bool leftmost = true;
    for (VertexId y : pool)
      if (y != x && precedes(rt[y], rt[x])) leftmost = false;
    if (leftmost) {
      st.x1 = x;
      break;
    }
  }
  if (st.x1 < 0) throw Error(ErrorKind::TieUnresolvable, "no leftmost trapezoid among D1 and D2");
  if (st.D2.count(st.x1)) {
    rep = reverse(rep);
    st.reversed = !st.reversed;
    classify_v0(rep, st.V0, u, st.D1, st.D2, st.S2);
    if (!st.D1.count(st.x1)) throw assertion("anchor reversal", "x1 not left of u after reversal");
  }
  st.w = -1;
  for (VertexId w : st.Nu) {
    for (VertexId x : st.D2)
      if (precedes(rep[w], rep[x])) {
        st.w = w;
        break;
      }
    if (st.w >= 0) break;
  }
  if (st.w < 0) throw Error(ErrorKind::NoWitness, "no neighbour of u precedes a vertex of D2");
  VSet cand;
  for (VertexId x : st.D2)
    if (precedes(rep[st.w], rep[x])) cand.insert(x);
  st.x2 = -1;
  for (VertexId x : cand) {
    bool leftmost = true;
    for (VertexId y : cand)
      if (y != x && precedes(rt[y], rt[x])) leftmost = false;
    if (leftmost) {
      st.x2 = x;
      break;
    }
  }
  if (st.x2 < 0) throw Error(ErrorKind::TieUnresolvable, "no leftmost trapezoid for x2");
  const VertexId x1 = st.x1, x2 = st.x2, w = st.w;
  if (g.has_edge(x1, x2) || g.has_edge(x1, w) || g.has_edge(x2, w))
    throw assertion("anchors", "x1, x2, w are not independent");
  if (!precedes(rt[x1], rt[x2]) || !precedes(rt[x2], rt[w]))
    throw assertion("anchors", "trapezoids of x1, x2, w are not ordered");
}

VSet grow_x1(const Graph& g, VertexId x1, VertexId w) {
  VSet X{x1};
  const VSet nw = g.neighbors(w);
  while (true) {
    const VSet nx = neighbors_of_set(g, X);
    const VSet extra = set_minus(nx, nw);
    if (extra.empty()) break;
    X = set_union(X, extra);
  }
  if (neighbors_of_set(g, X).empty()) throw Error(ErrorKind::EmptyFrontier, "N(X1~) is empty");
  if (g.components(X).size() != 1) throw assertion("X1~ growth", "X1~ is not connected");
  return X;
}

void build_partition(const ProjectionRep& rep, const TrapezoidRep& rt, const Graph& g, GeneralEliminationState& st) {
  const VSet V = all_vertices(g.size());
  const VertexId u = st.u;
  if (!subset(st.Xtilde1, st.D1)) throw assertion("X1~", "X1~ is not inside D1");
  for (VertexId x : st.Xtilde1)
    if (!precedes(rep[x], rep[st.w]) || !precedes(rt[x], rt[st.x2]))
      throw assertion("X1~", "vertex " + vname(x) + " is not left of w and x2");

  VSet removed = set_union(st.Qu, closed(g, set_union(st.Xtilde1, {st.x2})));
  if (removed.count(u)) throw assertion("C_u", "u is removed with N[X1~, x2]");
  st.Cu.clear();
  for (const VSet& c : g.components(set_minus(V, removed)))
    if (c.count(u)) st.Cu = c;

  const VSet base = set_minus(set_minus(V, st.Qu), closed(g, st.Xtilde1));
  VSet ctt;
  for (const VSet& c : g.components(base))
    if (!set_inter(c, st.S2).empty()) ctt = set_union(ctt, c);
  const VSet nuw = closed(g, {u, st.w});
  const VSet ct2 = set_minus(set_minus(ctt, nuw), st.Cu);
  const VSet hx2 = set_inter(nuw, g.neighbors(st.x2));
  st.Htilde = set_inter(hx2, base);

  st.components.clear();
  VSet a1;
  st.C2.clear();
  VSet b1;
  for (const VSet& c : g.components(ct2)) {
    bool left = true, right = true;
    for (VertexId v : c) {
      left = left && precedes(rep[v], rep[u]);
      right = right && precedes(rep[u], rep[v]);
    }
    if (!left && !right) throw assertion("C2~ sides", "component " + set_str(c) + " is not on one side of P_u");
    ComponentTag tag;
    if (right)
      tag = set_inter(c, st.S2).empty() ? ComponentTag::B1 : ComponentTag::B2;
    else {
      bool all = true;
      for (VertexId v : c) all = all && all_adjacent(g, v, st.Htilde);
      tag = all ? ComponentTag::A2 : ComponentTag::A1;
    }
    st.components.push_back({c, tag});
    if (tag == ComponentTag::A1) a1 = set_union(a1, c);
    if (tag == ComponentTag::A2 || tag == ComponentTag::B2) st.C2 = set_union(st.C2, c);
    if (tag == ComponentTag::B1) b1 = set_union(b1, c);
    if (tag == ComponentTag::B2 && !subset(c, st.D2)) throw assertion("B2", "component not inside D2");
  }
  st.X1 = set_union(st.Xtilde1, a1);
  st.H = set_minus(set_minus(hx2, st.Qu), closed(g, st.X1));
  st.N = neighbors_of_set(g, st.X1);

  for (const auto& c : st.components)
    if (c.tag == ComponentTag::A2)
      for (VertexId v : c.vertices)
        if (!all_adjacent(g, v, st.H)) throw assertion("A2", "vertex " + vname(v) + " misses part of H");
  if (!subset(b1, foreigners(g, st))) throw assertion("V(B1)", "B1 meets Q_u, N[u] or V0(u)");
  if (!subset(st.X1, st.D1)) throw assertion("X1 and C2 placement", "X1 is not inside D1");
  if (!subset(st.C2, st.V0)) throw assertion("X1 and C2 placement", "C2 is not inside V0(u)");
  if (n1(g, st.w, st.N) != st.N) throw assertion("X1 and C2 placement", "N1(w) differs from N(X1)");
  for (VertexId x : st.X1)
    if (!precedes(rt[x], rt[st.x2]) || !precedes(rep[x], rep[st.w]))
      throw assertion("X1 position", "vertex " + vname(x) + " of X1 is not left of x2 and w");
  if (!strict_subset(n1(g, u, st.N), st.N)) throw assertion("neighbours in N", "N1(u) is not a proper subset of N");
  if (n1(g, st.x2, st.N) != st.N) throw assertion("neighbours in N", "N1(x2) differs from N");
  for (VertexId v : st.Cu)
    if (v != u && rep[v].bounded() && n1(g, v, st.N) != st.N)
      throw assertion("neighbours in N", "N1(" + vname(v) + ") differs from N");
  VSet must_bound = set_union(set_union(st.N, st.H), set_union(st.C2, st.Cu));
  must_bound.erase(u);
  for (VertexId v : must_bound)
    if (!rep[v].bounded()) throw assertion("bounded C_u, C2, H", "vertex " + vname(v) + " is unbounded");
  const VSet inner = set_union(set_union(st.Cu, st.C2), st.H);
  const VSet allowed = set_union(set_union(st.Qu, st.N), b1);
  if (!subset(neighbors_of_set(g, inner), allowed))
    throw assertion("G0 neighbourhood", "N(C_u + C2 + H) leaves Q_u + N(X1) + V(B1)");
}

void layer_h(const ProjectionRep& rep, const TrapezoidRep& rt, const Graph& g, GeneralEliminationState& st) {
  st.H_layers = peel_layers(g, st.H, st.N);
  VSet used;
  for (const VSet& l : st.H_layers) used = set_union(used, l);
  const VSet hp = set_minus(st.H, used);
  const VSet foreign = foreigners(g, st);
  VSet h0;
  for (VertexId x : hp)
    if (!set_inter(g.neighbors(x), foreign).empty()) h0.insert(x);
  st.Hprime_layers.clear();
  if (!h0.empty()) {
    st.Hprime_layers.push_back(h0);
    for (const VSet& l : peel_layers(g, set_minus(hp, h0), h0)) st.Hprime_layers.push_back(l);
  }

  std::vector<VSet> full{st.N};
  for (const VSet& l : st.H_layers) full.push_back(l);
  st.chains.clear();
  st.chains_prime.clear();
  st.chain_findings.clear();
  for (size_t i = 1; i < full.size(); ++i)
    for (VertexId v : full[i]) {
      st.chains.push_back(chain_for(g, v, full, i));
      check_alternation(rep, rt, st.chains.back(), odd_forward, "H", st.chain_findings);
    }
  for (size_t i = 1; i < st.Hprime_layers.size(); ++i)
    for (VertexId v : st.Hprime_layers[i]) {
      st.chains_prime.push_back(chain_for(g, v, st.Hprime_layers, i));
      check_alternation(rep, rt, st.chains_prime.back(), even_forward, "H'", st.chain_findings);
    }
  const VSet nu = g.neighbors(st.u);
  for (const VSet& l : st.Hprime_layers)
    if (!subset(l, nu)) throw assertion("H' layers", "layer of H' leaves N(u)");
}

void build_g0(const ProjectionRep& rep, const Graph& g, GeneralEliminationState& st) {
  const VertexId u = st.u;
  VSet layered;
  for (const VSet& l : st.H_layers) layered = set_union(layered, l);
  for (const VSet& l : st.Hprime_layers) layered = set_union(layered, l);
  st.G0 = set_union(set_union(st.Cu, st.C2), set_minus(st.H, layered));
  for (VertexId v : st.G0)
    if (v != u && !rep[v].bounded()) throw assertion("G0 vertices", "vertex " + vname(v) + " is unbounded");
  if (!subset(st.G0, set_union(closed(g, {u}), st.V0))) throw assertion("G0 vertices", "G0 leaves N[u] + V0(u)");

  ModuleAudit audit;
  audit.n = g.size();
  audit.u = u;
  audit.G0 = st.G0;
  std::vector<VertexId> others;
  for (int i = 0; i < g.size(); ++i)
    if (i != u) others.push_back(i);
  const Graph gmu = restrict_graph(g, others);
  VSet local;
  for (size_t i = 0; i < others.size(); ++i)
    if (st.G0.count(others[i])) local.insert(static_cast<VertexId>(i));
  audit.module_ok = is_module(gmu, local);
  const VSet expect = set_union(st.N, layered);
  audit.neighborhood_ok = true;
  for (VertexId v : st.G0)
    if (v != u && set_minus(g.neighbors(v), st.G0) != expect) audit.neighborhood_ok = false;
  {
    std::lock_guard<std::mutex> lock(sink_mutex());
    if (audit_sink()) audit_sink()(audit);
  }
  if (!audit.module_ok) throw Error(ErrorKind::ModuleCheckFailed, "G0 - u is not a module in G - u");
  if (!audit.neighborhood_ok)
    throw Error(ErrorKind::ModuleCheckFailed, "outside neighbourhood of G0 differs from N(X1) + layers");

  const VSet nu = g.neighbors(u);
  st.u_star = -1;
  for (VertexId q : st.N) {
    if (!rep[q].bounded() || nu.count(q) || q == u) continue;
    const VSet nq = g.neighbors(q);
    if (!subset(nu, nq)) continue;
    VSet rest = st.G0;
    rest.erase(u);
    if (!subset(rest, nq)) continue;
    if (!(slope_key(rep[q]) < slope_key(rep[u])) || !intersects(rep[q], rep[u])) continue;
    st.u_star = q;
    break;
  }
  if (st.u_star < 0) throw Error(ErrorKind::NoEligibleUStar, "no bounded covering vertex of u in N(X1) fits");
  st.G0prime = st.G0;
  st.G0prime.insert(st.u_star);
  if (static_cast<int>(st.G0prime.size()) >= g.size())
    throw Error(ErrorKind::RecursionNotShrinking, "G0' has " + std::to_string(st.G0prime.size()) + " of " +
                                                      std::to_string(g.size()) + " vertices");
}

Segment make_line_segment(const ProjectionRep& rep, GeneralEliminationState& st) {
  const Pgram& pu = rep[st.u];
  const Pgram& pw = rep[st.w];
  const Pgram& px2 = rep[st.x2];
  st.delta = pw.r - pu.r;
  if (!(st.delta > 0)) throw Error(ErrorKind::GeometryViolated, "r(w) does not exceed r(u)");
  const Coord shifted = pu.L + st.delta;
  st.ell = Segment{std::min(px2.L, shifted), pw.r};
  const Coord key = st.ell.b_ell - st.ell.a_ell;
  if (key < slope_key(pu)) throw Error(ErrorKind::GeometryViolated, "segment slope below u's");
  const bool between = pu.L < st.ell.a_ell && st.ell.a_ell <= px2.L && pu.r < st.ell.b_ell &&
                       st.ell.b_ell < px2.l && pw.R < st.ell.a_ell;
  if (!between) throw Error(ErrorKind::GeometryViolated, "segment is not between P_u, P_w and P_x2");
  return st.ell;
}

ProjectionRep assemble_r_ell(const ProjectionRep& rep, const Graph& g, GeneralEliminationState& st,
                             const ProjectionRep& sub) {
  const std::vector<VertexId> ids(st.G0.begin(), st.G0.end());
  if (sub.size() != static_cast<int>(ids.size())) throw Error(ErrorKind::SubgraphMismatch, "sub size mismatch");
  const Coord& a = st.ell.a_ell;
  const Coord& b = st.ell.b_ell;
  const Coord key = b - a;
  std::optional<Coord> d;
  auto take = [&](const Coord& x) {
    if (!d || x < *d) d = x;
  };
  for (int i = 0; i < rep.size(); ++i) {
    if (st.G0.count(i)) continue;
    const Pgram& p = rep[i];
    take(abs(p.L - a));
    take(abs(p.R - a));
    take(abs(p.l - b));
    take(abs(p.r - b));
    take(abs(slope_key(p) - key) / 2);
  }
  Coord eps = ambient_epsilon(rep);
  if (d) eps = std::min(eps, *d);
  if (!(eps > 0)) throw Error(ErrorKind::BandCollision, "an outside endpoint or slope sits on the segment");

  Graph gmu = g;
  for (int x = 0; x < g.size(); ++x) gmu.remove_edge(st.u, x);
  for (int attempt = 0; attempt < 8; ++attempt, eps /= 2) {
    const ProjectionRep squeezed = squeeze(sub, st.ell, eps);
    ProjectionRep out = rep;
    for (size_t i = 0; i < ids.size(); ++i) out[ids[i]] = squeezed[static_cast<VertexId>(i)];
    if (!validate(out).empty()) continue;
    Graph h = induced_graph(out);
    for (int x = 0; x < g.size(); ++x) h.remove_edge(st.u, x);
    if (h != gmu) throw Error(ErrorKind::SubgraphMismatch, "R_ell - u: " + graph_diff(gmu, h));
    for (VertexId z : g.neighbors(st.u))
      if (!intersects(out[z], out[st.u]))
        throw assertion("R_ell crossings", "P_" + vname(z) + " misses P_u in R_ell");
    if (!border_property_unchecked(out, g, st.u, Side::Right))
      throw assertion("R_ell border", "u lacks the right border property in R_ell");
    st.eps = eps;
    return out;
  }
  throw Error(ErrorKind::BandCollision, "no squeeze width gave distinct endpoints");
}

ProjectionRep transformations456(const ProjectionRep& r_ell, const Graph& g, GeneralEliminationState& st) {
  auto [with_t, t] = add_sentinel(r_ell);
  Graph gt(with_t.size());
  for (auto [x, y] : g.edges()) gt.add_edge(x, y);
  StageOptions opt;
  opt.verify_without_u = true;
  const Coord h = st.eps / 2;
  opt.band = Band{st.G0, st.ell.a_ell - h, st.ell.a_ell + h, st.ell.b_ell - h, st.ell.b_ell + h};
  ProjectionRep r3 = run_border_stages(with_t, gt, st.u, t, st.border, opt);
  if (!border_property(r3, gt, st.u, Side::Right))
    throw assertion("last stage border", "u lacks the right border property after the last stage");
  for (size_t i = 1; i < st.border.stage_reps.size(); ++i) {
    ProjectionRep s = st.border.stage_reps[i];
    s.v.pop_back();
    st.stage_reps.push_back(s);
  }
  r3.v.pop_back();
  return r3;
}

namespace {

CoreResult general_core(const ProjectionRep& rep_in, const TrapezoidRep& rt_in, const Graph& g, VertexId u,
                        int depth) {
  CoreResult res;
  GeneralEliminationState& st = res.st;
  st.u = u;
  st.depth = depth;
  ProjectionRep rep = rep_in;
  TrapezoidRep rt = rt_in;

  const CoveringReport cov = covering(g, u);
  if (cov.v0_components.size() != 1)
    throw Error(ErrorKind::PreconditionFailed, "V0(" + vname(u) + ") is empty or disconnected");
  st.Nu = g.neighbors(u);
  st.V0 = cov.v0_union;
  const QSets q = q_sets(rep, rt, u);
  if (!q.v0_left) {
    rt = flip_vertical(rt);
    st.flipped = true;
  }
  if (!q.Q2.empty()) throw Error(ErrorKind::PreconditionFailed, "Q2(" + vname(u) + ") is not empty");
  st.Qu = q.Qu;
  if (!set_inter(st.Qu, st.V0).empty()) throw assertion("nested unbounded set", "Q_u meets V0(u)");
  for (VertexId c : cov.covering_set)
    for (VertexId v : st.Qu)
      if (!subset(g.neighbors(v), g.neighbors(c))) throw assertion("nested unbounded set", "covering vertex misses N(q)");

  st.stage_reps.push_back(rep);
  select_anchors(rep, rt, g, st);
  if (st.reversed) st.stage_reps.back() = rep;
  st.Xtilde1 = grow_x1(g, st.x1, st.w);
  build_partition(rep, rt, g, st);
  layer_h(rep, rt, g, st);
  build_g0(rep, g, st);
  make_line_segment(rep, st);

  const std::vector<VertexId> ids(st.G0prime.begin(), st.G0prime.end());
  const ProjectionRep sub = restrict_rep(rep, ids);
  const TrapezoidRep sub_rt = restrict_rep(rt, ids);
  const VertexId su = static_cast<VertexId>(std::find(ids.begin(), ids.end(), u) - ids.begin());
  const VertexId sstar = static_cast<VertexId>(std::find(ids.begin(), ids.end(), st.u_star) - ids.begin());
  ProjectionRep r0 = right_border_rep(sub, sub_rt, su, depth + 1);
  r0.v.erase(r0.v.begin() + sstar);

  const ProjectionRep r_ell = assemble_r_ell(rep, g, st, r0);
  st.stage_reps.push_back(r_ell);
  res.rep = transformations456(r_ell, g, st);
  return res;
}

}  // namespace

ProjectionRep right_border_rep(const ProjectionRep& rep, const TrapezoidRep& rt, VertexId u, int depth) {
  auto fail = [&](const std::string& m) {
    return Error(ErrorKind::PreconditionFailed, "single-unbounded recursion (depth " + std::to_string(depth) +
                                                    "): " + m);
  };
  const Graph g = induced_graph(rep);
  if (g != induced_graph_trapezoid(rt)) throw Error(ErrorKind::RepsDisagree, "single-unbounded recursion");
  if (rep.unbounded() != VSet{u}) throw fail("u is not the only unbounded vertex");
  if (g.components(all_vertices(g.size())).size() != 1) throw fail("graph is disconnected");
  const CoveringReport cov = covering(g, u);
  if (cov.v0_components.size() != 1) throw fail("V0(u) is empty or disconnected");
  if (set_union(closed(g, {u}), cov.v0_union) != all_vertices(g.size())) throw fail("V differs from N[u] + V0(u)");
  if (border_property(rep, g, u, Side::Right)) return rep;
  if (border_property(rep, g, u, Side::Left)) return reverse(rep);

  CoreResult core = general_core(rep, rt, g, u, depth);
  const ProjectionRep out = reunbind_far_right(core.rep, u);
  const Graph h = induced_graph(out);
  if (h != g) throw Error(ErrorKind::GraphChanged, "re-unbinding u: " + graph_diff(g, h));
  if (!border_property(out, g, u, Side::Right))
    throw assertion("re-unbinding border", "u lacks the right border property after re-unbinding");
  return out;
}

std::pair<ProjectionRep, GeneralEliminationState> eliminate_general(const ProjectionRep& rep,
                                                                    const TrapezoidRep& rt, VertexId u) {
  auto fail = [](const std::string& m) { return Error(ErrorKind::PreconditionFailed, "eliminate_general: " + m); };
  if (u < 0 || u >= rep.size()) throw fail("unknown vertex " + vname(u));
  if (!rep[u].unbounded()) throw fail("vertex " + vname(u) + " is bounded");
  require_valid(rep, "eliminate_general");
  const Graph g = induced_graph(rep);
  if (rt.size() != rep.size() || g != induced_graph_trapezoid(rt)) throw fail("representations disagree");
  const CoveringReport cov = covering(g, u);
  if (cov.v0_components.empty()) throw fail("V0(" + vname(u) + ") is empty");
  if (cov.v0_components.size() > 1) throw fail("V0(" + vname(u) + ") is disconnected");

  if (border_property(rep, g, u, Side::Right) || border_property(rep, g, u, Side::Left)) {
    auto [out, bst] = eliminate_border(rep, u);
    GeneralEliminationState st;
    st.u = u;
    st.Nu = g.neighbors(u);
    st.V0 = cov.v0_union;
    st.border = bst;
    st.stage_reps.push_back(rep);
    st.stage_reps.push_back(out);
    return {out, st};
  }

  const VSet vu = rep.unbounded();
  for (VertexId x : vu)
    if (x != u && !(slope_key(rep[u]) < slope_key(rep[x]))) throw fail("u does not have the smallest slope key");
  if (!is_unbounded_maximal(rep, g, u)) throw fail("u is not unbounded-maximal");
  for (VertexId a : vu)
    for (VertexId b : vu)
      if (a < b && g.neighbors(a) == g.neighbors(b))
        throw fail("unbounded vertices " + vname(a) + " and " + vname(b) + " have equal neighbourhoods");
  if (!check_conditions(rep, rt).condition3) throw fail("a nested unbounded vertex lies opposite its V0 (condition 3)");
  if (g.components(all_vertices(g.size())).size() != 1) throw fail("graph is disconnected");

  CoreResult core = general_core(rep, rt, g, u, 0);
  const Graph h = induced_graph(core.rep);
  if (h != g) throw Error(ErrorKind::GraphChanged, "eliminate_general: " + graph_diff(g, h));
  VSet want = vu;
  want.erase(u);
  if (core.rep.unbounded() != want) throw assertion("eliminate_general", "unbounded set not reduced by u");
  return {core.rep, core.st};
}

}  // namespace tolkit
