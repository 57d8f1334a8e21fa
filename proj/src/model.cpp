#include "tolkit/model.hpp"

#include <algorithm>
#include <map>
#include <random>
#include <sstream>

namespace tolkit {

std::string to_string(const Coord& c) {
  Coord x = c;
  x.canonicalize();
  return x.get_num().get_str() + "/" + x.get_den().get_str();
}

Coord ratio(long num, long den) {
  Coord c(num, den);
  c.canonicalize();
  return c;
}

Coord parse_coord(const std::string& s) {
  auto bad = [&] { return Error(ErrorKind::ParseError, "bad coordinate '" + s + "'"); };
  if (s.empty()) throw bad();
  const auto slash = s.find('/');
  auto is_int = [](const std::string& t, bool allow_sign) {
    if (t.empty()) return false;
    size_t i = 0;
    if (allow_sign && (t[0] == '-' || t[0] == '+')) i = 1;
    if (i == t.size()) return false;
    return std::all_of(t.begin() + static_cast<long>(i), t.end(), [](char ch) { return ch >= '0' && ch <= '9'; });
  };
  const std::string num = s.substr(0, slash);
  const std::string den = slash == std::string::npos ? "1" : s.substr(slash + 1);
  if (!is_int(num, true) || !is_int(den, false)) throw bad();
  mpz_class n(num[0] == '+' ? num.substr(1) : num, 10);
  mpz_class d(den, 10);
  if (d == 0) throw bad();
  Coord c(n, d);
  c.canonicalize();
  return c;
}

const char* error_kind_name(ErrorKind k) {
  switch (k) {
    case ErrorKind::InvalidRep: return "InvalidRep";
    case ErrorKind::PerturbFailed: return "PerturbFailed";
    case ErrorKind::UnknownVertex: return "UnknownVertex";
    case ErrorKind::NotUnbounded: return "NotUnbounded";
    case ErrorKind::GraphMismatch: return "GraphMismatch";
    case ErrorKind::RepsDisagree: return "RepsDisagree";
    case ErrorKind::V0Empty: return "V0Empty";
    case ErrorKind::EpsNonPositive: return "EpsNonPositive";
    case ErrorKind::PreconditionFailed: return "PreconditionFailed";
    case ErrorKind::NoUnbounded: return "NoUnbounded";
    case ErrorKind::GraphChanged: return "GraphChanged";
    case ErrorKind::NoWitness: return "NoWitness";
    case ErrorKind::TieUnresolvable: return "TieUnresolvable";
    case ErrorKind::EmptyFrontier: return "EmptyFrontier";
    case ErrorKind::AssertionFailed: return "AssertionFailed";
    case ErrorKind::ChainNotFound: return "ChainNotFound";
    case ErrorKind::ModuleCheckFailed: return "ModuleCheckFailed";
    case ErrorKind::NoEligibleUStar: return "NoEligibleUStar";
    case ErrorKind::RecursionNotShrinking: return "RecursionNotShrinking";
    case ErrorKind::GeometryViolated: return "GeometryViolated";
    case ErrorKind::BandCollision: return "BandCollision";
    case ErrorKind::SubgraphMismatch: return "SubgraphMismatch";
    case ErrorKind::BandViolation: return "BandViolation";
    case ErrorKind::ConversionFailed: return "ConversionFailed";
    case ErrorKind::ParseError: return "ParseError";
  }
  return "Error";
}

VSet ProjectionRep::unbounded() const {
  VSet s;
  for (int i = 0; i < size(); ++i)
    if (v[i].unbounded()) s.insert(i);
  return s;
}

VSet ProjectionRep::bounded() const {
  VSet s;
  for (int i = 0; i < size(); ++i)
    if (v[i].bounded()) s.insert(i);
  return s;
}

void Graph::add_edge(VertexId a, VertexId b) {
  if (a == b) return;
  adj_[idx(a, b)] = 1;
  adj_[idx(b, a)] = 1;
}

void Graph::remove_edge(VertexId a, VertexId b) {
  adj_[idx(a, b)] = 0;
  adj_[idx(b, a)] = 0;
}

VSet Graph::neighbors(VertexId a) const {
  VSet s;
  for (int j = 0; j < n_; ++j)
    if (adj_[idx(a, j)]) s.insert(j);
  return s;
}

VSet Graph::neighbors(const VSet& s) const {
  VSet out;
  for (VertexId a : s)
    for (int j = 0; j < n_; ++j)
      if (adj_[idx(a, j)] && !s.count(j)) out.insert(j);
  return out;
}

VSet Graph::closed_neighbors(const VSet& s) const {
  VSet out = neighbors(s);
  out.insert(s.begin(), s.end());
  return out;
}

std::vector<std::pair<VertexId, VertexId>> Graph::edges() const {
  std::vector<std::pair<VertexId, VertexId>> e;
  for (int i = 0; i < n_; ++i)
    for (int j = i + 1; j < n_; ++j)
      if (adj_[idx(i, j)]) e.emplace_back(i, j);
  return e;
}

int Graph::edge_count() const { return static_cast<int>(edges().size()); }

std::vector<VSet> Graph::components(const VSet& verts) const {
  std::vector<VSet> out;
  VSet seen;
  for (VertexId s : verts) {
    if (seen.count(s)) continue;
    VSet comp{s};
    std::vector<VertexId> stack{s};
    seen.insert(s);
    while (!stack.empty()) {
      VertexId a = stack.back();
      stack.pop_back();
      for (VertexId b : verts)
        if (!seen.count(b) && has_edge(a, b)) {
          seen.insert(b);
          comp.insert(b);
          stack.push_back(b);
        }
    }
    out.push_back(std::move(comp));
  }
  return out;
}

std::string graph_diff(const Graph& a, const Graph& b) {
  std::ostringstream os;
  if (a.size() != b.size()) {
    os << "vertex count " << a.size() << " vs " << b.size();
    return os.str();
  }
  bool first = true;
  for (int i = 0; i < a.size(); ++i)
    for (int j = i + 1; j < a.size(); ++j)
      if (a.has_edge(i, j) != b.has_edge(i, j)) {
        os << (first ? "" : ", ") << (a.has_edge(i, j) ? "-" : "+") << i << "-" << j;
        first = false;
      }
  return os.str();
}

Coord slope_key(const Pgram& p) { return p.l - p.L; }

bool precedes(const Pgram& p, const Pgram& q) { return p.r < q.l && p.R < q.L; }

bool intersects(const Pgram& p, const Pgram& q) { return !precedes(p, q) && !precedes(q, p); }

bool adjacent(const Pgram& p, const Pgram& q) {
  if (p.unbounded() && q.unbounded()) return false;
  if (!intersects(p, q)) return false;
  if (p.bounded() && q.bounded()) return true;
  const Pgram& u = p.unbounded() ? p : q;
  const Pgram& b = p.unbounded() ? q : p;
  return slope_key(b) > slope_key(u);
}

bool precedes(const Trapezoid& p, const Trapezoid& q) { return p.b < q.a && p.B < q.A; }

bool intersects(const Trapezoid& p, const Trapezoid& q) { return !precedes(p, q) && !precedes(q, p); }

const char* violation_name(ViolationKind k) {
  switch (k) {
    case ViolationKind::BadOrder: return "BadOrder";
    case ViolationKind::NotParallelogram: return "NotParallelogram";
    case ViolationKind::UnboundedNotLine: return "UnboundedNotLine";
    case ViolationKind::DuplicateEndpoint: return "DuplicateEndpoint";
    case ViolationKind::DuplicateSlope: return "DuplicateSlope";
  }
  return "Violation";
}

std::vector<Violation> validate_shape(const ProjectionRep& rep) {
  std::vector<Violation> out;
  for (int i = 0; i < rep.size(); ++i) {
    const Pgram& p = rep[i];
    if (p.L > p.R || p.l > p.r)
      out.push_back({ViolationKind::BadOrder, {i}, "endpoints out of order"});
    if (p.l - p.L != p.r - p.R)
      out.push_back({ViolationKind::NotParallelogram, {i}, "l - L != r - R"});
    if (p.unbounded() && (p.L != p.R || p.l != p.r))
      out.push_back({ViolationKind::UnboundedNotLine, {i}, "unbounded vertex is not a line"});
  }
  return out;
}

namespace {

void duplicates(const std::vector<std::pair<Coord, VertexId>>& pts, ViolationKind kind, const char* what,
                std::vector<Violation>& out) {
  std::map<Coord, std::vector<VertexId>> by;
  for (const auto& [c, v] : pts) by[c].push_back(v);
  for (const auto& [c, vs] : by)
    if (vs.size() > 1) out.push_back({kind, vs, std::string(what) + " at " + to_string(c)});
}

}  // namespace

std::vector<Violation> validate(const ProjectionRep& rep) {
  std::vector<Violation> out = validate_shape(rep);
  std::vector<std::pair<Coord, VertexId>> up, low, keys;
  for (int i = 0; i < rep.size(); ++i) {
    const Pgram& p = rep[i];
    up.emplace_back(p.L, i);
    if (p.R != p.L) up.emplace_back(p.R, i);
    low.emplace_back(p.l, i);
    if (p.r != p.l) low.emplace_back(p.r, i);
    keys.emplace_back(slope_key(p), i);
  }
  duplicates(up, ViolationKind::DuplicateEndpoint, "shared L1 endpoint", out);
  duplicates(low, ViolationKind::DuplicateEndpoint, "shared L2 endpoint", out);
  duplicates(keys, ViolationKind::DuplicateSlope, "shared slope key", out);
  return out;
}

std::vector<Violation> validate(const TrapezoidRep& rep) {
  std::vector<Violation> out;
  std::vector<std::pair<Coord, VertexId>> up, low;
  for (int i = 0; i < rep.size(); ++i) {
    const Trapezoid& t = rep[i];
    if (t.A > t.B || t.a > t.b) out.push_back({ViolationKind::BadOrder, {i}, "corners out of order"});
    up.emplace_back(t.A, i);
    if (t.B != t.A) up.emplace_back(t.B, i);
    low.emplace_back(t.a, i);
    if (t.b != t.a) low.emplace_back(t.b, i);
  }
  duplicates(up, ViolationKind::DuplicateEndpoint, "shared L1 corner", out);
  duplicates(low, ViolationKind::DuplicateEndpoint, "shared L2 corner", out);
  return out;
}

void require_valid(const ProjectionRep& rep, const std::string& where) {
  auto v = validate(rep);
  if (v.empty()) return;
  std::ostringstream os;
  os << where << ":";
  for (const auto& x : v) {
    os << " " << violation_name(x.kind) << "[";
    for (size_t i = 0; i < x.vertices.size(); ++i) os << (i ? "," : "") << x.vertices[i];
    os << "]";
  }
  throw Error(ErrorKind::InvalidRep, os.str());
}

Graph induced_graph_loose(const ProjectionRep& rep) {
  if (!validate_shape(rep).empty()) require_valid(rep, "induced_graph");
  Graph g(rep.size());
  for (int i = 0; i < rep.size(); ++i)
    for (int j = i + 1; j < rep.size(); ++j)
      if (adjacent(rep[i], rep[j])) g.add_edge(i, j);
  return g;
}

Graph induced_graph(const ProjectionRep& rep) {
  require_valid(rep, "induced_graph");
  return induced_graph_loose(rep);
}

Graph induced_graph_trapezoid(const TrapezoidRep& rep) {
  for (int i = 0; i < rep.size(); ++i)
    if (rep[i].A > rep[i].B || rep[i].a > rep[i].b)
      throw Error(ErrorKind::InvalidRep, "trapezoid " + std::to_string(i) + " has corners out of order");
  Graph g(rep.size());
  for (int i = 0; i < rep.size(); ++i)
    for (int j = i + 1; j < rep.size(); ++j)
      if (intersects(rep[i], rep[j])) g.add_edge(i, j);
  return g;
}

namespace {

Coord min_gap(std::vector<Coord> xs) {
  std::sort(xs.begin(), xs.end());
  Coord best = 0;
  for (size_t i = 1; i < xs.size(); ++i) {
    Coord d = xs[i] - xs[i - 1];
    if (d > 0 && (best == 0 || d < best)) best = d;
  }
  return best;
}

}  // namespace

ProjectionRep perturb_distinct(const ProjectionRep& rep, std::uint64_t seed) {
  if (validate(rep).empty()) return rep;
  if (!validate_shape(rep).empty()) require_valid(rep, "perturb_distinct");
  const Graph g = induced_graph_loose(rep);

  VSet tied;
  for (const auto& v : validate(rep))
    for (VertexId x : v.vertices) tied.insert(x);

  std::vector<Coord> up, low, keys;
  for (const auto& p : rep.v) {
    up.push_back(p.L);
    up.push_back(p.R);
    low.push_back(p.l);
    low.push_back(p.r);
    keys.push_back(slope_key(p));
  }
  Coord h = 1;
  for (const Coord& gap : {min_gap(up), min_gap(low), min_gap(keys)})
    if (gap > 0 && gap < h) h = gap;
  h /= 8;

  // Offsets are multiples of h / (4 n^2) so that distinct vertices get distinct shifts.
  const int n = rep.size();
  const long steps = 4L * n * n + 4;
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<long> pick(1, steps - 1);
  auto unit = [&](long k) -> Coord { return h * ratio(k, steps); };

  auto attempt = [&](bool structured, int round) {
    ProjectionRep out = rep;
    long next = 1;
    for (VertexId i : tied) {
      Pgram& p = out[i];
      Coord a, b, w;
      if (structured) {
        // Left endpoints drift left and right endpoints drift right, keeping touching pairs touching.
        a = unit(next);
        b = unit(next + 1 + round);
        next += 2 + round;
        w = a + b;
      } else {
        a = unit(pick(rng)) - h / 2;
        b = unit(pick(rng)) - h / 2;
        w = unit(pick(rng)) - h / 2;
      }
      if (p.unbounded() || p.L == p.R) w = 0;
      if (p.R - p.L + w < 0) w = 0;
      p.L -= a;
      p.R += w - a;
      p.l -= b;
      p.r += w - b;
    }
    return out;
  };

  for (int k = 0; k < 4000; ++k) {
    ProjectionRep out = attempt(k < 8, k);
    if (validate(out).empty() && induced_graph_loose(out) == g) return out;
  }
  throw Error(ErrorKind::PerturbFailed, "no graph-preserving perturbation found");
}

ProjectionRep restrict_rep(const ProjectionRep& rep, const std::vector<VertexId>& verts) {
  ProjectionRep out;
  for (VertexId v : verts) out.v.push_back(rep[v]);
  return out;
}

TrapezoidRep restrict_rep(const TrapezoidRep& rep, const std::vector<VertexId>& verts) {
  TrapezoidRep out;
  for (VertexId v : verts) out.v.push_back(rep[v]);
  return out;
}

Graph restrict_graph(const Graph& g, const std::vector<VertexId>& verts) {
  Graph out(static_cast<int>(verts.size()));
  for (size_t i = 0; i < verts.size(); ++i)
    for (size_t j = i + 1; j < verts.size(); ++j)
      if (g.has_edge(verts[i], verts[j])) out.add_edge(static_cast<int>(i), static_cast<int>(j));
  return out;
}

TrapezoidRep as_trapezoids(const ProjectionRep& rep) {
  TrapezoidRep out;
  for (const auto& p : rep.v) out.v.push_back({p.L, p.R, p.l, p.r});
  return out;
}

std::vector<Coord> endpoints_upper(const ProjectionRep& rep) {
  std::vector<Coord> out;
  for (const auto& p : rep.v) {
    out.push_back(p.L);
    if (p.R != p.L) out.push_back(p.R);
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<Coord> endpoints_lower(const ProjectionRep& rep) {
  std::vector<Coord> out;
  for (const auto& p : rep.v) {
    out.push_back(p.l);
    if (p.r != p.l) out.push_back(p.r);
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace tolkit
