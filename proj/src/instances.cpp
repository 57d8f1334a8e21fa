#include "tolkit/instances.hpp"

#include <algorithm>
#include <random>

#include "tolkit/analysis.hpp"

namespace tolkit {

Graph tolerance_graph(const ToleranceRep& tr) {
  Graph g(tr.size());
  for (int i = 0; i < tr.size(); ++i)
    for (int j = i + 1; j < tr.size(); ++j) {
      const auto& a = tr.v[i];
      const auto& b = tr.v[j];
      Coord overlap = std::min(a.hi, b.hi) - std::max(a.lo, b.lo);
      if (overlap < 0) overlap = 0;
      if (overlap >= std::min(a.t, b.t)) g.add_edge(i, j);
    }
  return g;
}

namespace {

ProjectionRep raw_conversion(const ToleranceRep& tr, const Coord& delta) {
  ProjectionRep rep;
  for (const auto& x : tr.v) {
    if (x.t <= x.hi - x.lo)
      rep.v.push_back(Pgram::box(x.lo + x.t, x.hi, x.lo, x.hi - x.t));
    else
      rep.v.push_back(Pgram::line(x.hi + delta, x.lo));
  }
  return rep;
}

}  // namespace

ProjectionRep tolerance_to_projection(const ToleranceRep& tr) {
  for (int i = 0; i < tr.size(); ++i)
    if (tr.v[i].lo > tr.v[i].hi || tr.v[i].t <= 0)
      throw Error(ErrorKind::ConversionFailed, "invalid tolerance vertex " + std::to_string(i));
  const Graph want = tolerance_graph(tr);
  Coord delta = 1;
  for (int k = 0; k < 80; ++k, delta /= 2) {
    ProjectionRep rep = raw_conversion(tr, delta);
    if (induced_graph_loose(rep) != want) continue;
    rep = perturb_distinct(rep);
    const Graph got = induced_graph(rep);
    if (got != want) throw Error(ErrorKind::ConversionFailed, graph_diff(want, got));
    return rep;
  }
  throw Error(ErrorKind::ConversionFailed, graph_diff(want, induced_graph_loose(raw_conversion(tr, delta))));
}

namespace {

Coord grid_value(std::mt19937_64& rng, int lo, int hi) {
  static const int dens[] = {1, 2, 3, 4, 5};
  std::uniform_int_distribution<int> den_pick(0, 4);
  const int d = dens[den_pick(rng)];
  std::uniform_int_distribution<int> num(lo * d, hi * d);
  return ratio(num(rng), d);
}

}  // namespace

ToleranceRep gen_tolerance_rep(int n, std::uint64_t seed, double unbounded_fraction) {
  std::mt19937_64 rng(seed);
  std::bernoulli_distribution unb(unbounded_fraction);
  ToleranceRep tr;
  const int span = 4 * std::max(n, 1);
  for (int i = 0; i < n; ++i) {
    Coord lo = grid_value(rng, 0, span);
    Coord len = grid_value(rng, 1, span / 2 + 1);
    ToleranceVertex x{lo, lo + len, 0};
    if (unb(rng))
      x.t = len + grid_value(rng, 1, span / 2);
    else {
      x.t = len * grid_value(rng, 1, 20) / 20;
    }
    tr.v.push_back(x);
  }
  return tr;
}

namespace {

ProjectionRep random_rep(int n, int lines, std::mt19937_64& rng) {
  const int m = 1000;
  std::uniform_int_distribution<int> pos(0, m);
  std::uniform_int_distribution<int> width(0, m / 4);
  for (int tries = 0; tries < 100; ++tries) {
    ProjectionRep rep;
    for (int i = 0; i < n; ++i) {
      const int L = pos(rng), l = pos(rng);
      const int w = i < n - lines ? width(rng) + 1 : 0;
      Pgram p = Pgram::box(L, L + w, l, l + w);
      if (i >= n - lines) p.kind = Kind::Unbounded;
      rep.v.push_back(p);
    }
    if (lines > 0) {
      // Spread the lines over random vertex positions.
      std::vector<int> perm(n);
      for (int i = 0; i < n; ++i) perm[i] = i;
      std::shuffle(perm.begin(), perm.end(), rng);
      ProjectionRep shuffled;
      shuffled.v.resize(n);
      for (int i = 0; i < n; ++i) shuffled.v[perm[i]] = rep.v[i];
      rep = shuffled;
    }
    if (validate(rep).empty()) return rep;
    try {
      return perturb_distinct(rep, static_cast<std::uint64_t>(rng()));
    } catch (const Error&) {
    }
  }
  throw Error(ErrorKind::PerturbFailed, "random_rep");
}

}  // namespace

ProjectionRep gen_parallelogram_rep(int n, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  return random_rep(n, 0, rng);
}

ProjectionRep gen_projection_rep(int n, int k, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  return random_rep(n, std::min(n, k), rng);
}

namespace {

// Candidate coordinates: the interval ends plus midpoints of consecutive endpoint gaps inside [lo, hi].
std::vector<Coord> grid_in(std::vector<Coord> pts, const Coord& lo, const Coord& hi) {
  pts.push_back(lo);
  pts.push_back(hi);
  std::sort(pts.begin(), pts.end());
  pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
  std::vector<Coord> out;
  for (size_t i = 0; i < pts.size(); ++i) {
    if (pts[i] >= lo && pts[i] <= hi) out.push_back(pts[i]);
    if (i + 1 < pts.size()) {
      Coord mid = (pts[i] + pts[i + 1]) / 2;
      if (mid >= lo && mid <= hi) out.push_back(mid);
    }
  }
  return out;
}

std::optional<ProjectionRep> search_line(const ProjectionRep& rep, VertexId v, const std::vector<Coord>& tops,
                                         const std::vector<Coord>& bottoms, bool prefer_inevitable) {
  const Graph want = induced_graph(rep);
  std::optional<ProjectionRep> fallback;
  for (const Coord& a : tops)
    for (const Coord& b : bottoms) {
      ProjectionRep cand = rep;
      cand[v] = Pgram::line(a, b);
      if (!validate(cand).empty()) continue;
      if (induced_graph(cand) != want) continue;
      if (!prefer_inevitable || is_inevitable(cand, v)) return cand;
      if (!fallback) fallback = cand;
    }
  return fallback;
}

}  // namespace

std::optional<ProjectionRep> unbind_vertex(const ProjectionRep& rep, VertexId v) {
  if (!rep[v].bounded()) return std::nullopt;
  ProjectionRep rest = rep;
  rest.v.erase(rest.v.begin() + v);
  const auto tops = grid_in(endpoints_upper(rest), rep[v].L, rep[v].R);
  const auto bottoms = grid_in(endpoints_lower(rest), rep[v].l, rep[v].r);
  return search_line(rep, v, tops, bottoms, false);
}

std::optional<ProjectionRep> unbind_vertex_anywhere(const ProjectionRep& rep, VertexId v, bool prefer_inevitable) {
  if (!rep[v].bounded()) return std::nullopt;
  ProjectionRep rest = rep;
  rest.v.erase(rest.v.begin() + v);
  auto up = endpoints_upper(rest);
  auto low = endpoints_lower(rest);
  if (up.empty()) return unbind_vertex(rep, v);
  const auto tops = grid_in(up, up.front() - 1, up.back() + 1);
  const auto bottoms = grid_in(low, low.front() - 1, low.back() + 1);
  return search_line(rep, v, tops, bottoms, prefer_inevitable);
}

std::optional<std::pair<ProjectionRep, TrapezoidRep>> gen_condition1_instance(int n, std::uint64_t seed) {
  if (n < 2) return std::nullopt;
  const ProjectionRep base = gen_parallelogram_rep(n, seed);
  const TrapezoidRep rt = as_trapezoids(base);
  for (VertexId v = 0; v < n; ++v)
    if (auto r = unbind_vertex(base, v)) return std::make_pair(*r, rt);
  return std::nullopt;
}

std::optional<std::pair<ProjectionRep, TrapezoidRep>> gen_unbounded_instance(int n, int k, std::uint64_t seed) {
  if (n < 2) return std::nullopt;
  const ProjectionRep base = gen_parallelogram_rep(n, seed);
  const TrapezoidRep rt = as_trapezoids(base);
  std::mt19937_64 rng(seed ^ 0x9e3779b97f4a7c15ULL);
  std::vector<VertexId> order(n);
  for (int i = 0; i < n; ++i) order[i] = i;
  std::shuffle(order.begin(), order.end(), rng);
  ProjectionRep cur = base;
  int made = 0;
  for (VertexId v : order) {
    if (made == k) break;
    if (auto r = unbind_vertex_anywhere(cur, v, true)) {
      if (!is_inevitable(*r, v)) continue;
      cur = *r;
      ++made;
    }
  }
  cur = canonicalize(cur);
  if (cur.unbounded().empty()) return std::nullopt;
  return std::make_pair(cur, rt);
}

namespace {

std::vector<Coord> corner_grid(std::vector<Coord> pts) {
  std::sort(pts.begin(), pts.end());
  if (pts.empty()) return {Coord(0), Coord(1)};
  std::vector<Coord> out{pts.front() - 1};
  for (size_t i = 0; i + 1 < pts.size(); ++i) out.push_back((pts[i] + pts[i + 1]) / 2);
  out.push_back(pts.back() + 1);
  return out;
}

}  // namespace

std::optional<TrapezoidRep> find_trapezoid_model(const Graph& g, std::uint64_t seed, int attempts) {
  const int n = g.size();
  std::mt19937_64 rng(seed);
  for (int at = 0; at < attempts; ++at) {
    std::vector<VertexId> order(n);
    for (int i = 0; i < n; ++i) order[i] = i;
    std::shuffle(order.begin(), order.end(), rng);
    TrapezoidRep rt;
    rt.v.resize(n);
    std::vector<VertexId> placed;
    std::vector<Coord> up, low;
    bool stuck = false;
    for (VertexId v : order) {
      const auto tops = corner_grid(up);
      const auto bottoms = corner_grid(low);
      std::vector<Trapezoid> fits;
      for (size_t i = 0; i < tops.size(); ++i)
        for (size_t j = i + 1; j < tops.size(); ++j)
          for (size_t p = 0; p < bottoms.size(); ++p)
            for (size_t q = p + 1; q < bottoms.size(); ++q) {
              const Trapezoid t{tops[i], tops[j], bottoms[p], bottoms[q]};
              bool ok = true;
              for (size_t k = 0; k < placed.size() && ok; ++k)
                ok = intersects(t, rt[placed[k]]) == g.has_edge(v, placed[k]);
              if (ok) fits.push_back(t);
            }
      if (fits.empty()) {
        stuck = true;
        break;
      }
      std::uniform_int_distribution<size_t> pick(0, fits.size() - 1);
      rt[v] = fits[pick(rng)];
      placed.push_back(v);
      up.insert(up.end(), {rt[v].A, rt[v].B});
      low.insert(low.end(), {rt[v].a, rt[v].b});
    }
    if (!stuck && validate(rt).empty() && induced_graph_trapezoid(rt) == g) return rt;
  }
  return std::nullopt;
}

std::optional<std::pair<ProjectionRep, TrapezoidRep>> gen_general_instance(int n, std::uint64_t seed) {
  if (n < 4) return std::nullopt;
  std::mt19937_64 rng(seed);
  for (int tries = 0; tries < 400; ++tries) {
    const ProjectionRep rep = canonicalize(gen_projection_rep(n, 1, rng()));
    if (rep.unbounded().size() != 1) continue;
    const VertexId u = *rep.unbounded().begin();
    const Graph g = induced_graph(rep);
    if (covering(g, u).v0_components.size() != 1) continue;
    if (border_property(rep, g, u, Side::Right) || border_property(rep, g, u, Side::Left)) continue;
    if (auto rt = find_trapezoid_model(g, rng())) return std::make_pair(rep, *rt);
  }
  return std::nullopt;
}

}  // namespace tolkit
