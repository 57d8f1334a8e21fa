#include "tolkit/suite.hpp"

#include <chrono>
#include <filesystem>
#include <functional>
#include <iomanip>
#include <map>
#include <random>
#include <sstream>

#include "tolkit/analysis.hpp"
#include "tolkit/border.hpp"
#include "tolkit/samples.hpp"
#include "tolkit/general.hpp"
#include "tolkit/instances.hpp"
#include "tolkit/io.hpp"
#include "tolkit/pipeline.hpp"
#include "tolkit/transforms.hpp"

namespace tolkit {

namespace {

constexpr int kMaxFailuresKept = 5;
constexpr double kOracleSeconds = 10.0;     // criterion 1
constexpr double kPipelineSeconds = 60.0;   // criterion 6

using Clock = std::chrono::steady_clock;

struct Tally {
  CriterionResult& r;
  void pass() {
    ++r.total;
    ++r.passed;
  }
  void fail(const std::string& why) {
    ++r.total;
    if (static_cast<int>(r.failures.size()) < kMaxFailuresKept) r.failures.push_back(why);
  }
  void check(bool ok, const std::string& why) { ok ? pass() : fail(why); }
};

CriterionResult criterion(int id, const char* name) {
  CriterionResult r;
  r.id = id;
  r.name = name;
  return r;
}

int count_or(const SuiteOptions& opt, int dflt) { return opt.seeds ? *opt.seeds : dflt; }

std::string seed_tag(std::uint64_t s) { return "seed " + std::to_string(s); }

void archive(const SuiteOptions& opt, const std::string& name, const ProjectionRep& rep,
             const std::optional<TrapezoidRep>& rt) {
  if (opt.archive_dir.empty()) return;
  std::filesystem::create_directories(opt.archive_dir);
  InstanceFile f;
  f.projection = rep;
  f.trapezoid = rt;
  f.expected_graph = induced_graph(rep);
  write_instance((std::filesystem::path(opt.archive_dir) / (name + ".json")).string(), f);
}

// Translation to a zero minimum on each line, for comparisons modulo a global shift.
ProjectionRep normalized(const ProjectionRep& rep) {
  if (rep.size() == 0) return rep;
  const Coord a = endpoints_upper(rep).front();
  const Coord b = endpoints_lower(rep).front();
  ProjectionRep out = rep;
  for (Pgram& p : out.v) {
    p.L -= a;
    p.R -= a;
    p.l -= b;
    p.r -= b;
  }
  return out;
}

bool order_reversed(const ProjectionRep& a, const ProjectionRep& b) {
  for (int i = 0; i < a.size(); ++i)
    for (int j = 0; j < a.size(); ++j)
      if (i != j && precedes(a[i], a[j]) != precedes(b[j], b[i])) return false;
  return true;
}

bool order_reversed(const TrapezoidRep& a, const TrapezoidRep& b) {
  for (int i = 0; i < a.size(); ++i)
    for (int j = 0; j < a.size(); ++j)
      if (i != j && precedes(a[i], a[j]) != precedes(b[j], b[i])) return false;
  return true;
}

// Canonical reps of criterion 2, shared with criteria 3 and 7.
std::vector<ProjectionRep> canonical_pool(const SuiteOptions& opt, int count) {
  std::vector<ProjectionRep> out;
  for (int i = 0; i < count; ++i) {
    const std::uint64_t s = opt.seed + 2000 + i;
    const int n = 2 + i % std::max(1, std::min(opt.n_max, 10) - 1);
    out.push_back(gen_projection_rep(n, i % 5, s));
  }
  return out;
}

CriterionResult crit_oracle(const SuiteOptions& opt) {
  CriterionResult r = criterion(1, "tolerance oracle equivalence");
  r.time_limit = kOracleSeconds;
  Tally t{r};
  const int count = count_or(opt, 500);
  const auto t0 = Clock::now();
  for (int i = 0; i < count; ++i) {
    const std::uint64_t s = opt.seed + 1000 + i;
    const int n = 1 + i % std::max(1, opt.n_max);
    const ToleranceRep tr = gen_tolerance_rep(n, s);
    try {
      t.check(induced_graph(tolerance_to_projection(tr)) == tolerance_graph(tr), seed_tag(s) + ": graph differs");
    } catch (const Error& e) {
      t.fail(seed_tag(s) + ": " + e.what());
    }
  }
  r.seconds = std::chrono::duration<double>(Clock::now() - t0).count();
  return r;
}

CriterionResult crit_canonical(const SuiteOptions& opt, const std::vector<ProjectionRep>& pool) {
  CriterionResult r = criterion(2, "canonicalization");
  Tally t{r};
  const auto t0 = Clock::now();
  for (size_t i = 0; i < pool.size(); ++i) {
    const ProjectionRep& rep = pool[i];
    const std::string tag = "pool " + std::to_string(i);
    try {
      const ProjectionRep c = canonicalize(rep);
      bool ok = induced_graph(c) == induced_graph(rep) && subset(c.unbounded(), rep.unbounded());
      for (VertexId u : c.unbounded()) ok = ok && is_inevitable(c, u);
      ok = ok && canonicalize(c) == c;
      t.check(ok, tag + ": canonical form broken");
    } catch (const Error& e) {
      t.fail(tag + ": " + e.what());
    }
  }
  (void)opt;
  r.seconds = std::chrono::duration<double>(Clock::now() - t0).count();
  return r;
}

CriterionResult crit_structure(const std::vector<ProjectionRep>& pool) {
  CriterionResult r = criterion(3, "structural checks on canonical reps");
  Tally t{r};
  const auto t0 = Clock::now();
  for (size_t i = 0; i < pool.size(); ++i) {
    const ProjectionRep c = canonicalize(pool[i]);
    std::optional<std::string> bad;
    for (auto check : {check_unbounded_neighbors, check_low_slope_crossing, check_crossing_containment,
                       check_bounded_covering})
      if (!bad) bad = check(c);
    t.check(!bad, "pool " + std::to_string(i) + ": " + bad.value_or(""));
  }
  r.seconds = std::chrono::duration<double>(Clock::now() - t0).count();
  return r;
}

CriterionResult crit_landmarks() {
  CriterionResult r = criterion(4, "border elimination on the landmark instance");
  Tally t{r};
  const auto t0 = Clock::now();
  const NamedInstance f = landmark_instance();
  const VertexId u = f.id("u"), w1 = f.id("w1"), w2 = f.id("w2"), y = f.id("y");
  try {
    auto [out, st] = eliminate_border(f.rep, u);
    const ProjectionRep& r1 = st.stage_reps.at(1);
    t.check(!st.reversed, "ran on the reversed representation");
    t.check(st.N1 == VSet{w1, w2}, "N1 before the first stage");
    t.check(st.N2 == VSet{w1}, "N2 after the first stage");
    t.check(set_minus(st.N1, st.N2) == VSet{w2}, "N1 \\ N2 after the first stage");
    t.check(st.L0 == r1[y].L, "L0 is not L(y)");
    t.check(st.r0 && *st.r0 == r1[w1].r, "r0 is not r(w1)");
    t.check(induced_graph(out) == induced_graph(f.rep), "final graph differs");
    t.check(out[u].bounded() && out.unbounded().empty(), "u still unbounded");
  } catch (const Error& e) {
    t.fail(e.what());
  }
  r.seconds = std::chrono::duration<double>(Clock::now() - t0).count();
  return r;
}

// First unbounded vertex with connected nonempty V0 and some border property.
std::optional<VertexId> border_candidate(const ProjectionRep& rep) {
  const Graph g = induced_graph(rep);
  for (VertexId u : rep.unbounded()) {
    if (covering(g, u).v0_components.size() != 1) continue;
    if (border_property(rep, g, u, Side::Right) || border_property(rep, g, u, Side::Left)) return u;
  }
  return std::nullopt;
}

CriterionResult crit_border(const SuiteOptions& opt) {
  CriterionResult r = criterion(5, "border elimination on generated instances");
  Tally t{r};
  const int want = count_or(opt, 200);
  const auto t0 = Clock::now();
  int found = 0;
  for (int i = 0; found < want && i < 50 * std::max(want, 1); ++i) {
    const std::uint64_t s = opt.seed + 5000 + i;
    const int n = 3 + i % std::max(1, std::min(opt.n_max, 10) - 2);
    ProjectionRep rep;
    std::optional<TrapezoidRep> rt;
    if (i % 2 == 0) {
      rep = canonicalize(gen_projection_rep(n, 1 + i % 3, s));
    } else {
      auto inst = gen_unbounded_instance(n, 1 + i % 3, s);
      if (!inst) continue;
      rep = inst->first;
      rt = inst->second;
    }
    const auto u = border_candidate(rep);
    if (!u) continue;
    ++found;
    try {
      auto [out, st] = eliminate_border(rep, *u);
      const bool ok = induced_graph(out) == induced_graph(rep) &&
                      out.unbounded().size() + 1 == rep.unbounded().size();
      if (!ok) archive(opt, "border_" + std::to_string(s), rep, rt);
      t.check(ok, seed_tag(s) + ": graph or unbounded count wrong");
    } catch (const Error& e) {
      archive(opt, "border_" + std::to_string(s), rep, rt);
      t.fail(seed_tag(s) + " u=" + std::to_string(*u) + ": " + e.what());
    }
  }
  if (found < want) t.fail("only " + std::to_string(found) + " qualifying instances generated");
  r.seconds = std::chrono::duration<double>(Clock::now() - t0).count();
  return r;
}

CriterionResult crit_condition1(const SuiteOptions& opt, std::map<std::string, int>& methods) {
  CriterionResult r = criterion(6, "full elimination under one unbounded vertex");
  r.time_limit = kPipelineSeconds;
  Tally t{r};
  const int want = count_or(opt, 200);
  const auto t0 = Clock::now();
  int found = 0;
  for (int i = 0; found < want && i < 20 * std::max(want, 1); ++i) {
    const std::uint64_t s = opt.seed + 6000 + i;
    const int n = 2 + i % std::max(1, std::min(opt.n_max, 10) - 1);
    const auto inst = gen_condition1_instance(n, s);
    if (!inst) continue;
    ++found;
    try {
      PipelineReport rep;
      const ProjectionRep out = eliminate_all(inst->first, inst->second, &rep);
      for (const auto& rd : rep.rounds) ++methods[round_method_name(rd.method)];
      t.check(out.unbounded().empty() && induced_graph(out) == induced_graph(inst->first),
              seed_tag(s) + ": not a bounded representation of the graph");
    } catch (const Error& e) {
      archive(opt, "condition1_" + std::to_string(s), inst->first, inst->second);
      t.fail(seed_tag(s) + ": " + e.what());
    }
  }
  if (found < want) t.fail("only " + std::to_string(found) + " instances generated");
  r.seconds = std::chrono::duration<double>(Clock::now() - t0).count();
  return r;
}

// Independent a, b, c with N(a) strictly inside N(b) and N(b) inside N(c), equality allowed.
bool weak_nested_triple(const Graph& g) {
  const int n = g.size();
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) {
      if (a == b || g.has_edge(a, b) || !strict_subset(g.neighbors(a), g.neighbors(b))) continue;
      for (int c = 0; c < n; ++c)
        if (c != a && c != b && !g.has_edge(a, c) && !g.has_edge(b, c) && subset(g.neighbors(b), g.neighbors(c)))
          return true;
    }
  return false;
}

CriterionResult crit_triple_free(const std::vector<ProjectionRep>& pool) {
  CriterionResult r = criterion(7, "nested-triple-free graphs satisfy condition 2");
  Tally t{r};
  const auto t0 = Clock::now();
  int skipped = 0, weak = 0;
  for (size_t i = 0; i < pool.size(); ++i) {
    const ProjectionRep c = canonicalize(pool[i]);
    const Graph g = induced_graph(c);
    if (nested_independent_triple(g)) {
      ++skipped;
      continue;
    }
    const bool ok = condition2_holds(c);
    if (!ok && weak_nested_triple(g)) ++weak;
    t.check(ok, "pool " + std::to_string(i) + ": condition 2 fails without a nested triple");
  }
  r.notes.push_back(std::to_string(skipped) + " instances had a nested triple and were skipped");
  if (r.passed < r.total)
    r.notes.push_back(std::to_string(weak) + " of " + std::to_string(r.total - r.passed) +
                      " failures have a triple whose second inclusion is an equality");
  r.seconds = std::chrono::duration<double>(Clock::now() - t0).count();
  return r;
}

CriterionResult crit_module(const SuiteOptions& opt, std::vector<ModuleAudit>& audits,
                            std::map<std::string, int>& methods) {
  CriterionResult r = criterion(8, "module property on every G0 construction");
  const auto t0 = Clock::now();
  std::map<std::string, int> errors;
  int runs = 0;
  auto run = [&](const ProjectionRep& rep, const TrapezoidRep& rt) {
    ++runs;
    try {
      PipelineReport pr;
      eliminate_all(rep, rt, &pr);
      for (const auto& rd : pr.rounds) ++methods[round_method_name(rd.method)];
    } catch (const Error& e) {
      ++errors[error_kind_name(e.kind())];
    }
  };
  // Instances without a border property are what reach build_g0.
  const int general = count_or(opt, 100);
  for (int i = 0; i < general; ++i) {
    const int n = 5 + i % std::max(1, std::min(opt.n_max, 10) - 4);
    if (const auto inst = gen_general_instance(n, opt.seed + 8000 + i)) run(inst->first, inst->second);
  }
  const int multi = count_or(opt, 50);
  for (int i = 0; i < multi; ++i) {
    const int n = 4 + i % std::max(1, std::min(opt.n_max, 10) - 3);
    if (const auto inst = gen_unbounded_instance(n, 2 + i % 3, opt.seed + 8500 + i)) run(inst->first, inst->second);
  }
  Tally t{r};
  for (const ModuleAudit& a : audits)
    t.check(a.module_ok && a.neighborhood_ok, "G0 on " + std::to_string(a.n) + " vertices, u=" +
                                                  std::to_string(a.u) + (a.module_ok ? "" : " not a module") +
                                                  (a.neighborhood_ok ? "" : " outside neighbourhood differs"));
  if (audits.empty() && (general > 0 || multi > 0)) t.fail("no G0 construction ran");
  r.notes.push_back(std::to_string(audits.size()) + " G0 constructions audited over " + std::to_string(runs) +
                    " pipeline runs");
  for (const auto& [k, v] : errors) r.notes.push_back("pipeline stopped with " + k + " x" + std::to_string(v));
  r.seconds = std::chrono::duration<double>(Clock::now() - t0).count();
  return r;
}

CriterionResult crit_transforms(const SuiteOptions& opt) {
  CriterionResult r = criterion(9, "transform conservation");
  Tally t{r};
  const int count = count_or(opt, 300);
  const auto t0 = Clock::now();
  int nested_cases = 0;
  for (int i = 0; i < count; ++i) {
    const std::uint64_t s = opt.seed + 9000 + i;
    const int n = 2 + i % std::max(1, std::min(opt.n_max, 10) - 1);
    const std::string tag = seed_tag(s);
    try {
      const ProjectionRep rep = gen_projection_rep(n, i % 4, s);
      const Graph g = induced_graph(rep);

      const ProjectionRep rv = reverse(rep);
      t.check(induced_graph(rv) == g && order_reversed(rep, rv) && normalized(reverse(rv)) == normalized(rep),
              tag + ": reverse");

      const TrapezoidRep rt = as_trapezoids(gen_parallelogram_rep(n, s));
      const TrapezoidRep fl = flip_vertical(rt);
      t.check(induced_graph_trapezoid(fl) == induced_graph_trapezoid(rt) && order_reversed(rt, fl) &&
                  flip_vertical(fl) == rt,
              tag + ": flip_vertical");

      std::mt19937_64 rng(s);
      std::uniform_int_distribution<int> pos(-50, 50), den(1, 7);
      const Segment ell{ratio(pos(rng), den(rng)), ratio(pos(rng), den(rng))};
      const Coord eps = ratio(1, den(rng) * 3);
      const ProjectionRep sq = squeeze(rep, ell, eps);
      bool ok = induced_graph(sq) == g;
      for (int a = 0; a < n && ok; ++a)
        for (int b = 0; b < n && ok; ++b) {
          ok = ok && ((rep[a].L < rep[b].L) == (sq[a].L < sq[b].L)) && ((rep[a].r < rep[b].r) == (sq[a].r < sq[b].r));
          ok = ok && ((slope_key(rep[a]) < slope_key(rep[b])) == (slope_key(sq[a]) < slope_key(sq[b])));
        }
      for (const Pgram& p : sq.v)
        ok = ok && abs(p.L - ell.a_ell) <= eps / 2 && abs(p.R - ell.a_ell) <= eps / 2 &&
             abs(p.l - ell.b_ell) <= eps / 2 && abs(p.r - ell.b_ell) <= eps / 2;
      t.check(ok, tag + ": squeeze");

      // Coarse integer grid so that endpoints collide.
      ProjectionRep tied;
      std::uniform_int_distribution<int> coarse(0, 2 * n), wid(0, 3);
      for (int k = 0; k < n; ++k) {
        const int L = coarse(rng), l = coarse(rng), w = wid(rng);
        tied.v.push_back(Pgram::box(L, L + w, l, l + w));
      }
      const ProjectionRep pd = perturb_distinct(tied, s);
      t.check(validate(pd).empty() && induced_graph(pd) == induced_graph_loose(tied), tag + ": perturb_distinct");

      const VSet vu = rep.unbounded();
      for (VertexId a : vu)
        for (VertexId b : vu) {
          if (a == b || !strict_subset(g.neighbors(b), g.neighbors(a))) continue;
          if (!(slope_key(rep[b]) < slope_key(rep[a])) || !is_unbounded_maximal(rep, g, a)) continue;
          if (intersects(rep[a], rep[b])) continue;
          ++nested_cases;
          const ProjectionRep lo = lower_slope_of_nested(rep, a, b);
          t.check(induced_graph(lo) == g && lo.unbounded() == vu && slope_key(lo[a]) < slope_key(lo[b]),
                  tag + ": lower_slope_of_nested");
        }
    } catch (const Error& e) {
      t.fail(tag + ": " + e.what());
    }
  }
  r.notes.push_back(std::to_string(nested_cases) + " nested unbounded pairs exercised");
  r.seconds = std::chrono::duration<double>(Clock::now() - t0).count();
  return r;
}

CriterionResult crit_serialization(const SuiteOptions& opt) {
  CriterionResult r = criterion(10, "serialization round trip");
  Tally t{r};
  const int count = count_or(opt, 1000);
  const auto t0 = Clock::now();
  for (int i = 0; i < count; ++i) {
    const std::uint64_t s = opt.seed + 10000 + i;
    const int n = i % std::max(1, std::min(opt.n_max, 10));
    InstanceFile f;
    f.format_version = 1;
    if (i % 4 != 1) f.projection = gen_projection_rep(n, i % 3, s);
    if (i % 3 == 0 || !f.projection) f.trapezoid = as_trapezoids(gen_parallelogram_rep(n, s));
    if (i % 5 == 2) f.tolerance = gen_tolerance_rep(n, s);
    if (i % 2 == 0 && f.projection) f.expected_graph = induced_graph(*f.projection);
    try {
      const std::string text = print_instance(f);
      const InstanceFile back = parse_instance(text);
      t.check(back == f && print_instance(back) == text, seed_tag(s) + ": round trip differs");
    } catch (const Error& e) {
      t.fail(seed_tag(s) + ": " + e.what());
    }
  }
  r.seconds = std::chrono::duration<double>(Clock::now() - t0).count();
  return r;
}

}  // namespace

std::vector<CriterionResult> run_suite(const SuiteOptions& opt) {
  std::vector<ModuleAudit> audits;
  set_module_audit_sink([&](const ModuleAudit& a) { audits.push_back(a); });
  std::map<std::string, int> methods;
  std::vector<CriterionResult> out;
  const auto pool = canonical_pool(opt, count_or(opt, 300));
  auto add = [&](CriterionResult r) {
    if (r.id == 8) {
      std::string m = "elimination rounds by method:";
      for (const auto& [k, v] : methods) m += " " + k + "=" + std::to_string(v);
      r.notes.push_back(m);
    }
    if (opt.on_result) opt.on_result(r);
    out.push_back(std::move(r));
  };
  add(crit_oracle(opt));
  add(crit_canonical(opt, pool));
  add(crit_structure(pool));
  add(crit_landmarks());
  add(crit_border(opt));
  add(crit_condition1(opt, methods));
  add(crit_triple_free(pool));
  add(crit_module(opt, audits, methods));
  add(crit_transforms(opt));
  add(crit_serialization(opt));
  set_module_audit_sink(nullptr);
  return out;
}

void print_result(const CriterionResult& r, std::ostream& os, bool quiet) {
  os << (r.ok() ? "PASS" : "FAIL") << "  " << std::setw(2) << r.id << "  " << r.name << "  " << r.passed << "/"
     << r.total << "  " << std::fixed << std::setprecision(2) << r.seconds << "s";
  if (r.time_limit > 0) os << " (limit " << r.time_limit << "s)";
  os << "\n";
  if (quiet) return;
  for (const auto& n : r.notes) os << "        note: " << n << "\n";
  for (const auto& f : r.failures) os << "        fail: " << f << "\n";
}

bool print_suite(const std::vector<CriterionResult>& results, std::ostream& os, bool quiet) {
  bool all = true;
  for (const CriterionResult& r : results) {
    all = all && r.ok();
    print_result(r, os, quiet);
  }
  os << (all ? "all criteria passed" : "some criteria failed") << "\n";
  return all;
}

}  // namespace tolkit
