#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <string>

#include "CLI11.hpp"
#include "json.hpp"
#include "tolkit/analysis.hpp"
#include "tolkit/border.hpp"
#include "tolkit/general.hpp"
#include "tolkit/instances.hpp"
#include "tolkit/io.hpp"
#include "tolkit/pipeline.hpp"
#include "tolkit/suite.hpp"
#include "tolkit/transforms.hpp"

using namespace tolkit;
namespace fs = std::filesystem;

namespace {

enum Exit { Ok = 0, SuiteFailed = 1, ParseFailed = 2, CheckMismatch = 3, GraphBroken = 4, Precondition = 5 };

struct Globals {
  std::uint64_t seed = 0;
  bool quiet = false;
};

void say(const Globals& g, const std::string& msg) {
  if (!g.quiet) std::cerr << msg << "\n";
}

void emit(const std::string& text, const std::string& out) {
  if (out.empty() || out == "-") {
    std::cout << text;
    return;
  }
  std::ofstream f(out);
  if (!f) throw std::runtime_error("cannot write " + out);
  f << text;
}

// Kinds that mean the input did not satisfy what the operation needs.
bool is_precondition(ErrorKind k) {
  switch (k) {
    case ErrorKind::InvalidRep:
    case ErrorKind::UnknownVertex:
    case ErrorKind::NotUnbounded:
    case ErrorKind::GraphMismatch:
    case ErrorKind::RepsDisagree:
    case ErrorKind::V0Empty:
    case ErrorKind::EpsNonPositive:
    case ErrorKind::PreconditionFailed:
    case ErrorKind::NoUnbounded:
    case ErrorKind::ConversionFailed:
      return true;
    default:
      return false;
  }
}

ProjectionRep need_projection(const InstanceFile& f) {
  if (f.projection) return *f.projection;
  if (f.tolerance) return tolerance_to_projection(*f.tolerance);
  throw Error(ErrorKind::PreconditionFailed, "instance has no projection or tolerance representation");
}

TrapezoidRep need_trapezoid(const InstanceFile& f) {
  if (!f.trapezoid) throw Error(ErrorKind::PreconditionFailed, "instance has no trapezoid representation");
  return *f.trapezoid;
}

void dump_stage(const fs::path& dir, const std::string& name, const ProjectionRep& rep) {
  fs::create_directories(dir);
  InstanceFile f;
  f.projection = rep;
  write_instance((dir / (name + ".json")).string(), f);
  std::ofstream(dir / (name + ".svg")) << render_svg(rep, name);
}

int cmd_validate(const Globals& g, const std::string& path) {
  const InstanceFile f = read_instance(path);
  int bad = 0;
  auto report = [&](const char* what, const std::vector<Violation>& vs) {
    for (const Violation& v : vs) {
      ++bad;
      std::cout << what << ": " << violation_name(v.kind) << ": " << v.message << "\n";
    }
  };
  if (f.projection) report("projection", validate(*f.projection));
  if (f.trapezoid) report("trapezoid", validate(*f.trapezoid));
  if (f.tolerance)
    for (int i = 0; i < f.tolerance->size(); ++i) {
      const auto& x = f.tolerance->v[i];
      if (!(x.lo < x.hi) || x.t <= 0) {
        ++bad;
        std::cout << "tolerance: vertex " << i << " needs lo < hi and t > 0\n";
      }
    }
  if (bad == 0) say(g, "ok");
  return bad == 0 ? Ok : CheckMismatch;
}

int cmd_induce(const std::string& path, const std::string& which, bool check, const std::string& out) {
  const InstanceFile f = read_instance(path);
  Graph h;
  if (which == "projection") {
    if (!f.projection) throw Error(ErrorKind::PreconditionFailed, "no projection representation");
    h = induced_graph(*f.projection);
  } else if (which == "trapezoid") {
    h = induced_graph_trapezoid(need_trapezoid(f));
  } else {
    if (!f.tolerance) throw Error(ErrorKind::PreconditionFailed, "no tolerance representation");
    h = tolerance_graph(*f.tolerance);
  }
  emit(print_graph(h), out);
  if (check) {
    if (!f.expected_graph) throw Error(ErrorKind::PreconditionFailed, "--check needs an embedded graph");
    if (*f.expected_graph != h) {
      std::cerr << "graph mismatch: " << graph_diff(*f.expected_graph, h) << "\n";
      return CheckMismatch;
    }
  }
  return Ok;
}

int cmd_canon(const std::string& path, const std::string& out) {
  InstanceFile f = read_instance(path);
  f.projection = canonicalize(need_projection(f));
  f.tolerance.reset();
  emit(print_instance(f), out);
  return Ok;
}

std::string vset_text(const VSet& s) {
  std::string t = "[";
  for (VertexId v : s) t += (t.size() > 1 ? "," : "") + std::to_string(v);
  return t + "]";
}

int cmd_analyze(const std::string& path, const std::string& out) {
  const InstanceFile f = read_instance(path);
  const ProjectionRep rep = need_projection(f);
  require_valid(rep, "analyze");
  const Graph g = induced_graph(rep);
  nlohmann::json j;
  j["n"] = rep.size();
  j["edges"] = g.edge_count();
  j["unbounded"] = vset_text(rep.unbounded());
  j["canonical"] = is_canonical(rep);
  j["condition2"] = condition2_holds(rep);
  if (const auto t = nested_independent_triple(g)) j["nested_independent_triple"] = {(*t)[0], (*t)[1], (*t)[2]};
  if (f.trapezoid) {
    const ConditionReport c = check_conditions(rep, *f.trapezoid);
    j["condition1"] = c.condition1;
    j["condition3"] = c.condition3;
  }
  nlohmann::json per = nlohmann::json::array();
  for (VertexId u : rep.unbounded()) {
    const CoveringReport cov = covering(g, u);
    per.push_back({{"u", u},
                   {"inevitable", is_inevitable(rep, u)},
                   {"unbounded_maximal", is_unbounded_maximal(rep, g, u)},
                   {"covering", vset_text(cov.covering_set)},
                   {"v0", vset_text(cov.v0_union)},
                   {"v0_components", static_cast<int>(cov.v0_components.size())},
                   {"right_border", border_property(rep, g, u, Side::Right)},
                   {"left_border", border_property(rep, g, u, Side::Left)}});
  }
  j["unbounded_vertices"] = per;
  emit(j.dump(2) + "\n", out);
  return Ok;
}

std::optional<VertexId> pick_border_vertex(const ProjectionRep& rep) {
  const Graph g = induced_graph(rep);
  for (VertexId u : rep.unbounded())
    if (border_property(rep, g, u, Side::Right) || border_property(rep, g, u, Side::Left)) return u;
  return std::nullopt;
}

int cmd_eliminate(const Globals& gl, const std::string& path, const std::string& mode, std::optional<int> vertex,
                  std::string trace_dir, const std::string& out) {
  const InstanceFile f = read_instance(path);
  const ProjectionRep rep = need_projection(f);
  require_valid(rep, "eliminate");
  if (trace_dir.empty() && std::getenv("TOLKIT_TRACE") && std::string(std::getenv("TOLKIT_TRACE")) == "1")
    trace_dir = "tolkit-trace";
  const Graph g = induced_graph(rep);
  std::vector<ProjectionRep> stages;
  ProjectionRep result;
  int target = 0;
  try {
    if (mode == "all") {
      PipelineReport pr;
      result = eliminate_all(rep, need_trapezoid(f), &pr);
      stages = {rep};
      stages.insert(stages.end(), pr.reps.begin(), pr.reps.end());
      for (const RoundRecord& r : pr.rounds)
        say(gl, "round " + std::to_string(r.round) + ": " + round_method_name(r.method) + " " +
                    std::to_string(r.unbounded_before) + " -> " + std::to_string(r.unbounded_after));
    } else {
      VertexId u;
      if (vertex) {
        u = *vertex;
      } else if (mode == "border") {
        const auto c = pick_border_vertex(rep);
        if (!c) throw Error(ErrorKind::PreconditionFailed, "no unbounded vertex has a border property");
        u = *c;
      } else {
        if (rep.unbounded().empty()) throw Error(ErrorKind::NoUnbounded, "eliminate");
        u = ensure_min_slope_maximal(rep).second;
      }
      target = static_cast<int>(rep.unbounded().size()) - 1;
      if (mode == "border") {
        auto [r, st] = eliminate_border(rep, u);
        result = r;
        stages = st.stage_reps;
      } else {
        auto [r, st] = eliminate_general(rep, need_trapezoid(f), u);
        result = r;
        stages = st.stage_reps;
      }
    }
  } catch (const Error& e) {
    std::cerr << e.what() << "\n";
    if (is_precondition(e.kind())) return Precondition;
    const fs::path bundle = out.empty() || out == "-" ? fs::path("counterexample.json") : fs::path(out + ".counterexample.json");
    InstanceFile cf = f;
    cf.expected_graph = g;
    write_instance(bundle.string(), cf);
    say(gl, "counterexample bundle written to " + bundle.string());
    return GraphBroken;
  }
  if (!trace_dir.empty())
    for (size_t i = 0; i < stages.size(); ++i) dump_stage(trace_dir, "stage" + std::to_string(i), stages[i]);
  const Graph h = induced_graph(result);
  InstanceFile of;
  of.projection = result;
  of.expected_graph = g;
  emit(print_instance(of), out);
  if (h != g) {
    std::cerr << "graph changed: " << graph_diff(g, h) << "\n";
    return GraphBroken;
  }
  if (static_cast<int>(result.unbounded().size()) > target) {
    std::cerr << "unbounded count " << result.unbounded().size() << " above target " << target << "\n";
    return GraphBroken;
  }
  return Ok;
}

int cmd_generate(const Globals& gl, const std::string& kind, int n, int k, const std::string& out) {
  InstanceFile f;
  const std::uint64_t s = gl.seed;
  if (kind == "tolerance") {
    f.tolerance = gen_tolerance_rep(n, s);
    f.expected_graph = tolerance_graph(*f.tolerance);
  } else if (kind == "parallelogram") {
    f.projection = gen_parallelogram_rep(n, s);
    f.trapezoid = as_trapezoids(*f.projection);
  } else if (kind == "projection") {
    f.projection = gen_projection_rep(n, k, s);
  } else {
    const auto inst = kind == "condition1" ? gen_condition1_instance(n, s)
                      : kind == "general"  ? gen_general_instance(n, s)
                                           : gen_unbounded_instance(n, k, s);
    if (!inst) throw Error(ErrorKind::PreconditionFailed, "generator found no instance for this seed");
    f.projection = inst->first;
    f.trapezoid = inst->second;
  }
  if (f.projection) f.expected_graph = induced_graph(*f.projection);
  emit(print_instance(f), out);
  return Ok;
}

int cmd_render(const std::string& path, const std::string& which, const std::string& out) {
  const InstanceFile f = read_instance(path);
  const std::string title = fs::path(path).stem().string();
  if (which == "trapezoid")
    emit(render_svg(need_trapezoid(f), title), out);
  else
    emit(render_svg(need_projection(f), title), out);
  return Ok;
}

int cmd_suite(const Globals& gl, std::optional<int> seeds, int n_max, const std::string& archive) {
  SuiteOptions opt;
  opt.seeds = seeds;
  opt.n_max = n_max;
  opt.seed = gl.seed;
  opt.archive_dir = archive;
  opt.on_result = [&](const CriterionResult& r) { print_result(r, std::cout, gl.quiet), std::cout.flush(); };
  bool ok = true;
  for (const auto& r : run_suite(opt)) ok = ok && r.ok();
  std::cout << (ok ? "all criteria passed" : "some criteria failed") << "\n";
  return ok ? Ok : SuiteFailed;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"tolkit: tolerance and projection representations"};
  app.require_subcommand(1);
  Globals gl;
  app.add_option("--seed", gl.seed, "Seed for generators and the suite");
  app.add_flag("--quiet,-q", gl.quiet, "Less output on stderr");

  std::string path, out, which = "projection", mode = "all", trace_dir, kind = "unbounded", archive;
  bool check = false;
  std::optional<int> vertex, seeds;
  int n = 8, k = 1, n_max = 12;

  auto* validate_cmd = app.add_subcommand("validate", "Report representation violations");
  validate_cmd->add_option("path", path)->required();

  auto* induce = app.add_subcommand("induce", "Print the induced graph");
  induce->add_option("path", path)->required();
  induce->add_option("--rep", which)->check(CLI::IsMember({"projection", "trapezoid", "tolerance"}));
  induce->add_flag("--check", check, "Compare with the embedded graph");
  induce->add_option("-o,--out", out);

  auto* canon = app.add_subcommand("canon", "Make every unbounded vertex inevitable");
  canon->add_option("path", path)->required();
  canon->add_option("-o,--out", out);

  auto* analyze = app.add_subcommand("analyze", "Conditions, covering sets and border properties");
  analyze->add_option("path", path)->required();
  analyze->add_option("-o,--out", out);

  auto* elim = app.add_subcommand("eliminate", "Replace unbounded vertices by bounded ones");
  elim->add_option("path", path)->required();
  elim->add_option("--mode", mode)->check(CLI::IsMember({"border", "general", "all"}));
  elim->add_option("--vertex", vertex, "Unbounded vertex for border/general mode");
  elim->add_option("--trace-dir", trace_dir, "Write every stage as JSON and SVG");
  elim->add_option("-o,--out", out);

  auto* gen = app.add_subcommand("generate", "Write a random instance");
  gen->add_option("--kind", kind)->check(
      CLI::IsMember({"tolerance", "parallelogram", "projection", "condition1", "unbounded", "general"}));
  gen->add_option("-n", n)->check(CLI::Range(0, 64));
  gen->add_option("-k", k, "Unbounded vertices")->check(CLI::Range(0, 64));
  gen->add_option("-o,--out", out);

  auto* render = app.add_subcommand("render", "SVG drawing of a representation");
  render->add_option("path", path)->required();
  render->add_option("--rep", which)->check(CLI::IsMember({"projection", "trapezoid"}));
  render->add_option("-o,--out", out);

  auto* suite = app.add_subcommand("suite", "Run the acceptance suite");
  suite->add_option("--seeds", seeds, "Instances per criterion");
  suite->add_option("--n-max", n_max)->check(CLI::Range(1, 64));
  suite->add_option("--archive-dir", archive, "Where failing instances are written");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    // --help and --version exit 0; bad usage shares the parse-error code.
    return app.exit(e) == 0 ? Ok : ParseFailed;
  }

  try {
    if (*validate_cmd) return cmd_validate(gl, path);
    if (*induce) return cmd_induce(path, which, check, out);
    if (*canon) return cmd_canon(path, out);
    if (*analyze) return cmd_analyze(path, out);
    if (*elim) return cmd_eliminate(gl, path, mode, vertex, trace_dir, out);
    if (*gen) return cmd_generate(gl, kind, n, k, out);
    if (*render) return cmd_render(path, which, out);
    if (*suite) return cmd_suite(gl, seeds, n_max, archive);
  } catch (const Error& e) {
    std::cerr << e.what() << "\n";
    if (e.kind() == ErrorKind::ParseError) return ParseFailed;
    if (e.kind() == ErrorKind::GraphChanged) return GraphBroken;
    return is_precondition(e.kind()) ? Precondition : GraphBroken;
  } catch (const std::exception& e) {
    std::cerr << e.what() << "\n";
    return Precondition;
  }
  return Ok;
}
