#include <iostream>
#include <set>
#include <string>

#include "tolkit/suite.hpp"

// Usage: acceptance [--seeds N] [--n-max K] [--seed S] [--archive-dir DIR] [--known-unattainable ID]... [--quiet]
// A criterion listed as known-unattainable still prints FAIL; it only stops gating the exit code.
int main(int argc, char** argv) {
  tolkit::SuiteOptions opt;
  std::set<int> known;
  bool quiet = false;
  for (int i = 1; i < argc; ++i) {
    const std::string a = argv[i];
    const bool has_value = i + 1 < argc;
    if (a == "--seeds" && has_value)
      opt.seeds = std::stoi(argv[++i]);
    else if (a == "--n-max" && has_value)
      opt.n_max = std::stoi(argv[++i]);
    else if (a == "--seed" && has_value)
      opt.seed = std::stoull(argv[++i]);
    else if (a == "--archive-dir" && has_value)
      opt.archive_dir = argv[++i];
    else if (a == "--known-unattainable" && has_value)
      known.insert(std::stoi(argv[++i]));
    else if (a == "--quiet")
      quiet = true;
    else {
      std::cerr << "unknown argument " << a << "\n";
      return 2;
    }
  }
  opt.on_result = [&](const tolkit::CriterionResult& r) {
    tolkit::print_result(r, std::cout, quiet);
    std::cout.flush();
  };
  int failed = 0, gating = 0;
  for (const auto& r : tolkit::run_suite(opt)) {
    if (r.ok()) continue;
    ++failed;
    if (!known.count(r.id)) ++gating;
  }
  std::cout << failed << " criteria failed";
  if (failed > gating) std::cout << ", " << failed - gating << " of them listed as known-unattainable";
  std::cout << "\n";
  return gating == 0 ? 0 : 1;
}
