#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

namespace tolkit {

struct CriterionResult {
  int id = 0;
  std::string name;
  int passed = 0;
  int total = 0;
  double seconds = 0;
  double time_limit = 0;  // 0 means no limit
  std::vector<std::string> failures;  // first few, for the report
  std::vector<std::string> notes;

  bool ok() const { return passed == total && (time_limit <= 0 || seconds < time_limit); }
};

struct SuiteOptions {
  std::optional<int> seeds;  // overrides every per-criterion instance count
  int n_max = 12;
  std::uint64_t seed = 0;    // offset added to every instance seed
  std::string archive_dir;   // counterexample bundles are written here when set
  std::function<void(const CriterionResult&)> on_result;  // called as each criterion finishes
};

std::vector<CriterionResult> run_suite(const SuiteOptions& opt);

// One line, plus notes and failures unless quiet.
void print_result(const CriterionResult& r, std::ostream& os, bool quiet = false);

// One line per criterion; returns true when all pass.
bool print_suite(const std::vector<CriterionResult>& results, std::ostream& os, bool quiet = false);

}  // namespace tolkit
