#pragma once

// Verification suites behind `qalpha verify`. Each one sweeps a fixed,
// exhaustive range and counts the cases it checked and the ones that failed.

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "qalpha/field.hpp"

namespace qalpha {

struct SuiteResult {
  SuiteResult() = default;
  explicit SuiteResult(std::string suite) : name(std::move(suite)) {}

  std::string name;
  std::uint64_t checked = 0;
  std::uint64_t failed = 0;
  std::vector<std::string> failures;  // first few, for the report
  std::vector<std::string> notes;
  double seconds = 0;

  bool passed() const noexcept { return failed == 0 && checked > 0; }
  void fail(std::string what);
};

/// meyn, kyuregyan, structure, oracle, sequence, paper-examples
const std::vector<std::string>& suite_names();

/// Throws Error(InvalidInput) for an unknown name.
SuiteResult run_suite(std::string_view name, std::uint64_t seed = 0);

/// All nonzero elements when there are at most `count`, otherwise `count`
/// distinct nonzero elements drawn deterministically from `seed`.
std::vector<FieldElement> sample_alphas(const FieldSpec& spec, unsigned count, std::uint64_t seed);

SuiteResult suite_meyn(int max_degree = 12);
SuiteResult suite_kyuregyan(int max_degree = 6, int steps = 4);
SuiteResult suite_structure(unsigned max_s = 8, unsigned alphas_per_field = 10, std::uint64_t seed = 0);
SuiteResult suite_oracle();
SuiteResult suite_sequence(unsigned alphas_per_field = 5, std::uint64_t seed = 0);
SuiteResult suite_paper_examples();

}  // namespace qalpha
