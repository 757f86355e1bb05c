#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

namespace polymu {

/// Randomized cross-validation settings. Iteration i of criterion c uses
/// the generator Rng(seed + 1000000 * c + i).
struct RunConfig {
  std::uint64_t seed = 1;
  /// Sample count for the randomized criteria; 0 keeps each criterion's
  /// own default.
  std::size_t iterations = 0;
  std::size_t max_nodes = 5;
  std::size_t max_formula_size = 12;
  std::size_t max_d = 2;
  std::size_t step_budget = std::size_t{1} << 20;
};

struct CriterionResult {
  int number = 0;
  std::string name;
  bool passed = false;
  std::size_t cases = 0;
  std::size_t failures = 0;
  std::string detail;  // first failing case, or extra counts
};

constexpr int kNumCriteria = 12;

/// Runs criterion 1..12. Exceptions inside a case count as failures.
CriterionResult run_criterion(int number, const RunConfig& config);

std::vector<CriterionResult> run_all(const RunConfig& config);

/// "[PASS] 3 power detection: 150/150 ..." style line.
std::string format_result(const CriterionResult& r);

}  // namespace polymu
