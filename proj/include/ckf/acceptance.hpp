#pragma once

// The reproduction suite: eight criteria, each with a time budget. Shared by
// `ckf verify-paper` and the acceptance test binary.

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

namespace ckf::acceptance {

struct Options {
  bool fast = false;         // caps sampling at 100 draws
  std::string fault;         // "", "epsilon", "trace", "mu" or "d"
  std::uint64_t seed = 20240101;
};

struct CriterionResult {
  int id = 0;
  std::string name;
  bool passed = false;
  std::string detail;
  double seconds = 0.0;
  double budget_seconds = 0.0;
};

/// Throws std::invalid_argument for an unknown fault name.
void validate(const Options& options);

/// Runs all criteria in order; `on_result` is called as each one finishes.
std::vector<CriterionResult> run(const Options& options,
                                 const std::function<void(const CriterionResult&)>& on_result = {});

}  // namespace ckf::acceptance
