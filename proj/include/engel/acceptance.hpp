#pragma once

// The twelve acceptance criteria, shared by the acceptance test and `selftest`.

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "engel/synthesis.hpp"

namespace engel {

struct CriterionResult {
  int id = 0;
  std::string title;
  bool pass = false;
  std::string detail;  // measured quantities, one line; reproducible
  std::string timing;  // wall-clock measurements made inside the criterion
  double seconds = 0.0;
};

struct AcceptanceOptions {
  std::uint64_t seed = 20240917;
  SynthesisOptions synthesis{};
};

inline constexpr int kCriterionCount = 12;

/// id in 1..12; throws std::out_of_range otherwise. Exceptions inside a
/// criterion are caught and reported as a failure.
CriterionResult run_criterion(int id, const AcceptanceOptions& opt = {});

/// Runs all criteria in order, calling on_done after each.
std::vector<CriterionResult> run_acceptance(const AcceptanceOptions& opt = {},
                                            const std::function<void(const CriterionResult&)>& on_done = {});

/// "[PASS]  3  closed-form endpoints vs ODE: max rel err ..." with the
/// timings appended when requested.
std::string format_result(const CriterionResult& r, bool with_timing = true);

}  // namespace engel
