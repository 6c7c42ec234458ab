#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "json.hpp"
#include "knotcol/colouring.hpp"

namespace knotcol {

struct CheckResult {
  std::string name;
  bool passed = false;
  std::string detail;
};

struct SuiteReport {
  std::string suite;
  std::vector<CheckResult> checks;

  void add(std::string name, bool passed, std::string detail = {});
  void append(const SuiteReport &other);
  int passed() const;
  int failed() const;
  bool ok() const { return failed() == 0; }
  nlohmann::json to_json() const;
};

struct VerifyOptions {
  SearchOptions search;
  std::uint64_t seed = 1;
  int markov_trials = 10;
  int gauge_trials = 20;
  int coboundary_trials = 100;
  /// Include the M11 class quandle (720 points) in the exhaustive axiom checks.
  bool large = true;
};

/// Quandle axioms on conjugation, covering, extension, inner and trivial quandles.
SuiteReport verify_axioms(const VerifyOptions &opt = {});
/// Covering axioms, cocycle condition, d2 d1 = 0, cohomology of sections,
/// gauge invariance of state sums.
SuiteReport verify_cocycles(const VerifyOptions &opt = {});
/// Yang-Baxter equation, far commutation, trace condition, Markov spot checks.
SuiteReport verify_yb(const VerifyOptions &opt = {});
/// State sum, closed trace, long trace and specialization against P.
SuiteReport verify_theorems(const VerifyOptions &opt = {});
/// Lifting bijections for the inner augmentation.
SuiteReport verify_lifting(const VerifyOptions &opt = {});
/// Every published value in golden_values(), plus the prime congruence.
SuiteReport verify_golden(const VerifyOptions &opt = {});

/// axioms | cocycle | yb | theorems | golden | all. Throws
/// std::invalid_argument for unknown names.
SuiteReport run_verify_suite(const std::string &name, const VerifyOptions &opt = {});
const std::vector<std::string> &verify_suite_names();

} // namespace knotcol
