#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace filiform {

struct CheckOptions {
  std::uint64_t seed = 0;
  int trials = 25;  // samples per (suite, n)
  int nmax = 8;
};

struct CheckResult {
  std::string name;
  bool pass = true;
  int checks = 0;
  std::string detail;  // first failure, empty when pass
};

/// The full cross-check battery: closed-form system equivalence, group
/// axioms, orbit invariance and isomorphism decisions per stratum,
/// realization round-trips, invariant-list equivalence, Leibniz/filiform
/// well-formedness, the adapted-basis-change oracle, the negative controls
/// for the rejected formula variants, and the bracket-evaluator agreement.
std::vector<CheckResult> run_selfcheck(const CheckOptions& opt);

bool all_passed(const std::vector<CheckResult>& results);

}  // namespace filiform
