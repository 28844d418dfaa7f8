#pragma once

#include <span>
#include <utility>
#include <vector>

#include "filiform/action.hpp"
#include "filiform/algebra.hpp"
#include "filiform/strata.hpp"

// Verification paths kept deliberately independent of the phi machinery:
// a transport-of-structure oracle working on raw structure constants, and
// a direct evaluator of the untransformed nested sums.

namespace filiform {

struct oracle_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct BasisChangeResult {
  StructureTensor tensor;
  FirstClassParams params;
};

/// Transport of structure through the adapted basis change
///   e0' = A e0 + B e1 + sum_{k>=2} c_k e_k,
///   e1' = (A+B) e1 + sum_{k>=2} d_k e_k,
///   e_{i+1}' = [e_i', e0']  (1 <= i <= n-1),
/// where d is solved from [e1', e0'] = [e0', e0'] (free components zero).
/// Re-expresses every product in the new basis by exact linear solves and
/// extracts the resulting first-class parameters. The result must not
/// depend on `higher` (= c_2..c_n, default zero); any shape failure or
/// dependence on c is a genuine finding, surfaced as an exception.
BasisChangeResult adapted_change_tensor(const StructureTensor& t, const GroupElement& g,
                                        std::span<const Scalar> higher = {});

/// The raw transformation sums evaluated directly over (A, B) powers, with
/// the primed coefficients substituted recursively in increasing order —
/// no phi recursion, separate chain enumeration. Must agree with apply_rho.
FirstClassParams nested_sum_transform(const GroupElement& g, const FirstClassParams& p);

/// Deterministic orbit sample: count pairs (g, apply_rho(g, p)) with g
/// drawn from `dist` by rejection (A != 0, A+B != 0).
std::vector<std::pair<GroupElement, FirstClassParams>> orbit_samples(
    const FirstClassParams& p, int count, RngState& rng, const ScalarDist& dist = {});

/// Draws one valid group element.
GroupElement random_group_element(RngState& rng, const ScalarDist& dist = {});

/// Unconstrained random parameter vectors for the property suites.
FirstClassParams random_first_params(RngState& rng, int n, const ScalarDist& dist = {});
SecondClassParams random_second_params(RngState& rng, int n, const ScalarDist& dist = {});

/// Random member of a given stratum: the defining equalities are imposed
/// directly, the open conditions by rejection.
FirstClassParams random_in_stratum(RngState& rng, int n, Stratum s, const ScalarDist& dist = {});

}  // namespace filiform
