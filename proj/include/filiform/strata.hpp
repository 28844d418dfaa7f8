#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "filiform/action.hpp"
#include "filiform/algebra.hpp"

namespace filiform {

/// Strata of first-class parameter space (conditions on alpha):
///   U     : alpha3 (alpha4 + 2 alpha3^2) != 0
///   U'1   : alpha3 != 0, alpha4 + 2 alpha3^2 = 0
///   U'2   : alpha3 = 0, alpha4 != 0
///   F'    : alpha3 = 0, alpha4 = 0
///   U''1  : in U'1 with (alpha5 - 5 alpha3^3)(alpha6 + 6 alpha3 alpha5 - 16 alpha3^4) != 0
///   F''1  : the complement of U''1 inside U'1
///   U''2  : in U'2 with alpha5 != 0;  F''2 : in U'2 with alpha5 = 0
enum class Stratum { U, Upp1, Fpp1, Upp2, Fpp2, Fprime };

enum class CoarseStratum { U, U1prime, U2prime, Fprime };

std::string_view stratum_name(Stratum s);        // "U", "U''1", "F''1", "U''2", "F''2", "F'"
std::string_view coarse_name(CoarseStratum s);   // "U", "U'1", "U'2", "F'"
std::optional<Stratum> stratum_from_name(std::string_view name);

/// Result of classification. `fine` is empty exactly when the sub-split of
/// U'1 (needs n >= 6) or U'2 (needs n >= 5) refers to coordinates the
/// parameter vector does not have.
struct StratumInfo {
  CoarseStratum coarse;
  std::optional<Stratum> fine;
};

StratumInfo classify_stratum(const FirstClassParams& p);

/// True for the strata with an isomorphism criterion: U, U''1, U''2.
bool stratum_supported(Stratum s);

/// Raised when an operation lands on a stratum the tool does not decide;
/// never answered by a fabricated result.
struct unsupported_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// The normalizing element of a supported stratum:
///   U    : (A0, B0) = ((alpha4 + 2 alpha3^2)/(2 alpha3),
///                      alpha4 (alpha4 + 2 alpha3^2)/(4 alpha3^3)),
///          sending (alpha3, alpha4) to (1, 0);
///   U''1 : x = (5 alpha3^3 - alpha5)/(alpha6 + 6 alpha3 alpha5 - 16 alpha3^4),
///          y = (alpha6 + 7 alpha3 alpha5 - 21 alpha3^4)/(alpha3 (5 alpha3^3 - alpha5)),
///          sending (alpha3, alpha4) to (1, -2);
///   U''2 : x = alpha4/alpha5, y = (alpha5^2 - alpha4^3)/alpha4^3,
///          sending (alpha3, alpha4, alpha5) to (0, 1, 1);
/// returned as (A, B) = (1/x, y/x). Always valid on the stratum.
GroupElement canonical_element(const FirstClassParams& p, Stratum s);
GroupElement canonical_element(const FirstClassParams& p);

/// Stratum tag plus the ordered free coordinates of the canonical form:
/// components rho_i(canonical_element(p); p) for i = 3..n-1 on U and
/// i = 4..n-1 on U''1/U''2. Equal vectors on a common stratum are exactly
/// the isomorphism classes there.
struct InvariantVector {
  Stratum stratum;
  std::vector<Scalar> components;

  int first_index() const { return stratum == Stratum::U ? 3 : 4; }

  friend bool operator==(const InvariantVector& a, const InvariantVector& b) {
    return a.stratum == b.stratum && a.components == b.components;
  }
};

InvariantVector invariant_vector(const FirstClassParams& p);

/// Closed-form invariant lists for small n (U: n = 4..7, U''1: n = 6,7,
/// U''2: n = 5,6,7), written out term by term as an independent
/// cross-check of invariant_vector. Throws unsupported_error outside the
/// covered (stratum, n) pairs.
InvariantVector lowdim_invariant_list(const FirstClassParams& p);

/// apply_rho(canonical_element(p), p): idempotent, stays in the stratum.
FirstClassParams canonicalize(const FirstClassParams& p);

enum class IsoVerdict { Yes, No, Unsupported };

struct IsoDecision {
  IsoVerdict verdict;
  std::optional<GroupElement> witness;   // Yes: apply_rho(witness, a) = b
  std::optional<int> differing_index;    // No via invariants: first differing rho index
  std::vector<Scalar> differing_values;  // the two values at that index
  std::string detail;
};

/// Yes iff same supported stratum and equal invariant vectors (with a
/// verifying witness); No across different supported strata or on a
/// differing invariant; Unsupported when either side lies in F', F''1,
/// F''2 or the sub-split is undecidable at this n.
IsoDecision decide_isomorphic(const FirstClassParams& a, const FirstClassParams& b);

/// Right inverse of invariant_vector on a supported stratum: builds the
/// parameter vector on the normalized slice whose invariant components
/// equal `targets` (length n-3 for U, n-4 for U''1/U''2). On U''1 the
/// value targets[0] = -14 is unattainable and rejected.
FirstClassParams realize_from_invariants(int n, Stratum s, const std::vector<Scalar>& targets);

}  // namespace filiform
