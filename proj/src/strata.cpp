#include "filiform/strata.hpp"

#include <cassert>

namespace filiform {

std::string_view stratum_name(Stratum s) {
  switch (s) {
    case Stratum::U: return "U";
    case Stratum::Upp1: return "U''1";
    case Stratum::Fpp1: return "F''1";
    case Stratum::Upp2: return "U''2";
    case Stratum::Fpp2: return "F''2";
    case Stratum::Fprime: return "F'";
  }
  return "?";
}

std::string_view coarse_name(CoarseStratum s) {
  switch (s) {
    case CoarseStratum::U: return "U";
    case CoarseStratum::U1prime: return "U'1";
    case CoarseStratum::U2prime: return "U'2";
    case CoarseStratum::Fprime: return "F'";
  }
  return "?";
}

std::optional<Stratum> stratum_from_name(std::string_view name) {
  if (name == "U") return Stratum::U;
  if (name == "U''1") return Stratum::Upp1;
  if (name == "F''1") return Stratum::Fpp1;
  if (name == "U''2") return Stratum::Upp2;
  if (name == "F''2") return Stratum::Fpp2;
  if (name == "F'") return Stratum::Fprime;
  return std::nullopt;
}

StratumInfo classify_stratum(const FirstClassParams& p) {
  const Scalar& a3 = p.a(3);
  const Scalar split = p.a(4) + Scalar(2) * a3 * a3;  // alpha4 + 2 alpha3^2
  if (!a3.is_zero() && !split.is_zero()) return {CoarseStratum::U, Stratum::U};
  if (!a3.is_zero()) {
    // U'1; the sub-split reads alpha5 and alpha6
    if (p.n < 6) return {CoarseStratum::U1prime, std::nullopt};
    const Scalar f1 = p.a(5) - Scalar(5) * pow_int(a3, 3);
    const Scalar f2 = p.a(6) + Scalar(6) * a3 * p.a(5) - Scalar(16) * pow_int(a3, 4);
    const bool open = !f1.is_zero() && !f2.is_zero();
    return {CoarseStratum::U1prime, open ? Stratum::Upp1 : Stratum::Fpp1};
  }
  if (!split.is_zero()) {
    // U'2 (alpha3 = 0, alpha4 != 0); the sub-split reads alpha5
    if (p.n < 5) return {CoarseStratum::U2prime, std::nullopt};
    return {CoarseStratum::U2prime, p.a(5).is_zero() ? Stratum::Fpp2 : Stratum::Upp2};
  }
  return {CoarseStratum::Fprime, Stratum::Fprime};
}

bool stratum_supported(Stratum s) {
  return s == Stratum::U || s == Stratum::Upp1 || s == Stratum::Upp2;
}

namespace {

[[noreturn]] void throw_unsupported(const StratumInfo& info, int n) {
  if (!info.fine) {
    const int need = info.coarse == CoarseStratum::U1prime ? 6 : 5;
    throw unsupported_error("sub-split of " + std::string(coarse_name(info.coarse)) +
                            " is undecidable at n=" + std::to_string(n) +
                            " (needs n >= " + std::to_string(need) + ")");
  }
  throw unsupported_error("no isomorphism criterion for stratum " +
                          std::string(stratum_name(*info.fine)) +
                          "; decidable strata are U, U''1 (n >= 6), U''2 (n >= 5)");
}

Stratum require_supported(const FirstClassParams& p) {
  const StratumInfo info = classify_stratum(p);
  if (!info.fine || !stratum_supported(*info.fine)) throw_unsupported(info, p.n);
  return *info.fine;
}

}  // namespace

GroupElement canonical_element(const FirstClassParams& p, Stratum s) {
  const StratumInfo info = classify_stratum(p);
  if (!info.fine || *info.fine != s)
    throw std::invalid_argument("parameters are not in stratum " +
                                std::string(stratum_name(s)));
  const Scalar& a3 = p.a(3);
  const Scalar& a4 = p.a(4);
  switch (s) {
    case Stratum::U: {
      const Scalar split = a4 + Scalar(2) * a3 * a3;
      const Scalar a0 = split / (Scalar(2) * a3);
      const Scalar b0 = a4 * split / (Scalar(4) * pow_int(a3, 3));
      return {a0, b0};
    }
    case Stratum::Upp1: {
      const Scalar pnum = Scalar(5) * pow_int(a3, 3) - p.a(5);
      const Scalar qden = p.a(6) + Scalar(6) * a3 * p.a(5) - Scalar(16) * pow_int(a3, 4);
      const Scalar x = pnum / qden;
      const Scalar y = (p.a(6) + Scalar(7) * a3 * p.a(5) - Scalar(21) * pow_int(a3, 4)) /
                       (a3 * pnum);
      return {x.inv(), y / x};
    }
    case Stratum::Upp2: {
      const Scalar x = a4 / p.a(5);
      const Scalar y = (p.a(5) * p.a(5) - pow_int(a4, 3)) / pow_int(a4, 3);
      return {x.inv(), y / x};
    }
    default:
      throw unsupported_error("no canonical element for stratum " +
                              std::string(stratum_name(s)));
  }
}

GroupElement canonical_element(const FirstClassParams& p) {
  return canonical_element(p, require_supported(p));
}

InvariantVector invariant_vector(const FirstClassParams& p) {
  const Stratum s = require_supported(p);
  const FirstClassParams q = apply_rho(canonical_element(p, s), p);
  InvariantVector out{s, {}};
  for (int i = out.first_index(); i <= p.n - 1; ++i)
    out.components.push_back(i <= p.n - 2 ? q.a(i + 2) : q.theta);
  return out;
}

FirstClassParams canonicalize(const FirstClassParams& p) {
  return apply_rho(canonical_element(p), p);
}

InvariantVector lowdim_invariant_list(const FirstClassParams& p) {
  const Stratum s = require_supported(p);
  const int n = p.n;
  const Scalar& a3 = p.a(3);
  const Scalar& a4 = p.a(4);
  const Scalar& th = p.theta;
  InvariantVector out{s, {}};

  if (s == Stratum::U && n >= 4 && n <= 7) {
    const Scalar x = Scalar(2) * a3 / (a4 + Scalar(2) * a3 * a3);
    if (n == 4) {
      out.components = {pow_int(x, 2) * (th - a4)};
      return out;
    }
    const Scalar& a5 = p.a(5);
    const Scalar r3 =
        pow_int(x, 2) * (a5 + Scalar(5) * a3 * a4 + Scalar(5) * pow_int(a3, 3)) / a3 -
        Scalar(5);
    if (n == 5) {
      out.components = {r3, pow_int(x, 3) * (th - a5) + r3};
      return out;
    }
    const Scalar& a6 = p.a(6);
    const Scalar r4 =
        pow_int(x, 3) *
            (a6 + Scalar(6) * a3 * a5 + Scalar(21) * a3 * a3 * a4 + Scalar(3) * a4 * a4 +
             Scalar(14) * pow_int(a3, 4)) /
            a3 -
        pow_int(x, 2) *
            (Scalar(6) * a3 * a5 + Scalar(42) * a3 * a3 * a4 + Scalar(3) * a4 * a4 +
             Scalar(42) * pow_int(a3, 4)) /
            (a3 * a3) +
        Scalar(28);
    if (n == 6) {
      out.components = {r3, r4, pow_int(x, 4) * (th - a6) + r4};
      return out;
    }
    const Scalar& a7 = p.a(7);
    const Scalar r5 =
        pow_int(x, 4) *
            (a7 + Scalar(7) * a3 * a6 + Scalar(28) * a3 * a4 * a4 +
             Scalar(28) * a3 * a3 * a5 + Scalar(7) * a4 * a5 +
             Scalar(84) * pow_int(a3, 3) * a4 + Scalar(42) * pow_int(a3, 5)) /
            a3 -
        pow_int(x, 3) *
            (Scalar(7) * a3 * a6 + Scalar(56) * a3 * a4 * a4 + Scalar(56) * a3 * a3 * a5 +
             Scalar(7) * a4 * a5 + Scalar(252) * pow_int(a3, 3) * a4 +
             Scalar(168) * pow_int(a3, 5)) /
            (a3 * a3) +
        pow_int(x, 2) * Scalar(28) *
            (a4 * a4 + a3 * a5 + Scalar(9) * a3 * a3 * a4 + Scalar(9) * pow_int(a3, 4)) /
            (a3 * a3) -
        Scalar(126);
    out.components = {r3, r4, r5, pow_int(x, 5) * (th - a7) + r5};
    return out;
  }

  if (s == Stratum::Upp1 && (n == 6 || n == 7)) {
    const Scalar& a5 = p.a(5);
    const Scalar& a6 = p.a(6);
    const Scalar pnum = Scalar(5) * pow_int(a3, 3) - a5;
    const Scalar qden = a6 + Scalar(6) * a3 * a5 - Scalar(16) * pow_int(a3, 4);
    const Scalar r4 = Scalar(7) * pow_int(pnum, 3) / (a3 * qden * qden) - Scalar(14);
    if (n == 6) {
      out.components = {r4, pow_int(pnum / qden, 4) * (th - a6) + r4};
      return out;
    }
    const Scalar& a7 = p.a(7);
    // +14 a3^2 a5 term: the sign-flipped variant is not constant on orbits
    // (see the negative-control tests), so it cannot be an invariant.
    const Scalar r5 =
        pow_int(pnum / qden, 4) *
            (a7 + Scalar(7) * a3 * a6 + Scalar(14) * a3 * a3 * a5 -
             Scalar(14) * pow_int(a3, 5)) /
            a3 -
        Scalar(35) * pow_int(pnum, 3) / (a3 * qden * qden) + Scalar(42);
    out.components = {r4, r5, pow_int(pnum / qden, 5) * (th - a7) + r5};
    return out;
  }

  if (s == Stratum::Upp2 && n >= 5 && n <= 7) {
    const Scalar& a5 = p.a(5);
    if (n == 5) {
      // (alpha4/alpha5)^3 (theta - alpha5) + 1; fixed closed form — the
      // alpha4(alpha4^2 theta - alpha4^3 alpha3 - 3 alpha5^3)/alpha5^3
      // variant is not constant on orbits (see the negative-control tests).
      out.components = {pow_int(a4 / a5, 3) * (th - a5) + Scalar(1)};
      return out;
    }
    const Scalar& a6 = p.a(6);
    const Scalar r4 = a4 * (a6 + Scalar(3) * a4 * a4) / (a5 * a5) - Scalar(3);
    if (n == 6) {
      out.components = {r4, pow_int(a4 / a5, 4) * (th - a6) + r4};
      return out;
    }
    const Scalar& a7 = p.a(7);
    const Scalar r5 = a4 * a4 * (a7 + Scalar(7) * a4 * a5) / pow_int(a5, 3) - Scalar(7);
    out.components = {r4, r5, pow_int(a4 / a5, 5) * (th - a7) + r5};
    return out;
  }

  throw unsupported_error("no closed-form invariant list for stratum " +
                          std::string(stratum_name(s)) + " at n=" + std::to_string(n));
}

IsoDecision decide_isomorphic(const FirstClassParams& a, const FirstClassParams& b) {
  if (a.n != b.n)
    throw std::invalid_argument("decide_isomorphic: dimension mismatch (n=" +
                                std::to_string(a.n) + " vs n=" + std::to_string(b.n) + ")");
  const StratumInfo ia = classify_stratum(a);
  const StratumInfo ib = classify_stratum(b);
  for (const auto* info : {&ia, &ib}) {
    if (info->fine && stratum_supported(*info->fine)) continue;
    std::string tag = info->fine ? std::string(stratum_name(*info->fine))
                                 : std::string(coarse_name(info->coarse));
    std::string why =
        info->fine ? "no isomorphism criterion for the residual closed strata"
                   : "sub-split undecidable at this n";
    return {IsoVerdict::Unsupported, std::nullopt, std::nullopt, {},
            "stratum " + tag + ": " + why};
  }
  if (*ia.fine != *ib.fine)
    return {IsoVerdict::No, std::nullopt, std::nullopt, {},
            "strata differ: " + std::string(stratum_name(*ia.fine)) + " vs " +
                std::string(stratum_name(*ib.fine))};

  const InvariantVector va = invariant_vector(a);
  const InvariantVector vb = invariant_vector(b);
  assert(va.components.size() == vb.components.size());
  for (std::size_t i = 0; i < va.components.size(); ++i) {
    if (va.components[i] != vb.components[i]) {
      const int index = va.first_index() + static_cast<int>(i);
      return {IsoVerdict::No, std::nullopt, index,
              {va.components[i], vb.components[i]},
              "invariant rho_" + std::to_string(index) + " differs"};
    }
  }
  GroupElement witness =
      compose_group(canonical_element(a), invert_group(canonical_element(b)));
  return {IsoVerdict::Yes, witness, std::nullopt, {},
          "equal invariant vectors on stratum " + std::string(stratum_name(*ia.fine))};
}

FirstClassParams realize_from_invariants(int n, Stratum s, const std::vector<Scalar>& targets) {
  const auto expect = [&](std::size_t want) {
    if (targets.size() != want)
      throw std::invalid_argument("realize_from_invariants: expected " +
                                  std::to_string(want) + " target components, got " +
                                  std::to_string(targets.size()));
  };
  switch (s) {
    case Stratum::U: {
      if (n < 4) throw std::invalid_argument("realize_from_invariants: n must be >= 4");
      expect(static_cast<std::size_t>(n - 3));
      // alpha3 = 1, alpha4 = 0 makes the canonical element the identity,
      // so the remaining coordinates are the invariants themselves.
      std::vector<Scalar> alpha(static_cast<std::size_t>(n - 2));
      alpha[0] = Scalar(1);
      alpha[1] = Scalar(0);
      for (int t = 5; t <= n; ++t)
        alpha[static_cast<std::size_t>(t - 3)] = targets[static_cast<std::size_t>(t - 5)];
      return {n, std::move(alpha), targets.back()};
    }
    case Stratum::Upp1: {
      if (n < 6)
        throw std::invalid_argument("realize_from_invariants: U''1 needs n >= 6");
      expect(static_cast<std::size_t>(n - 4));
      if (targets[0] == Scalar(-14))
        throw std::invalid_argument(
            "realize_from_invariants: the first component is never -14 on U''1 "
            "(rho_4 = 7 P^3/(alpha3 Q^2) - 14 with P != 0)");
      // slice alpha3 = 1, alpha4 = -2, alpha6 = 21 - 7 alpha5: the canonical
      // element is the identity there, and rho_4 = alpha6.
      std::vector<Scalar> alpha(static_cast<std::size_t>(n - 2));
      alpha[0] = Scalar(1);
      alpha[1] = Scalar(-2);
      alpha[2] = (Scalar(21) - targets[0]) / Scalar(7);  // alpha5
      alpha[3] = targets[0];                             // alpha6
      for (int t = 7; t <= n; ++t)
        alpha[static_cast<std::size_t>(t - 3)] = targets[static_cast<std::size_t>(t - 6)];
      return {n, std::move(alpha), targets.back()};
    }
    case Stratum::Upp2: {
      if (n < 5)
        throw std::invalid_argument("realize_from_invariants: U''2 needs n >= 5");
      expect(static_cast<std::size_t>(n - 4));
      std::vector<Scalar> alpha(static_cast<std::size_t>(n - 2));
      alpha[0] = Scalar(0);
      alpha[1] = Scalar(1);
      alpha[2] = Scalar(1);
      for (int t = 6; t <= n; ++t)
        alpha[static_cast<std::size_t>(t - 3)] = targets[static_cast<std::size_t>(t - 6)];
      return {n, std::move(alpha), targets.back()};
    }
    default:
      throw unsupported_error("realize_from_invariants: stratum " +
                              std::string(stratum_name(s)) +
                              " has no realization procedure");
  }
}

}  // namespace filiform
