#include <doctest.h>

#include "filiform/oracle.hpp"
#include "filiform/strata.hpp"

using namespace filiform;

namespace {

Scalar q(long long num, long long den = 1) { return Scalar(Rational(num, den)); }

FirstClassParams params(int n, std::vector<Scalar> alpha, Scalar theta) {
  return {n, std::move(alpha), std::move(theta)};
}

std::vector<Scalar> comps(std::initializer_list<Scalar> list) { return list; }

}  // namespace

TEST_CASE("stratum classification") {
  CHECK(*classify_stratum(params(4, {q(1), q(2)}, q(3))).fine == Stratum::U);
  CHECK(*classify_stratum(params(6, {q(1), q(-2), q(0), q(21)}, q(0))).fine ==
        Stratum::Upp1);
  CHECK(*classify_stratum(params(4, {q(0), q(0)}, q(7))).fine == Stratum::Fprime);
  CHECK(*classify_stratum(params(5, {q(0), q(1), q(1)}, q(2))).fine == Stratum::Upp2);
  CHECK(*classify_stratum(params(5, {q(0), q(1), q(0)}, q(2))).fine == Stratum::Fpp2);
  // alpha5 = 5 alpha3^3 closes the first factor of the U''1 condition
  CHECK(*classify_stratum(params(6, {q(1), q(-2), q(5), q(0)}, q(0))).fine ==
        Stratum::Fpp1);

  // membership reads alpha4 + 2 alpha3^2, not alpha4 alone: (2, -8) closes it
  CHECK(classify_stratum(params(4, {q(2), q(-8)}, q(0))).coarse ==
        CoarseStratum::U1prime);
  CHECK(*classify_stratum(params(6, {q(2), q(-8), q(1), q(1)}, q(0))).fine ==
        Stratum::Upp1);

  const StratumInfo u1_small = classify_stratum(params(4, {q(1), q(-2)}, q(1)));
  CHECK(u1_small.coarse == CoarseStratum::U1prime);
  CHECK_FALSE(u1_small.fine.has_value());
  const StratumInfo u2_small = classify_stratum(params(4, {q(0), q(1)}, q(1)));
  CHECK(u2_small.coarse == CoarseStratum::U2prime);
  CHECK_FALSE(u2_small.fine.has_value());
  // U'1 at n=5 still needs alpha6
  CHECK_FALSE(classify_stratum(params(5, {q(1), q(-2), q(4)}, q(1))).fine.has_value());

  CHECK(stratum_name(Stratum::Upp1) == "U''1");
  CHECK(*stratum_from_name("U''2") == Stratum::Upp2);
  CHECK_FALSE(stratum_from_name("bogus").has_value());
}

TEST_CASE("canonical elements") {
  const FirstClassParams p = params(4, {q(1), q(2)}, q(3));
  const GroupElement g0 = canonical_element(p);
  CHECK(g0.A() == q(2));
  CHECK(g0.B() == q(2));
  CHECK_THROWS_AS(canonical_element(p, Stratum::Upp2), std::invalid_argument);
  CHECK_THROWS_AS(canonical_element(params(4, {q(0), q(0)}, q(0))), unsupported_error);

  RngState rng(5);
  for (int n = 4; n <= 9; ++n)
    for (int trial = 0; trial < 20; ++trial) {
      const FirstClassParams u = random_in_stratum(rng, n, Stratum::U);
      const FirstClassParams c = apply_rho(canonical_element(u), u);
      REQUIRE(c.a(3) == q(1));
      REQUIRE(c.a(4) == q(0));
      if (n >= 6) {
        const FirstClassParams u1 = random_in_stratum(rng, n, Stratum::Upp1);
        const FirstClassParams c1 = apply_rho(canonical_element(u1), u1);
        REQUIRE(c1.a(3) == q(1));
        REQUIRE(c1.a(4) == q(-2));
        REQUIRE(c1.a(6) == q(21) - q(7) * c1.a(5));
      }
      if (n >= 5) {
        const FirstClassParams u2 = random_in_stratum(rng, n, Stratum::Upp2);
        const FirstClassParams c2 = apply_rho(canonical_element(u2), u2);
        REQUIRE(c2.a(3) == q(0));
        REQUIRE(c2.a(4) == q(1));
        REQUIRE(c2.a(5) == q(1));
      }
    }
}

TEST_CASE("frozen invariant vectors") {
  const auto expect = [](const FirstClassParams& p, Stratum s, const std::vector<Scalar>& want) {
    const InvariantVector iv = invariant_vector(p);
    CHECK(iv.stratum == s);
    CHECK(iv.components == want);
  };
  expect(params(4, {q(1), q(2)}, q(3)), Stratum::U, comps({q(1, 4)}));
  expect(params(5, {q(1), q(2), q(3)}, q(4)), Stratum::U, comps({q(-1, 2), q(-3, 8)}));
  expect(params(6, {q(1), q(2), q(3), q(4)}, q(5)), Stratum::U,
         comps({q(-1, 2), q(1, 4), q(5, 16)}));
  expect(params(7, {q(1), q(-1), q(2), q(-2), q(3)}, q(1, 2)), Stratum::U,
         comps({q(3), q(16), q(34), q(-46)}));
  expect(params(6, {q(1), q(-2), q(0), q(21)}, q(0)), Stratum::Upp1, comps({q(21), q(0)}));
  expect(params(7, {q(1), q(-2), q(1), q(1), q(1)}, q(2)), Stratum::Upp1,
         comps({q(-686, 81), q(96170, 6561), q(864506, 59049)}));
  expect(params(5, {q(0), q(1), q(1)}, q(2)), Stratum::Upp2, comps({q(2)}));
  expect(params(6, {q(0), q(2), q(1), q(3)}, q(1)), Stratum::Upp2, comps({q(27), q(-5)}));
  expect(params(7, {q(0), q(1), q(2), q(3), q(4)}, q(5)), Stratum::Upp2,
         comps({q(-3, 2), q(-19, 4), q(-151, 32)}));
}

TEST_CASE("invariant_vector refuses the undecided strata") {
  CHECK_THROWS_AS(invariant_vector(params(4, {q(0), q(0)}, q(1))), unsupported_error);
  CHECK_THROWS_AS(invariant_vector(params(4, {q(1), q(-2)}, q(1))), unsupported_error);
  CHECK_THROWS_AS(invariant_vector(params(5, {q(0), q(1), q(0)}, q(1))), unsupported_error);
  CHECK_THROWS_AS(invariant_vector(params(6, {q(1), q(-2), q(5), q(0)}, q(0))),
                  unsupported_error);
}

TEST_CASE("closed-form lists agree with the general invariants") {
  RngState rng(29);
  const auto run = [&](Stratum s, int nmin, int nmax) {
    for (int n = nmin; n <= nmax; ++n)
      for (int trial = 0; trial < 30; ++trial) {
        const FirstClassParams p = random_in_stratum(rng, n, s);
        REQUIRE(lowdim_invariant_list(p) == invariant_vector(p));
      }
  };
  run(Stratum::U, 4, 7);
  run(Stratum::Upp1, 6, 7);
  run(Stratum::Upp2, 5, 7);
  CHECK_THROWS_AS(lowdim_invariant_list(random_in_stratum(rng, 8, Stratum::U)),
                  unsupported_error);
}

TEST_CASE("rejected list variants are not orbit invariants") {
  // U''2, n=5: the alternative tail alpha4(alpha4^2 th - alpha4^3 a3 - 3 a5^3)/a5^3
  // changes along the orbit of (0,1,1),2 while the true invariant stays put.
  const FirstClassParams p = params(5, {q(0), q(1), q(1)}, q(2));
  const auto variant5 = [](const FirstClassParams& r) {
    return r.a(4) *
           (r.a(4) * r.a(4) * r.theta - pow_int(r.a(4), 3) * r.a(3) -
            q(3) * pow_int(r.a(5), 3)) /
           pow_int(r.a(5), 3);
  };
  const FirstClassParams moved = apply_rho(GroupElement(q(1), q(1)), p);
  CHECK(variant5(p) == q(-1));
  CHECK(variant5(moved) == q(-3));  // not constant, so not an invariant
  CHECK(invariant_vector(moved) == invariant_vector(p));
  CHECK(lowdim_invariant_list(moved) == lowdim_invariant_list(p));

  // U''1, n=7: flipping +14 a3^2 a5 to -14 a3^2 a5 in rho_5 breaks invariance
  const FirstClassParams u1 = params(7, {q(1), q(-2), q(1), q(1), q(1)}, q(2));
  const auto variant7 = [](const FirstClassParams& r) {
    const Scalar pnum = q(5) * pow_int(r.a(3), 3) - r.a(5);
    const Scalar qden =
        r.a(6) + q(6) * r.a(3) * r.a(5) - q(16) * pow_int(r.a(3), 4);
    return pow_int(pnum / qden, 4) *
               (r.a(7) + q(7) * r.a(3) * r.a(6) - q(14) * r.a(3) * r.a(3) * r.a(5) -
                q(14) * pow_int(r.a(3), 5)) /
               r.a(3) -
           q(35) * pow_int(pnum, 3) / (r.a(3) * qden * qden) + q(42);
  };
  const FirstClassParams u1_moved = apply_rho(GroupElement(q(1), q(1)), u1);
  CHECK(variant7(u1) != variant7(u1_moved));
  CHECK(invariant_vector(u1_moved) == invariant_vector(u1));
  CHECK(lowdim_invariant_list(u1_moved) == lowdim_invariant_list(u1));
}

TEST_CASE("canonicalize") {
  const FirstClassParams p = params(4, {q(1), q(2)}, q(3));
  CHECK(canonicalize(p) == params(4, {q(1), q(0)}, q(1, 4)));
  CHECK(canonicalize(canonicalize(p)) == canonicalize(p));
  CHECK_THROWS_AS(canonicalize(params(4, {q(0), q(0)}, q(1))), unsupported_error);

  RngState rng(31);
  for (int n = 4; n <= 9; ++n)
    for (int trial = 0; trial < 15; ++trial) {
      const FirstClassParams u = random_in_stratum(rng, n, Stratum::U);
      const FirstClassParams c = canonicalize(u);
      REQUIRE(canonicalize(c) == c);
      const InvariantVector iv = invariant_vector(u);
      // remaining coordinates of the canonical form are the invariants
      for (int i = 3; i <= n - 1; ++i)
        REQUIRE(iv.components[static_cast<std::size_t>(i - 3)] ==
                (i <= n - 2 ? c.a(i + 2) : c.theta));
      const GroupElement g = random_group_element(rng);
      REQUIRE(canonicalize(apply_rho(g, u)) == c);
    }
}

TEST_CASE("orbits preserve every stratum") {
  RngState rng(37);
  const Stratum strata[] = {Stratum::U,    Stratum::Upp1, Stratum::Fpp1,
                            Stratum::Upp2, Stratum::Fpp2, Stratum::Fprime};
  for (const Stratum s : strata)
    for (int trial = 0; trial < 25; ++trial) {
      const int n = 6 + static_cast<int>(rng.below(3));
      const FirstClassParams p = random_in_stratum(rng, n, s);
      const GroupElement g = random_group_element(rng);
      const StratumInfo moved = classify_stratum(apply_rho(g, p));
      REQUIRE(moved.fine.has_value());
      REQUIRE(*moved.fine == s);
    }
}

TEST_CASE("decide_isomorphic") {
  const FirstClassParams a = params(4, {q(1), q(2)}, q(3));
  const FirstClassParams b = params(4, {q(2), q(0)}, q(1));

  const IsoDecision yes = decide_isomorphic(a, b);
  CHECK(yes.verdict == IsoVerdict::Yes);
  REQUIRE(yes.witness.has_value());
  CHECK(apply_rho(*yes.witness, a) == b);

  const IsoDecision no = decide_isomorphic(a, params(4, {q(1), q(2)}, q(4)));
  CHECK(no.verdict == IsoVerdict::No);
  CHECK(no.differing_index == 3);
  CHECK(no.differing_values == comps({q(1, 4), q(1, 2)}));

  // strata differ between two decidable strata
  const IsoDecision mixed = decide_isomorphic(params(5, {q(1), q(1), q(1)}, q(1)),
                                              params(5, {q(0), q(1), q(1)}, q(1)));
  CHECK(mixed.verdict == IsoVerdict::No);
  CHECK_FALSE(mixed.differing_index.has_value());

  CHECK(decide_isomorphic(params(4, {q(1), q(-2)}, q(1)), a).verdict ==
        IsoVerdict::Unsupported);
  CHECK(decide_isomorphic(params(4, {q(0), q(0)}, q(1)),
                          params(4, {q(0), q(0)}, q(2)))
            .verdict == IsoVerdict::Unsupported);
  CHECK_THROWS_AS(decide_isomorphic(a, params(5, {q(1), q(2), q(0)}, q(3))),
                  std::invalid_argument);
}

TEST_CASE("realize_from_invariants") {
  CHECK(realize_from_invariants(4, Stratum::U, comps({q(1, 4)})) ==
        params(4, {q(1), q(0)}, q(1, 4)));

  // n=6 closed form: alpha = (1, 0, a3, a4), theta = a5
  const auto built = realize_from_invariants(6, Stratum::U, comps({q(7), q(-2), q(9, 5)}));
  CHECK(built == params(6, {q(1), q(0), q(7), q(-2)}, q(9, 5)));

  CHECK_THROWS_AS(realize_from_invariants(6, Stratum::U, comps({q(1)})),
                  std::invalid_argument);
  CHECK_THROWS_WITH_AS(
      realize_from_invariants(6, Stratum::Upp1, comps({q(-14), q(0)})),
      doctest::Contains("-14"), std::invalid_argument);
  CHECK_THROWS_AS(realize_from_invariants(5, Stratum::Upp1, comps({q(1)})),
                  std::invalid_argument);
  CHECK_THROWS_AS(realize_from_invariants(6, Stratum::Fpp1, comps({q(1), q(1)})),
                  unsupported_error);

  RngState rng(41);
  const ScalarDist dist;
  const auto roundtrip = [&](Stratum s, int nmin) {
    for (int n = nmin; n <= 9; ++n)
      for (int trial = 0; trial < 20; ++trial) {
        const int len = s == Stratum::U ? n - 3 : n - 4;
        std::vector<Scalar> targets;
        for (int i = 0; i < len; ++i) targets.push_back(random_scalar(rng, dist));
        if (s == Stratum::Upp1 && targets[0] == q(-14)) targets[0] = q(0);
        const FirstClassParams built2 = realize_from_invariants(n, s, targets);
        const InvariantVector iv = invariant_vector(built2);
        REQUIRE(iv.stratum == s);
        REQUIRE(iv.components == targets);
      }
  };
  roundtrip(Stratum::U, 4);
  roundtrip(Stratum::Upp1, 6);
  roundtrip(Stratum::Upp2, 5);
}

TEST_CASE("orbit moves preserve the invariant vector") {
  RngState rng(43);
  const auto run = [&](Stratum s, int nmin) {
    for (int n = nmin; n <= 9; ++n)
      for (int trial = 0; trial < 15; ++trial) {
        const FirstClassParams p = random_in_stratum(rng, n, s);
        const GroupElement g = random_group_element(rng);
        REQUIRE(invariant_vector(apply_rho(g, p)) == invariant_vector(p));
        if (s == Stratum::Upp1)
          REQUIRE(invariant_vector(p).components[0] != q(-14));
      }
  };
  run(Stratum::U, 4);
  run(Stratum::Upp1, 6);
  run(Stratum::Upp2, 5);
}
