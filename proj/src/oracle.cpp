#include "filiform/oracle.hpp"

#include <string>

#include "filiform/linalg.hpp"

namespace filiform {

namespace {

linalg::Vec unit_vector(int dim, int k) {
  linalg::Vec e(static_cast<std::size_t>(dim), Scalar(0));
  e[static_cast<std::size_t>(k)] = Scalar(1);
  return e;
}

}  // namespace

BasisChangeResult adapted_change_tensor(const StructureTensor& t, const GroupElement& g,
                                        std::span<const Scalar> higher) {
  const FirstClassParams input = params_from_tensor(t);  // also proves the shape
  const int n = input.n;
  const int dim = t.dim();
  if (!higher.empty() && static_cast<int>(higher.size()) != n - 1)
    throw std::invalid_argument("adapted_change_tensor: higher coefficients must be c_2..c_n (" +
                                std::to_string(n - 1) + " values)");

  linalg::Vec f0(static_cast<std::size_t>(dim), Scalar(0));
  f0[0] = g.A();
  f0[1] = g.B();
  for (int k = 2; k <= n; ++k)
    f0[static_cast<std::size_t>(k)] = higher.empty() ? Scalar(0) : higher[static_cast<std::size_t>(k - 2)];

  // d_2..d_n from [e1', e0'] = [e0', e0'], one column per basis completion
  const Scalar apb = g.A() + g.B();
  linalg::Mat sys(static_cast<std::size_t>(dim), linalg::Vec(static_cast<std::size_t>(n - 1), Scalar(0)));
  for (int k = 2; k <= n; ++k) {
    const linalg::Vec col = t.bracket(unit_vector(dim, k), f0);
    for (int m = 0; m < dim; ++m)
      sys[static_cast<std::size_t>(m)][static_cast<std::size_t>(k - 2)] = col[static_cast<std::size_t>(m)];
  }
  linalg::Vec rhs = t.bracket(f0, f0);
  const linalg::Vec e1f0 = t.bracket(unit_vector(dim, 1), f0);
  for (int m = 0; m < dim; ++m)
    rhs[static_cast<std::size_t>(m)] -= apb * e1f0[static_cast<std::size_t>(m)];
  const auto d = linalg::solve(sys, rhs);
  if (!d) throw oracle_error("adapted_change_tensor: completion of e1' has no solution");

  std::vector<linalg::Vec> basis(static_cast<std::size_t>(dim));
  basis[0] = f0;
  basis[1] = linalg::Vec(static_cast<std::size_t>(dim), Scalar(0));
  basis[1][1] = apb;
  for (int k = 2; k <= n; ++k) basis[1][static_cast<std::size_t>(k)] = (*d)[static_cast<std::size_t>(k - 2)];
  for (int i = 1; i <= n - 1; ++i)
    basis[static_cast<std::size_t>(i + 1)] = t.bracket(basis[static_cast<std::size_t>(i)], f0);

  linalg::Mat transition(static_cast<std::size_t>(dim), linalg::Vec(static_cast<std::size_t>(dim)));
  for (int r = 0; r < dim; ++r)
    for (int c = 0; c < dim; ++c)
      transition[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)] =
          basis[static_cast<std::size_t>(c)][static_cast<std::size_t>(r)];
  const auto inv = linalg::inverse(transition);
  if (!inv) throw oracle_error("adapted_change_tensor: transition matrix is singular");

  StructureTensor out(dim);
  for (int i = 0; i < dim; ++i)
    for (int j = 0; j < dim; ++j) {
      const linalg::Vec prod = t.bracket(basis[static_cast<std::size_t>(i)], basis[static_cast<std::size_t>(j)]);
      const linalg::Vec coords = linalg::mat_vec(*inv, prod);
      for (int k = 0; k < dim; ++k) out.at(i, j, k) = coords[static_cast<std::size_t>(k)];
    }

  FirstClassParams extracted = params_from_tensor(out);  // shape violation throws here
  return {std::move(out), std::move(extracted)};
}

namespace {

// Chain sums written as literal nested sums over index chains
// k+j <= i_1 <= ... <= i_{j-1} <= t with the stated subscript pattern;
// deliberately not shared with the composition-based enumerator in the
// action module.
Scalar raw_chain_sum(const FirstClassParams& p, int t, int k, int j) {
  if (j == 1) {
    const int idx = t + 2 - k;
    return idx >= 3 && idx <= p.n ? p.a(idx) : Scalar(0);
  }
  const int lo = k + j;
  if (lo > t) return Scalar(0);
  std::vector<int> chain(static_cast<std::size_t>(j - 1), 0);
  Scalar total;
  // enumerate nondecreasing chains; position 0 is i_1
  const auto product_of = [&]() {
    Scalar prod = p.a(chain[0] + 3 - lo);                // alpha_{i_1 + 3 - (k+j)}
    for (int m = 1; m < j - 1; ++m)
      prod *= p.a(chain[static_cast<std::size_t>(m)] + 3 - chain[static_cast<std::size_t>(m - 1)]);
    prod *= p.a(t + 3 - chain.back());                   // alpha_{t + 3 - i_{j-1}}
    return prod;
  };
  const auto rec = [&](auto&& self, int pos, int from) -> void {
    if (pos == j - 1) {
      total += product_of();
      return;
    }
    for (int i = from; i <= t; ++i) {
      chain[static_cast<std::size_t>(pos)] = i;
      self(self, pos + 1, i);
    }
  };
  rec(rec, 0, lo);
  return total;
}

}  // namespace

FirstClassParams nested_sum_transform(const GroupElement& g, const FirstClassParams& p) {
  const int n = p.n;
  const Scalar& a = g.A();
  const Scalar& b = g.B();

  // A^{k-1-j} B^j coefficients, shared between the alpha and theta lines
  const auto term = [&](int t, int k) {
    Scalar acc;
    for (int j = 1; j <= k - 1; ++j) {
      const Scalar s = raw_chain_sum(p, t, k, j);
      if (s.is_zero()) continue;
      acc += Scalar(Rational(binomial(k - 1, k - 1 - j))) * pow_int(a, k - 1 - j) *
             pow_int(b, j) * s;
    }
    return acc;
  };

  std::vector<Scalar> primed(static_cast<std::size_t>(n + 1));  // primed[t] = alpha'_t
  primed[3] = (a + b) / (a * a) * p.a(3);
  for (int t = 4; t <= n; ++t) {
    Scalar acc = (a + b) * p.a(t);
    for (int k = 3; k <= t - 1; ++k) acc -= term(t, k) * primed[static_cast<std::size_t>(k)];
    primed[static_cast<std::size_t>(t)] = acc / pow_int(a, t - 1);
  }
  Scalar acc = a * p.theta + b * p.a(n);
  for (int k = 3; k <= n - 1; ++k) acc -= term(n, k) * primed[static_cast<std::size_t>(k)];
  const Scalar theta = acc / pow_int(a, n - 1);

  std::vector<Scalar> alpha(primed.begin() + 3, primed.end());
  return {n, std::move(alpha), theta};
}

GroupElement random_group_element(RngState& rng, const ScalarDist& dist) {
  for (;;) {
    const Scalar a = random_scalar(rng, dist);
    const Scalar b = random_scalar(rng, dist);
    if (valid_group_pair(a, b)) return {a, b};
  }
}

std::vector<std::pair<GroupElement, FirstClassParams>> orbit_samples(
    const FirstClassParams& p, int count, RngState& rng, const ScalarDist& dist) {
  if (count < 0) throw std::invalid_argument("orbit_samples: count must be >= 0");
  std::vector<std::pair<GroupElement, FirstClassParams>> out;
  out.reserve(static_cast<std::size_t>(count));
  for (int i = 0; i < count; ++i) {
    GroupElement g = random_group_element(rng, dist);
    FirstClassParams moved = apply_rho(g, p);
    out.emplace_back(std::move(g), std::move(moved));
  }
  return out;
}

FirstClassParams random_first_params(RngState& rng, int n, const ScalarDist& dist) {
  std::vector<Scalar> alpha(static_cast<std::size_t>(n - 2));
  for (auto& a : alpha) a = random_scalar(rng, dist);
  return {n, std::move(alpha), random_scalar(rng, dist)};
}

SecondClassParams random_second_params(RngState& rng, int n, const ScalarDist& dist) {
  std::vector<Scalar> beta(static_cast<std::size_t>(n - 2));
  for (auto& b : beta) b = random_scalar(rng, dist);
  return {n, std::move(beta), random_scalar(rng, dist)};
}

FirstClassParams random_in_stratum(RngState& rng, int n, Stratum s, const ScalarDist& dist) {
  ScalarDist nz = dist;
  nz.nonzero = true;
  for (;;) {
    FirstClassParams p = random_first_params(rng, n, dist);
    switch (s) {
      case Stratum::U:
        break;  // rejection only
      case Stratum::Upp1:
      case Stratum::Fpp1: {
        if (n < 6)
          throw std::invalid_argument("random_in_stratum: sub-strata of U'1 need n >= 6");
        const Scalar a3 = random_scalar(rng, nz);
        p.a(3) = a3;
        p.a(4) = Scalar(-2) * a3 * a3;
        if (s == Stratum::Fpp1) {
          // close one of the two defining factors at random
          if (rng.below(2) == 0)
            p.a(5) = Scalar(5) * pow_int(a3, 3);
          else
            p.a(6) = Scalar(16) * pow_int(a3, 4) - Scalar(6) * a3 * p.a(5);
        }
        break;
      }
      case Stratum::Upp2:
      case Stratum::Fpp2:
        if (n < 5)
          throw std::invalid_argument("random_in_stratum: sub-strata of U'2 need n >= 5");
        p.a(3) = Scalar(0);
        p.a(4) = random_scalar(rng, nz);
        p.a(5) = s == Stratum::Upp2 ? random_scalar(rng, nz) : Scalar(0);
        break;
      case Stratum::Fprime:
        p.a(3) = Scalar(0);
        p.a(4) = Scalar(0);
        break;
    }
    const StratumInfo info = classify_stratum(p);
    if (info.fine && *info.fine == s) return p;
  }
}

}  // namespace filiform
