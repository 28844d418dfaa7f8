#include "filiform/action.hpp"

#include <stdexcept>
#include <utility>

namespace filiform {

bool valid_group_pair(const Scalar& a, const Scalar& b) {
  return !a.is_zero() && !(a + b).is_zero();
}

GroupElement::GroupElement(Scalar a, Scalar b) : A_(std::move(a)), B_(std::move(b)) {
  if (!valid_group_pair(A_, B_))
    throw std::invalid_argument("group element requires A(A+B) != 0, got A=" +
                                format_scalar(A_) + " B=" + format_scalar(B_));
}

namespace {

// Evaluates phi_3..phi_n and phi_{n+1} for one (y, z) context. The phi_k
// values are memoized in-order since every later phi reuses them.
class PhiEvaluator {
public:
  PhiEvaluator(Scalar y, const FirstClassParams& p, BracketEval mode)
      : y_(std::move(y)), p_(&p), mode_(mode) {
    const int n = p.n;
    ypow_.assign(static_cast<std::size_t>(n), Scalar(1));
    for (std::size_t j = 1; j < ypow_.size(); ++j) ypow_[j] = ypow_[j - 1] * y_;
    if (mode_ == BracketEval::Convolution) build_zpow();

    phi_.assign(static_cast<std::size_t>(n + 1), Scalar(0));
    const Scalar one_plus_y = Scalar(1) + y_;
    Scalar top_correction;  // sum_k bracket(n,k) phi_k, reused by phi_{n+1}
    for (int t = 3; t <= n; ++t) {
      Scalar corr;
      for (int k = 3; k <= t - 1; ++k) corr += bracket(t, k) * phi(k);
      phi_[static_cast<std::size_t>(t)] = one_plus_y * p.z(t) - corr;
      if (t == n) top_correction = corr;
    }
    phi_theta_ = p.z(n + 1) + y_ * p.z(n) - top_correction;
    phi_theta_prefactored_ = p.z(n + 1) + y_ * p.z(n) - one_plus_y * top_correction;
  }

  const Scalar& phi(int t) const { return phi_.at(static_cast<std::size_t>(t)); }
  const Scalar& phi_theta() const { return phi_theta_; }
  const Scalar& phi_theta_prefactored() const { return phi_theta_prefactored_; }

private:
  Scalar bracket(int t, int k) const {
    Scalar acc;
    for (int j = 1; j <= k - 1 && j <= t - k; ++j) {
      if (ypow_[static_cast<std::size_t>(j)].is_zero()) break;  // higher powers vanish too
      const Scalar s = mode_ == BracketEval::ChainSum ? chain_sum(t, k, j)
                                                      : zpow_coeff(j, t - k - j);
      if (s.is_zero()) continue;
      acc += Scalar(Rational(binomial(k - 1, j))) * ypow_[static_cast<std::size_t>(j)] * s;
    }
    return acc;
  }

  // sum over compositions d_1+...+d_j = t-k-j, d_s >= 0, of prod z_{d_s+3};
  // each composition is one nondecreasing chain k+j <= i_1 <= ... <= i_{j-1} <= t.
  Scalar chain_sum(int t, int k, int j) const {
    Scalar total;
    chain_rec(j, t - k - j, Scalar(1), total);
    return total;
  }

  void chain_rec(int steps_left, int rem, const Scalar& prod, Scalar& total) const {
    if (steps_left == 1) {
      total += prod * p_->z(rem + 3);
      return;
    }
    for (int d = 0; d <= rem; ++d) {
      const Scalar& zd = p_->z(d + 3);
      if (zd.is_zero()) continue;
      chain_rec(steps_left - 1, rem - d, prod * zd, total);
    }
  }

  // zpow_[j][d] = coefficient of u^d in (z_3 + z_4 u + ... + z_n u^{n-3})^j
  void build_zpow() {
    const int n = p_->n;
    const int maxdeg = n - 3;
    std::vector<Scalar> z1(static_cast<std::size_t>(maxdeg + 1), Scalar(0));
    for (int d = 0; d <= maxdeg; ++d) z1[static_cast<std::size_t>(d)] = p_->z(d + 3);
    zpow_.push_back({});  // j = 0 unused
    zpow_.push_back(z1);
    const int maxj = n - 3 > 1 ? n - 3 : 1;
    for (int j = 2; j <= maxj; ++j) {
      std::vector<Scalar> next(static_cast<std::size_t>(maxdeg + 1), Scalar(0));
      const auto& prev = zpow_.back();
      for (int a = 0; a <= maxdeg; ++a) {
        if (prev[static_cast<std::size_t>(a)].is_zero()) continue;
        for (int b = 0; a + b <= maxdeg; ++b)
          next[static_cast<std::size_t>(a + b)] +=
              prev[static_cast<std::size_t>(a)] * z1[static_cast<std::size_t>(b)];
      }
      zpow_.push_back(std::move(next));
    }
  }

  Scalar zpow_coeff(int j, int deg) const {
    if (deg < 0 || j >= static_cast<int>(zpow_.size())) return Scalar(0);
    const auto& row = zpow_[static_cast<std::size_t>(j)];
    if (deg >= static_cast<int>(row.size())) return Scalar(0);
    return row[static_cast<std::size_t>(deg)];
  }

  Scalar y_;
  const FirstClassParams* p_;
  BracketEval mode_;
  std::vector<Scalar> ypow_;
  std::vector<std::vector<Scalar>> zpow_;
  std::vector<Scalar> phi_;
  Scalar phi_theta_;
  Scalar phi_theta_prefactored_;
};

}  // namespace

Scalar eval_phi(int t, const Scalar& y, const FirstClassParams& z, BracketEval mode) {
  if (t < 3 || t > z.n)
    throw std::invalid_argument("eval_phi: t must satisfy 3 <= t <= n");
  return PhiEvaluator(y, z, mode).phi(t);
}

Scalar eval_phi_theta(const Scalar& y, const FirstClassParams& z, BracketEval mode) {
  return PhiEvaluator(y, z, mode).phi_theta();
}

Scalar eval_phi_theta_prefactored(const Scalar& y, const FirstClassParams& z) {
  return PhiEvaluator(y, z, BracketEval::ChainSum).phi_theta_prefactored();
}

FirstClassParams apply_rho(const GroupElement& g, const FirstClassParams& p,
                           BracketEval mode) {
  const PhiEvaluator ev(g.y(), p, mode);
  const Scalar x = g.x();
  std::vector<Scalar> alpha(static_cast<std::size_t>(p.n - 2));
  Scalar xp = x;  // x^{t-2}
  for (int t = 3; t <= p.n; ++t) {
    alpha[static_cast<std::size_t>(t - 3)] = xp * ev.phi(t);
    if (t < p.n) xp *= x;
  }
  // theta' carries the same power x^{n-2} as alpha'_n
  return {p.n, std::move(alpha), xp * ev.phi_theta()};
}

Scalar rho_component(const GroupElement& g, const FirstClassParams& p, int i) {
  if (i < 1 || i > p.n - 1)
    throw std::invalid_argument("rho_component: i must satisfy 1 <= i <= n-1");
  const FirstClassParams moved = apply_rho(g, p);
  return i <= p.n - 2 ? moved.a(i + 2) : moved.theta;
}

GroupElement compose_group(const GroupElement& g1, const GroupElement& g2) {
  return {g1.A() * g2.A(), g1.A() * g2.B() + g2.A() * g1.B() + g1.B() * g2.B()};
}

GroupElement invert_group(const GroupElement& g) {
  return {g.A().inv(), -g.B() / (g.A() * (g.A() + g.B()))};
}

FirstClassParams lowdim_closed_form(const GroupElement& g, const FirstClassParams& p) {
  const int n = p.n;
  if (n < 4 || n > 7)
    throw std::invalid_argument("lowdim_closed_form: closed forms cover n = 4..7 only");

  const Scalar y = g.y();
  const Scalar x = g.x();
  const Scalar u = Scalar(1) + y;
  const Scalar a3 = p.a(3);
  const Scalar a4 = p.a(4);
  const Scalar th = p.theta;

  std::vector<Scalar> alpha(static_cast<std::size_t>(n - 2));
  Scalar theta;
  alpha[0] = x * u * a3;
  alpha[1] = pow_int(x, 2) * u * (a4 - Scalar(2) * y * a3 * a3);
  if (n == 4) {
    theta = pow_int(x, 2) * (th + y * a4 - Scalar(2) * u * y * a3 * a3);
    return {n, std::move(alpha), theta};
  }

  const Scalar a5 = p.a(5);
  alpha[2] = pow_int(x, 3) * u * (a5 - Scalar(5) * y * (a4 - y * a3 * a3) * a3);
  if (n == 5) {
    theta = pow_int(x, 3) * (th + y * a5 - Scalar(5) * u * y * (a4 - y * a3 * a3) * a3);
    return {n, std::move(alpha), theta};
  }

  const Scalar a6 = p.a(6);
  const Scalar tail6 = Scalar(6) * y * a3 * a5 - Scalar(21) * pow_int(y, 2) * a3 * a3 * a4 +
                       Scalar(3) * y * a4 * a4 + Scalar(14) * pow_int(y, 3) * pow_int(a3, 4);
  alpha[3] = pow_int(x, 4) * u * (a6 - tail6);
  if (n == 6) {
    theta = pow_int(x, 4) * (th + y * a6 - u * tail6);
    return {n, std::move(alpha), theta};
  }

  const Scalar a7 = p.a(7);
  const Scalar tail7 = Scalar(7) * y * a3 * a6 - Scalar(28) * pow_int(y, 2) * a3 * a3 * a5 -
                       Scalar(28) * pow_int(y, 2) * a3 * a4 * a4 + Scalar(7) * y * a4 * a5 +
                       Scalar(84) * pow_int(y, 3) * pow_int(a3, 3) * a4 -
                       Scalar(42) * pow_int(y, 4) * pow_int(a3, 5);
  alpha[4] = pow_int(x, 5) * u * (a7 - tail7);
  theta = pow_int(x, 5) * (th + y * a7 - u * tail7);
  return {n, std::move(alpha), theta};
}

}  // namespace filiform
