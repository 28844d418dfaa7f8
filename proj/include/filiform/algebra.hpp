#pragma once

#include <span>
#include <stdexcept>
#include <vector>

#include "filiform/scalar.hpp"

namespace filiform {

struct shape_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Parameter vector (alpha_3, ..., alpha_n, theta) of a first-class
/// algebra; the algebra itself has dimension n+1.
struct FirstClassParams {
  int n;
  std::vector<Scalar> alpha;  // alpha[t-3] holds alpha_t, 3 <= t <= n
  Scalar theta;

  FirstClassParams(int n_, std::vector<Scalar> alpha_, Scalar theta_);

  const Scalar& a(int t) const { return alpha.at(static_cast<std::size_t>(t) - 3); }
  Scalar& a(int t) { return alpha.at(static_cast<std::size_t>(t) - 3); }

  /// z_t in the uniform indexing: alpha_t for t <= n, theta for t = n+1.
  const Scalar& z(int t) const { return t == n + 1 ? theta : a(t); }

  friend bool operator==(const FirstClassParams& p, const FirstClassParams& q) {
    return p.n == q.n && p.alpha == q.alpha && p.theta == q.theta;
  }
  friend bool operator!=(const FirstClassParams& p, const FirstClassParams& q) {
    return !(p == q);
  }
};

/// Parameter vector (beta_3, ..., beta_n, gamma) of a second-class algebra.
struct SecondClassParams {
  int n;
  std::vector<Scalar> beta;  // beta[t-3] holds beta_t
  Scalar gamma;

  SecondClassParams(int n_, std::vector<Scalar> beta_, Scalar gamma_);

  const Scalar& b(int t) const { return beta.at(static_cast<std::size_t>(t) - 3); }

  friend bool operator==(const SecondClassParams& p, const SecondClassParams& q) {
    return p.n == q.n && p.beta == q.beta && p.gamma == q.gamma;
  }
};

/// Dense structure constants gamma_{ij}^k on a basis e_0..e_{dim-1}:
/// [e_i, e_j] = sum_k gamma_{ij}^k e_k.
class StructureTensor {
public:
  explicit StructureTensor(int dim);

  int dim() const { return dim_; }

  const Scalar& at(int i, int j, int k) const { return c_[index(i, j, k)]; }
  Scalar& at(int i, int j, int k) { return c_[index(i, j, k)]; }

  /// Bracket of two coordinate vectors.
  std::vector<Scalar> bracket(std::span<const Scalar> x, std::span<const Scalar> y) const;

  friend bool operator==(const StructureTensor& a, const StructureTensor& b) {
    return a.dim_ == b.dim_ && a.c_ == b.c_;
  }

private:
  std::size_t index(int i, int j, int k) const;

  int dim_;
  std::vector<Scalar> c_;
};

/// Multiplication table of the first class:
///   [e0,e0] = e2, [ei,e0] = e_{i+1} (1 <= i <= n-1),
///   [e0,e1] = alpha_3 e3 + ... + alpha_{n-1} e_{n-1} + theta e_n,
///   [ej,e1] = alpha_3 e_{j+2} + ... + alpha_{n+1-j} e_n (1 <= j <= n-2).
StructureTensor build_tensor_first(const FirstClassParams& p);

/// Multiplication table of the second class: like the first class but with
/// no [e1,e0] product and with [e1,e1] = gamma e_n.
StructureTensor build_tensor_second(const SecondClassParams& p);

struct LeibnizViolation {
  int i, j, k, m;
  Scalar value;
};

/// Every quadruple (i,j,k,m) violating
///   sum_l (g_{jk}^l g_{il}^m - g_{ij}^l g_{lk}^m + g_{ik}^l g_{lj}^m) = 0,
/// with the nonzero value. Empty iff the tensor is a Leibniz algebra.
/// Complete enumeration, no early exit.
std::vector<LeibnizViolation> leibniz_defect(const StructureTensor& t);

/// Dimensions of L^1, L^2, ... with L^{k+1} = [L^k, L], computed by exact
/// row reduction. Stops after reaching 0 (which is appended) or after the
/// first repeated dimension (not nilpotent; no trailing 0).
std::vector<int> lower_central_dims(const StructureTensor& t);

/// True iff the dims are [d, d-2, d-3, ..., 1, 0] for d = dim.
bool is_filiform(const StructureTensor& t);

/// Inverse of build_tensor_first. Throws shape_error naming the first
/// offending entry if the tensor is not exactly first-class.
FirstClassParams params_from_tensor(const StructureTensor& t);

}  // namespace filiform
