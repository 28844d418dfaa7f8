#pragma once

#include <vector>

#include "filiform/algebra.hpp"
#include "filiform/scalar.hpp"

namespace filiform {

/// Base-change pair (A, B) with A(A+B) != 0, acting on parameter vectors
/// as rho(1/A, B/A; .). In the (x, y) = (1/A, B/A) coordinates the group
/// law reads (x1, y1)*(x2, y2) = (x1 x2, y1 + y2 + y1 y2).
class GroupElement {
public:
  GroupElement(Scalar a, Scalar b);

  static GroupElement identity() { return {Scalar(1), Scalar(0)}; }

  const Scalar& A() const { return A_; }
  const Scalar& B() const { return B_; }
  Scalar x() const { return A_.inv(); }
  Scalar y() const { return B_ / A_; }

  friend bool operator==(const GroupElement& g, const GroupElement& h) {
    return g.A_ == h.A_ && g.B_ == h.B_;
  }

private:
  Scalar A_, B_;
};

bool valid_group_pair(const Scalar& a, const Scalar& b);

/// How the nested chain sums inside the phi recursion are evaluated.
/// ChainSum enumerates every nondecreasing index chain directly and is the
/// reference; Convolution evaluates the same sums as coefficients of powers
/// of the generating polynomial z_3 + z_4 u + z_5 u^2 + ...
enum class BracketEval { ChainSum, Convolution };

/// phi_t(y; z) for 3 <= t <= n, where z_3..z_n = alpha_3..alpha_n and
/// z_{n+1} = theta:
///   phi_t = (1+y) z_t - sum_{k=3}^{t-1} bracket(t,k,y;z) phi_k,
///   bracket(t,k) = sum_{j=1}^{k-1} binom(k-1,j) y^j S_j(t,k),
///   S_j(t,k)     = sum over d_1+...+d_j = t-k-j, d_s >= 0, of prod z_{d_s+3}.
Scalar eval_phi(int t, const Scalar& y, const FirstClassParams& z,
                BracketEval mode = BracketEval::ChainSum);

/// phi_{n+1}(y; z) = z_{n+1} + y z_n - sum_{k=3}^{n-1} bracket(n,k,y;z) phi_k.
Scalar eval_phi_theta(const Scalar& y, const FirstClassParams& z,
                      BracketEval mode = BracketEval::ChainSum);

/// Rejected variant of phi_{n+1} with the factor (1+y) applied to the whole
/// correction sum. It contradicts the n=4..7 closed-form systems (already
/// at n=4), so apply_rho never uses it; it is kept as a negative control
/// for the equivalence suites.
Scalar eval_phi_theta_prefactored(const Scalar& y, const FirstClassParams& z);

/// The action on parameters:
///   alpha'_t = (1/A)^{t-2} phi_t(B/A; alpha)   for 3 <= t <= n,
///   theta'   = (1/A)^{n-2} phi_{n+1}(B/A; alpha).
FirstClassParams apply_rho(const GroupElement& g, const FirstClassParams& p,
                           BracketEval mode = BracketEval::ChainSum);

/// Component rho_i, 1 <= i <= n-1: rho_i = alpha'_{i+2} for i <= n-2 and
/// rho_{n-1} = theta'. (Statements indexed by i = 3..n-1 refer to this
/// numbering, which runs two below the alpha subscript.)
Scalar rho_component(const GroupElement& g, const FirstClassParams& p, int i);

/// Group law: apply g1 first, then g2. Equals
/// (A1 A2, A1 B2 + A2 B1 + B1 B2); in (A, A+B) coordinates this is the
/// componentwise product.
GroupElement compose_group(const GroupElement& g1, const GroupElement& g2);

/// Inverse element (1/A, -B/(A(A+B))).
GroupElement invert_group(const GroupElement& g);

/// Closed-form transcription of the n = 4..7 systems, written out term by
/// term as an independent cross-check of apply_rho. Throws
/// std::invalid_argument outside n = 4..7.
FirstClassParams lowdim_closed_form(const GroupElement& g, const FirstClassParams& p);

}  // namespace filiform
