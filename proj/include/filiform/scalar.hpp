#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <random>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>

namespace filiform {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

struct parse_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Element of Q(i), the Gaussian rationals. Both parts are kept reduced
/// (positive denominator, coprime numerator/denominator); equality is
/// structural equality of the reduced forms.
struct Scalar {
  Rational re;
  Rational im;

  Scalar() = default;
  Scalar(int v) : re(v) {}            // NOLINT: implicit by design
  Scalar(long long v) : re(v) {}      // NOLINT
  Scalar(Rational r) : re(std::move(r)) {}  // NOLINT
  Scalar(Rational r, Rational i) : re(std::move(r)), im(std::move(i)) {}

  bool is_zero() const { return re == 0 && im == 0; }
  bool is_real() const { return im == 0; }

  friend bool operator==(const Scalar& a, const Scalar& b) {
    return a.re == b.re && a.im == b.im;
  }
  friend bool operator!=(const Scalar& a, const Scalar& b) { return !(a == b); }

  Scalar operator-() const { return {-re, -im}; }
  Scalar conj() const { return {re, -im}; }
  Rational norm() const { return static_cast<Rational>(re * re + im * im); }

  Scalar& operator+=(const Scalar& o) {
    re += o.re;
    im += o.im;
    return *this;
  }
  Scalar& operator-=(const Scalar& o) {
    re -= o.re;
    im -= o.im;
    return *this;
  }
  Scalar& operator*=(const Scalar& o) {
    *this = *this * o;
    return *this;
  }

  friend Scalar operator+(const Scalar& a, const Scalar& b) {
    return {static_cast<Rational>(a.re + b.re), static_cast<Rational>(a.im + b.im)};
  }
  friend Scalar operator-(const Scalar& a, const Scalar& b) {
    return {static_cast<Rational>(a.re - b.re), static_cast<Rational>(a.im - b.im)};
  }
  friend Scalar operator*(const Scalar& a, const Scalar& b) {
    return {static_cast<Rational>(a.re * b.re - a.im * b.im),
            static_cast<Rational>(a.re * b.im + a.im * b.re)};
  }

  /// Multiplicative inverse; throws std::domain_error on zero.
  Scalar inv() const;

  friend Scalar operator/(const Scalar& a, const Scalar& b) { return a * b.inv(); }
};

/// base^e with exact arithmetic; negative exponents invert first.
Scalar pow_int(const Scalar& base, long long e);

/// Parses the grammar  RAT | RAT ("+"|"-") RAT "i" | RAT "i",
/// RAT = [sign] digits ["/" digits]. Throws parse_error naming the
/// offending token; the result round-trips through format_scalar.
Scalar parse_scalar(std::string_view text);

std::string format_rational(const Rational& r);
std::string format_scalar(const Scalar& s);

/// binom(m, k) over big integers; 0 when k < 0 or k > m.
BigInt binomial(int m, int k);

/// Deterministic generator. The state is an explicit value owned by the
/// caller; nothing here touches ambient global state.
class RngState {
public:
  explicit RngState(std::uint64_t seed) : engine_(seed) {}

  std::uint64_t next() { return engine_(); }

  /// Uniform draw from [0, bound); bound must be positive.
  std::uint64_t below(std::uint64_t bound);

private:
  std::mt19937_64 engine_;
};

struct ScalarDist {
  std::int64_t max_abs_numerator = 6;
  std::int64_t max_denominator = 4;
  bool gaussian = false;
  bool nonzero = false;
};

/// Uniform numerator in [-max_abs_numerator, max_abs_numerator] over a
/// uniform denominator in [1, max_denominator], reduced; the imaginary
/// part is sampled the same way when gaussian is set. Bounds must be >= 1.
Scalar random_scalar(RngState& rng, const ScalarDist& cfg);

}  // namespace filiform
