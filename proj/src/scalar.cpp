#include "filiform/scalar.hpp"

#include <cctype>

namespace filiform {

Scalar Scalar::inv() const {
  const Rational d = norm();
  if (d == 0) throw std::domain_error("division by zero scalar");
  return {static_cast<Rational>(re / d), static_cast<Rational>(-im / d)};
}

Scalar pow_int(const Scalar& base, long long e) {
  Scalar b = base;
  if (e < 0) {
    b = b.inv();
    e = -e;
  }
  Scalar acc{1};
  while (e > 0) {
    if (e & 1) acc *= b;
    b *= b;
    e >>= 1;
  }
  return acc;
}

std::string format_rational(const Rational& r) {
  const BigInt num = numerator(r);
  const BigInt den = denominator(r);
  if (den == 1) return num.str();
  return num.str() + "/" + den.str();
}

std::string format_scalar(const Scalar& s) {
  if (s.im == 0) return format_rational(s.re);
  if (s.re == 0) return format_rational(s.im) + "i";
  std::string out = format_rational(s.re);
  if (s.im > 0) out += "+";
  out += format_rational(s.im) + "i";
  return out;
}

namespace {

struct Scanner {
  std::string_view text;
  std::size_t pos = 0;

  bool done() const { return pos >= text.size(); }
  char peek() const { return text[pos]; }

  [[noreturn]] void fail(const std::string& what, std::size_t at) const {
    throw parse_error("bad scalar '" + std::string(text) + "': " + what +
                      " at position " + std::to_string(at));
  }

  std::string digits(const char* what) {
    const std::size_t start = pos;
    while (!done() && std::isdigit(static_cast<unsigned char>(peek()))) ++pos;
    if (pos == start) fail(what, pos);
    return std::string(text.substr(start, pos - start));
  }

  Rational rat() {
    const std::size_t start = pos;
    bool negative = false;
    if (!done() && (peek() == '+' || peek() == '-')) {
      negative = peek() == '-';
      ++pos;
    }
    BigInt num(digits("expected digits"));
    if (negative) num = -num;
    BigInt den = 1;
    if (!done() && peek() == '/') {
      ++pos;
      den = BigInt(digits("expected digits after '/'"));
      if (den == 0)
        fail("zero denominator in token '" +
                 std::string(text.substr(start, pos - start)) + "'",
             start);
    }
    return Rational(num, den);
  }
};

}  // namespace

Scalar parse_scalar(std::string_view text) {
  // surrounding whitespace is tolerated, interior whitespace is not
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.front())))
    text.remove_prefix(1);
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.back())))
    text.remove_suffix(1);
  if (text.empty()) throw parse_error("bad scalar: empty input");

  Scanner sc{text};
  const Rational first = sc.rat();
  if (sc.done()) return Scalar{first};
  if (sc.peek() == 'i') {
    ++sc.pos;
    if (!sc.done()) sc.fail("trailing characters after 'i'", sc.pos);
    return Scalar{Rational(0), first};
  }
  if (sc.peek() != '+' && sc.peek() != '-')
    sc.fail(std::string("unexpected character '") + sc.peek() + "'", sc.pos);
  const Rational second = sc.rat();  // sign is consumed as part of the token
  if (sc.done() || sc.peek() != 'i') sc.fail("expected 'i'", sc.pos);
  ++sc.pos;
  if (!sc.done()) sc.fail("trailing characters after 'i'", sc.pos);
  return Scalar{first, second};
}

BigInt binomial(int m, int k) {
  if (k < 0 || k > m) return 0;
  if (k > m - k) k = m - k;
  BigInt acc = 1;
  for (int i = 1; i <= k; ++i) {
    acc *= m - k + i;
    acc /= i;  // exact: product of i consecutive integers is divisible by i!
  }
  return acc;
}

std::uint64_t RngState::below(std::uint64_t bound) {
  if (bound == 0) throw std::invalid_argument("RngState::below: zero bound");
  const std::uint64_t limit = UINT64_MAX - UINT64_MAX % bound;
  std::uint64_t r;
  do {
    r = next();
  } while (r >= limit);
  return r % bound;
}

namespace {

Rational random_rational(RngState& rng, const ScalarDist& cfg) {
  const auto span = static_cast<std::uint64_t>(2 * cfg.max_abs_numerator + 1);
  const std::int64_t num =
      static_cast<std::int64_t>(rng.below(span)) - cfg.max_abs_numerator;
  const std::int64_t den =
      1 + static_cast<std::int64_t>(rng.below(static_cast<std::uint64_t>(cfg.max_denominator)));
  return Rational(BigInt(num), BigInt(den));
}

}  // namespace

Scalar random_scalar(RngState& rng, const ScalarDist& cfg) {
  if (cfg.max_abs_numerator < 1 || cfg.max_denominator < 1)
    throw std::invalid_argument("random_scalar: bounds must be >= 1");
  for (;;) {
    Scalar s{random_rational(rng, cfg),
             cfg.gaussian ? random_rational(rng, cfg) : Rational(0)};
    if (!cfg.nonzero || !s.is_zero()) return s;
  }
}

}  // namespace filiform
