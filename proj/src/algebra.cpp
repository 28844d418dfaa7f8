#include "filiform/algebra.hpp"

#include <string>

#include "filiform/linalg.hpp"

namespace filiform {

namespace {

void check_params(int n, std::size_t got, const char* what) {
  if (n < 4) throw std::invalid_argument(std::string(what) + ": n must be >= 4");
  if (got != static_cast<std::size_t>(n - 2))
    throw std::invalid_argument(std::string(what) + ": expected " +
                                std::to_string(n - 2) + " coefficients, got " +
                                std::to_string(got));
}

}  // namespace

FirstClassParams::FirstClassParams(int n_, std::vector<Scalar> alpha_, Scalar theta_)
    : n(n_), alpha(std::move(alpha_)), theta(std::move(theta_)) {
  check_params(n, alpha.size(), "FirstClassParams");
}

SecondClassParams::SecondClassParams(int n_, std::vector<Scalar> beta_, Scalar gamma_)
    : n(n_), beta(std::move(beta_)), gamma(std::move(gamma_)) {
  check_params(n, beta.size(), "SecondClassParams");
}

StructureTensor::StructureTensor(int dim) : dim_(dim) {
  if (dim < 1) throw std::invalid_argument("StructureTensor: dim must be >= 1");
  c_.assign(static_cast<std::size_t>(dim) * dim * dim, Scalar(0));
}

std::size_t StructureTensor::index(int i, int j, int k) const {
  if (i < 0 || j < 0 || k < 0 || i >= dim_ || j >= dim_ || k >= dim_)
    throw std::out_of_range("StructureTensor: index out of range");
  return (static_cast<std::size_t>(i) * dim_ + j) * dim_ + k;
}

std::vector<Scalar> StructureTensor::bracket(std::span<const Scalar> x,
                                             std::span<const Scalar> y) const {
  if (static_cast<int>(x.size()) != dim_ || static_cast<int>(y.size()) != dim_)
    throw std::invalid_argument("bracket: vector size mismatch");
  std::vector<Scalar> out(static_cast<std::size_t>(dim_), Scalar(0));
  for (int i = 0; i < dim_; ++i) {
    if (x[static_cast<std::size_t>(i)].is_zero()) continue;
    for (int j = 0; j < dim_; ++j) {
      if (y[static_cast<std::size_t>(j)].is_zero()) continue;
      const Scalar coeff = x[static_cast<std::size_t>(i)] * y[static_cast<std::size_t>(j)];
      for (int k = 0; k < dim_; ++k) {
        const Scalar& g = at(i, j, k);
        if (!g.is_zero()) out[static_cast<std::size_t>(k)] += coeff * g;
      }
    }
  }
  return out;
}

StructureTensor build_tensor_first(const FirstClassParams& p) {
  const int n = p.n;
  StructureTensor t(n + 1);
  t.at(0, 0, 2) = Scalar(1);
  for (int i = 1; i <= n - 1; ++i) t.at(i, 0, i + 1) = Scalar(1);
  // [e0,e1]: alpha_3..alpha_{n-1} then theta on e_n
  for (int s = 3; s <= n - 1; ++s) t.at(0, 1, s) = p.a(s);
  t.at(0, 1, n) = p.theta;
  // [ej,e1] = alpha_3 e_{j+2} + ... + alpha_{n+1-j} e_n
  for (int j = 1; j <= n - 2; ++j)
    for (int s = 3; s <= n + 1 - j; ++s) t.at(j, 1, j + s - 1) = p.a(s);
  return t;
}

StructureTensor build_tensor_second(const SecondClassParams& p) {
  const int n = p.n;
  StructureTensor t(n + 1);
  t.at(0, 0, 2) = Scalar(1);
  for (int i = 2; i <= n - 1; ++i) t.at(i, 0, i + 1) = Scalar(1);
  for (int s = 3; s <= n; ++s) t.at(0, 1, s) = p.b(s);
  t.at(1, 1, n) = p.gamma;
  for (int j = 2; j <= n - 2; ++j)
    for (int s = 3; s <= n + 1 - j; ++s) t.at(j, 1, j + s - 1) = p.b(s);
  return t;
}

std::vector<LeibnizViolation> leibniz_defect(const StructureTensor& t) {
  const int d = t.dim();
  std::vector<LeibnizViolation> out;
  for (int i = 0; i < d; ++i)
    for (int j = 0; j < d; ++j)
      for (int k = 0; k < d; ++k)
        for (int m = 0; m < d; ++m) {
          Scalar acc;
          for (int l = 0; l < d; ++l) {
            if (!t.at(j, k, l).is_zero()) acc += t.at(j, k, l) * t.at(i, l, m);
            if (!t.at(i, j, l).is_zero()) acc -= t.at(i, j, l) * t.at(l, k, m);
            if (!t.at(i, k, l).is_zero()) acc += t.at(i, k, l) * t.at(l, j, m);
          }
          if (!acc.is_zero()) out.push_back({i, j, k, m, acc});
        }
  return out;
}

std::vector<int> lower_central_dims(const StructureTensor& t) {
  const int d = t.dim();
  linalg::Mat basis(static_cast<std::size_t>(d), linalg::Vec(static_cast<std::size_t>(d), Scalar(0)));
  for (int i = 0; i < d; ++i) basis[static_cast<std::size_t>(i)][static_cast<std::size_t>(i)] = Scalar(1);

  std::vector<int> dims{d};
  linalg::Mat unit = basis;
  while (true) {
    linalg::Mat products;
    for (const auto& v : basis)
      for (int j = 0; j < d; ++j)
        products.push_back(t.bracket(v, unit[static_cast<std::size_t>(j)]));
    linalg::row_reduce(products);
    const int r = static_cast<int>(products.size());
    dims.push_back(r);
    if (r == 0 || r == dims[dims.size() - 2]) break;
    basis = std::move(products);
  }
  return dims;
}

bool is_filiform(const StructureTensor& t) {
  const int d = t.dim();
  std::vector<int> expected{d};
  for (int i = 2; i <= d; ++i) expected.push_back(d - i);
  return lower_central_dims(t) == expected;
}

namespace {

[[noreturn]] void shape_fail(int i, int j, int k, const Scalar& expected, const Scalar& got) {
  throw shape_error("not a first-class tensor: entry (" + std::to_string(i) + "," +
                    std::to_string(j) + "," + std::to_string(k) + ") expected " +
                    format_scalar(expected) + ", got " + format_scalar(got));
}

}  // namespace

FirstClassParams params_from_tensor(const StructureTensor& t) {
  const int n = t.dim() - 1;
  if (n < 4) throw shape_error("not a first-class tensor: dimension must be >= 5");

  std::vector<Scalar> alpha(static_cast<std::size_t>(n - 2));
  for (int s = 3; s <= n - 1; ++s) alpha[static_cast<std::size_t>(s - 3)] = t.at(0, 1, s);
  alpha[static_cast<std::size_t>(n - 3)] = t.at(1, 1, n);  // alpha_n only shows up in [e1,e1]
  const Scalar theta = t.at(0, 1, n);
  FirstClassParams p(n, std::move(alpha), theta);

  StructureTensor expected = build_tensor_first(p);
  for (int i = 0; i <= n; ++i)
    for (int j = 0; j <= n; ++j)
      for (int k = 0; k <= n; ++k)
        if (t.at(i, j, k) != expected.at(i, j, k))
          shape_fail(i, j, k, expected.at(i, j, k), t.at(i, j, k));
  return p;
}

}  // namespace filiform
