#include "filiform/linalg.hpp"

#include <cassert>
#include <utility>

namespace filiform::linalg {

void row_reduce(Mat& rows) {
  const std::size_t ncols = rows.empty() ? 0 : rows[0].size();
  std::size_t lead = 0;
  for (std::size_t col = 0; col < ncols && lead < rows.size(); ++col) {
    std::size_t pivot = lead;
    while (pivot < rows.size() && rows[pivot][col].is_zero()) ++pivot;
    if (pivot == rows.size()) continue;
    std::swap(rows[lead], rows[pivot]);
    const Scalar inv = rows[lead][col].inv();
    for (auto& v : rows[lead]) v = v * inv;
    for (std::size_t r = 0; r < rows.size(); ++r) {
      if (r == lead || rows[r][col].is_zero()) continue;
      const Scalar factor = rows[r][col];
      for (std::size_t c = col; c < ncols; ++c)
        rows[r][c] -= factor * rows[lead][c];
    }
    ++lead;
  }
  rows.resize(lead);
}

int rank(Mat rows) {
  row_reduce(rows);
  return static_cast<int>(rows.size());
}

std::optional<Vec> solve(Mat a, Vec rhs) {
  const std::size_t nrows = a.size();
  assert(rhs.size() == nrows);
  const std::size_t ncols = nrows == 0 ? 0 : a[0].size();
  for (std::size_t r = 0; r < nrows; ++r) a[r].push_back(rhs[r]);

  std::size_t lead = 0;
  std::vector<std::size_t> pivot_col;
  for (std::size_t col = 0; col < ncols && lead < nrows; ++col) {
    std::size_t pivot = lead;
    while (pivot < nrows && a[pivot][col].is_zero()) ++pivot;
    if (pivot == nrows) continue;
    std::swap(a[lead], a[pivot]);
    const Scalar inv = a[lead][col].inv();
    for (auto& v : a[lead]) v = v * inv;
    for (std::size_t r = 0; r < nrows; ++r) {
      if (r == lead || a[r][col].is_zero()) continue;
      const Scalar factor = a[r][col];
      for (std::size_t c = col; c <= ncols; ++c) a[r][c] -= factor * a[lead][c];
    }
    pivot_col.push_back(col);
    ++lead;
  }
  // consistency: any remaining row must be all-zero including the rhs
  for (std::size_t r = lead; r < nrows; ++r)
    if (!a[r][ncols].is_zero()) return std::nullopt;

  Vec x(ncols, Scalar(0));
  for (std::size_t r = 0; r < pivot_col.size(); ++r) x[pivot_col[r]] = a[r][ncols];
  return x;
}

std::optional<Mat> inverse(Mat a) {
  const std::size_t n = a.size();
  for (std::size_t r = 0; r < n; ++r) {
    assert(a[r].size() == n);
    a[r].resize(2 * n, Scalar(0));
    a[r][n + r] = Scalar(1);
  }
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t pivot = col;
    while (pivot < n && a[pivot][col].is_zero()) ++pivot;
    if (pivot == n) return std::nullopt;
    std::swap(a[col], a[pivot]);
    const Scalar inv = a[col][col].inv();
    for (auto& v : a[col]) v = v * inv;
    for (std::size_t r = 0; r < n; ++r) {
      if (r == col || a[r][col].is_zero()) continue;
      const Scalar factor = a[r][col];
      for (std::size_t c = col; c < 2 * n; ++c) a[r][c] -= factor * a[col][c];
    }
  }
  Mat out(n, Vec(n));
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t c = 0; c < n; ++c) out[r][c] = a[r][n + c];
  return out;
}

Vec mat_vec(const Mat& a, const Vec& x) {
  Vec out(a.size(), Scalar(0));
  for (std::size_t r = 0; r < a.size(); ++r) {
    assert(a[r].size() == x.size());
    for (std::size_t c = 0; c < x.size(); ++c)
      if (!a[r][c].is_zero() && !x[c].is_zero()) out[r] += a[r][c] * x[c];
  }
  return out;
}

}  // namespace filiform::linalg
