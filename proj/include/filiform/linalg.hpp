#pragma once

#include <optional>
#include <vector>

#include "filiform/scalar.hpp"

// Small exact dense linear algebra over Q(i). Everything here is plain
// Gaussian elimination; matrices stay tiny (dimension <= n+1).

namespace filiform::linalg {

using Vec = std::vector<Scalar>;
using Mat = std::vector<Vec>;

/// Reduces the rows in place to reduced row echelon form and drops zero
/// rows; the result is a canonical basis of the row space.
void row_reduce(Mat& rows);

int rank(Mat rows);

/// Solves a * x = rhs exactly. Free unknowns are set to zero; returns
/// nullopt when the system is inconsistent. `a` is row-major with
/// rows.size() equations.
std::optional<Vec> solve(Mat a, Vec rhs);

/// Inverse of a square matrix, or nullopt when singular.
std::optional<Mat> inverse(Mat a);

Vec mat_vec(const Mat& a, const Vec& x);

}  // namespace filiform::linalg
