#pragma once

#include <Eigen/Dense>
#include <algorithm>
#include <cmath>

#include "equisumm/errors.hpp"

namespace equisumm {

// Cosine similarity between two dense vectors (or vector expressions).
// Result is clamped to [-1, 1] so downstream acos / threshold logic never
// sees a value pushed outside the range by rounding.
template <typename DerivedA, typename DerivedB>
typename DerivedA::Scalar cosine(const Eigen::MatrixBase<DerivedA>& a,
                                 const Eigen::MatrixBase<DerivedB>& b) {
  using Scalar = typename DerivedA::Scalar;
  if (a.size() != b.size()) {
    throw DimensionMismatchError("cosine: vectors have sizes " + std::to_string(a.size()) +
                                 " and " + std::to_string(b.size()));
  }
  const Scalar na = a.norm();
  const Scalar nb = b.norm();
  if (na == Scalar(0) || nb == Scalar(0)) {
    throw ZeroVectorError("cosine: zero-norm vector");
  }
  const Scalar c = a.dot(b) / (na * nb);
  return std::clamp(c, Scalar(-1), Scalar(1));
}

// L2-normalizes each row in place.  Zero rows are rejected: every embedding
// this engine produces or accepts must point somewhere.
template <typename Derived>
void normalize_rows(Eigen::MatrixBase<Derived>& m) {
  using Scalar = typename Derived::Scalar;
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    const Scalar n = m.row(i).norm();
    if (n == Scalar(0)) {
      throw ZeroVectorError("normalize_rows: row " + std::to_string(i) + " has zero norm");
    }
    m.row(i) /= n;
  }
}

template <typename Scalar>
bool rows_unit_norm(const Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>& m,
                    Scalar tol = Scalar(1e-9)) {
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    if (std::abs(m.row(i).norm() - Scalar(1)) > tol) return false;
  }
  return true;
}

}  // namespace equisumm
