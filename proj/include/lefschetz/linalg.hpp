#pragma once

// Exact dense matrix helpers, templated on the scalar.

#include "lefschetz/integer.hpp"

#include <Eigen/Core>

#include <cstdint>
#include <stdexcept>
#include <vector>

namespace lefschetz {

/// a^k by binary exponentiation; a must be square.
template <typename Derived>
Matrix<typename Derived::Scalar> matrix_power(const Eigen::MatrixBase<Derived>& a, std::uint64_t k) {
  using Scalar = typename Derived::Scalar;
  if (a.rows() != a.cols()) throw std::invalid_argument("matrix_power: matrix must be square");
  Matrix<Scalar> result = Matrix<Scalar>::Identity(a.rows(), a.cols());
  Matrix<Scalar> square = a;
  while (k > 0) {
    if (k & 1U) result = (result * square).eval();
    k >>= 1U;
    if (k > 0) square = (square * square).eval();
  }
  return result;
}

/// Coefficients q_0..q_n of det(I - t a) = sum q_k t^k, via Faddeev-LeVerrier.
/// For integer input every division below is exact.
template <typename Derived>
std::vector<typename Derived::Scalar> reversed_charpoly(const Eigen::MatrixBase<Derived>& a) {
  using Scalar = typename Derived::Scalar;
  const Eigen::Index n = a.rows();
  if (n != a.cols()) throw std::invalid_argument("reversed_charpoly: matrix must be square");
  std::vector<Scalar> q(static_cast<std::size_t>(n) + 1, Scalar(0));
  q[0] = 1;
  Matrix<Scalar> m = Matrix<Scalar>::Zero(n, n);
  const Matrix<Scalar> id = Matrix<Scalar>::Identity(n, n);
  for (Eigen::Index k = 1; k <= n; ++k) {
    m = (a * m).eval() + q[static_cast<std::size_t>(k - 1)] * id;
    const Scalar tr = (a * m).trace();
    q[static_cast<std::size_t>(k)] = -tr / Scalar(static_cast<long>(k));
  }
  return q;
}

}  // namespace lefschetz
