#pragma once

// Smith normal form over the integers and exact solution of A x = b in Z^n.
//
// Everything here is templated on the scalar so the same code runs on
// machine integers (tests, small inputs) and on mpz_class.

#include "lefschetz/integer.hpp"

#include <Eigen/Core>

#include <cmath>
#include <cstdlib>
#include <tuple>
#include <utility>
#include <variant>

namespace lefschetz {

namespace detail {

template <typename Scalar>
Scalar scalar_abs(const Scalar& x) {
  using std::abs;
  return abs(x);
}

/// Returns (g, s, r) with g = s*a + r*b, g = gcd(a, b) >= 0.
template <typename Scalar>
std::tuple<Scalar, Scalar, Scalar> extended_gcd(Scalar a, Scalar b) {
  Scalar s0 = 1, s1 = 0, r0 = 0, r1 = 1;
  while (b != 0) {
    Scalar q = a / b;
    Scalar t = a - q * b;
    a = b;
    b = t;
    t = s0 - q * s1;
    s0 = s1;
    s1 = t;
    t = r0 - q * r1;
    r0 = r1;
    r1 = t;
  }
  if (a < 0) return {Scalar(-a), Scalar(-s0), Scalar(-r0)};
  return {a, s0, r0};
}

// Replace rows (i, j) of m by [s r; -b/g a/g] * [row_i; row_j].
template <typename Scalar>
void combine_rows(Matrix<Scalar>& m, Eigen::Index i, Eigen::Index j, const Scalar& s, const Scalar& r,
                  const Scalar& u, const Scalar& v) {
  for (Eigen::Index c = 0; c < m.cols(); ++c) {
    Scalar x = m(i, c), y = m(j, c);
    m(i, c) = s * x + r * y;
    m(j, c) = u * x + v * y;
  }
}

template <typename Scalar>
void combine_cols(Matrix<Scalar>& m, Eigen::Index i, Eigen::Index j, const Scalar& s, const Scalar& r,
                  const Scalar& u, const Scalar& v) {
  for (Eigen::Index row = 0; row < m.rows(); ++row) {
    Scalar x = m(row, i), y = m(row, j);
    m(row, i) = s * x + r * y;
    m(row, j) = u * x + v * y;
  }
}

}  // namespace detail

/// left * input * right == diagonal, with left and right unimodular and the
/// nonzero diagonal entries positive, each dividing the next.
template <typename Scalar>
struct SmithForm {
  Matrix<Scalar> left;
  Matrix<Scalar> diagonal;
  Matrix<Scalar> right;
  Eigen::Index rank = 0;
};

template <typename Scalar>
SmithForm<Scalar> smith_normal_form(const Matrix<Scalar>& input) {
  const Eigen::Index m = input.rows();
  const Eigen::Index n = input.cols();
  SmithForm<Scalar> f;
  f.diagonal = input;
  f.left = Matrix<Scalar>::Identity(m, m);
  f.right = Matrix<Scalar>::Identity(n, n);
  Matrix<Scalar>& d = f.diagonal;

  const Eigen::Index steps = std::min(m, n);
  for (Eigen::Index t = 0; t < steps; ++t) {
    // Pivot: smallest nonzero magnitude in the trailing block.
    Eigen::Index pi = -1, pj = -1;
    Scalar best = 0;
    for (Eigen::Index j = t; j < n; ++j)
      for (Eigen::Index i = t; i < m; ++i) {
        if (d(i, j) == 0) continue;
        Scalar a = detail::scalar_abs(d(i, j));
        if (pi < 0 || a < best) {
          best = a;
          pi = i;
          pj = j;
        }
      }
    if (pi < 0) break;
    if (pi != t) {
      d.row(pi).swap(d.row(t));
      f.left.row(pi).swap(f.left.row(t));
    }
    if (pj != t) {
      d.col(pj).swap(d.col(t));
      f.right.col(pj).swap(f.right.col(t));
    }

    for (;;) {
      bool dirty = false;
      for (Eigen::Index i = t + 1; i < m; ++i) {
        if (d(i, t) == 0) continue;
        const Scalar a = d(t, t), b = d(i, t);
        if (b % a == 0) {
          const Scalar q = b / a;
          d.row(i) -= q * d.row(t);
          f.left.row(i) -= q * f.left.row(t);
          continue;
        }
        auto [g, s, r] = detail::extended_gcd(a, b);
        const Scalar u = -b / g, v = a / g;
        detail::combine_rows(d, t, i, s, r, u, v);
        detail::combine_rows(f.left, t, i, s, r, u, v);
      }
      for (Eigen::Index j = t + 1; j < n; ++j) {
        if (d(t, j) == 0) continue;
        const Scalar a = d(t, t), b = d(t, j);
        if (b % a == 0) {
          const Scalar q = b / a;
          d.col(j) -= q * d.col(t);
          f.right.col(j) -= q * f.right.col(t);
          continue;
        }
        auto [g, s, r] = detail::extended_gcd(a, b);
        const Scalar u = -b / g, v = a / g;
        detail::combine_cols(d, t, j, s, r, u, v);
        detail::combine_cols(f.right, t, j, s, r, u, v);
        dirty = true;  // column mixing can refill column t
      }
      if (dirty) continue;
      for (Eigen::Index i = t + 1; i < m && !dirty; ++i)
        if (d(i, t) != 0) dirty = true;
      if (dirty) continue;

      // Divisibility: fold any row whose entries the pivot does not divide.
      Eigen::Index bad = -1;
      for (Eigen::Index i = t + 1; i < m && bad < 0; ++i)
        for (Eigen::Index j = t + 1; j < n; ++j)
          if (d(i, j) % d(t, t) != 0) {
            bad = i;
            break;
          }
      if (bad < 0) break;
      d.row(t) += d.row(bad);
      f.left.row(t) += f.left.row(bad);
    }
    if (d(t, t) < 0) {
      d.row(t) *= Scalar(-1);
      f.left.row(t) *= Scalar(-1);
    }
    f.rank = t + 1;
  }
  return f;
}

/// Every integer solution is particular + kernel * z for z in Z^k.
template <typename Scalar>
struct LatticeSolution {
  Vector<Scalar> particular;
  Matrix<Scalar> kernel;
};

/// Witness that A x = b has no integer solution: functional * A is
/// congruent to 0 modulo `modulus` (exactly 0 when modulus == 0) while
/// functional * b is not.
template <typename Scalar>
struct LatticeObstruction {
  Vector<Scalar> functional;
  Scalar modulus = 0;
};

template <typename Scalar>
using LatticeOutcome = std::variant<LatticeSolution<Scalar>, LatticeObstruction<Scalar>>;

template <typename Scalar>
LatticeOutcome<Scalar> solve_integer_system(const Matrix<Scalar>& a, const Vector<Scalar>& b) {
  const SmithForm<Scalar> f = smith_normal_form(a);
  const Vector<Scalar> c = f.left * b;
  Vector<Scalar> y = Vector<Scalar>::Zero(a.cols());
  for (Eigen::Index i = 0; i < c.size(); ++i) {
    if (i < f.rank) {
      const Scalar& piv = f.diagonal(i, i);
      if (c(i) % piv != 0) return LatticeObstruction<Scalar>{f.left.row(i).transpose(), piv};
      y(i) = c(i) / piv;
    } else if (c(i) != 0) {
      return LatticeObstruction<Scalar>{f.left.row(i).transpose(), Scalar(0)};
    }
  }
  LatticeSolution<Scalar> sol;
  sol.particular = f.right * y;
  sol.kernel = f.right.rightCols(a.cols() - f.rank);
  return sol;
}

/// Checks an obstruction against (a, b) without trusting how it was made.
template <typename Scalar>
bool obstruction_holds(const Matrix<Scalar>& a, const Vector<Scalar>& b, const LatticeObstruction<Scalar>& ob) {
  const Vector<Scalar> wa = a.transpose() * ob.functional;
  const Scalar wb = ob.functional.dot(b);
  auto vanishes = [&](const Scalar& x) { return ob.modulus == 0 ? x == 0 : x % ob.modulus == 0; };
  for (Eigen::Index j = 0; j < wa.size(); ++j)
    if (!vanishes(wa(j))) return false;
  return !vanishes(wb);
}

}  // namespace lefschetz
