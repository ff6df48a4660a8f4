#pragma once

#include "lefschetz/integer.hpp"

#include <cstdint>
#include <initializer_list>
#include <string>
#include <utility>
#include <vector>

namespace lefschetz {

/// Dense univariate polynomial in t with arbitrary-precision integer
/// coefficients. Index i of the coefficient vector is the coefficient of t^i.
/// Trailing zeros are always stripped, so the zero polynomial has no
/// coefficients and degree -1.
class IntPoly {
 public:
  IntPoly() = default;
  explicit IntPoly(std::vector<Integer> coeffs);
  IntPoly(std::initializer_list<long> coeffs);

  static IntPoly constant(Integer c);
  /// c * t^k
  static IntPoly monomial(std::uint64_t k, Integer c = 1);

  long degree() const { return static_cast<long>(coeffs_.size()) - 1; }
  bool is_zero() const { return coeffs_.empty(); }

  /// Coefficient of t^i; zero past the degree.
  Integer coeff(std::size_t i) const;
  const Integer& leading() const { return coeffs_.back(); }
  const std::vector<Integer>& coeffs() const { return coeffs_; }

  Integer evaluate(const Integer& t) const;

  IntPoly& operator+=(const IntPoly& rhs);
  IntPoly& operator-=(const IntPoly& rhs);
  IntPoly& operator*=(const IntPoly& rhs);

  friend IntPoly operator+(IntPoly lhs, const IntPoly& rhs) { return lhs += rhs; }
  friend IntPoly operator-(IntPoly lhs, const IntPoly& rhs) { return lhs -= rhs; }
  friend IntPoly operator*(IntPoly lhs, const IntPoly& rhs) { return lhs *= rhs; }
  IntPoly operator-() const;

  friend bool operator==(const IntPoly& a, const IntPoly& b) { return a.coeffs_ == b.coeffs_; }

  /// Human-readable form in increasing powers, e.g. "1 - t + t^2".
  std::string to_string() const;

 private:
  void trim();

  std::vector<Integer> coeffs_;
};

IntPoly pow(const IntPoly& base, std::uint64_t exponent);

/// Quotient and remainder of num / den. The leading coefficient of den must
/// be +1 or -1 so that the division stays in Z[t].
std::pair<IntPoly, IntPoly> divmod(const IntPoly& num, const IntPoly& den);

/// Normalized cyclotomic polynomial C_d: Phi_d scaled to constant term +1,
/// so C_1 = 1 - t and C_d = Phi_d for d >= 2. Degree is euler_phi(d).
IntPoly cyclotomic(std::uint64_t d);

}  // namespace lefschetz
