#pragma once

#include "lefschetz/poly.hpp"
#include "lefschetz/series.hpp"

#include <cstdint>
#include <map>
#include <string>
#include <utility>
#include <vector>

namespace lefschetz {

/// Sign of a factor 1 + s t^p. Minus is 1 - t^p, Plus is 1 + t^p.
enum class Sign { Plus, Minus };

inline char sign_char(Sign s) { return s == Sign::Plus ? '+' : '-'; }

/// A rational function written exactly as prod_d C_d(t)^(e_d) in the
/// normalized cyclotomic basis. Zero exponents are never stored; the empty
/// vector is the constant 1.
class CycloVector {
 public:
  using Index = std::uint64_t;
  using Exponent = std::int64_t;

  CycloVector() = default;
  CycloVector(std::initializer_list<std::pair<const Index, Exponent>> terms);

  Exponent exponent(Index d) const;
  void add(Index d, Exponent e);

  const std::map<Index, Exponent>& exponents() const { return exps_; }
  bool is_one() const { return exps_.empty(); }
  /// Largest cyclotomic index in the support, 0 for the constant 1.
  Index max_index() const { return exps_.empty() ? 0 : exps_.rbegin()->first; }

  /// sum_d e_d * phi(d): numerator degree minus denominator degree.
  std::int64_t total_degree() const;

  CycloVector& operator*=(const CycloVector& rhs);
  CycloVector& operator/=(const CycloVector& rhs);
  friend CycloVector operator*(CycloVector a, const CycloVector& b) { return a *= b; }
  friend CycloVector operator/(CycloVector a, const CycloVector& b) { return a /= b; }
  CycloVector inverse() const;
  CycloVector pow(Exponent k) const;

  friend bool operator==(const CycloVector& a, const CycloVector& b) { return a.exps_ == b.exps_; }

  /// Product of C_d^(e_d) over positive exponents.
  IntPoly numerator() const;
  /// Product of C_d^(-e_d) over negative exponents.
  IntPoly denominator() const;

  /// Canonical text, e.g. "C_1^-2 * C_3^1"; "1" for the empty vector.
  std::string to_string() const;

 private:
  std::map<Index, Exponent> exps_;
};

/// Exponent vector of 1 - t^p (Minus) or 1 + t^p (Plus).
CycloVector factor_pm(Sign sign, std::uint64_t p);

/// Taylor coefficients of the rational function up to t^order.
SeriesPrefix expand(const CycloVector& v, std::size_t order);

/// Factors prod_i f_i^(k_i) into the cyclotomic basis by trial division.
/// Every f_i must have constant term +1. Throws NotQuasiUnipotent when some
/// f_i is not a product of normalized cyclotomics.
CycloVector poly_product_to_cyclovector(const std::vector<std::pair<IntPoly, std::int64_t>>& factors);

}  // namespace lefschetz
