#pragma once

#include "lefschetz/integer.hpp"
#include "lefschetz/poly.hpp"

#include <cstddef>
#include <utility>
#include <vector>

namespace lefschetz {

/// The first order()+1 Taylor coefficients of a formal power series at t = 0.
struct SeriesPrefix {
  std::vector<Rational> coeffs;

  SeriesPrefix() = default;
  explicit SeriesPrefix(std::vector<Rational> c) : coeffs(std::move(c)) {}

  std::size_t order() const { return coeffs.empty() ? 0 : coeffs.size() - 1; }
  const Rational& operator[](std::size_t i) const { return coeffs[i]; }
  Rational& operator[](std::size_t i) { return coeffs[i]; }

  friend bool operator==(const SeriesPrefix& a, const SeriesPrefix& b) { return a.coeffs == b.coeffs; }
};

SeriesPrefix truncate(const IntPoly& p, std::size_t order);

SeriesPrefix operator*(const SeriesPrefix& a, const SeriesPrefix& b);

/// Reciprocal series; the constant coefficient must be nonzero.
SeriesPrefix inverse(const SeriesPrefix& a);

/// Formal logarithm; the constant coefficient must be 1. Result has constant 0.
SeriesPrefix log(const SeriesPrefix& a);

/// Formal exponential; the constant coefficient must be 0.
SeriesPrefix exp(const SeriesPrefix& a);

}  // namespace lefschetz
