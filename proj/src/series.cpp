#include "lefschetz/series.hpp"

#include <algorithm>
#include <stdexcept>

namespace lefschetz {

SeriesPrefix truncate(const IntPoly& p, std::size_t order) {
  std::vector<Rational> c(order + 1, Rational(0));
  for (std::size_t i = 0; i <= order; ++i) c[i] = Rational(p.coeff(i));
  return SeriesPrefix(std::move(c));
}

SeriesPrefix operator*(const SeriesPrefix& a, const SeriesPrefix& b) {
  const std::size_t n = std::min(a.coeffs.size(), b.coeffs.size());
  std::vector<Rational> c(n, Rational(0));
  for (std::size_t i = 0; i < n; ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; i + j < n; ++j) c[i + j] += a[i] * b[j];
  }
  return SeriesPrefix(std::move(c));
}

SeriesPrefix inverse(const SeriesPrefix& a) {
  if (a.coeffs.empty() || a[0] == 0) throw std::domain_error("inverse: constant coefficient is zero");
  const std::size_t n = a.coeffs.size();
  std::vector<Rational> b(n, Rational(0));
  b[0] = 1 / a[0];
  for (std::size_t k = 1; k < n; ++k) {
    Rational acc = 0;
    for (std::size_t j = 1; j <= k; ++j) acc += a[j] * b[k - j];
    b[k] = -acc * b[0];
  }
  return SeriesPrefix(std::move(b));
}

SeriesPrefix log(const SeriesPrefix& a) {
  if (a.coeffs.empty() || a[0] != 1) throw std::domain_error("log: constant coefficient must be 1");
  // k b_k = k a_k - sum_{j=1}^{k-1} j b_j a_{k-j}
  const std::size_t n = a.coeffs.size();
  std::vector<Rational> b(n, Rational(0));
  for (std::size_t k = 1; k < n; ++k) {
    Rational acc = Rational(k) * a[k];
    for (std::size_t j = 1; j < k; ++j) acc -= Rational(j) * b[j] * a[k - j];
    b[k] = acc / Rational(k);
  }
  return SeriesPrefix(std::move(b));
}

SeriesPrefix exp(const SeriesPrefix& a) {
  if (!a.coeffs.empty() && a[0] != 0) throw std::domain_error("exp: constant coefficient must be 0");
  // k b_k = sum_{j=1}^{k} j a_j b_{k-j}
  const std::size_t n = a.coeffs.size();
  std::vector<Rational> b(n, Rational(0));
  if (n == 0) return SeriesPrefix(std::move(b));
  b[0] = 1;
  for (std::size_t k = 1; k < n; ++k) {
    Rational acc = 0;
    for (std::size_t j = 1; j <= k; ++j) acc += Rational(j) * a[j] * b[k - j];
    b[k] = acc / Rational(k);
  }
  return SeriesPrefix(std::move(b));
}

}  // namespace lefschetz
