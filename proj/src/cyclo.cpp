#include "lefschetz/cyclo.hpp"

#include "lefschetz/errors.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace lefschetz {

CycloVector::CycloVector(std::initializer_list<std::pair<const Index, Exponent>> terms) {
  for (const auto& [d, e] : terms) add(d, e);
}

CycloVector::Exponent CycloVector::exponent(Index d) const {
  auto it = exps_.find(d);
  return it == exps_.end() ? 0 : it->second;
}

void CycloVector::add(Index d, Exponent e) {
  if (d == 0) throw std::invalid_argument("CycloVector: cyclotomic index must be positive");
  if (e == 0) return;
  auto [it, inserted] = exps_.try_emplace(d, e);
  if (inserted) return;
  it->second += e;
  if (it->second == 0) exps_.erase(it);
}

std::int64_t CycloVector::total_degree() const {
  std::int64_t deg = 0;
  for (const auto& [d, e] : exps_) deg += e * static_cast<std::int64_t>(euler_phi(d));
  return deg;
}

CycloVector& CycloVector::operator*=(const CycloVector& rhs) {
  for (const auto& [d, e] : rhs.exps_) add(d, e);
  return *this;
}

CycloVector& CycloVector::operator/=(const CycloVector& rhs) {
  for (const auto& [d, e] : rhs.exps_) add(d, -e);
  return *this;
}

CycloVector CycloVector::inverse() const { return pow(-1); }

CycloVector CycloVector::pow(Exponent k) const {
  CycloVector out;
  if (k == 0) return out;
  for (const auto& [d, e] : exps_) out.exps_.emplace(d, e * k);
  return out;
}

IntPoly CycloVector::numerator() const {
  IntPoly p = IntPoly::constant(1);
  for (const auto& [d, e] : exps_)
    if (e > 0) p *= lefschetz::pow(cyclotomic(d), static_cast<std::uint64_t>(e));
  return p;
}

IntPoly CycloVector::denominator() const {
  IntPoly p = IntPoly::constant(1);
  for (const auto& [d, e] : exps_)
    if (e < 0) p *= lefschetz::pow(cyclotomic(d), static_cast<std::uint64_t>(-e));
  return p;
}

std::string CycloVector::to_string() const {
  if (exps_.empty()) return "1";
  std::ostringstream os;
  bool first = true;
  for (const auto& [d, e] : exps_) {
    if (!first) os << " * ";
    first = false;
    os << "C_" << d << "^" << e;
  }
  return os.str();
}

CycloVector factor_pm(Sign sign, std::uint64_t p) {
  if (p == 0) throw std::invalid_argument("factor_pm: period must be positive");
  CycloVector v;
  if (sign == Sign::Minus) {
    for (auto d : divisors(p)) v.add(d, 1);
  } else {
    // 1 + t^p = (1 - t^2p) / (1 - t^p)
    for (auto d : divisors(2 * p))
      if (p % d != 0) v.add(d, 1);
  }
  return v;
}

SeriesPrefix expand(const CycloVector& v, std::size_t order) {
  std::vector<Integer> s(order + 1, Integer(0));
  s[0] = 1;
  for (const auto& [d, e] : v.exponents()) {
    const IntPoly c = cyclotomic(d);
    const std::size_t deg = static_cast<std::size_t>(c.degree());
    for (std::int64_t rep = 0; rep < (e > 0 ? e : -e); ++rep) {
      if (e > 0) {
        for (std::size_t k = order + 1; k-- > 0;) {
          Integer acc = 0;
          for (std::size_t j = 0; j <= std::min(k, deg); ++j) acc += c.coeffs()[j] * s[k - j];
          s[k] = acc;
        }
      } else {
        // C_d(0) = 1, so the quotient stays integral.
        for (std::size_t k = 1; k <= order; ++k)
          for (std::size_t j = 1; j <= std::min(k, deg); ++j) s[k] -= c.coeffs()[j] * s[k - j];
      }
    }
  }
  std::vector<Rational> out;
  out.reserve(s.size());
  for (auto& x : s) out.emplace_back(x);
  return SeriesPrefix(std::move(out));
}

namespace {

// Candidate indices with phi(d) <= max_degree, ordered by (phi(d), d).
// phi(d) >= sqrt(d / 2) bounds the search to d <= 2 * max_degree^2.
std::vector<std::uint64_t> candidate_indices(std::uint64_t max_degree) {
  std::vector<std::pair<std::uint64_t, std::uint64_t>> phis;
  const std::uint64_t limit = 2 * max_degree * max_degree + 2;
  for (std::uint64_t d = 1; d <= limit; ++d) {
    const auto phi = euler_phi(d);
    if (phi <= max_degree) phis.emplace_back(phi, d);
  }
  std::sort(phis.begin(), phis.end());
  std::vector<std::uint64_t> out;
  out.reserve(phis.size());
  for (const auto& pd : phis) out.push_back(pd.second);
  return out;
}

}  // namespace

CycloVector poly_product_to_cyclovector(const std::vector<std::pair<IntPoly, std::int64_t>>& factors) {
  CycloVector result;
  for (const auto& [poly, power] : factors) {
    if (poly.coeff(0) != 1)
      throw NotRepresentable("polynomial " + poly.to_string() + " does not have constant term +1");
    if (power == 0) continue;
    IntPoly rest = poly;
    CycloVector local;
    for (auto d : candidate_indices(static_cast<std::uint64_t>(std::max<long>(rest.degree(), 0)))) {
      if (rest.degree() <= 0) break;
      if (static_cast<long>(euler_phi(d)) > rest.degree()) continue;
      const IntPoly c = cyclotomic(d);
      for (;;) {
        auto [q, r] = divmod(rest, c);
        if (!r.is_zero()) break;
        rest = std::move(q);
        local.add(d, 1);
        if (rest.degree() <= 0) break;
      }
    }
    if (rest.degree() > 0 || rest.coeff(0) != 1)
      throw NotQuasiUnipotent("polynomial " + poly.to_string() + " is not a product of cyclotomic polynomials");
    result *= local.pow(power);
  }
  return result;
}

}  // namespace lefschetz
