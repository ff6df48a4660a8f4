#include "lefschetz/poly.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace lefschetz {

IntPoly::IntPoly(std::vector<Integer> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

IntPoly::IntPoly(std::initializer_list<long> coeffs) {
  coeffs_.reserve(coeffs.size());
  for (long c : coeffs) coeffs_.emplace_back(c);
  trim();
}

IntPoly IntPoly::constant(Integer c) { return IntPoly(std::vector<Integer>{std::move(c)}); }

IntPoly IntPoly::monomial(std::uint64_t k, Integer c) {
  std::vector<Integer> coeffs(k + 1, Integer(0));
  coeffs[k] = std::move(c);
  return IntPoly(std::move(coeffs));
}

Integer IntPoly::coeff(std::size_t i) const { return i < coeffs_.size() ? coeffs_[i] : Integer(0); }

Integer IntPoly::evaluate(const Integer& t) const {
  Integer acc = 0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * t + *it;
  return acc;
}

IntPoly& IntPoly::operator+=(const IntPoly& rhs) {
  if (rhs.coeffs_.size() > coeffs_.size()) coeffs_.resize(rhs.coeffs_.size(), Integer(0));
  for (std::size_t i = 0; i < rhs.coeffs_.size(); ++i) coeffs_[i] += rhs.coeffs_[i];
  trim();
  return *this;
}

IntPoly& IntPoly::operator-=(const IntPoly& rhs) {
  if (rhs.coeffs_.size() > coeffs_.size()) coeffs_.resize(rhs.coeffs_.size(), Integer(0));
  for (std::size_t i = 0; i < rhs.coeffs_.size(); ++i) coeffs_[i] -= rhs.coeffs_[i];
  trim();
  return *this;
}

IntPoly& IntPoly::operator*=(const IntPoly& rhs) {
  if (is_zero() || rhs.is_zero()) {
    coeffs_.clear();
    return *this;
  }
  std::vector<Integer> out(coeffs_.size() + rhs.coeffs_.size() - 1, Integer(0));
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    if (coeffs_[i] == 0) continue;
    for (std::size_t j = 0; j < rhs.coeffs_.size(); ++j) out[i + j] += coeffs_[i] * rhs.coeffs_[j];
  }
  coeffs_ = std::move(out);
  trim();
  return *this;
}

IntPoly IntPoly::operator-() const {
  IntPoly out = *this;
  for (auto& c : out.coeffs_) c = -c;
  return out;
}

std::string IntPoly::to_string() const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    const Integer& c = coeffs_[i];
    if (c == 0) continue;
    Integer mag = abs(c);
    if (first) {
      if (c < 0) os << "-";
    } else {
      os << (c < 0 ? " - " : " + ");
    }
    first = false;
    if (i == 0) {
      os << mag.get_str();
      continue;
    }
    if (mag != 1) os << mag.get_str() << "*";
    os << "t";
    if (i > 1) os << "^" << i;
  }
  return os.str();
}

void IntPoly::trim() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

IntPoly pow(const IntPoly& base, std::uint64_t exponent) {
  IntPoly result = IntPoly::constant(1);
  IntPoly square = base;
  while (exponent > 0) {
    if (exponent & 1U) result *= square;
    exponent >>= 1U;
    if (exponent > 0) square *= square;
  }
  return result;
}

std::pair<IntPoly, IntPoly> divmod(const IntPoly& num, const IntPoly& den) {
  if (den.is_zero()) throw std::domain_error("divmod: division by the zero polynomial");
  const Integer& lead = den.leading();
  if (lead != 1 && lead != -1) throw std::domain_error("divmod: divisor must have unit leading coefficient");

  std::vector<Integer> rem = num.coeffs();
  const long dd = den.degree();
  const long nd = num.degree();
  if (nd < dd) return {IntPoly(), num};

  std::vector<Integer> quot(static_cast<std::size_t>(nd - dd + 1), Integer(0));
  for (long k = nd - dd; k >= 0; --k) {
    const Integer& top = rem[static_cast<std::size_t>(k + dd)];
    if (top == 0) continue;
    Integer q = top * lead;  // lead is its own inverse
    quot[static_cast<std::size_t>(k)] = q;
    for (long j = 0; j <= dd; ++j) rem[static_cast<std::size_t>(k + j)] -= q * den.coeffs()[static_cast<std::size_t>(j)];
  }
  return {IntPoly(std::move(quot)), IntPoly(std::move(rem))};
}

IntPoly cyclotomic(std::uint64_t d) {
  if (d == 0) throw std::invalid_argument("cyclotomic: index must be positive");
  // Phi_d = prod_{k | d} (t^k - 1)^mu(d/k)
  IntPoly num = IntPoly::constant(1);
  IntPoly den = IntPoly::constant(1);
  for (std::uint64_t k : divisors(d)) {
    const int mu = mobius(d / k);
    if (mu == 0) continue;
    IntPoly term = IntPoly::monomial(k) - IntPoly::constant(1);
    (mu > 0 ? num : den) *= term;
  }
  IntPoly phi = divmod(num, den).first;
  if (phi.coeff(0) < 0) phi = -phi;
  return phi;
}

}  // namespace lefschetz
