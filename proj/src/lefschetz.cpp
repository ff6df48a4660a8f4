#include "lefschetz/lefschetz.hpp"

#include "lefschetz/errors.hpp"
#include "lefschetz/linalg.hpp"

namespace lefschetz {

Integer lefschetz_number(const HomologyModel& model, std::uint64_t m) {
  Integer total = 0;
  for (const auto& [k, a] : model.maps) {
    if (a.size() == 0) continue;
    const Integer tr = matrix_power(a, m).trace();
    if (k % 2 == 0)
      total += tr;
    else
      total -= tr;
  }
  return total;
}

std::vector<Integer> lefschetz_sequence(const HomologyModel& model, std::uint64_t count) {
  std::vector<Integer> out;
  out.reserve(count);
  // Running powers are cheaper than one exponentiation per m.
  std::map<int, IntMatrix> powers;
  for (const auto& [k, a] : model.maps)
    if (a.size() != 0) powers.emplace(k, a);
  for (std::uint64_t m = 1; m <= count; ++m) {
    Integer total = 0;
    for (auto& [k, pw] : powers) {
      if (m > 1) pw = (pw * model.maps.at(k)).eval();
      const Integer tr = pw.trace();
      if (k % 2 == 0)
        total += tr;
      else
        total -= tr;
    }
    out.push_back(total);
  }
  return out;
}

CycloVector zeta_from_homology(const ValidatedModel& model) {
  CycloVector z;
  for (const auto& [k, factor] : model.characteristic) z *= (k % 2 == 0) ? factor.inverse() : factor;
  return z;
}

CycloVector zeta_from_homology(const HomologyModel& model) { return zeta_from_homology(validate_model(model)); }

CycloVector zeta_from_periodic_data(const std::vector<PeriodicDatum>& sigma) {
  CycloVector z;
  for (const auto& datum : sigma) {
    if (datum.p == 0) throw std::invalid_argument("periodic datum with period 0");
    if (datum.delta != 1 && datum.delta != -1) throw std::invalid_argument("orientation type must be +1 or -1");
    const CycloVector f = factor_pm(datum.delta == 1 ? Sign::Minus : Sign::Plus, datum.p);
    z *= (datum.u % 2 == 0) ? f.inverse() : f;
  }
  return z;
}

std::vector<PeriodicDatum> periodic_data_from_json(const nlohmann::json& j) {
  try {
    std::vector<PeriodicDatum> out;
    for (const auto& item : j) {
      PeriodicDatum d;
      const long p = item.at("p").get<long>();
      const long u = item.at("u").get<long>();
      d.delta = item.at("delta").get<int>();
      if (p < 1) throw NotRepresentable("periodic datum with period " + std::to_string(p));
      if (u < 0) throw NotRepresentable("periodic datum with negative unstable dimension");
      if (d.delta != 1 && d.delta != -1) throw NotRepresentable("orientation type must be 1 or -1");
      d.p = static_cast<std::uint64_t>(p);
      d.u = static_cast<std::uint64_t>(u);
      out.push_back(d);
    }
    return out;
  } catch (const nlohmann::json::exception& e) {
    throw NotRepresentable(std::string("periodic data JSON: ") + e.what());
  }
}

namespace {

SeriesIdentityReport log_report(const CycloVector& zeta, std::size_t order) {
  SeriesIdentityReport r;
  r.order = order;
  const SeriesPrefix lg = log(expand(zeta, order));
  r.log_lefschetz.resize(order);
  for (std::size_t m = 1; m <= order; ++m) r.log_lefschetz[m - 1] = Rational(m) * lg[m];
  return r;
}

}  // namespace

SeriesIdentityReport verify_series_identity(const HomologyModel& model, std::size_t order) {
  SeriesIdentityReport r = log_report(zeta_from_homology(model), order);
  r.trace_lefschetz = lefschetz_sequence(model, order);
  r.pass = true;
  for (std::size_t m = 1; m <= order; ++m) {
    if (r.log_lefschetz[m - 1] != Rational(r.trace_lefschetz[m - 1])) {
      r.pass = false;
      r.first_mismatch = m;
      break;
    }
  }
  return r;
}

SeriesIdentityReport verify_series_identity(const CycloVector& zeta, std::size_t order) {
  SeriesIdentityReport r = log_report(zeta, order);
  r.pass = true;
  for (std::size_t m = 1; m <= order; ++m) {
    if (r.log_lefschetz[m - 1].get_den() != 1) {
      r.pass = false;
      r.first_mismatch = m;
      return r;
    }
  }
  std::vector<Rational> g(order + 1, Rational(0));
  for (std::size_t m = 1; m <= order; ++m) g[m] = r.log_lefschetz[m - 1] / Rational(m);
  const SeriesPrefix back = exp(SeriesPrefix(std::move(g)));
  const SeriesPrefix direct = expand(zeta, order);
  for (std::size_t m = 0; m <= order; ++m) {
    if (back[m] != direct[m]) {
      r.pass = false;
      r.first_mismatch = m;
      break;
    }
  }
  return r;
}

}  // namespace lefschetz
