#include "lefschetz/mperl.hpp"

#include "lefschetz/errors.hpp"
#include "lefschetz/lefschetz.hpp"
#include "period_chains.hpp"

#include <algorithm>
#include <bit>
#include <optional>
#include <future>
#include <map>
#include <sstream>
#include <stdexcept>
#include <tuple>

namespace lefschetz {

// --- Representation ---------------------------------------------------------

Representation::Representation(const std::vector<Factor>& factors) {
  std::map<std::pair<std::uint64_t, int>, std::int64_t> merged;
  for (const auto& f : factors) {
    if (f.period == 0) throw std::invalid_argument("representation factor with period 0");
    merged[{f.period, f.sign == Sign::Minus ? 0 : 1}] += f.exponent;
  }
  for (const auto& [key, e] : merged)
    if (e != 0) factors_.push_back({key.second == 0 ? Sign::Minus : Sign::Plus, key.first, e});
}

CycloVector Representation::zeta() const {
  CycloVector z;
  for (const auto& f : factors_) z *= factor_pm(f.sign, f.period).pow(f.exponent);
  return z;
}

PeriodSet Representation::forced_periods() const {
  PeriodSet s;
  for (const auto& f : factors_) s.insert(f.period);
  return s;
}

std::uint64_t Representation::max_period() const { return factors_.empty() ? 0 : factors_.back().period; }

std::int64_t Representation::total_abs_exponent() const {
  std::int64_t total = 0;
  for (const auto& f : factors_) total += f.exponent < 0 ? -f.exponent : f.exponent;
  return total;
}

bool operator<(const Representation& a, const Representation& b) {
  auto key = [](const Representation& r) { return std::make_tuple(r.max_period(), r.total_abs_exponent()); };
  if (key(a) != key(b)) return key(a) < key(b);
  return std::lexicographical_compare(
      a.factors_.begin(), a.factors_.end(), b.factors_.begin(), b.factors_.end(), [](const Factor& x, const Factor& y) {
        return std::make_tuple(x.period, x.sign == Sign::Plus, x.exponent) <
               std::make_tuple(y.period, y.sign == Sign::Plus, y.exponent);
      });
}

PeriodSet forced_periods(const Representation& rep) { return rep.forced_periods(); }

std::string to_expression(const Representation& rep) {
  auto atom = [](const Factor& f, std::int64_t e) {
    std::ostringstream os;
    os << "(1" << sign_char(f.sign) << "t";
    if (f.period != 1) os << "^" << f.period;
    os << ")";
    if (e != 1) os << "^" << e;
    return os.str();
  };
  std::vector<std::string> num, den;
  for (const auto& f : rep.factors()) {
    if (f.exponent > 0)
      num.push_back(atom(f, f.exponent));
    else
      den.push_back(atom(f, -f.exponent));
  }
  auto join = [](const std::vector<std::string>& parts) {
    std::string s;
    for (std::size_t i = 0; i < parts.size(); ++i) s += (i ? "*" : "") + parts[i];
    return s;
  };
  std::string out = num.empty() ? "1" : join(num);
  if (den.empty()) return out;
  if (den.size() == 1) return out + "/" + den.front();
  return out + "/(" + join(den) + ")";
}

// --- Bounds and invariants --------------------------------------------------

std::uint64_t minimal_period_bound(const CycloVector& zeta) {
  std::uint64_t need = 1;
  for (const auto& [d, e] : zeta.exponents()) {
    (void)e;
    need = std::max(need, d % 2 == 0 ? d / 2 : d);
  }
  return need;
}

std::uint64_t default_period_bound(const CycloVector& zeta) {
  return 2 * std::max<std::uint64_t>(zeta.max_index(), 1);
}

namespace {

void require_bound(const CycloVector& zeta, std::uint64_t bound) {
  const std::uint64_t need = minimal_period_bound(zeta);
  if (bound < need)
    throw BoundTooSmall("period bound " + std::to_string(bound) + " is below the minimum " + std::to_string(need) +
                            " needed to cover " + zeta.to_string(),
                        need);
}

}  // namespace

std::int64_t period_invariant(const CycloVector& zeta, std::uint64_t p) {
  if (p == 0) throw std::invalid_argument("period_invariant: period must be positive");
  std::int64_t total = 0;
  for (const auto& [d, e] : zeta.exponents())
    if (d % p == 0) total += mobius(d / p) * e;
  return total;
}

Representation mobius_representation(const CycloVector& zeta) {
  std::vector<Factor> factors;
  PeriodSet seen;
  for (const auto& [d, e] : zeta.exponents()) {
    (void)e;
    for (auto q : divisors(d)) {
      if (!seen.insert(q).second) continue;
      const std::int64_t c = period_invariant(zeta, q);
      if (c != 0) factors.push_back({Sign::Minus, q, c});
    }
  }
  return Representation(factors);
}

// --- Lattice search ---------------------------------------------------------

AvoidanceSystem avoidance_system(const CycloVector& zeta, const PeriodSet& excluded, std::uint64_t bound) {
  AvoidanceSystem sys;
  for (std::uint64_t d = 1; d <= 2 * bound; ++d) sys.rows.push_back(d);
  for (std::uint64_t p = 1; p <= bound; ++p) {
    if (excluded.count(p)) continue;
    sys.columns.emplace_back(Sign::Minus, p);
    sys.columns.emplace_back(Sign::Plus, p);
  }
  const auto nrows = static_cast<Eigen::Index>(sys.rows.size());
  const auto ncols = static_cast<Eigen::Index>(sys.columns.size());
  sys.matrix = IntMatrix::Zero(nrows, ncols);
  for (Eigen::Index j = 0; j < ncols; ++j) {
    const auto& [sign, p] = sys.columns[static_cast<std::size_t>(j)];
    const CycloVector f = factor_pm(sign, p);
    for (const auto& [d, e] : f.exponents()) sys.matrix(static_cast<Eigen::Index>(d - 1), j) = e;
  }
  sys.target = IntVector::Zero(nrows);
  for (const auto& [d, e] : zeta.exponents())
    if (d <= 2 * bound) sys.target(static_cast<Eigen::Index>(d - 1)) = e;
  return sys;
}

namespace {

// Smallest total |exponent| representation avoiding `excluded`, built chain
// by chain; the chains share no factors, so the per-chain optima add up.
// Returns nullopt when some chain cannot avoid its excluded positions.
std::optional<Representation> chain_witness(const CycloVector& zeta, const PeriodSet& excluded,
                                             std::uint64_t bound) {
  std::vector<Factor> factors;
  for (const auto& chain : detail::period_chains(zeta, bound)) {
    if (!chain.active()) continue;
    std::uint32_t used = 0;
    for (std::size_t j = 0; j < chain.periods.size(); ++j)
      if (!excluded.count(chain.periods[j])) used |= 1U << j;
    if (!detail::forced_values(chain, used)) return std::nullopt;
    const auto part = detail::chain_factors(chain, detail::cheapest_assignment(chain, used));
    factors.insert(factors.end(), part.begin(), part.end());
  }
  return Representation(factors);
}

}  // namespace

AvoidanceOutcome find_representation_avoiding(const CycloVector& zeta, const PeriodSet& excluded,
                                              std::uint64_t bound) {
  require_bound(zeta, bound);
  if (zeta.is_one()) return Representation();
  const AvoidanceSystem sys = avoidance_system(zeta, excluded, bound);
  if (sys.columns.empty()) {
    LatticeObstruction<Integer> ob;
    ob.functional = IntVector::Zero(static_cast<Eigen::Index>(sys.rows.size()));
    for (const auto& [d, e] : zeta.exponents()) {
      (void)e;
      ob.functional(static_cast<Eigen::Index>(d - 1)) = 1;
      break;
    }
    return Infeasible{ob, sys.rows};
  }
  auto outcome = solve_integer_system(sys.matrix, sys.target);
  // The lattice decides; the witness itself comes from the chains, and the
  // two must agree.
  auto witness = chain_witness(zeta, excluded, bound);
  if (auto* ob = std::get_if<LatticeObstruction<Integer>>(&outcome)) {
    if (witness) throw std::logic_error("find_representation_avoiding: chains avoid what the lattice forbids");
    return Infeasible{std::move(*ob), sys.rows};
  }
  if (!witness || witness->zeta() != zeta)
    throw std::logic_error("find_representation_avoiding: chain witness disagrees with the lattice solution");
  return *std::move(witness);
}

bool certificate_holds(const CycloVector& zeta, const PeriodSet& excluded, std::uint64_t bound,
                       const Infeasible& infeasible) {
  const AvoidanceSystem sys = avoidance_system(zeta, excluded, bound);
  if (infeasible.rows != sys.rows) return false;
  if (infeasible.certificate.functional.size() != static_cast<Eigen::Index>(sys.rows.size())) return false;
  return obstruction_holds(sys.matrix, sys.target, infeasible.certificate);
}

// --- Minimal Lefschetz periods ------------------------------------------------

std::string MPerResult::status() const { return exact ? "exact" : "bounded:" + std::to_string(bound); }

MPerResult minimal_lefschetz_periods(const CycloVector& zeta, std::uint64_t bound) {
  require_bound(zeta, bound);
  MPerResult r;
  r.zeta = zeta;
  r.bound = bound;
  if (zeta.is_one()) {
    r.exact = true;
    r.witnesses.emplace_back();
    return r;
  }

  // Even periods never belong to the set, so only odd candidates are queried.
  // The queries are independent.
  std::vector<std::uint64_t> candidates;
  for (std::uint64_t p = 1; p <= bound; p += 2) candidates.push_back(p);
  std::vector<std::future<AvoidanceOutcome>> pending;
  pending.reserve(candidates.size());
  for (auto p : candidates)
    pending.push_back(std::async(std::launch::async, [&zeta, p, bound] {
      return find_representation_avoiding(zeta, PeriodSet{p}, bound);
    }));

  std::vector<Representation> witnesses;
  for (std::size_t i = 0; i < candidates.size(); ++i) {
    AvoidanceOutcome out = pending[i].get();
    if (std::holds_alternative<Infeasible>(out))
      r.periods.insert(candidates[i]);
    else
      witnesses.push_back(std::get<Representation>(std::move(out)));
  }
  if (witnesses.empty()) witnesses.push_back(std::get<Representation>(find_representation_avoiding(zeta, {}, bound)));
  std::sort(witnesses.begin(), witnesses.end());
  witnesses.erase(std::unique(witnesses.begin(), witnesses.end()), witnesses.end());
  r.witnesses = std::move(witnesses);

  // Certification. (a) With bound >= every support index, the Moebius
  // representation fits inside the search, so an odd p is avoidable iff its
  // period invariant vanishes, and a nonzero invariant forces p at any
  // period. (b) A witness using only even periods makes the set empty for
  // every representation. (c) Support in {1, 2}: 1 is forced iff e_1 != e_2.
  bool invariants_agree = bound >= zeta.max_index();
  for (auto p : candidates)
    if ((period_invariant(zeta, p) != 0) != (r.periods.count(p) != 0)) invariants_agree = false;
  const bool even_witness =
      r.periods.empty() && std::any_of(r.witnesses.begin(), r.witnesses.end(), [](const Representation& w) {
        const auto s = w.forced_periods();
        return std::all_of(s.begin(), s.end(), [](std::uint64_t p) { return p % 2 == 0; });
      });
  const bool small_support = zeta.max_index() <= 2;
  const bool closed_form =
      small_support && (r.periods == (zeta.exponent(1) != zeta.exponent(2) ? PeriodSet{1} : PeriodSet{}));
  r.exact = invariants_agree || even_witness || closed_form;

  if (r.periods.empty()) r.alternatives = forced_alternatives(zeta, bound).families;
  return r;
}

MPerResult minimal_lefschetz_periods(const CycloVector& zeta) {
  return minimal_lefschetz_periods(zeta, default_period_bound(zeta));
}

// --- Forced alternatives and preferred form -----------------------------------

namespace {

PeriodSet mask_periods(const detail::PeriodChain& chain, std::uint32_t mask) {
  PeriodSet s;
  for (std::size_t j = 0; j < chain.periods.size(); ++j)
    if (mask & (1U << j)) s.insert(chain.periods[j]);
  return s;
}

bool family_less(const PeriodSet& a, const PeriodSet& b) {
  if (a.size() != b.size()) return a.size() < b.size();
  return a < b;
}

constexpr std::size_t kMaxFamilies = 200000;

}  // namespace

ForcedAlternatives forced_alternatives(const CycloVector& zeta, std::uint64_t bound, bool prune) {
  require_bound(zeta, bound);
  ForcedAlternatives out;
  if (zeta.is_one()) return out;

  std::vector<PeriodSet> families{PeriodSet{}};
  for (const auto& chain : detail::period_chains(zeta, bound)) {
    if (!chain.active()) continue;
    std::vector<PeriodSet> options;
    if (prune) {
      for (auto mask : detail::minimal_masks(chain)) options.push_back(mask_periods(chain, mask));
    } else {
      const std::uint32_t full = (1U << chain.periods.size()) - 1;
      std::vector<std::int64_t> y;
      for (std::uint32_t mask = 1; mask <= full; ++mask)
        if (detail::attain_exactly(chain, mask, y)) options.push_back(mask_periods(chain, mask));
    }
    if (options.empty()) return out;  // unreachable once the bound check passed
    if (families.size() * options.size() > kMaxFamilies)
      throw std::length_error("too many forced-period families; lower the period bound");
    std::vector<PeriodSet> next;
    next.reserve(families.size() * options.size());
    for (const auto& f : families)
      for (const auto& o : options) {
        PeriodSet u = f;
        u.insert(o.begin(), o.end());
        next.push_back(std::move(u));
      }
    families = std::move(next);
  }
  std::sort(families.begin(), families.end(), family_less);
  out.families = std::move(families);
  return out;
}

Representation preferred_representation(const CycloVector& zeta) {
  if (zeta.is_one()) return Representation();
  std::vector<Factor> factors;
  for (const auto& chain : detail::period_chains(zeta, default_period_bound(zeta))) {
    if (!chain.active()) continue;
    std::optional<std::tuple<bool, int, std::int64_t, std::uint32_t>> best_key;
    std::vector<std::int64_t> best_y;
    for (auto mask : detail::minimal_masks(chain)) {
      auto y = detail::cheapest_assignment(chain, mask);
      std::int64_t cost = 0;
      for (const auto& f : detail::chain_factors(chain, y)) cost += f.exponent < 0 ? -f.exponent : f.exponent;
      const auto key = std::make_tuple((mask & 1U) != 0, std::popcount(mask), cost, mask);
      if (!best_key || key < *best_key) {
        best_key = key;
        best_y = std::move(y);
      }
    }
    for (const auto& f : detail::chain_factors(chain, best_y)) factors.push_back(f);
  }
  return Representation(factors);
}

// --- Classification and JSON --------------------------------------------------

Classification classify(const ManifoldSpec& spec) {
  Classification c{spec, build_model(spec), {}};
  c.result = minimal_lefschetz_periods(zeta_from_homology(c.model));
  return c;
}

nlohmann::json to_json(const Representation& rep) {
  nlohmann::json arr = nlohmann::json::array();
  for (const auto& f : rep.factors())
    arr.push_back({{"sign", std::string(1, sign_char(f.sign))}, {"p", f.period}, {"e", f.exponent}});
  return arr;
}

nlohmann::json to_json(const MPerResult& result) {
  nlohmann::json j;
  j["zeta"] = result.zeta.to_string();
  j["mper"] = nlohmann::json(std::vector<std::uint64_t>(result.periods.begin(), result.periods.end()));
  j["status"] = result.status();
  j["witnesses"] = nlohmann::json::array();
  for (const auto& w : result.witnesses) j["witnesses"].push_back(to_json(w));
  j["alternatives"] = nlohmann::json::array();
  for (const auto& a : result.alternatives)
    j["alternatives"].push_back(std::vector<std::uint64_t>(a.begin(), a.end()));
  return j;
}

}  // namespace lefschetz
