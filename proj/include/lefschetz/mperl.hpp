#pragma once

// Minimal sets of Lefschetz periods.
//
// A representation writes a zeta function as a finite product of factors
// (1 + s t^p)^e with s = +-1. Each representation forces the periods that
// occur in it; the minimal set of Lefschetz periods is the intersection of
// the forced sets over all representations.
//
// Searching representations is an integer feasibility problem: the
// exponent vector of zeta in the cyclotomic basis must lie in the lattice
// spanned by the columns factor_pm(s, p) over the allowed periods.

#include "lefschetz/cyclo.hpp"
#include "lefschetz/homology.hpp"
#include "lefschetz/smith.hpp"

#include <nlohmann/json.hpp>

#include <cstdint>
#include <set>
#include <string>
#include <variant>
#include <vector>

namespace lefschetz {

using PeriodSet = std::set<std::uint64_t>;

struct Factor {
  Sign sign = Sign::Minus;
  std::uint64_t period = 1;
  std::int64_t exponent = 1;

  friend bool operator==(const Factor&, const Factor&) = default;
};

/// Product of factors (1 + s t^p)^e. Factors with the same (sign, period)
/// are merged and zero exponents dropped, so the stored list is canonical:
/// sorted by period, 1 - t^p before 1 + t^p.
class Representation {
 public:
  Representation() = default;
  explicit Representation(const std::vector<Factor>& factors);

  const std::vector<Factor>& factors() const { return factors_; }
  bool empty() const { return factors_.empty(); }

  CycloVector zeta() const;
  PeriodSet forced_periods() const;
  std::uint64_t max_period() const;
  std::int64_t total_abs_exponent() const;

  friend bool operator==(const Representation& a, const Representation& b) { return a.factors_ == b.factors_; }
  /// Orders by (max period, total absolute exponent), then factor lists.
  friend bool operator<(const Representation& a, const Representation& b);

 private:
  std::vector<Factor> factors_;
};

PeriodSet forced_periods(const Representation& rep);

/// Text such as "(1-t^3)^2*(1+t^3)/((1-t)^6*(1+t)^3)"; "1" when empty.
std::string to_expression(const Representation& rep);

/// The integer system behind a query: one row per cyclotomic index
/// 1..2*bound and one column per allowed factor.
struct AvoidanceSystem {
  IntMatrix matrix;
  IntVector target;
  std::vector<std::uint64_t> rows;
  std::vector<std::pair<Sign, std::uint64_t>> columns;
};

AvoidanceSystem avoidance_system(const CycloVector& zeta, const PeriodSet& excluded, std::uint64_t bound);

/// No representation with periods in {1..bound} minus the excluded set
/// exists. The certificate functional is indexed like AvoidanceSystem::rows.
struct Infeasible {
  LatticeObstruction<Integer> certificate;
  std::vector<std::uint64_t> rows;
};

using AvoidanceOutcome = std::variant<Representation, Infeasible>;

/// Smallest bound P for which some representation with periods <= P exists:
/// odd indices d in the support need P >= d, even ones P >= d / 2.
std::uint64_t minimal_period_bound(const CycloVector& zeta);

/// 2 * max(largest support index, 1).
std::uint64_t default_period_bound(const CycloVector& zeta);

/// Decides exactly whether zeta has a representation using only periods in
/// {1..bound} \ excluded, via the Smith normal form of the constraint
/// matrix. Returns a representation (reduced against the solution lattice
/// to a small total exponent) or an infeasibility certificate.
/// Throws BoundTooSmall when bound < minimal_period_bound(zeta).
AvoidanceOutcome find_representation_avoiding(const CycloVector& zeta, const PeriodSet& excluded,
                                              std::uint64_t bound);

/// Re-checks an infeasibility certificate against a freshly built system.
bool certificate_holds(const CycloVector& zeta, const PeriodSet& excluded, std::uint64_t bound,
                       const Infeasible& infeasible);

/// sum over multiples d of p of mu(d/p) e_d. Every representation satisfies
///   x(1-t^p) - x(1+t^p) + x(1+t^(p/2)) = period_invariant(zeta, p)
/// (the last term only for even p), where x(.) is the net exponent of that
/// factor. For odd p, a nonzero value forces p in every representation.
std::int64_t period_invariant(const CycloVector& zeta, std::uint64_t p);

/// zeta = prod_q (1 - t^q)^(period_invariant(zeta, q)).
Representation mobius_representation(const CycloVector& zeta);

struct MPerResult {
  CycloVector zeta;
  PeriodSet periods;
  /// Exact when the answer is certified for representations of any period;
  /// otherwise it holds for periods up to `bound`.
  bool exact = false;
  std::uint64_t bound = 0;
  std::vector<Representation> witnesses;
  /// Minimal forced-period families; filled only when periods is empty.
  std::vector<PeriodSet> alternatives;

  std::string status() const;
};

MPerResult minimal_lefschetz_periods(const CycloVector& zeta, std::uint64_t bound);
MPerResult minimal_lefschetz_periods(const CycloVector& zeta);

/// Every representation with periods <= bound forces one of the families.
struct ForcedAlternatives {
  std::vector<PeriodSet> families;
};

/// Inclusion-minimal forced-period sets among representations with periods
/// <= bound. With prune = false, every attainable forced set is listed
/// instead, except that factor groups which cancel to 1 on their own (such
/// as (1-t^3)(1+t^3)/(1-t^6)) are not added to sets.
ForcedAlternatives forced_alternatives(const CycloVector& zeta, std::uint64_t bound, bool prune = true);

/// A representation forcing as few periods as possible: odd periods avoided
/// whenever some representation avoids them, then fewest periods, then
/// smallest total exponent. Used for printing.
Representation preferred_representation(const CycloVector& zeta);

struct Classification {
  ManifoldSpec spec;
  HomologyModel model;
  MPerResult result;
};

/// Catalog model -> zeta -> minimal Lefschetz periods at the default bound.
Classification classify(const ManifoldSpec& spec);

nlohmann::json to_json(const Representation& rep);
nlohmann::json to_json(const MPerResult& result);

}  // namespace lefschetz
