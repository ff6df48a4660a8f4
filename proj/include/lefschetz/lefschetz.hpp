#pragma once

#include "lefschetz/cyclo.hpp"
#include "lefschetz/homology.hpp"
#include "lefschetz/series.hpp"

#include <nlohmann/json.hpp>

#include <cstdint>
#include <optional>
#include <vector>

namespace lefschetz {

/// One hyperbolic periodic orbit: period p, unstable dimension u and
/// orientation type delta (+1 when the return map preserves orientation on
/// the unstable space).
struct PeriodicDatum {
  std::uint64_t p = 1;
  std::uint64_t u = 0;
  int delta = 1;
};

/// L(f^m) = sum_k (-1)^k tr(f_{*k}^m).
Integer lefschetz_number(const HomologyModel& model, std::uint64_t m);

/// L(f^1), ..., L(f^count).
std::vector<Integer> lefschetz_sequence(const HomologyModel& model, std::uint64_t count);

/// prod_k det(I - t f_{*k})^((-1)^(k+1)). Validates the model first.
CycloVector zeta_from_homology(const HomologyModel& model);
CycloVector zeta_from_homology(const ValidatedModel& model);

/// prod over the data of (1 - delta t^p)^((-1)^(u+1)).
CycloVector zeta_from_periodic_data(const std::vector<PeriodicDatum>& sigma);

std::vector<PeriodicDatum> periodic_data_from_json(const nlohmann::json& j);

/// Outcome of comparing log(zeta) against the Lefschetz numbers.
struct SeriesIdentityReport {
  bool pass = false;
  std::size_t order = 0;
  /// Smallest m whose coefficient disagrees.
  std::optional<std::size_t> first_mismatch;
  /// L(f^1..f^order) as read off m * [t^m] log(zeta).
  std::vector<Rational> log_lefschetz;
  /// L(f^1..f^order) from traces; empty when checking a bare zeta.
  std::vector<Integer> trace_lefschetz;
};

/// Expands zeta_from_homology(model) to the given order, takes its formal
/// logarithm and checks that [t^m] equals L(f^m) / m for every m <= order.
SeriesIdentityReport verify_series_identity(const HomologyModel& model, std::size_t order);

/// For a bare zeta: checks that m * [t^m] log(zeta) is an integer for every
/// m <= order and that exp(sum L_m t^m / m) reproduces the expansion.
SeriesIdentityReport verify_series_identity(const CycloVector& zeta, std::size_t order);

}  // namespace lefschetz
