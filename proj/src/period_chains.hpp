#pragma once

// Period chains: the representation lattice split along q, 2q, 4q, ...
//
// Writing y_q for the net exponent of (1 + t^q), every representation of
// zeta has net exponent of (1 - t^q) equal to c_q + y_q - y_{q/2}, where
// c_q = period_invariant(zeta, q) and y_{q/2} = 0 for odd q. The y_q are
// otherwise free, so the periods o, 2o, 4o, ... of one odd o interact only
// with each other. Position j of the chain for o is the period o * 2^j.

#include "lefschetz/mperl.hpp"

#include <cstdint>
#include <optional>
#include <vector>

namespace lefschetz::detail {

struct PeriodChain {
  std::uint64_t odd = 1;
  /// o * 2^j for j = 0..J, all <= bound.
  std::vector<std::uint64_t> periods;
  /// Invariants at positions 0..J+1; position J+1 lies past the bound.
  std::vector<std::int64_t> invariant;

  bool active() const;
};

/// Chains for every odd o <= bound. Throws BoundTooSmall if some nonzero
/// invariant lies beyond the last position of its chain.
std::vector<PeriodChain> period_chains(const CycloVector& zeta, std::uint64_t bound);

/// Values of y forced by avoiding every position outside `used` (bitmask),
/// or nullopt when avoiding them is impossible.
std::optional<std::vector<std::optional<std::int64_t>>> forced_values(const PeriodChain& chain, std::uint32_t used);

/// Whether some assignment uses exactly the positions in `used`; fills y.
bool attain_exactly(const PeriodChain& chain, std::uint32_t used, std::vector<std::int64_t>& y);

/// Assignment with positions outside `used` avoided and minimal total
/// absolute exponent. `used` must be consistent.
std::vector<std::int64_t> cheapest_assignment(const PeriodChain& chain, std::uint32_t used);

/// Factors (1 + t^q)^y and (1 - t^q)^(c + y - y_prev) of one chain.
std::vector<Factor> chain_factors(const PeriodChain& chain, const std::vector<std::int64_t>& y);

/// Inclusion-minimal consistent masks.
std::vector<std::uint32_t> minimal_masks(const PeriodChain& chain);

}  // namespace lefschetz::detail
