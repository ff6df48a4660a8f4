#include "period_chains.hpp"

#include "lefschetz/errors.hpp"

#include <algorithm>
#include <limits>
#include <map>
#include <stdexcept>

namespace lefschetz::detail {

bool PeriodChain::active() const {
  return std::any_of(invariant.begin(), invariant.end(), [](std::int64_t c) { return c != 0; });
}

std::vector<PeriodChain> period_chains(const CycloVector& zeta, std::uint64_t bound) {
  std::map<std::uint64_t, std::int64_t> inv;
  for (const auto& [d, e] : zeta.exponents()) {
    (void)e;
    for (auto q : divisors(d)) inv.try_emplace(q, 0);
  }
  for (auto& [q, c] : inv) c = period_invariant(zeta, q);

  std::vector<PeriodChain> chains;
  for (std::uint64_t o = 1; o <= bound; o += 2) {
    PeriodChain ch;
    ch.odd = o;
    for (std::uint64_t q = o; q <= bound; q *= 2) ch.periods.push_back(q);
    const std::uint64_t past = ch.periods.back() * 2;
    for (auto q : ch.periods) ch.invariant.push_back(inv.count(q) ? inv.at(q) : 0);
    ch.invariant.push_back(inv.count(past) ? inv.at(past) : 0);
    chains.push_back(std::move(ch));
  }
  for (const auto& [q, c] : inv) {
    if (c == 0) continue;
    std::uint64_t odd = q;
    while (odd % 2 == 0) odd /= 2;
    if (odd > bound || q > 2 * bound)
      throw BoundTooSmall("period bound " + std::to_string(bound) + " cannot reach cyclotomic index " +
                              std::to_string(q),
                          minimal_period_bound(zeta));
  }
  return chains;
}

std::optional<std::vector<std::optional<std::int64_t>>> forced_values(const PeriodChain& chain, std::uint32_t used) {
  const std::size_t n = chain.periods.size();
  std::vector<std::optional<std::int64_t>> y(n);
  auto fix = [&](std::size_t k, std::int64_t v) {
    if (y[k] && *y[k] != v) return false;
    y[k] = v;
    return true;
  };
  // Past the bound both factors at position n are absent: y_{n-1} = c_n.
  if (!fix(n - 1, chain.invariant[n])) return std::nullopt;
  for (std::size_t j = 0; j < n; ++j) {
    if (used & (1U << j)) continue;
    if (!fix(j, 0)) return std::nullopt;
    if (j == 0) {
      if (chain.invariant[0] != 0) return std::nullopt;
    } else if (!fix(j - 1, chain.invariant[j])) {
      return std::nullopt;
    }
  }
  return y;
}

namespace {

std::int64_t minus_exponent(const PeriodChain& chain, const std::vector<std::int64_t>& y, std::size_t j) {
  return chain.invariant[j] + y[j] - (j > 0 ? y[j - 1] : 0);
}

std::uint32_t used_mask(const PeriodChain& chain, const std::vector<std::int64_t>& y) {
  std::uint32_t mask = 0;
  for (std::size_t j = 0; j < y.size(); ++j)
    if (y[j] != 0 || minus_exponent(chain, y, j) != 0) mask |= 1U << j;
  return mask;
}

}  // namespace

bool attain_exactly(const PeriodChain& chain, std::uint32_t used, std::vector<std::int64_t>& y) {
  auto fixed = forced_values(chain, used);
  if (!fixed) return false;
  const std::size_t n = chain.periods.size();
  y.assign(n, 0);
  // Free slots only occur at used positions. A nonzero value uses the slot;
  // it must also differ from c_{j+1} when the next slot is pinned to 0, so
  // that the next position still carries a (1 - t^q) factor.
  for (std::size_t j = n; j-- > 0;) {
    if ((*fixed)[j]) {
      y[j] = *(*fixed)[j];
      continue;
    }
    std::int64_t avoid = 0;
    const bool next_pinned_zero = j + 1 < n && (*fixed)[j + 1] && *(*fixed)[j + 1] == 0;
    if (next_pinned_zero) avoid = chain.invariant[j + 1];
    y[j] = (avoid == 1) ? 2 : 1;
  }
  return used_mask(chain, y) == used;
}

std::vector<std::int64_t> cheapest_assignment(const PeriodChain& chain, std::uint32_t used) {
  auto fixed = forced_values(chain, used);
  if (!fixed) throw std::logic_error("cheapest_assignment: inconsistent mask");
  const std::size_t n = chain.periods.size();
  std::int64_t radius = 1;
  for (auto c : chain.invariant) radius += c < 0 ? -c : c;

  // Dynamic programming along the chain over candidate values of y_j.
  std::vector<std::vector<std::int64_t>> values(n);
  for (std::size_t j = 0; j < n; ++j) {
    if ((*fixed)[j]) {
      values[j] = {*(*fixed)[j]};
      continue;
    }
    // Ordered 0, 1, -1, 2, -2, ... so ties prefer small magnitudes.
    values[j].push_back(0);
    for (std::int64_t v = 1; v <= radius; ++v) {
      values[j].push_back(v);
      values[j].push_back(-v);
    }
  }
  constexpr std::int64_t inf = std::numeric_limits<std::int64_t>::max() / 4;
  std::vector<std::vector<std::int64_t>> cost(n), from(n);
  for (std::size_t j = 0; j < n; ++j) {
    cost[j].assign(values[j].size(), inf);
    from[j].assign(values[j].size(), -1);
    for (std::size_t a = 0; a < values[j].size(); ++a) {
      const std::int64_t yj = values[j][a];
      const std::int64_t own = yj < 0 ? -yj : yj;
      if (j == 0) {
        const std::int64_t xm = chain.invariant[0] + yj;
        cost[0][a] = own + (xm < 0 ? -xm : xm);
        continue;
      }
      for (std::size_t b = 0; b < values[j - 1].size(); ++b) {
        if (cost[j - 1][b] >= inf) continue;
        const std::int64_t xm = chain.invariant[j] + yj - values[j - 1][b];
        const std::int64_t total = cost[j - 1][b] + own + (xm < 0 ? -xm : xm);
        if (total < cost[j][a]) {
          cost[j][a] = total;
          from[j][a] = static_cast<std::int64_t>(b);
        }
      }
    }
  }
  std::size_t best = 0;
  for (std::size_t a = 1; a < values[n - 1].size(); ++a)
    if (cost[n - 1][a] < cost[n - 1][best]) best = a;
  std::vector<std::int64_t> y(n, 0);
  for (std::size_t j = n; j-- > 0;) {
    y[j] = values[j][best];
    if (j > 0) best = static_cast<std::size_t>(from[j][best]);
  }
  return y;
}

std::vector<Factor> chain_factors(const PeriodChain& chain, const std::vector<std::int64_t>& y) {
  std::vector<Factor> out;
  for (std::size_t j = 0; j < chain.periods.size(); ++j) {
    const std::int64_t xm = minus_exponent(chain, y, j);
    if (xm != 0) out.push_back({Sign::Minus, chain.periods[j], xm});
    if (y[j] != 0) out.push_back({Sign::Plus, chain.periods[j], y[j]});
  }
  return out;
}

std::vector<std::uint32_t> minimal_masks(const PeriodChain& chain) {
  const std::size_t n = chain.periods.size();
  if (n >= 32) throw std::length_error("period chain too long");
  const std::uint32_t full = (1U << n) - 1;
  std::vector<std::uint32_t> out;
  for (std::uint32_t mask = 0; mask <= full; ++mask) {
    if (!forced_values(chain, mask)) continue;
    // Consistency is monotone, so minimality only needs single removals.
    bool minimal = true;
    for (std::size_t j = 0; j < n && minimal; ++j)
      if ((mask & (1U << j)) && forced_values(chain, mask & ~(1U << j))) minimal = false;
    if (minimal) out.push_back(mask);
  }
  return out;
}

}  // namespace lefschetz::detail
