#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "htc/expr.hpp"
#include "htc/ledger.hpp"

namespace htc {

/// t0 is the largest stratum index with torsion in the cohomology of the
/// intermediate extension (absent: torsion free). tau[n] is the dimension of
/// the mod-l torsion at level index n.
struct TorsionProfile {
  std::optional<int> t0;
  std::vector<std::int64_t> tau;

  static TorsionProfile torsion_free(std::size_t levels = 0) { return {std::nullopt, std::vector<std::int64_t>(levels, 0)}; }

  friend bool operator==(const TorsionProfile&, const TorsionProfile&) = default;
};

/// Throws InvariantViolation when t0 is absent but some tau is nonzero, a tau
/// is negative, or t0 < 1.
void validate(const TorsionProfile& profile);

/// i(t): the smallest degree with torsion at stratum t. nullopt stands for +∞.
std::optional<int> i_of_t(const TorsionProfile& profile, int t);

/// The term at stratum t0 whose mod-l H^0 torsion matches H^{i(t)} torsion at
/// stratum t: infinitesimal inf{(t0-t)/2} × Speh_{t0-t}(π){t/2}, Ξ^{(t-t0)/2}.
/// Throws NoTorsion when t > t0 or the profile is torsion free.
LedgerTerm torsion_transfer_label(const GlobalContext& ctx, const TorsionProfile& profile, int t, const Expr& inf);

/// Torsion contribution to d_{k,n}: zero at k = 0, tau[n] for every k >= 1
/// when t0 is present, zero otherwise. Levels past the end of tau give 0.
std::int64_t torsion_dimension(const TorsionProfile& profile, int k, std::size_t level_index);

}  // namespace htc
