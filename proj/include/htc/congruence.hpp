#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "htc/diagram.hpp"
#include "htc/formal_sum.hpp"
#include "htc/ledger.hpp"
#include "htc/torsion.hpp"

namespace htc {

/// One automorphic representation Π as seen by the congruence engine: its
/// local component at v, multiplicity m(Π), d_ξ(Π_∞), dim (Π^{∞,v})^{I^v} and
/// the label of the Hecke ideal it lifts.
struct AutomorphicDatum {
  std::string id;
  LocalComponent local;
  std::int64_t m = 1;
  std::int64_t d_xi = 1;
  std::int64_t inv_dim = 1;
  std::string satake;

  std::int64_t weight() const { return m * d_xi * inv_dim; }
  friend bool operator==(const AutomorphicDatum&, const AutomorphicDatum&) = default;
};

/// Formal dim_{F_l,n} of a mod-l class at level n. The empty class is the
/// scalar symbol: plain integers (torsion dimensions, integer oracles) are
/// multiples of it.
struct DimensionSymbol {
  std::string cls;
  int level = 0;

  std::string to_string() const;
  friend auto operator<=>(const DimensionSymbol&, const DimensionSymbol&) = default;
};

using DimensionSum = FormalSum<DimensionSymbol>;

/// d_{k,n} for k = 0..r-1 and the dataset's levels.
struct DTable {
  int r = 1;
  std::vector<int> levels;
  std::vector<std::vector<DimensionSum>> entries;  // [k][level index]
  bool r_is_maximal = true;

  const DimensionSum& at(int k, std::size_t level_index) const;
  friend bool operator==(const DTable& a, const DTable& b) {
    return a.r == b.r && a.levels == b.levels && a.entries == b.entries;
  }
};

struct Dataset {
  GlobalContext context;
  std::vector<AutomorphicDatum> data;
  TorsionProfile torsion;
  std::vector<int> levels;
  std::optional<DTable> observed;  // measured d_{k,n}, checked against the torsion profile
};

/// Throws InvariantViolation on: a datum whose local degree differs from d,
/// nonpositive counts, inconsistent cuspidal labels, a torsion profile that
/// breaks its invariants, has t0 > s_g or a tau list not matching the levels.
void validate(const Dataset& ds);

/// Maps (datum, matching factor k, r, level) to the dimension it contributes.
using DimensionOracle = std::function<DimensionSum(const AutomorphicDatum&, int, int, int)>;

/// Canonical key of the mod-l reduction of the constituent of `local` at the
/// vertex (r, 0) for factor k: the model of r_l(R_π(r,r)(Π_v)).
std::string reduced_class(const LocalComponent& local, int k, int r);

/// One formal symbol per (reduced class, level).
DimensionSum formal_oracle(const AutomorphicDatum& datum, int k, int r, int level);

/// Factors k of the datum with base inertially equivalent to pi and
/// s + t_k - 1 = r.
std::vector<int> matching_factors(const AutomorphicDatum& datum, const Cuspidal& pi, int r);

/// Data whose local component is Speh_s(St_t(π')) × ? with π' ~ π and
/// r = s + t - 1. Each datum appears once.
std::vector<AutomorphicDatum> members(const Dataset& ds, const Cuspidal& pi, int r, int s);

/// Largest r with a nonempty member set, or 0.
int maximal_r(const Dataset& ds, const Cuspidal& pi);

/// d_{k,n}: every member with s rows adds weight × oracle at k = 0..s-1, and
/// the torsion profile adds tau_n at every k >= 1.
DTable d_sequence(const Dataset& ds, const Cuspidal& pi, int r, const DimensionOracle& oracle = formal_oracle);

/// The (s, t) pairs found at r, with their weights as dimension sums.
struct ContributionSet {
  int r = 1;
  std::map<std::pair<int, int>, DimensionSum> pairs;
  std::map<std::pair<int, int>, std::vector<std::string>> witnesses;

  std::map<std::pair<int, int>, std::int64_t> weights_at_level(int level) const;
  std::string to_string() const;

  /// Witness ids are not compared.
  friend bool operator==(const ContributionSet& a, const ContributionSet& b) {
    return a.r == b.r && a.pairs == b.pairs;
  }
};

/// Reads the pairs straight off the data (with witness ids).
ContributionSet contributions(const Dataset& ds, const Cuspidal& pi, int r,
                              const DimensionOracle& oracle = formal_oracle);

/// Removes the torsion contribution (k >= 1) and peels: d_{s-1,n} - d_{s,n}
/// is the weight of the pair (s, r - s + 1). Throws InconsistentTable on a
/// negative residue.
ContributionSet infer_B(const DTable& table, const TorsionProfile& torsion);

/// The single-r peel run for r = maximal_r down to 1. Each step only sees the
/// members at its own r.
std::vector<ContributionSet> separate_all(const Dataset& ds, const Cuspidal& pi);

struct TermDiff {
  DimensionSymbol symbol;
  std::int64_t lhs = 0;
  std::int64_t rhs = 0;
};

struct Verdict {
  bool equal = false;
  DimensionSum lhs;
  DimensionSum rhs;
  std::vector<TermDiff> diffs;
  std::vector<std::string> warnings;
};

/// Σ m·d_ξ·dim(Π^{∞,v})^{I^v}·[r_l(R_π(r,r)(Π_v)), n] over members(ds, pi, r, s).
DimensionSum theorem_side(const Dataset& ds, const Cuspidal& pi, int r, int s,
                          const DimensionOracle& oracle = formal_oracle);

/// Compares both sides of the congruence identity. Requires pi_a and pi_b to
/// share their mod-l class (InvalidArgument otherwise). A non-maximal r is
/// reported as a warning and the check still runs.
Verdict theorem_check(const Dataset& a, const Cuspidal& pi_a, const Dataset& b, const Cuspidal& pi_b, int r, int s,
                      const DimensionOracle& oracle = formal_oracle);

/// Replaces every base equal to `from` (data, context) by `to`.
Dataset substitute(const Dataset& ds, const Cuspidal& from, const Cuspidal& to);

struct GeneratorConstraints {
  int r = 3;
  int max_pairs = 6;
  int max_data_per_pair = 2;
  std::int64_t max_weight = 12;
  std::vector<int> levels{0, 1, 2};
  bool inject_torsion = false;
  std::int64_t max_tau = 5;
  /// Bases for extra factors; must not be inertially equivalent to ctx.pi.
  std::vector<Cuspidal> spectators;
  /// Prescribed integer weight per (s, t); pairs are drawn at random if unset.
  std::optional<std::map<std::pair<int, int>, std::int64_t>> target;
};

/// (s, r - s + 1) pairs whose ladder fits in degree d.
std::vector<std::pair<int, int>> feasible_pairs(const GlobalContext& ctx, int r);

/// Deterministic in (seed, ctx, constraints). Throws Unsatisfiable when no
/// (s, t) with s + t - 1 = r fits in degree d, or the target asks for one
/// that does not.
Dataset generate_dataset(std::uint64_t seed, const GlobalContext& ctx, const GeneratorConstraints& constraints);

}  // namespace htc
