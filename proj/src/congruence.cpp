#include "htc/congruence.hpp"

#include <algorithm>
#include <map>
#include <random>
#include <set>
#include <sstream>

#include "htc/errors.hpp"

namespace htc {

std::string DimensionSymbol::to_string() const {
  return (cls.empty() ? std::string("1") : cls) + " @n=" + std::to_string(level);
}

const DimensionSum& DTable::at(int k, std::size_t level_index) const {
  return entries.at(static_cast<std::size_t>(k)).at(level_index);
}

void validate(const Dataset& ds) {
  const auto& ctx = ds.context;
  std::map<std::string, Cuspidal> labels;
  auto see = [&](const Cuspidal& c, const std::string& where) {
    auto [it, inserted] = labels.emplace(c.id, c);
    if (!inserted && !(it->second == c))
      throw InvariantViolation(where + ": cuspidal label '" + c.id + "' used with different (g, e_pi, modl_class)");
  };
  see(ctx.pi, "context");
  std::set<std::string> ids;
  for (const auto& datum : ds.data) {
    const std::string where = "datum '" + datum.id + "'";
    if (!ids.insert(datum.id).second) throw InvariantViolation(where + ": duplicate id");
    try {
      validate(datum.local);
    } catch (const InvalidArgument& e) {
      throw InvariantViolation(where + ": " + e.what());
    }
    if (datum.m < 1 || datum.d_xi < 1 || datum.inv_dim < 1)
      throw InvariantViolation(where + ": m, d_xi and inv_dim must be >= 1");
    if (datum.local.degree() != ctx.d)
      throw InvariantViolation(where + ": local component has degree " + std::to_string(datum.local.degree()) +
                               ", expected d = " + std::to_string(ctx.d));
    for (const auto& f : datum.local.factors) see(f.base, where);
  }
  validate(ds.torsion);
  if (ds.torsion.t0 && *ds.torsion.t0 > ctx.s_g())
    throw InvariantViolation("torsion profile: t0 = " + std::to_string(*ds.torsion.t0) + " exceeds s_g = " +
                             std::to_string(ctx.s_g()));
  if (ds.torsion.tau.size() != ds.levels.size())
    throw InvariantViolation("torsion profile: tau has " + std::to_string(ds.torsion.tau.size()) +
                             " entries for " + std::to_string(ds.levels.size()) + " levels");
  if (ds.observed && ds.observed->levels != ds.levels)
    throw InvariantViolation("observed table levels differ from the dataset levels");
}

std::string reduced_class(const LocalComponent& local, int k, int r) {
  const Constituent c = constituent(local, DiagramPoint{r, 0}, k);
  return mod_l_reduce(c.label.support()).to_string();
}

DimensionSum formal_oracle(const AutomorphicDatum& datum, int k, int r, int level) {
  return DimensionSum(DimensionSymbol{reduced_class(datum.local, k, r), level});
}

std::vector<int> matching_factors(const AutomorphicDatum& datum, const Cuspidal& pi, int r) {
  std::vector<int> ks;
  for (int k = 1; k <= static_cast<int>(datum.local.factors.size()); ++k) {
    const auto& f = datum.local.factor(k);
    if (inertially_equivalent(f.base, pi) && datum.local.s + f.t - 1 == r) ks.push_back(k);
  }
  return ks;
}

std::vector<AutomorphicDatum> members(const Dataset& ds, const Cuspidal& pi, int r, int s) {
  std::vector<AutomorphicDatum> out;
  for (const auto& datum : ds.data)
    if (datum.local.s == s && !matching_factors(datum, pi, r).empty()) out.push_back(datum);
  return out;
}

int maximal_r(const Dataset& ds, const Cuspidal& pi) {
  int best = 0;
  for (const auto& datum : ds.data)
    for (const auto& f : datum.local.factors)
      if (inertially_equivalent(f.base, pi)) best = std::max(best, datum.local.s + f.t - 1);
  return best;
}

DTable d_sequence(const Dataset& ds, const Cuspidal& pi, int r, const DimensionOracle& oracle) {
  if (r < 1) throw InvalidArgument("d_sequence: r must be >= 1");
  DTable table;
  table.r = r;
  table.levels = ds.levels;
  table.r_is_maximal = maximal_r(ds, pi) == r;
  table.entries.assign(static_cast<std::size_t>(r), std::vector<DimensionSum>(ds.levels.size()));

  for (const auto& datum : ds.data) {
    const int s = datum.local.s;
    if (s > r) continue;
    for (int k : matching_factors(datum, pi, r)) {
      for (std::size_t li = 0; li < ds.levels.size(); ++li) {
        const DimensionSum contribution = datum.weight() * oracle(datum, k, r, ds.levels[li]);
        for (int row = 0; row < s; ++row) table.entries[static_cast<std::size_t>(row)][li] += contribution;
      }
    }
  }
  for (int row = 1; row < r; ++row)
    for (std::size_t li = 0; li < ds.levels.size(); ++li)
      table.entries[static_cast<std::size_t>(row)][li].add(DimensionSymbol{"", ds.levels[li]},
                                                           torsion_dimension(ds.torsion, row, li));
  return table;
}

std::map<std::pair<int, int>, std::int64_t> ContributionSet::weights_at_level(int level) const {
  std::map<std::pair<int, int>, std::int64_t> out;
  for (const auto& [pair, sum] : pairs) {
    std::int64_t w = 0;
    for (const auto& [symbol, c] : sum.terms())
      if (symbol.level == level) w += c;
    if (w != 0) out[pair] = w;
  }
  return out;
}

std::string ContributionSet::to_string() const {
  std::ostringstream os;
  os << "r=" << r << ":";
  for (const auto& [pair, sum] : pairs) os << "\n  (s=" << pair.first << ", t=" << pair.second << "): " << sum.to_string();
  return os.str();
}

ContributionSet contributions(const Dataset& ds, const Cuspidal& pi, int r, const DimensionOracle& oracle) {
  ContributionSet out;
  out.r = r;
  for (const auto& datum : ds.data) {
    const int s = datum.local.s;
    for (int k : matching_factors(datum, pi, r)) {
      const std::pair<int, int> key{s, r - s + 1};
      for (int level : ds.levels) out.pairs[key] += datum.weight() * oracle(datum, k, r, level);
      out.witnesses[key].push_back(datum.id);
    }
  }
  std::erase_if(out.pairs, [](const auto& kv) { return kv.second.is_zero(); });
  return out;
}

ContributionSet infer_B(const DTable& table, const TorsionProfile& torsion) {
  const int r = table.r;
  const std::size_t n_levels = table.levels.size();
  if (static_cast<int>(table.entries.size()) != r)
    throw InconsistentTable("d-table has " + std::to_string(table.entries.size()) + " rows, expected r = " +
                            std::to_string(r));

  // Free parts f_{k,n} after removing the torsion, which only sits at k >= 1.
  std::vector<std::vector<DimensionSum>> free(table.entries.size());
  for (int k = 0; k < r; ++k) {
    const auto& row = table.entries[static_cast<std::size_t>(k)];
    if (row.size() != n_levels) throw InconsistentTable("d-table row " + std::to_string(k) + " has the wrong width");
    for (std::size_t li = 0; li < n_levels; ++li) {
      DimensionSum f = row[li];
      f.add(DimensionSymbol{"", table.levels[li]}, -torsion_dimension(torsion, k, li));
      if (!f.all_nonnegative())
        throw InconsistentTable("negative residue after removing torsion at k=" + std::to_string(k) +
                                ", n=" + std::to_string(table.levels[li]) + ": " + f.to_string());
      free[static_cast<std::size_t>(k)].push_back(std::move(f));
    }
  }

  ContributionSet out;
  out.r = r;
  for (int s = r; s >= 1; --s) {
    DimensionSum weight;
    for (std::size_t li = 0; li < n_levels; ++li) {
      DimensionSum step = free[static_cast<std::size_t>(s - 1)][li];
      if (s < r) step -= free[static_cast<std::size_t>(s)][li];
      if (!step.all_nonnegative())
        throw InconsistentTable("negative difference d_{" + std::to_string(s - 1) + "," +
                                std::to_string(table.levels[li]) + "} - d_{" + std::to_string(s) + "," +
                                std::to_string(table.levels[li]) + "}: " + step.to_string());
      weight += step;
    }
    if (!weight.is_zero()) out.pairs[{s, r - s + 1}] = std::move(weight);
  }
  return out;
}

std::vector<ContributionSet> separate_all(const Dataset& ds, const Cuspidal& pi) {
  std::vector<ContributionSet> out;
  for (int r = maximal_r(ds, pi); r >= 1; --r) out.push_back(infer_B(d_sequence(ds, pi, r), ds.torsion));
  return out;
}

DimensionSum theorem_side(const Dataset& ds, const Cuspidal& pi, int r, int s, const DimensionOracle& oracle) {
  DimensionSum side;
  for (const auto& datum : members(ds, pi, r, s))
    for (int k : matching_factors(datum, pi, r))
      for (int level : ds.levels) side += datum.weight() * oracle(datum, k, r, level);
  return side;
}

Verdict theorem_check(const Dataset& a, const Cuspidal& pi_a, const Dataset& b, const Cuspidal& pi_b, int r, int s,
                      const DimensionOracle& oracle) {
  if (!congruent_mod_l(pi_a, pi_b))
    throw InvalidArgument("theorem_check: " + pi_a.id + " and " + pi_b.id + " have different mod-l classes");
  if (r < 1 || s < 1 || s > r) throw InvalidArgument("theorem_check: need 1 <= s <= r");

  Verdict v;
  for (const auto& [ds, pi, name] : {std::tuple{&a, &pi_a, "A"}, std::tuple{&b, &pi_b, "B"}}) {
    const int best = maximal_r(*ds, *pi);
    if (best != r)
      v.warnings.push_back(std::string("r = ") + std::to_string(r) + " is not maximal for dataset " + name +
                           " (maximal r = " + std::to_string(best) + ")");
  }
  v.lhs = theorem_side(a, pi_a, r, s, oracle);
  v.rhs = theorem_side(b, pi_b, r, s, oracle);
  const DimensionSum diff = v.lhs - v.rhs;
  for (const auto& [symbol, c] : diff.terms())
    v.diffs.push_back(TermDiff{symbol, v.lhs.coefficient(symbol), v.rhs.coefficient(symbol)});
  v.equal = diff.is_zero();
  return v;
}

Dataset substitute(const Dataset& ds, const Cuspidal& from, const Cuspidal& to) {
  Dataset out = ds;
  if (out.context.pi == from) out.context.pi = to;
  for (auto& datum : out.data) datum.local = datum.local.substitute(from, to);
  return out;
}

std::vector<std::pair<int, int>> feasible_pairs(const GlobalContext& ctx, int r) {
  std::vector<std::pair<int, int>> out;
  for (int s = 1; s <= r; ++s) {
    const int t = r - s + 1;
    if (s * t * ctx.g() <= ctx.d) out.emplace_back(s, t);
  }
  return out;
}

namespace {

std::int64_t uniform(std::mt19937_64& rng, std::int64_t lo, std::int64_t hi) {
  return std::uniform_int_distribution<std::int64_t>(lo, hi)(rng);
}

std::vector<std::int64_t> divisors(std::int64_t n) {
  std::vector<std::int64_t> out;
  for (std::int64_t k = 1; k <= n; ++k)
    if (n % k == 0) out.push_back(k);
  return out;
}

/// Splits `total` into 1..max_parts positive parts.
std::vector<std::int64_t> split(std::mt19937_64& rng, std::int64_t total, int max_parts) {
  const auto parts = uniform(rng, 1, std::min<std::int64_t>(max_parts, total));
  std::vector<std::int64_t> out(static_cast<std::size_t>(parts), 1);
  for (std::int64_t rest = total - parts; rest > 0; --rest) out[static_cast<std::size_t>(uniform(rng, 0, parts - 1))]++;
  return out;
}

}  // namespace

Dataset generate_dataset(std::uint64_t seed, const GlobalContext& ctx, const GeneratorConstraints& constraints) {
  if (constraints.r < 1) throw Unsatisfiable("generate_dataset: r must be >= 1");
  for (const auto& sp : constraints.spectators)
    if (inertially_equivalent(sp, ctx.pi)) throw Unsatisfiable("generate_dataset: spectator " + sp.id + " ~ π");

  const auto feasible = feasible_pairs(ctx, constraints.r);
  if (feasible.empty())
    throw Unsatisfiable("generate_dataset: no (s,t) with s+t-1 = " + std::to_string(constraints.r) +
                        " fits in d = " + std::to_string(ctx.d));

  std::mt19937_64 rng(seed);
  std::map<std::pair<int, int>, std::int64_t> target;
  if (constraints.target) {
    for (const auto& [pair, w] : *constraints.target) {
      if (std::find(feasible.begin(), feasible.end(), pair) == feasible.end())
        throw Unsatisfiable("generate_dataset: target pair (" + std::to_string(pair.first) + "," +
                            std::to_string(pair.second) + ") is not feasible");
      if (w < 0) throw Unsatisfiable("generate_dataset: negative target weight");
      if (w > 0) target[pair] = w;
    }
  } else {
    auto pool = feasible;
    std::shuffle(pool.begin(), pool.end(), rng);
    const auto n = uniform(rng, 1, std::min<std::int64_t>(constraints.max_pairs, static_cast<std::int64_t>(pool.size())));
    for (std::int64_t j = 0; j < n; ++j) target[pool[static_cast<std::size_t>(j)]] = uniform(rng, 1, constraints.max_weight);
  }

  Dataset ds;
  ds.context = ctx;
  ds.levels = constraints.levels;
  int serial = 0;
  for (const auto& [pair, total] : target) {
    const auto [s, t] = pair;
    for (std::int64_t w : split(rng, total, constraints.max_data_per_pair)) {
      AutomorphicDatum datum;
      datum.id = "Pi" + std::to_string(serial++);
      datum.satake = "m~" + std::to_string(uniform(rng, 0, 3));
      const auto ds_xi = divisors(w);
      datum.d_xi = ds_xi[static_cast<std::size_t>(uniform(rng, 0, static_cast<std::int64_t>(ds_xi.size()) - 1))];
      const auto inv = divisors(w / datum.d_xi);
      datum.inv_dim = inv[static_cast<std::size_t>(uniform(rng, 0, static_cast<std::int64_t>(inv.size()) - 1))];
      datum.m = w / datum.d_xi / datum.inv_dim;

      datum.local.s = s;
      datum.local.factors.push_back(ComponentFactor{t, ctx.pi});
      int room = ctx.d - s * t * ctx.g();
      if (!constraints.spectators.empty() && uniform(rng, 0, 1) == 1) {
        const auto& sp = constraints.spectators[static_cast<std::size_t>(
            uniform(rng, 0, static_cast<std::int64_t>(constraints.spectators.size()) - 1))];
        const int max_t = room / (s * sp.g);
        if (max_t >= 1) {
          const int t2 = static_cast<int>(uniform(rng, 1, max_t));
          datum.local.factors.push_back(ComponentFactor{t2, sp});
          room -= s * t2 * sp.g;
        }
      }
      if (uniform(rng, 0, 1) == 1) std::shuffle(datum.local.factors.begin(), datum.local.factors.end(), rng);
      if (room > 0) datum.local.wildcard = Wildcard{"?", "", std::nullopt, room, HalfInt{}};
      ds.data.push_back(std::move(datum));
    }
  }
  std::shuffle(ds.data.begin(), ds.data.end(), rng);

  ds.torsion = TorsionProfile::torsion_free(ds.levels.size());
  if (constraints.inject_torsion) {
    ds.torsion.t0 = static_cast<int>(uniform(rng, 1, ctx.s_g()));
    for (auto& tau : ds.torsion.tau) tau = uniform(rng, 0, constraints.max_tau);
  }
  validate(ds);
  return ds;
}

}  // namespace htc
