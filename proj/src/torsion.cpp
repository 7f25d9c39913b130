#include "htc/torsion.hpp"

#include "htc/errors.hpp"

namespace htc {

void validate(const TorsionProfile& profile) {
  for (auto tau : profile.tau)
    if (tau < 0) throw InvariantViolation("torsion profile: negative tau");
  if (profile.t0) {
    if (*profile.t0 < 1) throw InvariantViolation("torsion profile: t0 must be >= 1");
    return;
  }
  for (auto tau : profile.tau)
    if (tau != 0) throw InvariantViolation("torsion profile: t0 is absent but tau is nonzero");
}

std::optional<int> i_of_t(const TorsionProfile& profile, int t) {
  if (t < 1) throw InvalidArgument("i_of_t: t must be >= 1");
  if (!profile.t0 || t > *profile.t0) return std::nullopt;
  return t - *profile.t0;
}

LedgerTerm torsion_transfer_label(const GlobalContext& ctx, const TorsionProfile& profile, int t, const Expr& inf) {
  if (!profile.t0) throw NoTorsion("torsion_transfer_label: the profile is torsion free");
  const int t0 = *profile.t0;
  if (t < 1 || t > t0)
    throw NoTorsion("torsion_transfer_label: t = " + std::to_string(t) + " is above t0 = " + std::to_string(t0));
  if (t0 > ctx.s_g()) throw InvariantViolation("torsion profile: t0 exceeds s_g");
  if (inf.degree() != t * ctx.g()) throw InvariantViolation("torsion_transfer_label: infinitesimal degree != t·g");

  LedgerTerm term;
  term.kind = LedgerKind::intermediate;
  term.stratum = t0;
  term.infinitesimal = Expr::twisted(inf, HalfInt::half(t0 - t)) *
                       Expr::twisted(Expr::speh(t0 - t, Expr::cuspidal(ctx.pi)), HalfInt::half(t));
  term.xi_power = HalfInt::half(t - t0);
  check_invariant(ctx, term);
  return term;
}

std::int64_t torsion_dimension(const TorsionProfile& profile, int k, std::size_t level_index) {
  if (k < 0) throw InvalidArgument("torsion_dimension: k must be >= 0");
  if (k == 0 || !profile.t0 || level_index >= profile.tau.size()) return 0;
  return profile.tau[level_index];
}

}  // namespace htc
