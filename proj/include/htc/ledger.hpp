#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "htc/expr.hpp"
#include "htc/formal_sum.hpp"
#include "htc/zelevinsky.hpp"

namespace htc {

/// Positive rational, kept reduced.
struct Rational {
  std::int64_t num = 1;
  std::int64_t den = 1;

  static Rational make(std::int64_t num, std::int64_t den);
  static Rational parse(const std::string& text);  // "3", "3/4"
  std::string to_string() const;
  friend bool operator==(const Rational&, const Rational&) = default;
};

/// d, the cuspidal π of GL_g, s_g = floor(d/g) and the multiplicity prefactor
/// κ = e_π·#Ker^1(Q,G)/d (opaque, carried for reporting only).
struct GlobalContext {
  int d = 1;
  Cuspidal pi;
  Rational kappa;

  int g() const { return pi.g; }
  int s_g() const { return d / pi.g; }
};

GlobalContext make_context(int d, Cuspidal pi, Rational kappa = {});

enum class LedgerKind { shriek, intermediate };

/// j_!^{=h} HT(π, X) or j_!*^{=h} HT(π, X), with Ξ-power, Tate twist and sign.
/// Invariant: degree(X) = stratum·g.
struct LedgerTerm {
  LedgerKind kind = LedgerKind::shriek;
  int stratum = 1;
  Expr infinitesimal;
  HalfInt xi_power;
  HalfInt tate;
  int sign = 1;

  Multisegment support() const { return infinitesimal.support(); }
  /// degree(X) + (d - stratum·g): the size of the Levi GL_{hg} × GL_{d-hg}.
  /// Equals d exactly when the invariant holds.
  int levi_degree(const GlobalContext& ctx) const;

  /// "j_!^{=3} HT(π, Π_2{-1/2} × π{1}) ⊗ Ξ^{1/2}"
  std::string to_string(const GlobalContext& ctx) const;

  friend bool operator==(const LedgerTerm&, const LedgerTerm&) = default;
};

/// Throws InvariantViolation unless degree(infinitesimal) = stratum·g <= d.
void check_invariant(const GlobalContext& ctx, const LedgerTerm& term);

/// Default infinitesimal part Π_t: an opaque label of degree t·g.
Expr infinitesimal_placeholder(const GlobalContext& ctx, int t);

/// Terms of the resolution of j_!*^{=t} HT(π, inf): for δ = 0..s_g - t the
/// shriek term at stratum t+δ with infinitesimal inf{-δ/2} × Speh_δ(π{t/2}),
/// Ξ^{δ/2} and sign (-1)^δ, followed by the intermediate extension at t.
std::vector<LedgerTerm> resolution_terms(const GlobalContext& ctx, int t, const Expr& inf);

/// Graded parts of the filtration of j_!^{=t} HT(π, inf): for δ = 0..s_g - t,
/// the intermediate extension at t+δ of inf ×→ St_δ(π) with Tate twist δ/2.
std::vector<LedgerTerm> filtration_graded(const GlobalContext& ctx, int t, const Expr& inf);

/// The δ-th arrow of the resolution together with the label of its
/// restriction to stratum t+δ:
///   inf{(1-δ)/2} × (Speh_{δ-1}(π{-1/2}) × π{(δ-1)/2}){t/2} ⊗ Ξ^{δ/2}.
struct AdjunctionArrow {
  LedgerTerm source;
  LedgerTerm target;
  Expr induced;   // the full label
  Expr relative;  // Speh_{δ-1}(π{-1/2}) × π{(δ-1)/2}
  HalfInt xi_power;
  int stratum = 1;
  int t = 1;
  int delta = 1;
  Expr inf;

  /// Label with the infinitesimal factor and its {t/2} normaliser removed.
  std::string stripped() const;
};

AdjunctionArrow adjunction_label(const GlobalContext& ctx, int t, int delta, const Expr& inf);

/// Strips the infinitesimal part from an induced label built for (t, inf).
/// Throws InvariantViolation when the label does not have the
/// inf' × (relative){t/2} shape.
std::string strip_infinitesimal(const Expr& induced, HalfInt xi_power, int t, int delta, const Expr& inf);

/// Totally ordered key for ledger sums (sign folded into the coefficient).
struct LedgerKey {
  LedgerKind kind = LedgerKind::intermediate;
  int stratum = 1;
  std::string label;
  HalfInt xi_power;
  HalfInt tate;

  std::string to_string() const;
  friend auto operator<=>(const LedgerKey&, const LedgerKey&) = default;
};

LedgerKey key_of(const LedgerTerm& term);

using GrothSum = FormalSum<LedgerKey>;

GrothSum to_sum(const std::vector<LedgerTerm>& terms);

/// [j_!^{=t} HT(π, inf)] rewritten through the filtration as the sum of its
/// graded parts.
GrothSum expand_shriek(const GlobalContext& ctx, int t, const Expr& inf);

/// Every shriek term of the resolution expanded with expand_shriek, with the
/// resolution signs. The augmentation term is not included.
GrothSum expand_resolution(const GlobalContext& ctx, int t, const Expr& inf);

std::map<int, GrothSum> group_by_stratum(const GrothSum& sum);

}  // namespace htc
