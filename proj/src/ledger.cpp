#include "htc/ledger.hpp"

#include <numeric>

#include "htc/errors.hpp"

namespace htc {

Rational Rational::make(std::int64_t num, std::int64_t den) {
  if (den == 0) throw InvalidArgument("rational with zero denominator");
  if (den < 0) {
    num = -num;
    den = -den;
  }
  const std::int64_t g = std::gcd(num, den);
  return Rational{num / g, den / g};
}

Rational Rational::parse(const std::string& text) {
  try {
    const auto slash = text.find('/');
    std::size_t used = 0;
    if (slash == std::string::npos) {
      const auto n = std::stoll(text, &used);
      if (used != text.size()) throw InvalidArgument("bad rational '" + text + "'");
      return make(n, 1);
    }
    const std::string a = text.substr(0, slash);
    const std::string b = text.substr(slash + 1);
    const auto n = std::stoll(a, &used);
    if (used != a.size()) throw InvalidArgument("bad rational '" + text + "'");
    const auto d = std::stoll(b, &used);
    if (used != b.size()) throw InvalidArgument("bad rational '" + text + "'");
    return make(n, d);
  } catch (const std::logic_error&) {
    throw InvalidArgument("bad rational '" + text + "'");
  }
}

std::string Rational::to_string() const {
  return den == 1 ? std::to_string(num) : std::to_string(num) + "/" + std::to_string(den);
}

GlobalContext make_context(int d, Cuspidal pi, Rational kappa) {
  if (pi.g < 1) throw InvalidArgument("context: g must be >= 1");
  if (d < pi.g) throw InvalidArgument("context: need d >= g");
  if (kappa.num <= 0 || kappa.den <= 0) throw InvalidArgument("context: kappa must be positive");
  return GlobalContext{d, std::move(pi), kappa};
}

int LedgerTerm::levi_degree(const GlobalContext& ctx) const {
  return infinitesimal.degree() + (ctx.d - stratum * ctx.g());
}

std::string LedgerTerm::to_string(const GlobalContext& ctx) const {
  std::string out = kind == LedgerKind::shriek ? "j_!^{=" : "j_!*^{=";
  out += std::to_string(stratum) + "} HT(" + ctx.pi.id + ", " + infinitesimal.to_string() + ")";
  if (xi_power != HalfInt{}) out += " ⊗ Ξ^{" + xi_power.to_string() + "}";
  if (tate != HalfInt{}) out += "(" + tate.to_string() + ")";
  return out;
}

void check_invariant(const GlobalContext& ctx, const LedgerTerm& term) {
  if (term.stratum < 1 || term.stratum > ctx.s_g())
    throw InvariantViolation("ledger term stratum " + std::to_string(term.stratum) + " outside 1.." +
                             std::to_string(ctx.s_g()));
  const int deg = term.infinitesimal.degree();
  if (deg != term.stratum * ctx.g())
    throw InvariantViolation("ledger term " + term.to_string(ctx) + ": infinitesimal degree " + std::to_string(deg) +
                             " != stratum·g = " + std::to_string(term.stratum * ctx.g()));
}

Expr infinitesimal_placeholder(const GlobalContext& ctx, int t) {
  Wildcard w;
  w.name = "Π_" + std::to_string(t);
  w.degree = t * ctx.g();
  return Expr::opaque(std::move(w));
}

namespace {

void check_inputs(const GlobalContext& ctx, int t, const Expr& inf) {
  if (t < 1 || t > ctx.s_g())
    throw InvalidArgument("t = " + std::to_string(t) + " outside 1..s_g = " + std::to_string(ctx.s_g()));
  const int deg = inf.degree();
  if (deg != t * ctx.g())
    throw InvariantViolation("infinitesimal part " + inf.to_string() + " has degree " + std::to_string(deg) +
                             ", expected t·g = " + std::to_string(t * ctx.g()));
}

Expr pi_expr(const GlobalContext& ctx) { return Expr::cuspidal(ctx.pi); }

LedgerTerm resolution_term(const GlobalContext& ctx, int t, int delta, const Expr& inf) {
  LedgerTerm term;
  term.kind = LedgerKind::shriek;
  term.stratum = t + delta;
  term.infinitesimal = Expr::twisted(inf, HalfInt::half(-delta)) *
                       Expr::speh(delta, Expr::twisted(pi_expr(ctx), HalfInt::half(t)));
  term.xi_power = HalfInt::half(delta);
  term.sign = delta % 2 == 0 ? 1 : -1;
  check_invariant(ctx, term);
  return term;
}

}  // namespace

std::vector<LedgerTerm> resolution_terms(const GlobalContext& ctx, int t, const Expr& inf) {
  check_inputs(ctx, t, inf);
  std::vector<LedgerTerm> terms;
  for (int delta = 0; delta <= ctx.s_g() - t; ++delta) terms.push_back(resolution_term(ctx, t, delta, inf));
  LedgerTerm augmentation{LedgerKind::intermediate, t, inf, {}, {}, 1};
  check_invariant(ctx, augmentation);
  terms.push_back(std::move(augmentation));
  return terms;
}

std::vector<LedgerTerm> filtration_graded(const GlobalContext& ctx, int t, const Expr& inf) {
  check_inputs(ctx, t, inf);
  std::vector<LedgerTerm> parts;
  for (int delta = 0; delta <= ctx.s_g() - t; ++delta) {
    LedgerTerm term;
    term.kind = LedgerKind::intermediate;
    term.stratum = t + delta;
    term.infinitesimal = Expr::product({inf, Expr::steinberg(delta, pi_expr(ctx))}, /*ordered=*/true);
    term.tate = HalfInt::half(delta);
    check_invariant(ctx, term);
    parts.push_back(std::move(term));
  }
  return parts;
}

std::string AdjunctionArrow::stripped() const {
  return strip_infinitesimal(induced, xi_power, t, delta, inf);
}

AdjunctionArrow adjunction_label(const GlobalContext& ctx, int t, int delta, const Expr& inf) {
  check_inputs(ctx, t, inf);
  if (delta < 1 || delta > ctx.s_g() - t)
    throw InvalidArgument("δ = " + std::to_string(delta) + " outside 1..s_g - t = " + std::to_string(ctx.s_g() - t));

  const Expr pi = pi_expr(ctx);
  AdjunctionArrow arrow;
  arrow.source = resolution_term(ctx, t, delta, inf);
  arrow.target = resolution_term(ctx, t, delta - 1, inf);
  arrow.relative = Expr::speh(delta - 1, Expr::twisted(pi, HalfInt::half(-1))) *
                   Expr::twisted(pi, HalfInt::half(delta - 1));
  arrow.induced = Expr::twisted(inf, HalfInt::half(1 - delta)) * Expr::twisted(arrow.relative, HalfInt::half(t));
  arrow.xi_power = HalfInt::half(delta);
  arrow.stratum = t + delta;
  arrow.t = t;
  arrow.delta = delta;
  arrow.inf = inf;

  if (arrow.induced.degree() != arrow.stratum * ctx.g())
    throw InvariantViolation("induced label " + arrow.induced.to_string() + " has the wrong degree");
  // The restriction carries the same cuspidal support as the source's Speh part.
  const Multisegment moved = twist(arrow.relative.support(), HalfInt::half(t));
  const Multisegment expected = Expr::speh(delta, Expr::twisted(pi, HalfInt::half(t))).support();
  if (!(moved == expected))
    throw InvariantViolation("induced label support " + moved.to_string() + " differs from " + expected.to_string());
  return arrow;
}

std::string strip_infinitesimal(const Expr& induced, HalfInt xi_power, int t, int delta, const Expr& inf) {
  if (induced.kind() != Expr::Kind::product || induced.ordered() || induced.children().size() < 2)
    throw InvariantViolation("induced label " + induced.to_string() + " is not a product");
  const auto& parts = induced.children();
  const Expr& tail = parts.back();
  if (tail.kind() != Expr::Kind::twist || tail.twist_amount() != HalfInt::half(t))
    throw InvariantViolation("induced label " + induced.to_string() + " lacks the {t/2} normaliser");
  const Expr head = Expr::product(std::vector<Expr>(parts.begin(), parts.end() - 1));
  if (!(head == Expr::twisted(inf, HalfInt::half(1 - delta))))
    throw InvariantViolation("induced label " + induced.to_string() + " does not start with the infinitesimal part");
  return tail.children().front().to_string() + " ⊗ Ξ^{" + xi_power.to_string() + "}";
}

std::string LedgerKey::to_string() const {
  std::string out = kind == LedgerKind::shriek ? "j_!^{=" : "j_!*^{=";
  out += std::to_string(stratum) + "} " + label;
  if (xi_power != HalfInt{}) out += " ⊗ Ξ^{" + xi_power.to_string() + "}";
  if (tate != HalfInt{}) out += "(" + tate.to_string() + ")";
  return out;
}

LedgerKey key_of(const LedgerTerm& term) {
  return LedgerKey{term.kind, term.stratum, term.infinitesimal.to_string(), term.xi_power, term.tate};
}

GrothSum to_sum(const std::vector<LedgerTerm>& terms) {
  GrothSum sum;
  for (const auto& term : terms) sum.add(key_of(term), term.sign);
  return sum;
}

GrothSum expand_shriek(const GlobalContext& ctx, int t, const Expr& inf) {
  return to_sum(filtration_graded(ctx, t, inf));
}

GrothSum expand_resolution(const GlobalContext& ctx, int t, const Expr& inf) {
  GrothSum sum;
  for (const auto& term : resolution_terms(ctx, t, inf)) {
    if (term.kind != LedgerKind::shriek) continue;
    sum += term.sign * expand_shriek(ctx, term.stratum, term.infinitesimal);
  }
  return sum;
}

std::map<int, GrothSum> group_by_stratum(const GrothSum& sum) {
  std::map<int, GrothSum> groups;
  for (const auto& [key, c] : sum.terms()) groups[key.stratum].add(key, c);
  return groups;
}

}  // namespace htc
