#include "htc/diagram.hpp"

#include <algorithm>
#include <cstdlib>

#include "htc/errors.hpp"

namespace htc {

void validate(const LocalComponent& c) {
  if (c.s < 1) throw InvalidArgument("local component: s must be >= 1");
  for (const auto& f : c.factors) {
    if (f.t < 1) throw InvalidArgument("local component: every t_k must be >= 1");
    if (f.base.g < 1) throw InvalidArgument("local component: base " + f.base.id + " needs g >= 1");
  }
  if (c.wildcard && c.wildcard->degree < 0) throw InvalidArgument("local component: negative wildcard degree");
}

int LocalComponent::degree() const {
  int total = 0;
  for (const auto& f : factors) total += s * f.t * f.base.g;
  if (wildcard) total += wildcard->degree;
  return total;
}

const ComponentFactor& LocalComponent::factor(int k) const {
  if (k < 1 || k > static_cast<int>(factors.size()))
    throw InvalidArgument("factor index " + std::to_string(k) + " out of range 1.." +
                          std::to_string(factors.size()));
  return factors[static_cast<std::size_t>(k - 1)];
}

Expr LocalComponent::factor_expr(int k) const {
  const auto& f = factor(k);
  return Expr::speh(s, Expr::steinberg(f.t, Expr::cuspidal(f.base)));
}

Expr LocalComponent::expr() const {
  std::vector<Expr> parts;
  for (int k = 1; k <= static_cast<int>(factors.size()); ++k) parts.push_back(factor_expr(k));
  if (wildcard) parts.push_back(Expr::opaque(*wildcard));
  return Expr::product(std::move(parts));
}

LocalComponent LocalComponent::substitute(const Cuspidal& from, const Cuspidal& to) const {
  LocalComponent out = *this;
  for (auto& f : out.factors)
    if (f.base == from) f.base = to;
  if (out.wildcard && out.wildcard->base && *out.wildcard->base == from) out.wildcard->base = to;
  return out;
}

std::vector<DiagramPoint> Diagram::points() const {
  std::vector<DiagramPoint> out;
  out.reserve(annotations_.size());
  for (const auto& [p, ks] : annotations_) out.push_back(p);
  return out;
}

const std::vector<int>& Diagram::factors_at(DiagramPoint p) const {
  static const std::vector<int> kNone;
  auto it = annotations_.find(p);
  return it == annotations_.end() ? kNone : it->second;
}

namespace {

bool same_parity(int a, int b) { return ((a - b) % 2 + 2) % 2 == 0; }

}  // namespace

int m_indicator(int s, int t, int r, int i) {
  if (s < 1 || t < 1) throw InvalidArgument("m_indicator: s and t must be >= 1");
  const int top = s + t - 1;
  const int bottom = std::max(1, top - 2 * (s - 1));
  if (r < bottom || r > top) return 0;
  if (r >= t) {
    if (std::abs(i) > top - r || !same_parity(i, top - r)) return 0;
  }
  if (r <= t) {
    if (std::abs(i) > s - 1 - (t - r) || !same_parity(i, s - t - 1 + r)) return 0;
  }
  return 1;
}

Diagram diagram(int s, int t) {
  if (s < 1 || t < 1) throw InvalidArgument("diagram: s and t must be >= 1");
  Diagram d;
  for (int r = 1; r <= s + t - 1; ++r)
    for (int i = -(s - 1); i <= s - 1; ++i)
      if (m_indicator(s, t, r, i) == 1) d.annotate({r, i}, 1);
  return d;
}

Diagram superpose(const LocalComponent& c) {
  validate(c);
  Diagram out;
  for (int k = 1; k <= static_cast<int>(c.factors.size()); ++k)
    for (const auto& p : diagram(c.s, c.factor(k).t).points()) out.annotate(p, k);
  return out;
}

std::vector<DiagramPoint> extreme_points(const Diagram& d) {
  std::vector<DiagramPoint> pts = d.points();  // sorted by (r, i)
  if (pts.size() <= 2) return pts;

  auto cross = [](DiagramPoint o, DiagramPoint a, DiagramPoint b) {
    return static_cast<long long>(a.r - o.r) * (b.i - o.i) - static_cast<long long>(a.i - o.i) * (b.r - o.r);
  };
  // Andrew's monotone chain; non-left turns are popped so collinear points drop.
  std::vector<DiagramPoint> hull(2 * pts.size());
  std::size_t k = 0;
  for (const auto& p : pts) {
    while (k >= 2 && cross(hull[k - 2], hull[k - 1], p) <= 0) --k;
    hull[k++] = p;
  }
  for (std::size_t j = pts.size() - 1, lower = k + 1; j-- > 0;) {
    while (k >= lower && cross(hull[k - 2], hull[k - 1], pts[j]) <= 0) --k;
    hull[k++] = pts[j];
  }
  hull.resize(k - 1);
  std::sort(hull.begin(), hull.end());
  hull.erase(std::unique(hull.begin(), hull.end()), hull.end());
  return hull;
}

namespace {

void require_annotated(const LocalComponent& c, DiagramPoint p, int k) {
  const auto& f = c.factor(k);
  if (m_indicator(c.s, f.t, p.r, p.i) != 1)
    throw InvalidArgument("factor " + std::to_string(k) + " does not contribute at (" + std::to_string(p.r) + "," +
                          std::to_string(p.i) + ")");
}

}  // namespace

std::optional<DiagramPoint> trace_back(const LocalComponent& c, DiagramPoint p, int k) {
  validate(c);
  require_annotated(c, p, k);
  const int origin = c.s + c.factor(k).t - 1;
  if (origin > p.r) return DiagramPoint{origin, 0};
  return std::nullopt;
}

Expr r_symbol(const Cuspidal& base, int s, int t, int r, int i) {
  Wildcard w;
  w.name = "R";
  w.base = base;
  w.args = "(" + std::to_string(s) + "," + std::to_string(t) + ")(" + std::to_string(r) + "," + std::to_string(i) + ")";
  w.degree = (s * t - r) * base.g;
  return Expr::opaque(std::move(w));
}

std::string Constituent::to_string_with_markers() const {
  return label.to_string() + " ⊗ ξ_" + std::to_string(factor) + " ⊗ Ξ^{" + xi_power.to_string() + "}";
}

Constituent Constituent::substitute(const Cuspidal& from, const Cuspidal& to) const {
  Constituent out = *this;
  out.label = label.substitute(from, to);
  return out;
}

Constituent constituent(const LocalComponent& c, DiagramPoint p, int k) {
  validate(c);
  require_annotated(c, p, k);
  std::vector<Expr> parts;
  for (int j = 1; j <= static_cast<int>(c.factors.size()); ++j) {
    if (j == k) {
      parts.push_back(r_symbol(c.factor(j).base, c.s, c.factor(j).t, p.r, p.i));
    } else {
      parts.push_back(c.factor_expr(j));
    }
  }
  if (c.wildcard) parts.push_back(Expr::opaque(*c.wildcard));
  return Constituent{Expr::product(std::move(parts)), k, p, HalfInt::half(p.i), p.r * c.factor(k).base.g};
}

}  // namespace htc
