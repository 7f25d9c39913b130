#pragma once

#include <compare>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "htc/expr.hpp"
#include "htc/zelevinsky.hpp"

namespace htc {

/// (r, i): stratum index r (the sheaf lives on the stratum of rank rg) and
/// cohomological degree i.
struct DiagramPoint {
  int r = 1;
  int i = 0;
  friend auto operator<=>(const DiagramPoint&, const DiagramPoint&) = default;
  friend bool operator==(const DiagramPoint&, const DiagramPoint&) = default;
};

struct ComponentFactor {
  int t = 1;
  Cuspidal base;
  friend bool operator==(const ComponentFactor&, const ComponentFactor&) = default;
};

/// Speh_s(St_{t_1}(π_1) × ... × St_{t_u}(π_u)) × ?, with factors numbered
/// 1..u in the order given.
struct LocalComponent {
  int s = 1;
  std::vector<ComponentFactor> factors;
  std::optional<Wildcard> wildcard;

  int degree() const;
  std::size_t size() const { return factors.size(); }
  const ComponentFactor& factor(int k) const;  // 1-based

  /// Speh_s(St_{t_k}(π_k)).
  Expr factor_expr(int k) const;
  Expr expr() const;

  LocalComponent substitute(const Cuspidal& from, const Cuspidal& to) const;

  friend bool operator==(const LocalComponent&, const LocalComponent&) = default;
};

/// Throws InvalidArgument on s < 1, t_k < 1 or a negative wildcard degree.
void validate(const LocalComponent& c);

/// Points annotated with the (1-based) factors whose diagram contains them.
class Diagram {
 public:
  using Annotations = std::map<DiagramPoint, std::vector<int>>;

  Diagram() = default;
  explicit Diagram(Annotations annotations) : annotations_(std::move(annotations)) {}

  void annotate(DiagramPoint p, int k) { annotations_[p].push_back(k); }

  const Annotations& annotations() const { return annotations_; }
  std::vector<DiagramPoint> points() const;
  std::size_t size() const { return annotations_.size(); }
  bool contains(DiagramPoint p) const { return annotations_.count(p) != 0; }
  const std::vector<int>& factors_at(DiagramPoint p) const;

  friend bool operator==(const Diagram&, const Diagram&) = default;

 private:
  Annotations annotations_;
};

/// m_{s,t}(r, i) in {0, 1}.
int m_indicator(int s, int t, int r, int i);

/// All (r, i) with m_{s,t}(r, i) = 1, each annotated with factor 1.
Diagram diagram(int s, int t);

Diagram superpose(const LocalComponent& c);

/// Vertices of the convex hull of the diagram's points (collinear boundary
/// points excluded), sorted.
std::vector<DiagramPoint> extreme_points(const Diagram& d);

/// The vertex (s + t_k - 1, 0) the constituent at p comes from, or nothing
/// when it does not come from a higher stratum. Throws InvalidArgument when
/// factor k does not contribute at p.
std::optional<DiagramPoint> trace_back(const LocalComponent& c, DiagramPoint p, int k);

/// Π_v with its k-th factor replaced by R_{π_k}(s,t_k)(r,i), tensored with
/// ξ_k ⊗ Ξ^{i/2}.
struct Constituent {
  Expr label;
  int factor = 1;
  DiagramPoint point;
  HalfInt xi_power;
  int slot_degree = 0;  // r·g_k, the degree of the Π_r slot

  int degree() const { return label.degree() + slot_degree; }
  /// Label alone, e.g. "Speh_4(π) × R_{π}(4,3)(4,0) × Speh_4(St_5(π))".
  std::string to_string() const { return label.to_string(); }
  /// Label with the character markers: "... ⊗ ξ_2 ⊗ Ξ^{0}".
  std::string to_string_with_markers() const;
  Constituent substitute(const Cuspidal& from, const Cuspidal& to) const;

  friend bool operator==(const Constituent&, const Constituent&) = default;
};

/// The opaque R_{π}(s,t)(r,i) symbol, of degree (st - r)·g.
Expr r_symbol(const Cuspidal& base, int s, int t, int r, int i);

Constituent constituent(const LocalComponent& c, DiagramPoint p, int k);

}  // namespace htc
