#pragma once

#include <memory>
#include <string>
#include <vector>

#include "htc/half_int.hpp"
#include "htc/zelevinsky.hpp"

namespace htc {

/// Formal label of a representation, kept in the shape it is written in
/// (Speh_δ(π{t/2}), Π_t{-1/2} × π{1}, ...) next to its Zelevinsky support.
///
/// Factories normalise: Speh_0/St_0 are the unit, Speh_1/St_1 are the
/// identity, zero twists vanish, nested twists add, nested products of the
/// same kind flatten and unit factors drop. Two labels denoting the same
/// representation may still print differently (Speh_2(π{1}) vs
/// Speh_2(π){1}); equality is structural.
class Expr {
 public:
  enum class Kind { unit, cuspidal, opaque, steinberg, speh, twist, product };

  Expr();  // the unit (empty product)

  static Expr cuspidal(const Cuspidal& pi);
  static Expr opaque(Wildcard w);
  static Expr steinberg(int t, Expr inner);
  static Expr speh(int s, Expr inner);
  static Expr twisted(Expr inner, HalfInt n);
  /// `ordered` marks the ×→ product.
  static Expr product(std::vector<Expr> factors, bool ordered = false);

  Kind kind() const;
  bool is_unit() const { return kind() == Kind::unit; }
  const std::vector<Expr>& children() const;
  HalfInt twist_amount() const;
  int index() const;
  bool ordered() const;
  const Cuspidal& cuspidal_label() const;
  const Wildcard& wildcard() const;

  std::string to_string() const;
  Multisegment support() const;
  int degree() const { return support().degree(); }

  Expr substitute(const Cuspidal& from, const Cuspidal& to) const;
  Expr reduce_mod_l() const;

  friend bool operator==(const Expr& a, const Expr& b);

 private:
  struct Node;
  explicit Expr(std::shared_ptr<const Node> node);
  std::shared_ptr<const Node> node_;
};

Expr operator*(const Expr& a, const Expr& b);

}  // namespace htc
