#include "htc/expr.hpp"

#include <functional>

#include "htc/errors.hpp"

namespace htc {

struct Expr::Node {
  Kind kind = Kind::unit;
  Cuspidal cusp;
  Wildcard wild;
  int index = 0;
  HalfInt twist;
  bool ordered = false;
  std::vector<Expr> children;
};

namespace {

const char* const kTimes = " × ";
const char* const kOrderedTimes = " ×→ ";

}  // namespace

Expr::Expr() : node_(std::make_shared<const Node>()) {}
Expr::Expr(std::shared_ptr<const Node> node) : node_(std::move(node)) {}

Expr::Kind Expr::kind() const { return node_->kind; }
const std::vector<Expr>& Expr::children() const { return node_->children; }
HalfInt Expr::twist_amount() const { return node_->twist; }
int Expr::index() const { return node_->index; }
bool Expr::ordered() const { return node_->ordered; }
const Cuspidal& Expr::cuspidal_label() const { return node_->cusp; }
const Wildcard& Expr::wildcard() const { return node_->wild; }

Expr Expr::cuspidal(const Cuspidal& pi) {
  auto n = std::make_shared<Node>();
  n->kind = Kind::cuspidal;
  n->cusp = pi;
  return Expr(std::move(n));
}

Expr Expr::opaque(Wildcard w) {
  auto n = std::make_shared<Node>();
  n->kind = Kind::opaque;
  n->wild = std::move(w);
  return Expr(std::move(n));
}

Expr Expr::steinberg(int t, Expr inner) {
  if (t < 0) throw InvalidArgument("St_t needs t >= 0");
  if (t == 0 || inner.is_unit()) return Expr{};
  if (t == 1) return inner;
  auto n = std::make_shared<Node>();
  n->kind = Kind::steinberg;
  n->index = t;
  n->children = {std::move(inner)};
  return Expr(std::move(n));
}

Expr Expr::speh(int s, Expr inner) {
  if (s < 0) throw InvalidArgument("Speh_s needs s >= 0");
  if (s == 0 || inner.is_unit()) return Expr{};
  if (s == 1) return inner;
  auto n = std::make_shared<Node>();
  n->kind = Kind::speh;
  n->index = s;
  n->children = {std::move(inner)};
  return Expr(std::move(n));
}

Expr Expr::twisted(Expr inner, HalfInt amount) {
  if (amount == HalfInt{} || inner.is_unit()) return inner;
  if (inner.kind() == Kind::twist) {
    return twisted(inner.children().front(), inner.twist_amount() + amount);
  }
  if (inner.kind() == Kind::opaque) {
    Wildcard w = inner.wildcard();
    w.twist += amount;
    return opaque(std::move(w));
  }
  auto n = std::make_shared<Node>();
  n->kind = Kind::twist;
  n->twist = amount;
  n->children = {std::move(inner)};
  return Expr(std::move(n));
}

Expr Expr::product(std::vector<Expr> factors, bool ordered) {
  std::vector<Expr> flat;
  for (auto& f : factors) {
    if (f.is_unit()) continue;
    if (f.kind() == Kind::product && f.ordered() == ordered) {
      flat.insert(flat.end(), f.children().begin(), f.children().end());
    } else {
      flat.push_back(std::move(f));
    }
  }
  if (flat.empty()) return Expr{};
  if (flat.size() == 1) return flat.front();
  auto n = std::make_shared<Node>();
  n->kind = Kind::product;
  n->ordered = ordered;
  n->children = std::move(flat);
  return Expr(std::move(n));
}

Expr operator*(const Expr& a, const Expr& b) { return Expr::product({a, b}); }

std::string Expr::to_string() const {
  switch (kind()) {
    case Kind::unit:
      return "1";
    case Kind::cuspidal:
      return node_->cusp.id;
    case Kind::opaque:
      return node_->wild.display();
    case Kind::steinberg:
      return "St_" + std::to_string(index()) + "(" + children().front().to_string() + ")";
    case Kind::speh:
      return "Speh_" + std::to_string(index()) + "(" + children().front().to_string() + ")";
    case Kind::twist: {
      const Expr& inner = children().front();
      std::string body = inner.to_string();
      if (inner.kind() == Kind::product) body = "(" + body + ")";
      return body + "{" + twist_amount().to_string() + "}";
    }
    case Kind::product: {
      std::string out;
      for (std::size_t i = 0; i < children().size(); ++i) {
        if (i > 0) out += ordered() ? kOrderedTimes : kTimes;
        const Expr& c = children()[i];
        out += c.kind() == Kind::product ? "(" + c.to_string() + ")" : c.to_string();
      }
      return out;
    }
  }
  return {};
}

Multisegment Expr::support() const {
  switch (kind()) {
    case Kind::unit:
      return {};
    case Kind::cuspidal:
      return Multisegment::of(Segment{node_->cusp, HalfInt{}, 1});
    case Kind::opaque:
      return Multisegment::of(node_->wild);
    case Kind::steinberg: {
      const Multisegment inner = children().front().support();
      if (inner.segments().size() != 1 || !inner.wildcards().empty() || inner.segments().front().length != 1)
        throw InvalidArgument("St_t(X) is only defined for a twisted cuspidal X, got " +
                              children().front().to_string());
      Segment seg = inner.segments().front();
      seg.length = index();
      return Multisegment({seg}, {}, inner.tate());
    }
    case Kind::speh: {
      const Multisegment inner = children().front().support();
      const int s = index();
      Multisegment out;
      for (int j = 0; j < s; ++j) out = normalized_product(out, twist(inner, HalfInt::half(1 - s + 2 * j)));
      return out;
    }
    case Kind::twist:
      return twist(children().front().support(), twist_amount());
    case Kind::product: {
      Multisegment out;
      for (const auto& c : children()) out = normalized_product(out, c.support());
      return out;
    }
  }
  return {};
}

namespace {

Expr map_bases(const Expr& e, const std::function<Cuspidal(const Cuspidal&)>& f) {
  using Kind = Expr::Kind;
  switch (e.kind()) {
    case Kind::unit:
      return e;
    case Kind::cuspidal:
      return Expr::cuspidal(f(e.cuspidal_label()));
    case Kind::opaque: {
      Wildcard w = e.wildcard();
      if (w.base) w.base = f(*w.base);
      return Expr::opaque(std::move(w));
    }
    case Kind::steinberg:
      return Expr::steinberg(e.index(), map_bases(e.children().front(), f));
    case Kind::speh:
      return Expr::speh(e.index(), map_bases(e.children().front(), f));
    case Kind::twist:
      return Expr::twisted(map_bases(e.children().front(), f), e.twist_amount());
    case Kind::product: {
      std::vector<Expr> mapped;
      mapped.reserve(e.children().size());
      for (const auto& c : e.children()) mapped.push_back(map_bases(c, f));
      return Expr::product(std::move(mapped), e.ordered());
    }
  }
  return e;
}

}  // namespace

Expr Expr::substitute(const Cuspidal& from, const Cuspidal& to) const {
  return map_bases(*this, [&](const Cuspidal& c) { return c == from ? to : c; });
}

Expr Expr::reduce_mod_l() const {
  return map_bases(*this, [](const Cuspidal& c) { return htc::reduce_mod_l(c); });
}

bool operator==(const Expr& a, const Expr& b) {
  if (a.node_ == b.node_) return true;
  if (a.kind() != b.kind()) return false;
  const auto& x = *a.node_;
  const auto& y = *b.node_;
  return x.cusp == y.cusp && x.wild == y.wild && x.index == y.index && x.twist == y.twist &&
         x.ordered == y.ordered && x.children == y.children;
}

}  // namespace htc
