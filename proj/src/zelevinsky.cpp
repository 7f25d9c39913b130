#include "htc/zelevinsky.hpp"

#include <algorithm>
#include <map>
#include <sstream>

#include "htc/errors.hpp"

namespace htc {

Cuspidal make_cuspidal(std::string id, int g, int e_pi, std::string modl_class) {
  if (id.empty()) throw InvalidArgument("cuspidal id must be nonempty");
  if (g < 1) throw InvalidArgument("cuspidal " + id + ": g must be >= 1");
  if (e_pi < 1) throw InvalidArgument("cuspidal " + id + ": e_pi must be >= 1");
  if (modl_class.empty()) modl_class = id;
  return Cuspidal{std::move(id), g, e_pi, std::move(modl_class)};
}

Cuspidal reduce_mod_l(const Cuspidal& pi) { return Cuspidal{pi.modl_class, pi.g, 1, pi.modl_class}; }

std::strong_ordering operator<=>(const Segment& a, const Segment& b) {
  if (auto c = a.base.id <=> b.base.id; c != 0) return c;
  if (auto c = a.start <=> b.start; c != 0) return c;
  if (auto c = a.length <=> b.length; c != 0) return c;
  return a.base <=> b.base;
}

std::string Wildcard::display() const {
  std::string out = name;
  if (base) out += "_{" + base->id + "}";
  out += args;
  if (twist != HalfInt{}) out += "{" + twist.to_string() + "}";
  return out;
}

std::strong_ordering operator<=>(const Wildcard& a, const Wildcard& b) {
  if (auto c = a.name <=> b.name; c != 0) return c;
  if (auto c = a.args <=> b.args; c != 0) return c;
  if (auto c = a.base <=> b.base; c != 0) return c;
  if (auto c = a.degree <=> b.degree; c != 0) return c;
  return a.twist <=> b.twist;
}

Multisegment::Multisegment(std::vector<Segment> segments, std::vector<Wildcard> wildcards, HalfInt tate)
    : segments_(std::move(segments)), wildcards_(std::move(wildcards)), tate_(tate) {
  for (const auto& s : segments_) {
    if (s.length < 1) throw InvalidArgument("segment length must be >= 1");
    if (s.base.g < 1) throw InvalidArgument("segment base must have g >= 1");
  }
  for (const auto& w : wildcards_) {
    if (w.degree < 0) throw InvalidArgument("wildcard " + w.name + " has negative degree");
  }
  std::sort(segments_.begin(), segments_.end());
  std::sort(wildcards_.begin(), wildcards_.end());
}

int Multisegment::degree() const {
  int total = 0;
  for (const auto& s : segments_) total += s.degree();
  for (const auto& w : wildcards_) total += w.degree;
  return total;
}

std::string Multisegment::to_string() const {
  std::ostringstream os;
  os << "<";
  bool first = true;
  auto sep = [&] {
    if (!first) os << ", ";
    first = false;
  };
  for (const auto& s : segments_) {
    sep();
    os << "[" << s.first_cell() << "," << s.last_cell() << "]_" << s.base.id;
  }
  for (const auto& w : wildcards_) {
    sep();
    os << w.display();
  }
  os << ">";
  if (tate_ != HalfInt{}) os << " Ξ^{" << tate_ << "}";
  return os.str();
}

std::strong_ordering operator<=>(const Multisegment& a, const Multisegment& b) {
  if (auto c = std::lexicographical_compare_three_way(a.segments_.begin(), a.segments_.end(),
                                                      b.segments_.begin(), b.segments_.end());
      c != 0)
    return c;
  if (auto c = std::lexicographical_compare_three_way(a.wildcards_.begin(), a.wildcards_.end(),
                                                      b.wildcards_.begin(), b.wildcards_.end());
      c != 0)
    return c;
  return a.tate_ <=> b.tate_;
}

Multisegment twist(const Multisegment& m, HalfInt n) {
  auto segments = m.segments();
  for (auto& s : segments) s.start += n;
  auto wildcards = m.wildcards();
  for (auto& w : wildcards) w.twist += n;
  return Multisegment(std::move(segments), std::move(wildcards), m.tate());
}

void check_consistent_bases(const Multisegment& m) {
  std::map<std::string, Cuspidal> seen;
  auto visit = [&](const Cuspidal& c) {
    auto [it, inserted] = seen.emplace(c.id, c);
    if (!inserted && !(it->second == c))
      throw InvariantViolation("cuspidal label '" + c.id + "' used with two different (g, e_pi, modl_class)");
  };
  for (const auto& s : m.segments()) visit(s.base);
  for (const auto& w : m.wildcards())
    if (w.base) visit(*w.base);
}

Multisegment normalized_product(const Multisegment& a, const Multisegment& b) {
  auto segments = a.segments();
  segments.insert(segments.end(), b.segments().begin(), b.segments().end());
  auto wildcards = a.wildcards();
  wildcards.insert(wildcards.end(), b.wildcards().begin(), b.wildcards().end());
  Multisegment out(std::move(segments), std::move(wildcards), a.tate() + b.tate());
  check_consistent_bases(out);
  return out;
}

Multisegment normalized_product(std::span<const Multisegment> factors) {
  Multisegment out;
  for (const auto& f : factors) out = normalized_product(out, f);
  return out;
}

Multisegment mod_l_reduce(const Multisegment& m) {
  auto segments = m.segments();
  for (auto& s : segments) s.base = reduce_mod_l(s.base);
  auto wildcards = m.wildcards();
  for (auto& w : wildcards)
    if (w.base) w.base = reduce_mod_l(*w.base);
  return Multisegment(std::move(segments), std::move(wildcards), m.tate());
}

Multisegment substitute(const Multisegment& m, const Cuspidal& from, const Cuspidal& to) {
  auto segments = m.segments();
  for (auto& s : segments)
    if (s.base == from) s.base = to;
  auto wildcards = m.wildcards();
  for (auto& w : wildcards)
    if (w.base && *w.base == from) w.base = to;
  return Multisegment(std::move(segments), std::move(wildcards), m.tate());
}

Multisegment LadderShape::to_multisegment() const {
  std::vector<Segment> rows;
  rows.reserve(static_cast<std::size_t>(s));
  for (int j = 0; j < s; ++j) rows.push_back(Segment{base, row_center(j), t});
  return Multisegment(std::move(rows));
}

LadderShape make_steinberg(const Cuspidal& pi, int t) {
  if (t < 1) throw InvalidArgument("make_steinberg: t must be >= 1");
  return LadderShape{pi, 1, t, HalfInt{}};
}

LadderShape make_speh(const Cuspidal& pi, int s) {
  if (s < 1) throw InvalidArgument("make_speh: s must be >= 1");
  return LadderShape{pi, s, 1, HalfInt{}};
}

LadderShape make_speh(const LadderShape& steinberg, int s) {
  if (s < 1) throw InvalidArgument("make_speh: s must be >= 1");
  if (steinberg.s != 1) throw InvalidArgument("make_speh: input ladder must be a Steinberg (one row)");
  return LadderShape{steinberg.base, s, steinberg.t, steinberg.center};
}

namespace {

void enumerate_cuts(int rows, int cap, std::vector<int>& prefix, std::vector<std::vector<int>>& out) {
  if (static_cast<int>(prefix.size()) == rows) {
    out.push_back(prefix);
    return;
  }
  for (int c = cap; c >= 0; --c) {
    prefix.push_back(c);
    enumerate_cuts(rows, c, prefix, out);
    prefix.pop_back();
  }
}

}  // namespace

std::vector<JacquetCut> jacquet_cuts(const LadderShape& ladder) {
  std::vector<std::vector<int>> vectors;
  std::vector<int> prefix;
  enumerate_cuts(ladder.s, ladder.t, prefix, vectors);

  std::vector<JacquetCut> cuts;
  cuts.reserve(vectors.size());
  for (auto& cut : vectors) {
    std::vector<Segment> left;
    std::vector<Segment> right;
    for (int j = 0; j < ladder.s; ++j) {
      const int c = cut[static_cast<std::size_t>(j)];
      const HalfInt row = ladder.row_center(j);
      // lowest c cells: centre moves by (c - t)/2; the remaining t - c by c/2
      if (c > 0) left.push_back(Segment{ladder.base, row + HalfInt::half(c - ladder.t), c});
      if (c < ladder.t) right.push_back(Segment{ladder.base, row + HalfInt::half(c), ladder.t - c});
    }
    cuts.push_back(JacquetCut{std::move(cut), Multisegment(std::move(left)), Multisegment(std::move(right))});
  }
  return cuts;
}

}  // namespace htc
