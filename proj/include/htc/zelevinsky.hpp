#pragma once

#include <compare>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "htc/half_int.hpp"

namespace htc {

/// Label for an inertial class of irreducible cuspidal representations of
/// GL_g. Two labels with the same id must agree on every other field.
struct Cuspidal {
  std::string id;
  int g = 1;
  int e_pi = 1;
  std::string modl_class;

  friend auto operator<=>(const Cuspidal&, const Cuspidal&) = default;
  friend bool operator==(const Cuspidal&, const Cuspidal&) = default;
};

/// Validating constructor. An empty `modl_class` defaults to `id`.
Cuspidal make_cuspidal(std::string id, int g = 1, int e_pi = 1, std::string modl_class = {});

inline bool inertially_equivalent(const Cuspidal& a, const Cuspidal& b) { return a.id == b.id; }
inline bool congruent_mod_l(const Cuspidal& a, const Cuspidal& b) { return a.modl_class == b.modl_class; }

/// The label of the mod-l reduction: id and class both become `modl_class`.
Cuspidal reduce_mod_l(const Cuspidal& pi);

/// The block St_length(base){start}. `start` is the central twist, so the
/// cells of the segment sit at start + (1 - length)/2 + j, j = 0..length-1.
struct Segment {
  Cuspidal base;
  HalfInt start;
  int length = 1;

  int degree() const { return length * base.g; }
  HalfInt first_cell() const { return start + HalfInt::half(1 - length); }
  HalfInt last_cell() const { return start + HalfInt::half(length - 1); }

  friend std::strong_ordering operator<=>(const Segment& a, const Segment& b);
  friend bool operator==(const Segment&, const Segment&) = default;
};

/// An opaque constituent with declared degree: the "?" of a local component,
/// a named infinitesimal part such as Π_2, or an R_π(s,t)(r,i) symbol. When
/// `base` is set it is printed as a subscript and follows mod-l reduction
/// and substitution.
struct Wildcard {
  std::string name;
  std::string args;
  std::optional<Cuspidal> base;
  int degree = 0;
  HalfInt twist;

  std::string display() const;

  friend std::strong_ordering operator<=>(const Wildcard& a, const Wildcard& b);
  friend bool operator==(const Wildcard&, const Wildcard&) = default;
};

/// Multiset of segments plus opaque wildcards and a Ξ-power marker. Stored
/// sorted, so equality is multiset equality.
class Multisegment {
 public:
  Multisegment() = default;
  Multisegment(std::vector<Segment> segments, std::vector<Wildcard> wildcards = {}, HalfInt tate = {});

  static Multisegment of(Segment s) { return Multisegment({std::move(s)}); }
  static Multisegment of(Wildcard w) { return Multisegment({}, {std::move(w)}); }

  const std::vector<Segment>& segments() const { return segments_; }
  const std::vector<Wildcard>& wildcards() const { return wildcards_; }
  HalfInt tate() const { return tate_; }

  int degree() const;
  bool empty() const { return segments_.empty() && wildcards_.empty(); }

  std::string to_string() const;

  friend bool operator==(const Multisegment&, const Multisegment&) = default;
  friend std::strong_ordering operator<=>(const Multisegment& a, const Multisegment& b);

 private:
  std::vector<Segment> segments_;
  std::vector<Wildcard> wildcards_;
  HalfInt tate_;
};

/// Shifts every segment and wildcard by n. The Ξ marker is unchanged.
Multisegment twist(const Multisegment& m, HalfInt n);

/// Zelevinsky datum of the normalised induction a × b: the multiset union
/// (Ξ markers add). Throws InvariantViolation when a and b use two different
/// labels with the same id.
Multisegment normalized_product(const Multisegment& a, const Multisegment& b);
Multisegment normalized_product(std::span<const Multisegment> factors);

/// Replaces every base (including wildcard bases) by its mod-l class.
Multisegment mod_l_reduce(const Multisegment& m);

/// Replaces every base equal to `from` by `to`.
Multisegment substitute(const Multisegment& m, const Cuspidal& from, const Cuspidal& to);

/// Throws InvariantViolation if two bases share an id but differ elsewhere.
void check_consistent_bases(const Multisegment& m);

/// Speh_s(St_t(base)){center}: s rows of length t, row j centred at
/// center + (1 - s)/2 + j.
struct LadderShape {
  Cuspidal base;
  int s = 1;
  int t = 1;
  HalfInt center;

  int degree() const { return s * t * base.g; }
  HalfInt row_center(int j) const { return center + HalfInt::half(1 - s + 2 * j); }
  Multisegment to_multisegment() const;

  friend bool operator==(const LadderShape&, const LadderShape&) = default;
};

LadderShape make_steinberg(const Cuspidal& pi, int t);
LadderShape make_speh(const Cuspidal& pi, int s);
/// Speh_s of a Steinberg ladder (a ladder with one row).
LadderShape make_speh(const LadderShape& steinberg, int s);

struct JacquetCut {
  std::vector<int> cut;  // descending, one entry per row
  Multisegment left;
  Multisegment right;
};

/// One term per descending cut vector c_1 >= ... >= c_s in {0..t}: row j
/// gives its lowest c_j cells to the left factor and the rest to the right.
std::vector<JacquetCut> jacquet_cuts(const LadderShape& ladder);

}  // namespace htc
