#include <random>

#include <gtest/gtest.h>

#include "htc/errors.hpp"
#include "htc/expr.hpp"
#include "htc/zelevinsky.hpp"
#include "support/oracles.hpp"

using namespace htc;

namespace {

const Cuspidal kPi = make_cuspidal("π", 1, 1, "ρ");
const Cuspidal kPiPrime = make_cuspidal("π'", 1, 1, "ρ");
const Cuspidal kSigma = make_cuspidal("σ", 2, 1, "σ̄");

Multisegment random_multisegment(std::mt19937_64& rng) {
  std::uniform_int_distribution<int> count(0, 4), len(1, 5), twice(-6, 6), which(0, 2);
  std::vector<Segment> segs;
  const Cuspidal bases[] = {kPi, kPiPrime, kSigma};
  for (int n = count(rng); n > 0; --n) segs.push_back(Segment{bases[which(rng)], HalfInt::from_twice(twice(rng)), len(rng)});
  std::vector<Wildcard> wilds;
  if (which(rng) == 0) wilds.push_back(Wildcard{"?", "", std::nullopt, len(rng), {}});
  return Multisegment(std::move(segs), std::move(wilds), HalfInt::from_twice(twice(rng)));
}

}  // namespace

TEST(HalfInt, ArithmeticAndPrinting) {
  EXPECT_EQ(HalfInt::half(3).to_string(), "3/2");
  EXPECT_EQ(HalfInt::half(-1).to_string(), "-1/2");
  EXPECT_EQ(HalfInt(2).to_string(), "2");
  EXPECT_EQ(HalfInt::half(1) + HalfInt::half(1), HalfInt(1));
  EXPECT_EQ(-HalfInt::half(3), HalfInt::half(-3));
  EXPECT_LT(HalfInt::half(-1), HalfInt(0));
  EXPECT_TRUE(HalfInt(4).is_integer());
  EXPECT_FALSE(HalfInt::half(5).is_integer());
}

TEST(Cuspidal, Validation) {
  EXPECT_THROW(make_cuspidal("", 1), InvalidArgument);
  EXPECT_THROW(make_cuspidal("x", 0), InvalidArgument);
  EXPECT_THROW(make_cuspidal("x", 1, 0), InvalidArgument);
  EXPECT_EQ(make_cuspidal("x").modl_class, "x");
  EXPECT_TRUE(congruent_mod_l(kPi, kPiPrime));
  EXPECT_FALSE(inertially_equivalent(kPi, kPiPrime));
}

TEST(Steinberg, SingleCell) {
  const auto l = make_steinberg(kPi, 1);
  const auto m = l.to_multisegment();
  ASSERT_EQ(m.segments().size(), 1u);
  EXPECT_EQ(m.segments()[0].start, HalfInt(0));
  EXPECT_EQ(m.segments()[0].length, 1);
  EXPECT_EQ(m.to_string(), "<[0,0]_π>");
  EXPECT_EQ(l.degree(), 1);
}

TEST(Steinberg, RowOfThree) {
  const auto l = make_steinberg(kSigma, 3);
  EXPECT_EQ(l.s, 1);
  EXPECT_EQ(l.center, HalfInt(0));
  EXPECT_EQ(l.to_multisegment().to_string(), "<[-1,1]_σ>");
  EXPECT_EQ(l.degree(), 6);
}

TEST(Steinberg, DegreeSweep) {
  for (int t = 1; t <= 50; ++t) {
    EXPECT_EQ(make_steinberg(kPi, t).degree(), t);
    EXPECT_EQ(make_steinberg(kSigma, t).to_multisegment().degree(), 2 * t);
  }
}

TEST(Steinberg, RejectsZero) { EXPECT_THROW(make_steinberg(kPi, 0), InvalidArgument); }

TEST(Speh, OneRowIsSteinbergOne) { EXPECT_EQ(make_speh(kPi, 1), make_steinberg(kPi, 1)); }

TEST(Speh, RowTwists) {
  for (int s = 1; s <= 6; ++s) {
    const auto m = make_speh(make_steinberg(kPi, 1), s).to_multisegment();
    ASSERT_EQ(static_cast<int>(m.segments().size()), s);
    for (int j = 0; j < s; ++j) EXPECT_EQ(m.segments()[static_cast<std::size_t>(j)].start, HalfInt::half(1 - s + 2 * j));
  }
  EXPECT_EQ(make_speh(kPi, 3).to_multisegment().to_string(), "<[-1,-1]_π, [0,0]_π, [1,1]_π>");
}

TEST(Speh, FourByThreeLadder) {
  const auto l = make_speh(make_steinberg(kPi, 3), 4);
  EXPECT_EQ(l.s, 4);
  EXPECT_EQ(l.t, 3);
  EXPECT_EQ(l.degree(), 12);
  const auto m = l.to_multisegment();
  ASSERT_EQ(m.segments().size(), 4u);
  for (const auto& seg : m.segments()) EXPECT_EQ(seg.length, 3);
  EXPECT_EQ(m.to_string(), "<[-5/2,-1/2]_π, [-3/2,1/2]_π, [-1/2,3/2]_π, [1/2,5/2]_π>");
  EXPECT_EQ(m.degree(), 12);
  EXPECT_THROW(make_speh(l, 2), InvalidArgument);
  EXPECT_THROW(make_speh(kPi, 0), InvalidArgument);
}

TEST(Speh, SymmetricUnderNegationAndRowReversal) {
  for (int s = 1; s <= 5; ++s) {
    for (int t = 1; t <= 5; ++t) {
      const auto m = make_speh(make_steinberg(kPi, t), s).to_multisegment();
      std::vector<Segment> mirrored;
      for (const auto& seg : m.segments()) mirrored.push_back(Segment{seg.base, -seg.start, seg.length});
      std::reverse(mirrored.begin(), mirrored.end());
      EXPECT_EQ(Multisegment(mirrored), m);
    }
  }
}

TEST(Twist, IdentityAndInverse) {
  std::mt19937_64 rng(7);
  for (int n = 0; n < 100; ++n) {
    const auto m = random_multisegment(rng);
    const auto a = HalfInt::from_twice(static_cast<int>(rng() % 11) - 5);
    EXPECT_EQ(twist(m, 0), m);
    EXPECT_EQ(twist(twist(m, a), -a), m);
    EXPECT_EQ(twist(m, a).degree(), m.degree());
  }
}

TEST(Twist, ShiftsSteinbergStart) {
  const auto m = twist(make_steinberg(kPi, 2).to_multisegment(), HalfInt::half(1));
  EXPECT_EQ(m.segments()[0].start, HalfInt::half(1));
  EXPECT_EQ(m.to_string(), "<[0,1]_π>");
}

TEST(NormalizedProduct, EmptyIsIdentity) {
  std::mt19937_64 rng(11);
  for (int n = 0; n < 20; ++n) {
    const auto m = random_multisegment(rng);
    EXPECT_EQ(normalized_product(m, Multisegment{}), m);
    EXPECT_EQ(normalized_product(Multisegment{}, m), m);
  }
}

TEST(NormalizedProduct, DegreeAdditiveAndAssociative) {
  std::mt19937_64 rng(13);
  for (int n = 0; n < 100; ++n) {
    const auto a = random_multisegment(rng), b = random_multisegment(rng), c = random_multisegment(rng);
    EXPECT_EQ(normalized_product(a, b).degree(), a.degree() + b.degree());
    EXPECT_EQ(normalized_product(normalized_product(a, b), c), normalized_product(a, normalized_product(b, c)));
    EXPECT_EQ(normalized_product(a, b), normalized_product(b, a));
  }
}

TEST(NormalizedProduct, RejectsClashingLabels) {
  const Cuspidal fake = make_cuspidal("π", 3);
  EXPECT_THROW(normalized_product(Multisegment::of(Segment{kPi, 0, 1}), Multisegment::of(Segment{fake, 0, 1})),
               InvariantViolation);
}

TEST(JacquetCuts, SingleRowOfTwo) {
  const auto cuts = jacquet_cuts(make_steinberg(kPi, 2));
  ASSERT_EQ(cuts.size(), 3u);
  std::vector<std::pair<std::string, std::string>> seen;
  for (const auto& c : cuts) seen.emplace_back(c.left.to_string(), c.right.to_string());
  std::sort(seen.begin(), seen.end());
  const std::vector<std::pair<std::string, std::string>> expected{
      {"<>", "<[-1/2,1/2]_π>"}, {"<[-1/2,-1/2]_π>", "<[1/2,1/2]_π>"}, {"<[-1/2,1/2]_π>", "<>"}};
  EXPECT_EQ(seen, expected);
}

TEST(JacquetCuts, SpehTwoVectors) {
  const auto cuts = jacquet_cuts(make_speh(kPi, 2));
  std::set<std::vector<int>> vectors;
  for (const auto& c : cuts) vectors.insert(c.cut);
  EXPECT_EQ(vectors, (std::set<std::vector<int>>{{0, 0}, {1, 0}, {1, 1}}));
}

TEST(JacquetCuts, CountDegreeDistinct) {
  for (int s = 1; s <= 8; ++s) {
    for (int t = 1; t <= 8; ++t) {
      const auto l = make_speh(make_steinberg(kSigma, t), s);
      const auto cuts = jacquet_cuts(l);
      EXPECT_EQ(static_cast<std::int64_t>(cuts.size()), oracle::lattice_paths(s, t)) << s << "," << t;
      EXPECT_EQ(static_cast<std::int64_t>(cuts.size()), oracle::binomial(s + t, s));
      std::set<std::pair<Multisegment, Multisegment>> distinct;
      for (const auto& c : cuts) {
        EXPECT_EQ(c.left.degree() + c.right.degree(), l.degree());
        EXPECT_TRUE(std::is_sorted(c.cut.rbegin(), c.cut.rend()));
        distinct.emplace(c.left, c.right);
      }
      EXPECT_EQ(distinct.size(), cuts.size());
    }
  }
}

TEST(ModL, IdempotentAndSubstitution) {
  std::mt19937_64 rng(17);
  for (int n = 0; n < 100; ++n) {
    const auto a = random_multisegment(rng), b = random_multisegment(rng);
    const auto x = HalfInt::from_twice(static_cast<int>(rng() % 7) - 3);
    EXPECT_EQ(mod_l_reduce(mod_l_reduce(a)), mod_l_reduce(a));
    EXPECT_EQ(mod_l_reduce(twist(a, x)), twist(mod_l_reduce(a), x));
    EXPECT_EQ(mod_l_reduce(normalized_product(a, b)), normalized_product(mod_l_reduce(a), mod_l_reduce(b)));
  }
  for (int t = 1; t <= 6; ++t)
    EXPECT_EQ(mod_l_reduce(make_steinberg(kPi, t).to_multisegment()),
              mod_l_reduce(make_steinberg(kPiPrime, t).to_multisegment()));
  EXPECT_NE(mod_l_reduce(make_steinberg(kPi, 2).to_multisegment()),
            mod_l_reduce(make_steinberg(kSigma, 1).to_multisegment()));
}

TEST(Multisegment, OrderIndependent) {
  const Segment a{kPi, 0, 2}, b{kPi, HalfInt::half(1), 1}, c{kSigma, 1, 3};
  EXPECT_EQ(Multisegment({a, b, c}), Multisegment({c, a, b}));
  EXPECT_EQ(Multisegment({a, b, c}).degree(), 2 + 1 + 6);
}

TEST(Expr, NormalisationAndPrinting) {
  const Expr pi = Expr::cuspidal(kPi);
  EXPECT_TRUE(Expr::speh(0, pi).is_unit());
  EXPECT_EQ(Expr::speh(1, pi), pi);
  EXPECT_EQ(Expr::twisted(pi, 0), pi);
  EXPECT_EQ(Expr::twisted(Expr::twisted(pi, HalfInt::half(1)), HalfInt::half(1)).to_string(), "π{1}");
  EXPECT_EQ(Expr::speh(2, Expr::twisted(pi, 1)).to_string(), "Speh_2(π{1})");
  EXPECT_EQ((pi * Expr()).to_string(), "π");
  EXPECT_EQ(Expr::twisted(pi * pi, HalfInt::half(1)).to_string(), "(π × π){1/2}");
  EXPECT_EQ(Expr::product({pi, Expr::steinberg(2, pi)}, true).to_string(), "π ×→ St_2(π)");
  EXPECT_EQ(Expr::speh(3, Expr::steinberg(2, pi)).degree(), 6);
}

TEST(Expr, SupportMatchesLadder) {
  for (int s = 1; s <= 5; ++s)
    for (int t = 1; t <= 5; ++t)
      EXPECT_EQ(Expr::speh(s, Expr::steinberg(t, Expr::cuspidal(kSigma))).support(),
                make_speh(make_steinberg(kSigma, t), s).to_multisegment());
}
