#include <gtest/gtest.h>

#include "htc/errors.hpp"
#include "htc/torsion.hpp"

using namespace htc;

namespace {

TorsionProfile with_t0(int t0, std::vector<std::int64_t> tau = {}) { return TorsionProfile{t0, std::move(tau)}; }

}  // namespace

TEST(IOfT, ShiftByT0) {
  EXPECT_EQ(i_of_t(with_t0(3), 3), 0);
  EXPECT_EQ(i_of_t(with_t0(3), 1), -2);
  for (int t0 = 1; t0 <= 12; ++t0) {
    for (int t = 1; t <= 15; ++t) {
      const auto i = i_of_t(with_t0(t0), t);
      if (t <= t0) {
        ASSERT_TRUE(i.has_value());
        EXPECT_EQ(*i, t - t0);
        if (t > 1) EXPECT_EQ(*i - *i_of_t(with_t0(t0), t - 1), 1);
      } else {
        EXPECT_FALSE(i.has_value());
      }
    }
  }
  for (int t = 1; t <= 10; ++t) EXPECT_FALSE(i_of_t(TorsionProfile::torsion_free(2), t).has_value());
}

TEST(Profile, Validation) {
  EXPECT_NO_THROW(validate(TorsionProfile::torsion_free(3)));
  EXPECT_THROW(validate(TorsionProfile{std::nullopt, {0, 1}}), InvariantViolation);
  EXPECT_THROW(validate(with_t0(0)), InvariantViolation);
  EXPECT_THROW(validate(with_t0(2, {1, -1})), InvariantViolation);
}

TEST(TransferLabel, Shapes) {
  const auto ctx = make_context(6, make_cuspidal("π"));
  const Expr inf2 = infinitesimal_placeholder(ctx, 2);
  const auto same = torsion_transfer_label(ctx, with_t0(2), 2, inf2);
  EXPECT_EQ(same.stratum, 2);
  EXPECT_EQ(same.infinitesimal, inf2);
  EXPECT_EQ(same.xi_power, HalfInt{});

  const auto step = torsion_transfer_label(ctx, with_t0(3), 2, inf2);
  EXPECT_EQ(step.kind, LedgerKind::intermediate);
  EXPECT_EQ(step.stratum, 3);
  EXPECT_EQ(step.infinitesimal.to_string(), "Π_2{1/2} × π{1}");
  EXPECT_EQ(step.xi_power, HalfInt::half(-1));

  EXPECT_THROW(torsion_transfer_label(ctx, with_t0(2), 3, infinitesimal_placeholder(ctx, 3)), NoTorsion);
  EXPECT_THROW(torsion_transfer_label(ctx, TorsionProfile::torsion_free(), 1, infinitesimal_placeholder(ctx, 1)),
               NoTorsion);
}

TEST(TransferLabel, DegreeSweep) {
  for (int d = 1; d <= 30; ++d) {
    for (int g = 1; g <= d; ++g) {
      if (d % g) continue;
      const auto ctx = make_context(d, make_cuspidal("π", g));
      for (int t0 = 1; t0 <= ctx.s_g(); ++t0) {
        for (int t = 1; t <= t0; ++t) {
          const auto term = torsion_transfer_label(ctx, with_t0(t0), t, infinitesimal_placeholder(ctx, t));
          EXPECT_EQ(term.stratum, t0);
          EXPECT_EQ(term.infinitesimal.degree(), t0 * g);
          EXPECT_EQ(term.levi_degree(ctx), d);
          EXPECT_EQ(term.xi_power, HalfInt::half(t - t0));
        }
      }
    }
  }
}

TEST(TorsionDimension, UniformAboveZero) {
  const auto p = with_t0(2, {4, 0, 7});
  for (std::size_t n = 0; n < 3; ++n) {
    EXPECT_EQ(torsion_dimension(p, 0, n), 0);
    for (int k = 1; k <= 6; ++k) EXPECT_EQ(torsion_dimension(p, k, n), p.tau[n]);
  }
  EXPECT_EQ(torsion_dimension(p, 1, 9), 0);
  const auto free = TorsionProfile::torsion_free(3);
  for (int k = 0; k < 4; ++k)
    for (std::size_t n = 0; n < 3; ++n) EXPECT_EQ(torsion_dimension(free, k, n), 0);
  const auto twin = with_t0(5, {4, 0, 7});
  for (int k = 0; k < 4; ++k)
    for (std::size_t n = 0; n < 3; ++n) EXPECT_EQ(torsion_dimension(p, k, n), torsion_dimension(twin, k, n));
}
