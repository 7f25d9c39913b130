#include <gtest/gtest.h>

#include "htc/errors.hpp"
#include "htc/io.hpp"
#include "htc/ledger.hpp"
#include "support/oracles.hpp"

using namespace htc;

namespace {

GlobalContext ctx(int d, int g) { return make_context(d, make_cuspidal("π", g)); }

struct GoldenCase {
  int d, g, t;
};

}  // namespace

class LedgerGolden : public ::testing::TestWithParam<GoldenCase> {};

TEST_P(LedgerGolden, ResolutionMatchesFile) {
  const auto [d, g, t] = GetParam();
  const auto c = ctx(d, g);
  const auto name = std::to_string(d) + "_" + std::to_string(g) + "_" + std::to_string(t) + ".txt";
  const auto inf = infinitesimal_placeholder(c, t);
  EXPECT_EQ(io::ledger_listing(resolution_terms(c, t, inf), c), oracle::slurp(oracle::data_path("golden/resolution_" + name)));
  EXPECT_EQ(io::ledger_listing(filtration_graded(c, t, inf), c), oracle::slurp(oracle::data_path("golden/filtration_" + name)));
}

INSTANTIATE_TEST_SUITE_P(Cases, LedgerGolden,
                         ::testing::Values(GoldenCase{4, 1, 2}, GoldenCase{6, 2, 1}, GoldenCase{12, 3, 2}));

TEST(Resolution, ShapeSignsAndInvariant) {
  for (int d = 1; d <= 30; ++d) {
    for (int g = 1; g <= d; ++g) {
      if (d % g != 0) continue;
      const auto c = ctx(d, g);
      for (int t = 1; t <= c.s_g(); ++t) {
        const auto inf = infinitesimal_placeholder(c, t);
        const auto terms = resolution_terms(c, t, inf);
        ASSERT_EQ(static_cast<int>(terms.size()), c.s_g() - t + 2);
        for (std::size_t n = 0; n + 1 < terms.size(); ++n) {
          EXPECT_EQ(terms[n].kind, LedgerKind::shriek);
          EXPECT_EQ(terms[n].sign, n % 2 == 0 ? 1 : -1);
          EXPECT_EQ(terms[n].stratum, t + static_cast<int>(n));
          EXPECT_EQ(terms[n].xi_power, HalfInt::half(static_cast<int>(n)));
        }
        EXPECT_EQ(terms.back().kind, LedgerKind::intermediate);
        EXPECT_EQ(terms.back().stratum, t);
        EXPECT_EQ(terms.back().infinitesimal, inf);
        for (const auto& term : terms) {
          EXPECT_EQ(term.infinitesimal.degree(), term.stratum * g);
          EXPECT_EQ(term.levi_degree(c), d);
          EXPECT_NO_THROW(check_invariant(c, term));
        }
        const auto parts = filtration_graded(c, t, inf);
        ASSERT_EQ(static_cast<int>(parts.size()), c.s_g() - t + 1);
        EXPECT_EQ(parts.front(), terms.back());
        for (std::size_t n = 0; n < parts.size(); ++n) {
          EXPECT_EQ(parts[n].tate, HalfInt::half(static_cast<int>(n)));
          EXPECT_EQ(parts[n].levi_degree(c), d);
          EXPECT_NO_THROW(check_invariant(c, parts[n]));
        }
      }
    }
  }
}

TEST(Resolution, TopStratumHasTwoTerms) {
  const auto c = ctx(6, 2);
  const auto terms = resolution_terms(c, 3, infinitesimal_placeholder(c, 3));
  ASSERT_EQ(terms.size(), 2u);
  EXPECT_EQ(terms[0].kind, LedgerKind::shriek);
  EXPECT_EQ(terms[1].kind, LedgerKind::intermediate);
  EXPECT_EQ(expand_shriek(c, 3, infinitesimal_placeholder(c, 3)).size(), 1u);
}

TEST(Resolution, Errors) {
  const auto c = ctx(4, 1);
  EXPECT_THROW(resolution_terms(c, 5, infinitesimal_placeholder(c, 4)), InvalidArgument);
  EXPECT_THROW(resolution_terms(c, 0, Expr()), InvalidArgument);
  EXPECT_THROW(resolution_terms(c, 2, infinitesimal_placeholder(c, 3)), InvariantViolation);
  EXPECT_THROW(filtration_graded(c, 2, infinitesimal_placeholder(c, 1)), InvariantViolation);
  LedgerTerm bad{LedgerKind::shriek, 2, infinitesimal_placeholder(c, 1), {}, {}, 1};
  EXPECT_THROW(check_invariant(c, bad), InvariantViolation);
}

TEST(Resolution, ConcreteInfinitesimal) {
  // Π_2 = St_2(σ) with σ of GL_1: the labels carry the explicit support.
  const auto c = ctx(4, 1);
  const Cuspidal sigma = make_cuspidal("σ");
  const Expr inf = Expr::steinberg(2, Expr::cuspidal(sigma));
  const auto terms = resolution_terms(c, 2, inf);
  EXPECT_EQ(terms[1].infinitesimal.to_string(), "St_2(σ){-1/2} × π{1}");
  EXPECT_EQ(terms[1].support().to_string(), "<[1,1]_π, [-1,0]_σ>");
}

TEST(Adjunction, DeltaOne) {
  for (int d : {3, 5, 8}) {
    const auto c = ctx(d, 1);
    for (int t = 1; t < c.s_g(); ++t) {
      const auto inf = infinitesimal_placeholder(c, t);
      const auto arrow = adjunction_label(c, t, 1, inf);
      EXPECT_EQ(arrow.induced.to_string(), "Π_" + std::to_string(t) + " × π{" + HalfInt::half(t).to_string() + "}");
      EXPECT_EQ(arrow.stripped(), "π ⊗ Ξ^{1/2}");
      EXPECT_EQ(arrow.source.stratum, t + 1);
      EXPECT_EQ(arrow.target.stratum, t);
    }
  }
}

TEST(Adjunction, IndependentOfT) {
  for (int d = 2; d <= 20; ++d) {
    for (int g : {1, 2}) {
      if (d % g) continue;
      const auto c = ctx(d, g);
      for (int delta = 1; delta < c.s_g(); ++delta) {
        std::set<std::string> stripped;
        for (int t = 1; t + delta <= c.s_g(); ++t) {
          const auto arrow = adjunction_label(c, t, delta, infinitesimal_placeholder(c, t));
          stripped.insert(arrow.stripped());
          EXPECT_EQ(arrow.source.stratum, t + delta);
          EXPECT_EQ(arrow.target.stratum, t + delta - 1);
          EXPECT_EQ(arrow.source.infinitesimal.degree() + arrow.target.infinitesimal.degree(),
                    (2 * t + 2 * delta - 1) * g);
          EXPECT_EQ(arrow.induced.degree(), (t + delta) * g);
          EXPECT_EQ(arrow.xi_power, HalfInt::half(delta));
        }
        EXPECT_EQ(stripped.size(), 1u) << d << " " << g << " " << delta;
      }
    }
  }
}

TEST(Adjunction, DeltaTwoLabel) {
  const auto c = ctx(4, 1);
  const auto arrow = adjunction_label(c, 1, 2, infinitesimal_placeholder(c, 1));
  EXPECT_EQ(arrow.induced.to_string(), "Π_1{-1/2} × (π{-1/2} × π{1/2}){1/2}");
  EXPECT_EQ(arrow.stripped(), "π{-1/2} × π{1/2} ⊗ Ξ^{1}");
  EXPECT_THROW(adjunction_label(c, 1, 4, infinitesimal_placeholder(c, 1)), InvalidArgument);
  EXPECT_THROW(adjunction_label(c, 1, 0, infinitesimal_placeholder(c, 1)), InvalidArgument);
}

TEST(Adjunction, StripRejectsForeignShapes) {
  const auto c = ctx(4, 1);
  const auto inf = infinitesimal_placeholder(c, 1);
  const auto arrow = adjunction_label(c, 1, 2, inf);
  EXPECT_THROW(strip_infinitesimal(arrow.induced, arrow.xi_power, 2, 2, inf), InvariantViolation);
  EXPECT_THROW(strip_infinitesimal(inf, arrow.xi_power, 1, 2, inf), InvariantViolation);
}

TEST(Expansion, GroupsByTotalStratum) {
  for (int d : {4, 7, 12}) {
    const auto c = ctx(d, 1);
    for (int t = 1; t <= c.s_g(); ++t) {
      const auto inf = infinitesimal_placeholder(c, t);
      const auto sum = expand_resolution(c, t, inf);
      const auto groups = group_by_stratum(sum);
      int total = 0;
      for (const auto& [h, part] : groups) {
        EXPECT_GE(h, t);
        EXPECT_LE(h, c.s_g());
        for (const auto& [key, coeff] : part.terms()) {
          EXPECT_EQ(key.stratum, h);
          EXPECT_EQ(key.kind, LedgerKind::intermediate);
          ++total;
        }
      }
      EXPECT_EQ(static_cast<std::size_t>(total), sum.size());
      // Number of (δ, δ') with t + δ + δ' = h is h - t + 1 before merging.
      std::int64_t raw = 0;
      for (int h = t; h <= c.s_g(); ++h) raw += h - t + 1;
      std::int64_t abs_total = 0;
      for (const auto& [key, coeff] : sum.terms()) abs_total += coeff < 0 ? -coeff : coeff;
      EXPECT_LE(abs_total, raw);
    }
  }
}

TEST(Rational, ParseAndPrint) {
  EXPECT_EQ(Rational::parse("6/8").to_string(), "3/4");
  EXPECT_EQ(Rational::parse("5").to_string(), "5");
  EXPECT_THROW(Rational::parse("x"), InvalidArgument);
  EXPECT_THROW(Rational::parse("1/0"), InvalidArgument);
  EXPECT_THROW(make_context(4, make_cuspidal("π"), Rational{-1, 2}), InvalidArgument);
  EXPECT_THROW(make_context(1, make_cuspidal("π", 2)), InvalidArgument);
}
