#include <gtest/gtest.h>

#include "htc/diagram.hpp"
#include "htc/errors.hpp"
#include "support/oracles.hpp"

using namespace htc;

namespace {

const Cuspidal kPi = make_cuspidal("π_v", 1, 1, "ρ_v");
const Cuspidal kPiPrime = make_cuspidal("π'_v", 1, 1, "ρ_v");

LocalComponent three_ladders() { return LocalComponent{4, {{1, kPi}, {3, kPi}, {5, kPi}}, std::nullopt}; }

std::set<std::pair<int, int>> as_set(const Diagram& d) {
  std::set<std::pair<int, int>> out;
  for (const auto& p : d.points()) out.emplace(p.r, p.i);
  return out;
}

}  // namespace

TEST(Indicator, SteinbergColumn) {
  for (int t = 1; t <= 12; ++t)
    for (int r = -2; r <= 15; ++r)
      for (int i = -3; i <= 3; ++i) EXPECT_EQ(m_indicator(1, t, r, i), r == t && i == 0 ? 1 : 0);
}

TEST(Indicator, ParityAndSample) {
  EXPECT_EQ(m_indicator(2, 1, 1, 0), 0);
  EXPECT_EQ(m_indicator(2, 1, 1, 1), 1);
  EXPECT_EQ(m_indicator(4, 5, 4, 0), 1);
  std::vector<int> column;
  for (int i = -6; i <= 6; ++i)
    if (m_indicator(4, 5, 4, i)) column.push_back(i);
  EXPECT_EQ(column, (std::vector<int>{-2, 0, 2}));
}

TEST(Indicator, RejectsNonPositive) {
  EXPECT_THROW(m_indicator(0, 1, 1, 0), InvalidArgument);
  EXPECT_THROW(m_indicator(1, 0, 1, 0), InvalidArgument);
  EXPECT_THROW(diagram(0, 2), InvalidArgument);
}

TEST(Indicator, MatchesDefinitionAndPolygon) {
  for (int s = 1; s <= 12; ++s) {
    for (int t = 1; t <= 12; ++t) {
      const auto points = as_set(diagram(s, t));
      EXPECT_EQ(points, oracle::definition_points(s, t)) << s << "," << t;
      EXPECT_EQ(points, oracle::polygon_points(s, t)) << s << "," << t;
    }
  }
}

TEST(Diagram, Cardinality) {
  for (int s = 1; s <= 12; ++s) {
    for (int t = 1; t <= 12; ++t) {
      const std::size_t expected = t >= s ? s * s : s * s - (s - t) * (s - t + 1) / 2;
      EXPECT_EQ(diagram(s, t).size(), expected) << s << "," << t;
    }
    EXPECT_EQ(diagram(s, 1).size(), static_cast<std::size_t>(s * (s + 1) / 2));
  }
}

TEST(Diagram, SymmetricAndStepTwoColumns) {
  for (int s = 1; s <= 9; ++s) {
    for (int t = 1; t <= 9; ++t) {
      const Diagram d = diagram(s, t);
      for (const auto& p : d.points()) EXPECT_TRUE(d.contains({p.r, -p.i}));
      for (int r = t; r <= s + t - 1; ++r) {
        std::vector<int> col;
        for (const auto& p : d.points())
          if (p.r == r) col.push_back(p.i);
        ASSERT_FALSE(col.empty());
        EXPECT_EQ(col.front(), -(s + t - 1 - r));
        for (std::size_t n = 1; n < col.size(); ++n) EXPECT_EQ(col[n] - col[n - 1], 2);
      }
    }
  }
}

TEST(Diagram, ExtremePoints) {
  for (int s = 1; s <= 10; ++s) {
    for (int t = 1; t <= 10; ++t) {
      std::set<DiagramPoint> expected{{s + t - 1, 0}, {t, s - 1}, {t, -(s - 1)}};
      if (s >= t) {
        expected.insert({1, s - t});
        expected.insert({1, -(s - t)});
      } else {
        expected.insert({t - s + 1, 0});
      }
      const auto got = extreme_points(diagram(s, t));
      EXPECT_EQ(std::set<DiagramPoint>(got.begin(), got.end()), expected) << s << "," << t;
    }
  }
}

TEST(Superpose, SingleFactorIsDiagram) {
  for (int s = 1; s <= 5; ++s)
    for (int t = 1; t <= 5; ++t) EXPECT_EQ(superpose(LocalComponent{s, {{t, kPi}}, std::nullopt}), diagram(s, t));
}

TEST(Superpose, ThreeLadderColumn) {
  const Diagram d = superpose(three_ladders());
  EXPECT_EQ(d.factors_at({4, 0}), (std::vector<int>{1, 2, 3}));
  EXPECT_EQ(d.factors_at({4, 2}), (std::vector<int>{2, 3}));
  EXPECT_EQ(d.factors_at({8, 0}), (std::vector<int>{3}));
  const auto c = three_ladders();
  for (int k = 1; k <= 3; ++k) {
    const auto& ks = d.factors_at({c.s + c.factor(k).t - 1, 0});
    EXPECT_NE(std::find(ks.begin(), ks.end(), k), ks.end());
  }
}

TEST(Superpose, Monotone) {
  LocalComponent c{3, {{2, kPi}}, std::nullopt};
  Diagram before = superpose(c);
  for (int t : {1, 4, 2}) {
    c.factors.push_back({t, kPiPrime});
    const Diagram after = superpose(c);
    for (const auto& [p, ks] : before.annotations()) {
      ASSERT_TRUE(after.contains(p));
      for (int k : ks) {
        const auto& now = after.factors_at(p);
        EXPECT_NE(std::find(now.begin(), now.end(), k), now.end());
      }
    }
    before = after;
  }
}

TEST(TraceBack, ThreeLadderOrigins) {
  const auto c = three_ladders();
  EXPECT_EQ(trace_back(c, {4, 0}, 3), (DiagramPoint{8, 0}));
  EXPECT_EQ(trace_back(c, {4, 0}, 2), (DiagramPoint{6, 0}));
  EXPECT_EQ(trace_back(c, {4, 0}, 1), std::nullopt);
  EXPECT_THROW(trace_back(c, {4, 1}, 1), InvalidArgument);
  EXPECT_THROW(trace_back(c, {4, 0}, 4), InvalidArgument);
}

TEST(TraceBack, NoneExactlyAtOrBelow) {
  for (int s = 1; s <= 6; ++s) {
    for (int t = 1; t <= 6; ++t) {
      const LocalComponent c{s, {{t, kPi}}, std::nullopt};
      for (const auto& p : diagram(s, t).points())
        EXPECT_EQ(trace_back(c, p, 1).has_value(), s + t - 1 > p.r);
    }
  }
}

TEST(Constituent, ThreeLadderBullets) {
  const auto c = three_ladders();
  EXPECT_EQ(constituent(c, {4, 0}, 3).to_string(), "Speh_4(π_v) × Speh_4(St_3(π_v)) × R_{π_v}(4,5)(4,0)");
  EXPECT_EQ(constituent(c, {4, 0}, 2).to_string(), "Speh_4(π_v) × R_{π_v}(4,3)(4,0) × Speh_4(St_5(π_v))");
  EXPECT_EQ(constituent(c, {4, 0}, 1).to_string(), "R_{π_v}(4,1)(4,0) × Speh_4(St_3(π_v)) × Speh_4(St_5(π_v))");
  EXPECT_EQ(constituent(c, {4, 2}, 2).to_string_with_markers(),
            "Speh_4(π_v) × R_{π_v}(4,3)(4,2) × Speh_4(St_5(π_v)) ⊗ ξ_2 ⊗ Ξ^{1}");
}

TEST(Constituent, DegreeAndSubstitution) {
  LocalComponent c = three_ladders();
  c.wildcard = Wildcard{"?", "", std::nullopt, 5, {}};
  const Diagram d = superpose(c);
  for (const auto& [p, ks] : d.annotations()) {
    for (int k : ks) {
      const Constituent con = constituent(c, p, k);
      EXPECT_EQ(con.degree(), c.degree());
      EXPECT_EQ(constituent(c.substitute(kPi, kPiPrime), p, k), con.substitute(kPi, kPiPrime));
    }
  }
}

TEST(LocalComponent, DegreeAndValidation) {
  EXPECT_EQ(three_ladders().degree(), 4 * (1 + 3 + 5));
  EXPECT_THROW(validate(LocalComponent{0, {{1, kPi}}, std::nullopt}), InvalidArgument);
  EXPECT_THROW(validate(LocalComponent{1, {{0, kPi}}, std::nullopt}), InvalidArgument);
  EXPECT_EQ(three_ladders().expr().to_string(), "Speh_4(π_v) × Speh_4(St_3(π_v)) × Speh_4(St_5(π_v))");
}
