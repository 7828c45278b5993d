#include <gtest/gtest.h>

#include "corpus.hpp"
#include "sfg/classify.hpp"
#include "sfg/enumerate.hpp"
#include "sfg/newton.hpp"

using namespace sfg;

TEST(Newton, StrataOfKnownClasses) {
  EXPECT_EQ(stratify(newton_polygon(parse_label("2.2.ab_b")), 2), Stratum::Ordinary);
  EXPECT_EQ(stratify(newton_polygon(parse_label("2.2.ab_a")), 2), Stratum::AlmostOrdinary);
  EXPECT_EQ(stratify(newton_polygon(parse_label("1.4.e")), 1), Stratum::Supersingular);
  EXPECT_EQ(stratify(newton_polygon(parse_label("3.2.a_a_ac")), 3), Stratum::PRankZeroNonSS);
  const auto np = newton_polygon(parse_label("3.8.ag_bk_aea"));
  ASSERT_EQ(np.slopes.size(), 6u);
  EXPECT_EQ(np.slopes.front(), mpq_class(1, 3));
  EXPECT_EQ(np.p_rank, 0);
}

TEST(Newton, SlopesAreSymmetricAndSumToG) {
  for (long q : {2L, 4L, 9L})
    for (const auto& P : enumerate_weil(2, q)) {
      const auto np = newton_polygon(P);
      ASSERT_EQ(np.slopes.size(), 4u);
      mpq_class total = 0;
      for (std::size_t i = 0; i < 4; ++i) {
        total += np.slopes[i];
        ASSERT_EQ(np.slopes[i] + np.slopes[3 - i], 1) << format_label(P);
      }
      ASSERT_EQ(total, 2);
    }
}

TEST(Newton, PRankIsAdditiveOverProducts) {
  std::vector<WeilPolynomial> curves;
  for (long q : {2L, 4L})
    for (const auto& E : enumerate_weil(1, q)) curves.push_back(E);
  for (const auto& A : enumerate_weil(2, 2)) curves.push_back(A);
  for (const auto& A : curves)
    for (const auto& B : curves) {
      if (A.q != B.q || A.g + B.g > 3) continue;
      const ZPoly prod = mul(A.poly(), B.poly());
      const auto np = newton_polygon(prod, A.p, A.d);
      ASSERT_EQ(np.p_rank, newton_polygon(A).p_rank + newton_polygon(B).p_rank)
          << format_label(A) << " x " << format_label(B);
    }
}

TEST(Newton, SupersingularIffAngleRankZeroIffHalfSlopes) {
  for (int g = 1; g <= 3; ++g)
    for (long q : {2L, 3L, 4L}) {
      if (g == 3 && q != 2) continue;
      for (const auto& P : enumerate_weil(g, q)) {
        const auto np = newton_polygon(P);
        bool half = true;
        for (const auto& s : np.slopes) half = half && s == mpq_class(1, 2);
        const bool ss = is_supersingular(np);
        const auto G = classify(P);
        if (G.partial) continue;
        ASSERT_EQ(ss, half) << format_label(P);
        ASSERT_EQ(ss, G.delta == 0) << format_label(P);
        ASSERT_EQ(ss, angle_rank_numeric(P).delta() == 0) << format_label(P);
      }
    }
}
