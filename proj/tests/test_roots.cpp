#include <gtest/gtest.h>

#include "corpus.hpp"
#include "oracles.hpp"
#include "sfg/enumerate.hpp"
#include "sfg/weil.hpp"

using namespace sfg;

namespace {

oracle::real50 to50(const Real& x) { return oracle::real50(x.to_string(60)); }

}  // namespace

TEST(Roots, AnglesMatchAberthOracleOnCorpus) {
  for (const auto& c : corpus::kPublished) {
    const auto P = parse_label(c.label);
    const auto lib = frobenius_angles(P, 256);
    const auto ref = oracle::aberth_angles(P);
    ASSERT_EQ(lib.size(), ref.size()) << c.label;
    for (std::size_t i = 0; i < ref.size(); ++i) EXPECT_LT(abs(to50(lib[i]) - ref[i]), 1e-40) << c.label;
  }
}

TEST(Roots, AnglesMatchAberthOracleOnEnumeration) {
  for (long q : {2L, 3L, 5L})
    for (const auto& P : enumerate_weil(2, q)) {
      const auto lib = frobenius_angles(P, 200);
      const auto ref = oracle::aberth_angles(P);
      for (std::size_t i = 0; i < ref.size(); ++i) ASSERT_LT(abs(to50(lib[i]) - ref[i]), 1e-40) << format_label(P);
    }
}

TEST(Roots, FrozenAngles) {
  const auto a = frobenius_angles(parse_label("1.2.ab"), 128);
  EXPECT_NEAR(a[0].to_double(), 0.19248663595934603, 1e-15);
  const auto b = frobenius_angles(parse_label("2.5.a_ab"), 128);
  EXPECT_NEAR(b[0].to_double(), 0.11702892989268502, 1e-15);
  EXPECT_NEAR(b[1].to_double(), 0.38297107010731498, 1e-15);
  const auto c = frobenius_angles(parse_label("1.2.a"), 128);
  EXPECT_EQ(c[0].to_double(), 0.25);
}

TEST(Roots, AnglesStayInHalfInterval) {
  for (const auto& P : enumerate_weil(3, 2)) {
    const auto th = frobenius_angles(P, 128);
    ASSERT_EQ(th.size(), 3u);
    for (std::size_t i = 0; i < th.size(); ++i) {
      ASSERT_GE(th[i].to_double(), 0.0);
      ASSERT_LE(th[i].to_double(), 0.5);
      if (i > 0) ASSERT_LE(th[i - 1].to_double(), th[i].to_double());
    }
  }
}

TEST(Roots, RootSystemHasConjugatePairs) {
  const auto R = roots(parse_label("3.2.ab_b_b"), 256);
  ASSERT_EQ(R.roots.size(), 6u);
  ASSERT_EQ(R.angles.size(), 6u);
  for (const auto& z : R.roots) EXPECT_NEAR((cabs(z) * cabs(z)).to_double(), 2.0, 1e-12);
  for (std::size_t j = 0; j < 3; ++j) {
    EXPECT_EQ(R.roots[j + 3].re.to_double(), R.roots[j].re.to_double());
    EXPECT_EQ(R.roots[j + 3].im.to_double(), -R.roots[j].im.to_double());
  }
}
