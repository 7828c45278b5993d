#include <gtest/gtest.h>

#include "corpus.hpp"
#include "oracles.hpp"
#include "sfg/angle.hpp"
#include "sfg/enumerate.hpp"
#include "sfg/error.hpp"
#include "sfg/lattice.hpp"

using namespace sfg;

TEST(Angle, CorpusMatchesBruteRelationSearch) {
  for (const auto& c : corpus::kPublished) {
    const auto P = parse_label(c.label);
    const auto L = angle_rank_numeric(P);
    const auto ref = oracle::brute_relations(oracle::aberth_angles(P), 6, 72);
    EXPECT_EQ(L.delta(), ref.delta) << c.label;
    EXPECT_EQ(L.torsion_order, ref.m) << c.label;
    EXPECT_EQ(L.delta(), c.delta) << c.label;
    EXPECT_EQ(L.torsion_order, c.m) << c.label;
  }
}

TEST(Angle, EnumerationMatchesBruteRelationSearch) {
  for (long q : {2L, 3L})
    for (const auto& P : enumerate_weil(2, q)) {
      const auto L = angle_rank_numeric(P);
      const auto ref = oracle::brute_relations(oracle::aberth_angles(P), 8, 72);
      ASSERT_EQ(L.delta(), ref.delta) << format_label(P);
      ASSERT_EQ(L.torsion_order, ref.m) << format_label(P);
    }
}

TEST(Angle, RelationsHoldNumerically) {
  for (const auto& c : corpus::kPublished) {
    const auto P = parse_label(c.label);
    const auto th = oracle::aberth_angles(P);
    for (const auto& rel : angle_rank_numeric(P).relations) {
      oracle::real50 s = 0;
      for (std::size_t j = 0; j < th.size(); ++j) s += rel.c[j] * th[j];
      s -= oracle::real50(rel.numer) / rel.denom;
      EXPECT_LT(abs(s - round(s)), 1e-35) << c.label;
    }
  }
}

TEST(Angle, PrecisionDoublingIsStable) {
  for (const auto& c : corpus::kPublished) {
    const auto P = parse_label(c.label);
    const auto a = angle_rank_numeric(P, 128);
    const auto b = angle_rank_numeric(P, 512);
    EXPECT_EQ(a.delta(), b.delta()) << c.label;
    EXPECT_EQ(a.torsion_order, b.torsion_order) << c.label;
  }
}

TEST(Angle, StructuralTorsionOrder) {
  EXPECT_EQ(torsion_order_structural(parse_label("2.5.a_ab")), 2);
  EXPECT_EQ(torsion_order_structural(parse_label("3.2.ae_j_ap")), 7);
  EXPECT_EQ(torsion_order_structural(parse_label("1.3.ad")), 12);
}

TEST(Angle, FractionFormatting) {
  EXPECT_EQ(format_fraction(1, 2), "1/2");
  EXPECT_EQ(format_fraction(0, 1), "0");
}

TEST(Lattice, SmithFormOfKnownMatrix) {
  const IntMatrix a{{2, 4, 4}, {-6, 6, 12}, {10, -4, -16}};
  const auto s = smith_normal_form(a);
  EXPECT_EQ(s.rank, 3);
  EXPECT_EQ(multiply(multiply(s.U, a), s.V), s.D);
  EXPECT_EQ(multiply(s.V, s.Vinv), identity_matrix(3));
  EXPECT_EQ(s.D[0][0], 2);
  EXPECT_EQ(s.D[1][1], 6);
  EXPECT_EQ(s.D[2][2], 12);
}

TEST(Lattice, SaturationRemovesIndex) {
  const auto sat = saturate(IntMatrix{{2, 4, 6}, {0, 3, 3}});
  ASSERT_EQ(sat.size(), 2u);
  // The saturated lattice contains (1, 2, 3) and (0, 1, 1), so its 2x2 minors are coprime.
  const auto s = smith_normal_form(sat);
  EXPECT_EQ(s.D[0][0], 1);
  EXPECT_EQ(s.D[1][1], 1);
}

TEST(Lattice, LllReducesKnownBasis) {
  IntMatrix rows{{1, 1, 1}, {-1, 0, 2}, {3, 5, 6}};
  lll_reduce(rows);
  const IntMatrix want{{0, 1, 0}, {1, 0, 1}, {-1, 0, 2}};
  EXPECT_EQ(rows, want);
}
