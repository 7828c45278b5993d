#include <gtest/gtest.h>

#include <cmath>

#include "corpus.hpp"
#include "oracles.hpp"
#include "sfg/classify.hpp"
#include "sfg/distribution.hpp"
#include "sfg/error.hpp"

using namespace sfg;

namespace {

SerreFrobeniusGroup with_embedding(const WeilPolynomial& P) {
  auto G = classify(P);
  if (!G.embedding && G.delta < P.g) G.embedding = angle_rank_numeric(P);
  return G;
}

}  // namespace

TEST(Distribution, QuarterTurnSequence) {
  const auto xs = trace_sequence(parse_label("1.2.a"), 12);
  const std::vector<double> want{0, -2, 0, 2, 0, -2, 0, 2, 0, -2, 0, 2};
  ASSERT_EQ(xs.size(), want.size());
  for (std::size_t i = 0; i < xs.size(); ++i) EXPECT_NEAR(xs[i], want[i], 1e-12);
  const auto mom = empirical_moments(xs, 2);
  EXPECT_NEAR(mom[1], 2.0, 1e-15);
}

TEST(Distribution, OddPowersVanish) {
  const auto xs = trace_sequence(parse_label("2.5.a_ab"), 1001);
  for (std::size_t r = 1; r <= xs.size(); r += 2) EXPECT_NEAR(xs[r - 1], 0.0, 1e-12) << r;
}

TEST(Distribution, TrivialGroupGivesMaximum) {
  const auto xs = trace_sequence(parse_label("1.4.ae"), 50);
  for (double x : xs) EXPECT_NEAR(x, 2.0, 1e-12);
  const auto mom = empirical_moments(xs, 4);
  for (int k = 0; k < 4; ++k) EXPECT_DOUBLE_EQ(mom[k], std::pow(2.0, k + 1));
}

TEST(Distribution, SupersingularAtoms) {
  const auto h = histogram(parse_label("1.2.a"), 4000, 64);
  ASSERT_EQ(h.atoms.size(), 3u);
  EXPECT_EQ(h.atoms[0].value, -2.0);
  EXPECT_EQ(h.atoms[0].count, 1000u);
  EXPECT_EQ(h.atoms[1].value, 0.0);
  EXPECT_EQ(h.atoms[1].count, 2000u);
  EXPECT_EQ(h.atoms[2].value, 2.0);
  EXPECT_EQ(h.atoms[2].count, 1000u);
}

TEST(Distribution, HistogramConservesMass) {
  for (const char* label : {"1.2.ab", "2.2.ab_b", "3.2.ab_b_b"}) {
    const auto P = parse_label(label);
    const auto h = histogram(P, 10007, 37);
    std::uint64_t total = 0;
    for (auto c : h.counts) total += c;
    EXPECT_EQ(total, 10007u) << label;
    EXPECT_EQ(h.lo, -2.0 * P.g);
    EXPECT_EQ(h.hi, 2.0 * P.g);
    EXPECT_NEAR(h.bucket_right(0) - h.bucket_left(0), 4.0 * P.g / 37, 1e-12);
  }
}

TEST(Distribution, ExactMomentsMatchWordCounts) {
  for (const auto& c : corpus::kPublished) {
    const auto P = parse_label(c.label);
    const auto exact = exact_moments(P, with_embedding(P), 8);
    const auto words = oracle::word_moments(oracle::aberth_angles(P), 8);
    for (int k = 0; k < 8; ++k) EXPECT_NEAR(exact[k], words[k].get_d(), 1e-9 * (1 + std::abs(words[k].get_d()))) << c.label << " k=" << k + 1;
  }
}

TEST(Distribution, ExactMomentExamples) {
  const auto E = parse_label("1.2.ab");
  const auto m = exact_moments(E, with_embedding(E), 6);
  EXPECT_NEAR(m[1], 2, 1e-12);
  EXPECT_NEAR(m[3], 6, 1e-12);
  EXPECT_NEAR(m[5], 20, 1e-12);
  const auto S = parse_label("2.5.a_ab");
  EXPECT_NEAR(exact_moments(S, with_embedding(S), 2)[1], 4, 1e-12);
  const auto Q = parse_label("1.2.a");
  EXPECT_NEAR(exact_moments(Q, with_embedding(Q), 2)[1], 2, 1e-15);
}

TEST(Distribution, ExactMomentsNeedEmbedding) {
  const auto P = parse_label("2.5.a_ab");
  auto G = classify(P);
  G.embedding.reset();
  EXPECT_THROW(exact_moments(P, G, 4), Error);
}

TEST(Distribution, EmpiricalApproachesExact) {
  for (const char* label : {"1.2.ab", "2.5.a_ab", "2.2.ab_b", "3.2.ab_b_b"}) {
    const auto P = parse_label(label);
    const auto exact = exact_moments(P, with_embedding(P), 4);
    const auto emp = empirical_moments(P, 1u << 18, 4);
    for (int k = 0; k < 4; ++k) EXPECT_NEAR(emp[k], exact[k], 0.05 * (1 + std::abs(exact[k]))) << label << " k=" << k + 1;
  }
}

TEST(Distribution, BaseChangeTraceIdentity) {
  const auto P = parse_label("2.2.ab_b");
  const auto xs = trace_sequence(P, 20000);
  const auto ys = trace_sequence(base_change(P, 2), 10000);
  for (std::size_t r = 1; r <= ys.size(); ++r) ASSERT_NEAR(ys[r - 1], xs[2 * r - 1], 1e-9) << r;
}

TEST(Distribution, ParallelRunsAreBitStable) {
  const auto P = parse_label("3.2.ab_b_b");
  DistributionOptions one, four;
  four.jobs = 4;
  EXPECT_EQ(empirical_moments(P, 300000, 6, one), empirical_moments(P, 300000, 6, four));
  EXPECT_EQ(histogram(P, 300000, 64, one).counts, histogram(P, 300000, 64, four).counts);
}

TEST(Distribution, ArcsineTotalVariation) {
  const auto h = histogram(parse_label("1.2.ab"), 1u << 18, 64);
  EXPECT_LT(total_variation(h, arcsine_cdf), 0.02);
  EXPECT_NEAR(arcsine_cdf(0.0), 0.5, 1e-15);
  EXPECT_NEAR(arcsine_cdf(2.0), 1.0, 1e-15);
}
