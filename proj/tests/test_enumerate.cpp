#include <gtest/gtest.h>

#include "oracles.hpp"
#include "sfg/enumerate.hpp"

using namespace sfg;

namespace {

void expect_same(int g, long q) {
  const auto lib = enumerate_weil(g, q);
  const auto ref = oracle::brute_enumerate(g, q);
  ASSERT_EQ(lib.size(), ref.size()) << "g=" << g << " q=" << q;
  for (std::size_t i = 0; i < lib.size(); ++i) ASSERT_EQ(lib[i].coeffs, ref[i].coeffs) << "g=" << g << " q=" << q;
}

}  // namespace

TEST(Enumerate, MatchesBoxSearchForCurvesAndSurfaces) {
  for (long q : {2L, 3L, 4L, 5L, 7L, 8L, 9L}) expect_same(1, q);
  for (long q : {2L, 3L, 4L, 5L}) expect_same(2, q);
}

TEST(Enumerate, MatchesBoxSearchForThreefolds) { expect_same(3, 2); }

TEST(Enumerate, FrozenCounts) {
  EXPECT_EQ(enumerate_weil(1, 2).size(), 5u);
  EXPECT_EQ(enumerate_weil(1, 4).size(), 9u);
  EXPECT_EQ(enumerate_weil(2, 2).size(), 35u);
  EXPECT_EQ(enumerate_weil(2, 3).size(), 63u);
  EXPECT_EQ(enumerate_weil(2, 4).size(), 101u);
  EXPECT_EQ(enumerate_weil(2, 5).size(), 129u);
  EXPECT_EQ(enumerate_weil(3, 2).size(), 215u);
  EXPECT_EQ(enumerate_weil(3, 3).size(), 677u);
}

TEST(Enumerate, OutputIsSortedAndValid) {
  const auto all = enumerate_weil(3, 3);
  for (std::size_t i = 1; i < all.size(); ++i) ASSERT_TRUE(all[i - 1].coeffs < all[i].coeffs);
  for (const auto& P : all) ASSERT_TRUE(roots_on_circle(P.poly(), P.q));
}
