#include <gtest/gtest.h>

#include <functional>

#include "corpus.hpp"
#include "oracles.hpp"
#include "sfg/enumerate.hpp"

#include "sfg/error.hpp"
#include "sfg/factor.hpp"
#include "sfg/weil.hpp"

using namespace sfg;

namespace {

ErrorKind kind_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.kind();
  }
  return ErrorKind::InternalInvariant;
}

}  // namespace

TEST(Weil, ParsesLabelCoefficients) {
  const auto P = parse_label("2.5.a_ab");
  EXPECT_EQ(P.g, 2);
  EXPECT_EQ(P.q, 5);
  EXPECT_EQ(P.p, 5u);
  EXPECT_EQ(P.d, 1);
  const std::vector<mpz_class> want{1, 0, -1, 0, 25};
  EXPECT_EQ(P.coeffs, want);
  EXPECT_EQ(to_string(P.poly()), "T^4 - T^2 + 25");
}

TEST(Weil, Base26RoundTrip) {
  for (long v = -2000; v <= 2000; ++v) EXPECT_EQ(decode_base26(encode_base26(v)), v);
  EXPECT_EQ(encode_base26(0), "a");
  EXPECT_EQ(encode_base26(-1), "ab");
  EXPECT_EQ(encode_base26(26), "ba");
  EXPECT_EQ(decode_base26("la"), 286);
}

TEST(Weil, LabelRoundTripOnCorpus) {
  for (const auto& c : corpus::kPublished) EXPECT_EQ(format_label(parse_label(c.label)), c.label);
  for (const auto& P : enumerate_weil(3, 2)) EXPECT_EQ(parse_label(format_label(P)), P);
}

TEST(Weil, RejectsMalformedInput) {
  EXPECT_EQ(kind_of([] { parse_label("2.5.a"); }), ErrorKind::MalformedLabel);
  EXPECT_EQ(kind_of([] { parse_label("2.5.a_A"); }), ErrorKind::MalformedLabel);
  EXPECT_EQ(kind_of([] { parse_label("2.5.a_aa"); }), ErrorKind::MalformedLabel);
  EXPECT_EQ(kind_of([] { parse_label("1.6.a"); }), ErrorKind::NotPrimePower);
  EXPECT_EQ(kind_of([] { parse_label("1.4.z"); }), ErrorKind::RootOffCircle);
  EXPECT_EQ(kind_of([] { validate({2, 0, 4}, 4); }), ErrorKind::NotMonic);
  EXPECT_EQ(kind_of([] { validate({1, 1, 1, 1, 4}, 2); }), ErrorKind::FunctionalEquationViolated);
}

TEST(Weil, FunctionalEquationOnConstructedPolynomials) {
  for (int g = 1; g <= 3; ++g)
    for (long q : {2L, 3L, 4L})
      for (const auto& P : enumerate_weil(g, q)) {
        ASSERT_TRUE(functional_equation_holds(P.coeffs, P.q)) << format_label(P);
        for (unsigned r = 2; r <= 4; ++r) {
          const auto B = base_change(P, r);
          ASSERT_TRUE(functional_equation_holds(B.coeffs, B.q)) << format_label(P) << " r=" << r;
        }
      }
}

TEST(Weil, RealWeilPolynomialRoundTrip) {
  for (const auto& P : enumerate_weil(3, 3)) {
    const ZPoly Q = real_weil_polynomial(P);
    ASSERT_EQ(degree(Q), 3);
    ASSERT_EQ(weil_from_real(Q, P.q), P.poly()) << format_label(P);
  }
}

TEST(Weil, RootsLieOnCircleAgainstOracle) {
  for (const auto& c : corpus::kPublished) {
    const auto P = parse_label(c.label);
    const oracle::real50 sq = boost::multiprecision::sqrt(oracle::real50(P.q.get_str()));
    for (const auto& z : oracle::weil_roots(P)) EXPECT_LT(abs(abs(z) - sq), 1e-30) << c.label;
  }
}
