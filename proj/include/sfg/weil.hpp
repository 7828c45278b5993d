#pragma once

#include <gmpxx.h>

#include <string>
#include <vector>

#include "sfg/poly.hpp"
#include "sfg/real.hpp"

namespace sfg {

struct PrimePower {
  unsigned long p = 0;
  int d = 0;
};

// Factors q = p^d; throws NotPrimePower.
PrimePower prime_power(const mpz_class& q);

struct WeilPolynomial {
  int g = 0;
  mpz_class q;
  unsigned long p = 0;
  int d = 0;
  // a_0 = 1, a_1, ..., a_{2g}; P(T) = sum a_i T^{2g-i}.
  std::vector<mpz_class> coeffs;

  ZPoly poly() const { return from_descending(coeffs); }
  const mpz_class& a(int i) const { return coeffs.at(static_cast<std::size_t>(i)); }
  bool operator==(const WeilPolynomial& o) const { return q == o.q && coeffs == o.coeffs; }
};

bool functional_equation_holds(const std::vector<mpz_class>& coeffs, const mpz_class& q);

// Full validation: monic, functional equation, all roots on |z| = sqrt(q).
WeilPolynomial validate(const std::vector<mpz_class>& coeffs, const mpz_class& q);
// Same, with p and d supplied (used when q is known to be p^d).
WeilPolynomial validate(const std::vector<mpz_class>& coeffs, const mpz_class& q, unsigned long p, int d);
WeilPolynomial validate_poly(const ZPoly& f, const mpz_class& q, unsigned long p, int d);
// Builds P from a_1..a_g via the functional equation, then validates.
WeilPolynomial from_half(const std::vector<mpz_class>& head, const mpz_class& q);

std::string encode_base26(const mpz_class& v);
mpz_class decode_base26(const std::string& token);
WeilPolynomial parse_label(const std::string& label);
std::string format_label(const WeilPolynomial& P);

// Q with P(T) = T^g Q(T + q/T); degree g, all roots real in [-2 sqrt q, 2 sqrt q].
ZPoly real_weil_polynomial(const ZPoly& P, const mpz_class& q);
ZPoly real_weil_polynomial(const WeilPolynomial& P);
// Inverse map: T^deg(Q) Q(T + q/T).
ZPoly weil_from_real(const ZPoly& Q, const mpz_class& q);

// Exact test that every root of P lies on |z| = sqrt(q) (Sturm count on Q).
bool roots_on_circle(const ZPoly& P, const mpz_class& q);

// Distinct real roots of a squarefree integer polynomial, ascending, to the
// given number of bits. Roots are isolated exactly, then refined.
std::vector<Real> real_roots(const ZPoly& squarefree, mpfr_prec_t bits);
// Number of distinct real roots of a squarefree f in the closed interval
// [-2 sqrt(q), 2 sqrt(q)], computed exactly.
int count_roots_in_weil_interval(const ZPoly& squarefree, const mpz_class& q);

struct RootSystem {
  mpfr_prec_t precision = 0;
  // alpha_1..alpha_2g with alpha_{g+j} = conj(alpha_j).
  std::vector<Complex> roots;
  // theta_1..theta_2g in [0, 1); the first g are non-decreasing in [0, 1/2].
  std::vector<Real> angles;
};

// First g Frobenius angles in [0, 1/2], non-decreasing, accurate to about
// `bits` bits.
std::vector<Real> frobenius_angles(const WeilPolynomial& P, mpfr_prec_t bits);
std::vector<Real> frobenius_angles(const ZPoly& P, const mpz_class& q, mpfr_prec_t bits);

RootSystem roots(const WeilPolynomial& P, mpfr_prec_t precision);

}  // namespace sfg
