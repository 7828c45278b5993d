#pragma once

#include <vector>

#include "sfg/poly.hpp"
#include "sfg/weil.hpp"

namespace sfg {

struct IsogenyFactor {
  ZPoly h;  // monic, irreducible over Q
  int e = 1;
};

struct IsogenyFactorization {
  // Sorted by degree, then by descending coefficient vector.
  std::vector<IsogenyFactor> factors;
};

// Irreducible factorization of a monic integer polynomial whose roots are all
// real (such as a real Weil polynomial), sorted as above.
std::vector<IsogenyFactor> factor_real_rooted(const ZPoly& Q);

IsogenyFactorization factor_weil(const ZPoly& P, const mpz_class& q);
IsogenyFactorization factor(const WeilPolynomial& P);
ZPoly expand(const IsogenyFactorization& F);

// True when P = h^e for a single irreducible h.
bool is_pure_power(const IsogenyFactorization& F);

// Monic polynomial whose roots are the r-th powers of the roots of P.
ZPoly base_change_poly(const ZPoly& P, unsigned r);
WeilPolynomial base_change(const WeilPolynomial& P, unsigned r);

// Factor ordering used throughout.
bool factor_less(const ZPoly& a, const ZPoly& b);

}  // namespace sfg
