#pragma once

#include <string>

#include "sfg/poly.hpp"
#include "sfg/weil.hpp"

namespace sfg {

enum class ZhuType { Z1, Z2, Z3 };

const char* to_string(ZhuType t);

struct SupersingularMatch {
  ZhuType type = ZhuType::Z1;
  long m = 1;          // order of the normalized root u = alpha / sqrt(q)
  std::string family;  // "Phi_m", "Phi_n(T^2)", or a named exceptional family
};

// Recognizes an irreducible supersingular factor h; throws NoMatch otherwise.
SupersingularMatch supersingular_match(const ZPoly& h, const mpz_class& q, unsigned long p, int d);

// Smallest r <= bound with P_(r) = (T - q^{r/2})^deg P; throws BoundExceeded.
long supersingular_torsion_order(const ZPoly& P, const mpz_class& q, long bound = 72);
long supersingular_torsion_order(const WeilPolynomial& P, long bound = 72);

}  // namespace sfg
