#pragma once

#include <string>
#include <vector>

#include "sfg/classify.hpp"

namespace sfg::detail {

struct Piece {
  ZPoly h;
  int e = 1;
  bool supersingular = false;
  Stratum stratum = Stratum::Other;
};

std::vector<Piece> pieces(const WeilPolynomial& P, const IsogenyFactorization& F);

mpz_class ipow(const mpz_class& q, unsigned long e);

// f = k^t with k a monic quadratic.
bool power_of_quadratic(const ZPoly& f, ZPoly& k);

// Smallest c <= bound with base change of h to degree c a power of a
// quadratic; 0 if none. The quadratic is stored in k.
long collapse_degree(const ZPoly& h, long bound, ZPoly* k = nullptr);

struct EngineResult {
  int delta = 0;
  long m = 1;
  long m_ss = 1;
  int classes = 0;
  int noncollapsing = 0;
  bool has_ss = false;
  ProductRuleInputs inputs;
  std::vector<FactorSummary> summaries;
};

// Serre-Frobenius group of an arbitrary P from its factorization: supersingular
// part via torsion order, other factors via collapse degree and geometric
// isogeny classes.
EngineResult product_engine(const WeilPolynomial& P, const IsogenyFactorization& F);

// Manin's condition on every h^e: a slope r/s occurs with multiplicity
// divisible by s. Fails for Weil polynomials that belong to no abelian variety.
bool abelian_slopes(const WeilPolynomial& P, const IsogenyFactorization& F);

// Uncertified result from the numeric relation lattice, for inputs the
// classification does not cover.
SerreFrobeniusGroup outside(const WeilPolynomial& P, mpfr_prec_t precision = 256);

SerreFrobeniusGroup make_group(int g, int delta, long m, const std::string& provenance);

[[noreturn]] void breach(const std::string& what);

}  // namespace sfg::detail
