#pragma once

#include <optional>
#include <string>
#include <vector>

#include "sfg/angle.hpp"
#include "sfg/factor.hpp"
#include "sfg/newton.hpp"
#include "sfg/weil.hpp"

namespace sfg {

struct SerreFrobeniusGroup {
  int g = 0;
  int delta = 0;
  long m = 1;
  std::string provenance;
  std::optional<RelationLattice> embedding;
  // False for partial results outside the proven classification.
  bool certified = true;
  bool partial = false;

  // "U(1)^2 x C_3"; C_1 is omitted unless the group is trivial.
  std::string group() const;
};

// Data of the product rule: delta = |m_blocks| + simple_rank,
// m = r * lcm(n1 * m_E, m_1, ..., m_s).
struct ProductRuleInputs {
  long r = 1;
  long n1 = 1;
  long m_E = 1;
  std::vector<long> m_blocks;
  // Total dimension of factors that never become a power of an elliptic curve.
  int simple_rank = 0;
};

struct FactorSummary {
  ZPoly h;
  int e = 1;
  int dim = 0;  // deg(h) * e / 2
  Stratum stratum = Stratum::Other;
  // Torsion order of the factor alone.
  long m = 1;
  // Smallest degree over which h becomes a power of a quadratic (0 = never).
  long collapse = 0;
};

struct GeometricDecomposition {
  // Smallest r with more isogeny factors over F_{q^r}; 1 when P already
  // factors; 0 when absolutely simple.
  long split_degree = 0;
  std::vector<FactorSummary> factor_summaries;
  ProductRuleInputs product_rule_inputs;
};

SerreFrobeniusGroup sf_of_product(const ProductRuleInputs& in, int g);

// Table 2 key for an elliptic trace, or nullopt if the trace is not admissible.
struct EllipticRow {
  std::string row;
  int delta = 0;
  long m = 1;
};
std::optional<EllipticRow> elliptic_row(const mpz_class& trace, const mpz_class& q, unsigned long p, int d);

SerreFrobeniusGroup classify_elliptic(const WeilPolynomial& P);
SerreFrobeniusGroup classify_surface(const WeilPolynomial& P);
SerreFrobeniusGroup classify_threefold(const WeilPolynomial& P);
SerreFrobeniusGroup classify_prime_dim(const WeilPolynomial& P, mpfr_prec_t precision = 256);
// Dispatch on g; g > 3 returns a partial result unless the base change at
// degree g or 2g + 1 decides the group.
SerreFrobeniusGroup classify(const WeilPolynomial& P, mpfr_prec_t precision = 256);

GeometricDecomposition geometric_decomposition(const WeilPolynomial& P);
long split_degree(const WeilPolynomial& P);

// Allowed (delta, m) pairs for g <= 3.
bool allowed_pair(int g, int delta, long m);
std::vector<std::pair<int, long>> allowed_pairs(int g);

}  // namespace sfg
