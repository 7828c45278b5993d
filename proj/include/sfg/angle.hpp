#pragma once

#include <string>
#include <vector>

#include "sfg/lattice.hpp"
#include "sfg/real.hpp"
#include "sfg/weil.hpp"

namespace sfg {

// sum_j c_j theta_j = numer / denom (mod 1), with 0 <= numer < denom.
struct Relation {
  std::vector<long> c;
  long numer = 0;
  long denom = 1;
};

struct RelationLattice {
  int g = 0;
  // Basis of the saturated relation lattice.
  std::vector<Relation> relations;
  int rank = 0;
  long torsion_order = 1;
  int delta() const { return g - rank; }
};

struct AngleOptions {
  mpfr_prec_t precision = 256;
  long denom_bound = 72;
  long coeff_bound = 12;
};

// Relations among angles known to about 2 * precision + 16 bits.
RelationLattice relations_from_angles(const std::vector<Real>& theta, const AngleOptions& opt);
RelationLattice angle_rank_numeric(const WeilPolynomial& P, const AngleOptions& opt);
RelationLattice angle_rank_numeric(const WeilPolynomial& P, mpfr_prec_t precision = 256);

// Smallest r <= bound with torsion order 1 over F_{q^r}; throws BoundExceeded.
long torsion_order_structural(const WeilPolynomial& P, long bound = 72, mpfr_prec_t precision = 256);

std::string format_fraction(long numer, long denom);

}  // namespace sfg
