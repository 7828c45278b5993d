#pragma once

#include <gmpxx.h>

#include <utility>
#include <vector>

#include "sfg/poly.hpp"
#include "sfg/weil.hpp"

namespace sfg {

struct NewtonPolygonData {
  // Lower hull vertices (i, nu(a_i)) with nu(q) = 1, left to right.
  std::vector<std::pair<int, mpq_class>> vertices;
  // One slope per unit of horizontal length, non-decreasing.
  std::vector<mpq_class> slopes;
  int p_rank = 0;
};

enum class Stratum { Ordinary, AlmostOrdinary, K3Type, Supersingular, PRankZeroNonSS, Other };

const char* to_string(Stratum s);

// Newton polygon of a monic integer polynomial, points taken from the
// descending coefficient list.
NewtonPolygonData newton_polygon(const ZPoly& f, unsigned long p, int d);
NewtonPolygonData newton_polygon(const WeilPolynomial& P);

Stratum stratify(const NewtonPolygonData& np, int g);
bool is_supersingular(const NewtonPolygonData& np);

}  // namespace sfg
