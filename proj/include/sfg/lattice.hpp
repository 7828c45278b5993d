#pragma once

#include <gmpxx.h>

#include <vector>

namespace sfg {

using IntMatrix = std::vector<std::vector<mpz_class>>;

IntMatrix identity_matrix(std::size_t n);
IntMatrix multiply(const IntMatrix& a, const IntMatrix& b);

// Exact integral LLL (delta = 3/4) on the rows, which must be independent.
void lll_reduce(IntMatrix& rows);

struct SmithForm {
  IntMatrix U;     // m x m unimodular
  IntMatrix D;     // m x n diagonal, d_1 | d_2 | ..., nonnegative
  IntMatrix V;     // n x n unimodular, U * A * V = D
  IntMatrix Vinv;  // inverse of V
  int rank = 0;
};

SmithForm smith_normal_form(const IntMatrix& a);

// Basis of (row span over Q) intersected with Z^n. Empty input gives empty output.
IntMatrix saturate(const IntMatrix& rows);

}  // namespace sfg
