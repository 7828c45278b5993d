#pragma once

#include <gmpxx.h>

#include <vector>

#include "sfg/weil.hpp"

namespace sfg {

// Every monic integer polynomial of degree 2g satisfying the functional
// equation with all roots on |z| = sqrt(q), sorted by (a_1, ..., a_g).
// Honda-Tate admissibility is not checked, so this is a superset of the
// isogeny classes.
std::vector<WeilPolynomial> enumerate_weil(int g, const mpz_class& q);

}  // namespace sfg
