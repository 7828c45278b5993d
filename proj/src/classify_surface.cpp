#include "classify_internal.hpp"
#include "sfg/error.hpp"
#include "sfg/supersingular.hpp"

namespace sfg {

namespace {

using detail::breach;
using detail::make_group;

struct SSRow {
  const char* key;
  long m;
};

// Simple supersingular surfaces keyed on (a_1, a_2).
std::optional<SSRow> table5(const WeilPolynomial& P) {
  const mpz_class& a1 = P.a(1);
  const mpz_class& a2 = P.a(2);
  const mpz_class& q = P.q;
  const unsigned long p = P.p;
  const bool even = P.d % 2 == 0;
  if (even) {
    const mpz_class s = sqrt(q);
    if (a1 == 0 && a2 == 0 && p % 8 != 1) return SSRow{"Table5:(0,0)", 8};
    if (a1 == 0 && a2 == -q && p % 12 != 1) return SSRow{"Table5:(0,-q)", 12};
    if (a1 == s && a2 == q && p % 5 != 1) return SSRow{"Table5:(sqrt q,q)", 5};
    if (a1 == -s && a2 == q && p % 5 != 1) return SSRow{"Table5:(-sqrt q,q)", 10};
    if (a1 == 0 && a2 == 2 * q && p % 4 == 1) return SSRow{"Table5:(0,2q)", 4};
    if (a1 == 2 * s && a2 == 3 * q && p % 3 == 1) return SSRow{"Table5:(2sqrt q,3q)", 3};
    if (a1 == -2 * s && a2 == 3 * q && p % 3 == 1) return SSRow{"Table5:(-2sqrt q,3q)", 6};
    return std::nullopt;
  }
  const mpz_class r = detail::ipow(mpz_class(p), static_cast<unsigned long>((P.d + 1) / 2));
  if (a1 == 0 && a2 == 0 && p != 2) return SSRow{"Table5:(0,0)", 8};
  if (a1 == 0 && a2 == q) return SSRow{"Table5:(0,q)", 6};
  if (a1 == 0 && a2 == -q && p != 3) return SSRow{"Table5:(0,-q)", 12};
  if (p == 5 && (a1 == r || a1 == -r) && a2 == 3 * q) return SSRow{"Table5:(+-sqrt 5q,3q)", 10};
  if (p == 2 && (a1 == r || a1 == -r) && a2 == q) return SSRow{"Table5:(+-sqrt 2q,q)", 24};
  if (a1 == 0 && a2 == -2 * q) return SSRow{"Table5:(0,-2q)", 2};
  return std::nullopt;
}

// Simple in the Honda-Tate sense for a supersingular surface.
bool ss_surface_simple(const WeilPolynomial& P, const IsogenyFactorization& F) {
  if (F.factors.size() != 1) return false;
  const auto& f = F.factors[0];
  if (degree(f.h) == 4) return true;
  if (degree(f.h) != 2) return false;
  if (f.h == ZPoly{-P.q, 0, 1}) return true;
  return !elliptic_row(-f.h[1], P.q, P.p, P.d).has_value();
}

long simple_ordinary_expected(const WeilPolynomial& P, std::string& node) {
  const mpz_class& a1 = P.a(1);
  const mpz_class& a2 = P.a(2);
  const mpz_class& q = P.q;
  if (a1 == 0) {
    node = "S-A(b)";
    return 2;
  }
  if (a1 * a1 == q + a2) {
    node = "S-A(c)";
    return 3;
  }
  if (a1 * a1 == 2 * a2) {
    node = "S-A(d)";
    return 4;
  }
  if (a1 * a1 == 3 * a2 - 3 * q) {
    node = "S-A(e)";
    return 6;
  }
  node = "S-A(a)";
  return 0;
}

SerreFrobeniusGroup from_engine(const WeilPolynomial& P, const IsogenyFactorization& F, const std::string& node) {
  const auto R = detail::product_engine(P, F);
  return make_group(2, R.delta, R.m, node);
}

}  // namespace

SerreFrobeniusGroup classify_surface(const WeilPolynomial& P) {
  if (P.g != 2) throw Error(ErrorKind::InvalidArgument, "classify_surface needs g = 2");
  const IsogenyFactorization F = factor(P);
  if (!detail::abelian_slopes(P, F)) return detail::outside(P);
  const Stratum st = stratify(newton_polygon(P), 2);
  const bool one_factor = F.factors.size() == 1;

  switch (st) {
    case Stratum::Ordinary: {
      if (one_factor && F.factors[0].e == 1) {
        std::string node;
        const long expected = simple_ordinary_expected(P, node);
        const long c = detail::collapse_degree(F.factors[0].h, 72);
        if (c != expected) breach(node + " disagrees with the splitting degree " + std::to_string(c));
        return expected == 0 ? make_group(2, 2, 1, node) : make_group(2, 1, expected, node);
      }
      const auto R = detail::product_engine(P, F);
      return make_group(2, R.delta, R.m, R.classes == 1 ? "S-C" : "S-B");
    }
    case Stratum::AlmostOrdinary: {
      if (one_factor && F.factors[0].e == 1) {
        if (detail::collapse_degree(F.factors[0].h, 72) != 0) breach("S-D factor becomes a power of a curve");
        return make_group(2, 2, 1, "S-D");
      }
      return from_engine(P, F, "S-E");
    }
    case Stratum::Supersingular: {
      const long torsion = supersingular_torsion_order(P);
      if (ss_surface_simple(P, F)) {
        const auto row = table5(P);
        if (!row) return make_group(2, 0, torsion, "S-F:unlisted");
        if (row->m != torsion) breach(std::string(row->key) + " disagrees with the torsion order");
        return make_group(2, 0, row->m, row->key);
      }
      SerreFrobeniusGroup G = from_engine(P, F, "S-G");
      if (G.delta != 0 || G.m != torsion) breach("S-G disagrees with the torsion order");
      return G;
    }
    default:
      breach(std::string("surface stratum ") + to_string(st) + " has no node");
  }
}

}  // namespace sfg
