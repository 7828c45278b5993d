#include <cstdlib>

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

// Simple supersingular threefolds keyed on (a_1, a_2, a_3).
std::optional<SSRow> table8(const WeilPolynomial& P) {
  const mpz_class& a1 = P.a(1);
  const mpz_class& a2 = P.a(2);
  const mpz_class& a3 = P.a(3);
  const mpz_class& q = P.q;
  const unsigned long p = P.p;
  if (P.d % 2 == 0) {
    const mpz_class s = sqrt(q);
    const bool seven_ok = (p * p % 7 * p % 7 + 6) % 7 != 0;  // 7 does not divide p^3 - 1
    if (a1 == s && a2 == q && a3 == q * s && seven_ok) return SSRow{"Table8:(sqrt q,q,q sqrt q)", 7};
    if (a1 == -s && a2 == q && a3 == -q * s && seven_ok) return SSRow{"Table8:(-sqrt q,q,-q sqrt q)", 14};
    if (a1 == 0 && a2 == 0 && a3 == q * s && p % 3 != 1) return SSRow{"Table8:(0,0,q sqrt q)", 9};
    if (a1 == 0 && a2 == 0 && a3 == -q * s && p % 3 != 1) return SSRow{"Table8:(0,0,-q sqrt q)", 18};
    return std::nullopt;
  }
  const mpz_class r = detail::ipow(mpz_class(p), static_cast<unsigned long>((P.d + 1) / 2));
  if (p == 7 && a2 == 3 * q && ((a1 == r && a3 == q * r) || (a1 == -r && a3 == -q * r)))
    return SSRow{"Table8:(+-sqrt 7q,3q,+-q sqrt 7q)", 28};
  if (p == 3 && a1 == 0 && a2 == 0 && (a3 == q * r || a3 == -q * r)) return SSRow{"Table8:(0,0,+-q sqrt 3q)", 36};
  return std::nullopt;
}

bool divides_in(const std::vector<long>& set, long m) {
  for (long x : set)
    if (x == m) return true;
  return false;
}

SerreFrobeniusGroup ordinary_simple(const WeilPolynomial& P, const ZPoly& h) {
  const long c = detail::collapse_degree(h, 72);
  if (P.a(1) == 0 && P.a(2) == 0) {
    if (c != 3) breach("X-B polynomial does not split at degree 3");
    return make_group(3, 1, 3, "X-B");
  }
  ZPoly k;
  if (detail::power_of_quadratic(base_change_poly(h, 7), k)) {
    if (c != 7) breach("X-C polynomial splits below degree 7");
    return make_group(3, 1, 7, "X-C");
  }
  if (c != 0) breach("X-A polynomial splits at degree " + std::to_string(c));
  return make_group(3, 3, 1, "X-A");
}

SerreFrobeniusGroup ordinary_nonsimple(const WeilPolynomial& P, const IsogenyFactorization& F) {
  const auto R = detail::product_engine(P, F);
  std::string node;
  if (R.noncollapsing > 0)
    node = "X-ord:SxE";
  else if (R.classes == 1)
    node = "X-ord:E^3";
  else if (R.classes == 2)
    node = "X-ord:E1^2xE";
  else
    node = "X-ord:E1xE2xE";
  return make_group(3, R.delta, R.m, node);
}

SerreFrobeniusGroup almost_ordinary_simple(const WeilPolynomial& P, mpfr_prec_t precision) {
  const RelationLattice L = angle_rank_numeric(P, precision);
  const int delta = L.delta();
  const long m = L.torsion_order;
  if (delta == 3) {
    if (m != 1) breach("Table6: maximal angle rank with torsion");
  } else if (delta == 2) {
    const std::vector<long> allowed =
        P.d % 2 == 0 ? std::vector<long>{1, 2, 3, 4, 6} : std::vector<long>{1, 2, 3, 4, 6, 8, 12};
    if (!divides_in(allowed, m)) breach("Table6: torsion order " + std::to_string(m) + " not allowed");
    for (long c : L.relations.at(0).c)
      if (std::labs(c) != 1) breach("Table6: relation is not of the form u1 u2 u3 = zeta");
  } else {
    breach("Table6: angle rank " + std::to_string(delta));
  }
  SerreFrobeniusGroup G = make_group(3, delta, m, "Table6:oracle");
  G.embedding = L;
  return G;
}

// p-rank 0, not supersingular, slopes 1/3 and 2/3.
SerreFrobeniusGroup prank0(const WeilPolynomial& P, const IsogenyFactorization& F) {
  if (F.factors.size() == 1 && F.factors[0].e == 3 && degree(F.factors[0].h) == 2)
    return make_group(3, 1, 1, "Table9:Xing");
  if (F.factors.size() == 1 && F.factors[0].e == 1) {
    const ZPoly& h = F.factors[0].h;
    const long c = detail::collapse_degree(h, 72);
    if (c == 0) return make_group(3, 3, 1, "Table9:generic");
    if (c != 3 && c != 7) breach("Table9: splitting degree " + std::to_string(c));
    if ((c * P.d) % 3 != 0) breach("Table9: 3 does not divide m d");
    return make_group(3, 1, c, "Table9:Xing(" + std::to_string(c) + ")");
  }
  breach("p-rank 0 threefold with a split factorization");
}

// Factor carrying a simple supersingular surface.
bool ss_surface_factor(const WeilPolynomial& P, const IsogenyFactor& f) {
  if (!is_supersingular(newton_polygon(f.h, P.p, P.d))) return false;
  if (degree(f.h) == 4) return true;
  if (degree(f.h) != 2 || f.e < 2) return false;
  if (f.h == ZPoly{-P.q, 0, 1}) return true;
  return !elliptic_row(-f.h[1], P.q, P.p, P.d).has_value();
}

bool slopes_thirds(const NewtonPolygonData& np) {
  for (const auto& s : np.slopes)
    if (s != mpq_class(1, 3) && s != mpq_class(2, 3)) return false;
  return true;
}

}  // namespace

SerreFrobeniusGroup classify_threefold(const WeilPolynomial& P) {
  if (P.g != 3) throw Error(ErrorKind::InvalidArgument, "classify_threefold needs g = 3");
  const IsogenyFactorization F = factor(P);
  if (!detail::abelian_slopes(P, F)) return detail::outside(P);
  const NewtonPolygonData np = newton_polygon(P);
  const Stratum st = stratify(np, 3);
  const bool irreducible = F.factors.size() == 1 && F.factors[0].e == 1;

  switch (st) {
    case Stratum::Ordinary:
      return irreducible ? ordinary_simple(P, F.factors[0].h) : ordinary_nonsimple(P, F);
    case Stratum::AlmostOrdinary: {
      if (irreducible) return almost_ordinary_simple(P, 256);
      const auto R = detail::product_engine(P, F);
      return make_group(3, R.delta, R.m, R.has_ss ? "X-E:SS" : "X-E:noSS");
    }
    case Stratum::K3Type: {
      if (irreducible) {
        if (detail::collapse_degree(F.factors[0].h, 72) != 0) breach("X-F factor becomes a power of a curve");
        return make_group(3, 3, 1, "X-F");
      }
      const auto R = detail::product_engine(P, F);
      // (a) simple almost ordinary surface times a supersingular curve,
      // (b) split almost ordinary surface times a supersingular curve,
      // (c) simple supersingular surface times an ordinary curve.
      std::string type = "b";
      for (const auto& fs : R.summaries)
        if (fs.stratum == Stratum::AlmostOrdinary) type = "a";
      if (type == "b")
        for (const auto& f : F.factors)
          if (ss_surface_factor(P, f)) type = "c";
      return make_group(3, R.delta, R.m, "X-G:" + type);
    }
    case Stratum::Supersingular: {
      const long torsion = supersingular_torsion_order(P);
      if (irreducible) {
        const auto row = table8(P);
        if (!row) return make_group(3, 0, torsion, "Table8:unlisted");
        if (row->m != torsion) breach(std::string(row->key) + " disagrees with the torsion order");
        return make_group(3, 0, row->m, row->key);
      }
      const auto R = detail::product_engine(P, F);
      if (R.delta != 0 || R.m != torsion) breach("X-J disagrees with the torsion order");
      bool has_surface = false;
      for (const auto& f : F.factors)
        if (ss_surface_factor(P, f)) has_surface = true;
      return make_group(3, 0, R.m, has_surface ? "X-J:SxE" : "X-J:ExExE");
    }
    case Stratum::PRankZeroNonSS:
      if (slopes_thirds(np)) return prank0(P, F);
      [[fallthrough]];
    default:
      breach(std::string("threefold stratum ") + to_string(st) + " has no node");
  }
}

}  // namespace sfg
