#include "classify_internal.hpp"
#include "sfg/error.hpp"

namespace sfg {

namespace {

SerreFrobeniusGroup partial(const WeilPolynomial& P, mpfr_prec_t precision) {
  const RelationLattice L = angle_rank_numeric(P, precision);
  SerreFrobeniusGroup G = detail::make_group(P.g, L.delta(), L.torsion_order, "oracle:partial");
  G.embedding = L;
  G.certified = false;
  G.partial = true;
  return G;
}

bool collapses_at(const ZPoly& h, unsigned r) {
  ZPoly k;
  return detail::power_of_quadratic(base_change_poly(h, r), k);
}

// Exponent of an irreducible factor k in the Weil polynomial of the simple
// variety it defines over F_{q^r}, for deg k <= 2; 1 for larger degrees.
int honda_tate_exponent(const ZPoly& k, const mpz_class& qr, unsigned long p, int dr) {
  if (degree(k) == 1) return 2;
  if (degree(k) != 2) return 1;
  if (k[1] * k[1] >= 4 * k[0]) return 2;
  const mpq_class slope = newton_polygon(k, p, dr).slopes.front();
  if (slope != mpq_class(1, 2)) return static_cast<int>(slope.get_den().get_si());
  return elliptic_row(-k[1], qr, p, dr).has_value() ? 1 : 2;
}

}  // namespace

SerreFrobeniusGroup classify_prime_dim(const WeilPolynomial& P, mpfr_prec_t precision) {
  if (P.g < 2 || !is_prime(P.g)) throw Error(ErrorKind::InvalidArgument, "dimension must be prime");
  const IsogenyFactorization F = factor(P);
  if (F.factors.size() != 1 || F.factors[0].e != 1) throw Error(ErrorKind::NotSimple, "P is reducible");
  if (stratify(newton_polygon(P), P.g) != Stratum::Ordinary) throw Error(ErrorKind::NotOrdinary, "P is not ordinary");
  const ZPoly& h = F.factors[0].h;
  const unsigned g = static_cast<unsigned>(P.g);
  if (collapses_at(h, g)) return detail::make_group(P.g, 1, g, "ThmD:deg g");
  if (is_prime(2 * P.g + 1) && collapses_at(h, 2 * g + 1))
    return detail::make_group(P.g, 1, 2 * g + 1, "ThmD:deg 2g+1");
  return partial(P, precision);
}

SerreFrobeniusGroup classify(const WeilPolynomial& P, mpfr_prec_t precision) {
  switch (P.g) {
    case 1:
      return classify_elliptic(P);
    case 2:
      return classify_surface(P);
    case 3:
      return classify_threefold(P);
    default:
      break;
  }
  if (is_prime(P.g)) {
    try {
      return classify_prime_dim(P, precision);
    } catch (const Error& e) {
      if (e.kind() != ErrorKind::NotSimple && e.kind() != ErrorKind::NotOrdinary) throw;
    }
  }
  return partial(P, precision);
}

long split_degree(const WeilPolynomial& P) {
  const IsogenyFactorization F = factor(P);
  if (F.factors.size() != 1) return 1;
  const ZPoly& h = F.factors[0].h;
  const int e = F.factors[0].e;
  if (e > honda_tate_exponent(h, P.q, P.p, P.d)) return 1;
  for (unsigned r = 2; r <= 72; ++r) {
    const ZPoly k = squarefree_part(base_change_poly(h, r));
    const int t = e * (degree(h) / degree(k));
    if (t > honda_tate_exponent(k, detail::ipow(P.q, r), P.p, P.d * static_cast<int>(r))) return r;
  }
  return 0;
}

GeometricDecomposition geometric_decomposition(const WeilPolynomial& P) {
  const IsogenyFactorization F = factor(P);
  const auto R = detail::product_engine(P, F);
  GeometricDecomposition D;
  D.split_degree = split_degree(P);
  D.factor_summaries = R.summaries;
  D.product_rule_inputs = R.inputs;
  return D;
}

}  // namespace sfg
