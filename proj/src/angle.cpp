#include "sfg/angle.hpp"

#include <numeric>

#include "sfg/error.hpp"
#include "sfg/factor.hpp"

namespace sfg {

namespace {

mpz_class lcm_upto(long n) {
  mpz_class m = 1;
  for (long i = 2; i <= n; ++i) mpz_lcm_ui(m.get_mpz_t(), m.get_mpz_t(), static_cast<unsigned long>(i));
  return m;
}

Real combination(const std::vector<long>& c, const std::vector<Real>& theta, mpfr_prec_t bits) {
  Real s(bits);
  for (std::size_t j = 0; j < c.size(); ++j) {
    Real t = theta[j];
    mpfr_prec_round(t.get(), bits, MPFR_RNDN);
    s += t * Real::from_long(c[j], bits);
  }
  return frac(s);
}

// Distance from x in [0, 1) to n / den on the circle.
Real circle_distance(const Real& x, long n, long den, mpfr_prec_t bits) {
  Real d = abs(x - Real::from_mpq(mpq_class(n, den), bits));
  Real e = Real::from_long(1, bits) - d;
  return e < d ? e : d;
}

Relation rationalize(const std::vector<long>& c, const std::vector<Real>& theta, const AngleOptions& opt) {
  const mpfr_prec_t prec = opt.precision;
  long l1 = 0;
  for (long v : c) l1 += std::labs(v);
  const Real x = combination(c, theta, prec);
  const Real tol = ldexp(Real::from_long(std::max(1L, l1), prec), -static_cast<long>(prec) / 4);
  for (long den = 1; den <= opt.denom_bound; ++den) {
    const mpz_class n = round_to_mpz(x * Real::from_long(den, prec));
    const long num = static_cast<long>(((n.get_si() % den) + den) % den);
    if (std::gcd(num, den) != 1 && !(num == 0 && den == 1)) continue;
    if (circle_distance(x, num, den, prec) > tol) continue;
    const mpfr_prec_t hi = 2 * prec;
    const Real xh = combination(c, theta, hi);
    if (circle_distance(xh, num, den, hi) > ldexp(Real::from_long(1, hi), -static_cast<long>(prec)))
      throw Error(ErrorKind::UnverifiedRelation, "relation fails at doubled precision");
    return {c, num, den};
  }
  throw Error(ErrorKind::DenominatorBoundExceeded,
              "relation value has no denominator up to " + std::to_string(opt.denom_bound));
}

}  // namespace

std::string format_fraction(long numer, long denom) {
  if (denom == 1) return std::to_string(numer);
  return std::to_string(numer) + "/" + std::to_string(denom);
}

RelationLattice relations_from_angles(const std::vector<Real>& theta, const AngleOptions& opt) {
  const std::size_t g = theta.size();
  const mpfr_prec_t prec = opt.precision;
  const mpfr_prec_t work = prec + 112;
  const mpz_class M = lcm_upto(opt.denom_bound);
  const long half = static_cast<long>(prec) / 2;
  mpz_class N = 1;
  N <<= static_cast<unsigned long>(half);
  const Real Mr = Real::from_mpz(M, work);

  IntMatrix rows(g + 1, std::vector<mpz_class>(g + 1, 0));
  for (std::size_t j = 0; j < g; ++j) {
    Real t = theta[j];
    mpfr_prec_round(t.get(), work, MPFR_RNDN);
    const Real y = frac(t * Mr);
    rows[j][j] = 1;
    rows[j][g] = round_to_mpz(ldexp(y, half));
  }
  rows[g][g] = N;
  lll_reduce(rows);

  IntMatrix candidates;
  for (const auto& r : rows) {
    bool small = true;
    long l1 = 0;
    for (std::size_t j = 0; j < g; ++j) {
      if (abs(r[j]) > opt.coeff_bound) small = false;
      l1 += mpz_class(abs(r[j])).get_si();
    }
    if (!small || l1 == 0) continue;
    // Residual of the scaled relation is |last| / N.
    mpz_class lim = l1;
    lim <<= static_cast<unsigned long>(half - static_cast<long>(prec) / 4);
    if (abs(r[g]) > lim) continue;
    candidates.emplace_back(r.begin(), r.begin() + static_cast<long>(g));
  }

  RelationLattice L;
  L.g = static_cast<int>(g);
  for (const auto& v : saturate(candidates)) {
    std::vector<long> c;
    for (const auto& x : v) {
      if (!x.fits_slong_p()) throw Error(ErrorKind::InternalInvariant, "relation coefficient overflow");
      c.push_back(x.get_si());
    }
    L.relations.push_back(rationalize(c, theta, opt));
    L.torsion_order = std::lcm(L.torsion_order, L.relations.back().denom);
  }
  L.rank = static_cast<int>(L.relations.size());
  return L;
}

RelationLattice angle_rank_numeric(const WeilPolynomial& P, const AngleOptions& opt) {
  if (opt.precision < 64) throw Error(ErrorKind::InvalidArgument, "precision must be at least 64 bits");
  const auto theta = frobenius_angles(P, 2 * opt.precision + 16);
  return relations_from_angles(theta, opt);
}

RelationLattice angle_rank_numeric(const WeilPolynomial& P, mpfr_prec_t precision) {
  AngleOptions opt;
  opt.precision = precision;
  return angle_rank_numeric(P, opt);
}

long torsion_order_structural(const WeilPolynomial& P, long bound, mpfr_prec_t precision) {
  for (long r = 1; r <= bound; ++r) {
    const WeilPolynomial Pr = base_change(P, static_cast<unsigned>(r));
    if (angle_rank_numeric(Pr, precision).torsion_order == 1) return r;
  }
  throw Error(ErrorKind::BoundExceeded, "torsion order exceeds " + std::to_string(bound));
}

}  // namespace sfg
