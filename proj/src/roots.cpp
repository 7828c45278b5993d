#include <algorithm>

#include "sfg/error.hpp"
#include "sfg/weil.hpp"

namespace sfg {

namespace {

int sign_of(const mpz_class& v) { return sgn(v); }

// Pseudo-remainder of a by b, scaled by a positive constant and made primitive.
ZPoly positive_prem(const ZPoly& a, const ZPoly& b) {
  ZPoly r = a;
  const int db = degree(b);
  const mpz_class& lb = b.back();
  int steps = 0;
  while (degree(r) >= db) {
    const int shift = degree(r) - db;
    const mpz_class lr = r.back();
    for (auto& c : r) c *= lb;
    for (int i = 0; i <= db; ++i) r[static_cast<std::size_t>(i + shift)] -= lr * b[static_cast<std::size_t>(i)];
    trim(r);
    ++steps;
  }
  if (lb < 0 && steps % 2 == 1)
    for (auto& c : r) c = -c;
  if (!r.empty()) {
    const mpz_class cont = content(r);
    for (auto& c : r) c /= cont;
  }
  return r;
}

std::vector<ZPoly> sturm_chain(const ZPoly& f) {
  std::vector<ZPoly> chain{f, derivative(f)};
  trim(chain[1]);
  while (!chain.back().empty() && degree(chain.back()) > 0) {
    ZPoly r = positive_prem(chain[chain.size() - 2], chain.back());
    if (r.empty()) break;
    for (auto& c : r) c = -c;
    chain.push_back(std::move(r));
  }
  if (chain.back().empty()) chain.pop_back();
  return chain;
}

int sign_changes(const std::vector<int>& signs) {
  int changes = 0;
  int last = 0;
  for (int s : signs) {
    if (s == 0) continue;
    if (last != 0 && s != last) ++changes;
    last = s;
  }
  return changes;
}

int changes_at(const std::vector<ZPoly>& chain, const mpq_class& x) {
  std::vector<int> s;
  s.reserve(chain.size());
  for (const auto& p : chain) s.push_back(sgn(evaluate(p, x)));
  return sign_changes(s);
}

// Sign of A + C sqrt(q) for non-square q.
int sign_quadratic(const mpz_class& A, const mpz_class& C, const mpz_class& q) {
  const int sa = sign_of(A), sc = sign_of(C);
  if (sa >= 0 && sc >= 0) return (sa > 0 || sc > 0) ? 1 : 0;
  if (sa <= 0 && sc <= 0) return -1;
  const mpz_class diff = A * A - C * C * q;
  return sa > 0 ? sign_of(diff) : -sign_of(diff);
}

// Sign of f(2 e sqrt(q)) with e = +-1.
int sign_at_weil_endpoint(const ZPoly& f, const mpz_class& q, int e) {
  if (mpz_perfect_square_p(q.get_mpz_t())) {
    const mpz_class s = sqrt(q);
    return sign_of(evaluate(f, mpz_class(2 * e * s)));
  }
  mpz_class A = 0, C = 0;
  mpz_class even = 1;  // (2e)^(2k) q^k
  for (std::size_t i = 0; i < f.size(); ++i) {
    if (i % 2 == 0) {
      A += f[i] * even;
    } else {
      C += f[i] * even * (2 * e);
      even *= 4 * q;
    }
  }
  return sign_quadratic(A, C, q);
}

Real eval_real(const ZPoly& f, const Real& x, mpfr_prec_t prec) {
  Real acc(prec);
  for (std::size_t i = f.size(); i-- > 0;) {
    mpfr_mul(acc.get(), acc.get(), x.get(), MPFR_RNDN);
    mpfr_add_z(acc.get(), acc.get(), f[i].get_mpz_t(), MPFR_RNDN);
  }
  return acc;
}

mpz_class cauchy_bound(const ZPoly& f) {
  mpz_class m = 0;
  for (std::size_t i = 0; i + 1 < f.size(); ++i) m = std::max(m, mpz_class(abs(f[i])));
  return m + 1;
}

long max_coeff_bits(const ZPoly& f) {
  long b = 1;
  for (const auto& c : f) b = std::max(b, static_cast<long>(mpz_sizeinbase(c.get_mpz_t(), 2)));
  return b;
}

void isolate(const std::vector<ZPoly>& chain, const mpq_class& lo, const mpq_class& hi, int vlo, int vhi,
             std::vector<std::pair<mpq_class, mpq_class>>& out) {
  const int n = vlo - vhi;
  if (n <= 0) return;
  if (n == 1) {
    out.emplace_back(lo, hi);
    return;
  }
  mpq_class mid = (lo + hi) / 2;
  // Keep endpoints off the roots so each side keeps a sign change.
  for (int j = 2; sgn(evaluate(chain[0], mid)) == 0; ++j) {
    mpq_class step = (hi - lo);
    mpz_class den = 1;
    den <<= static_cast<unsigned>(j);
    mid = (lo + hi) / 2 + step / den;
  }
  const int vmid = changes_at(chain, mid);
  isolate(chain, lo, mid, vlo, vmid, out);
  isolate(chain, mid, hi, vmid, vhi, out);
}

Real refine(const ZPoly& f, const mpq_class& qlo, const mpq_class& qhi, mpfr_prec_t bits) {
  const mpfr_prec_t w = bits + 32;
  const mpfr_prec_t we = w + max_coeff_bits(f) + 16 * static_cast<long>(f.size());
  const ZPoly df = derivative(f);
  Real lo = Real::from_mpq(qlo, w);
  Real hi = Real::from_mpq(qhi, w);
  const int slo = sgn(evaluate(f, qlo));
  Real x = ldexp(lo + hi, -1);
  const long max_iter = 8 * static_cast<long>(bits) + 400;
  for (long it = 0; it < max_iter; ++it) {
    Real fx = eval_real(f, x, we);
    Real dfx = eval_real(df, x, we);
    Real next(w);
    bool newton = !dfx.is_zero();
    if (newton) {
      next = x - fx / dfx;
      mpfr_prec_round(next.get(), w, MPFR_RNDN);
      newton = next > lo && hi > next;
    }
    if (!newton) next = ldexp(lo + hi, -1);
    Real step = abs(next - x);
    Real scale = abs(next);
    if (mpfr_cmp_ui(scale.get(), 1) < 0) mpfr_set_ui(scale.get(), 1, MPFR_RNDN);
    const Real tol = ldexp(scale, -static_cast<long>(bits) - 16);
    if (newton && !(step > tol)) return next;
    if (!(hi - lo > tol)) return next;
    const int s = eval_real(f, next, we).sign();
    if (s == 0) return next;
    if (s == slo)
      lo = next;
    else
      hi = next;
    x = next;
  }
  throw Error(ErrorKind::NonConvergence, "real root refinement did not converge");
}

}  // namespace

int count_roots_in_weil_interval(const ZPoly& f, const mpz_class& q) {
  if (degree(f) <= 0) return 0;
  const auto chain = sturm_chain(f);
  std::vector<int> lo, hi;
  for (const auto& p : chain) {
    lo.push_back(sign_at_weil_endpoint(p, q, -1));
    hi.push_back(sign_at_weil_endpoint(p, q, 1));
  }
  return sign_changes(lo) - sign_changes(hi) + (lo[0] == 0 ? 1 : 0);
}

std::vector<Real> real_roots(const ZPoly& f, mpfr_prec_t bits) {
  std::vector<Real> out;
  if (degree(f) <= 0) return out;
  const auto chain = sturm_chain(f);
  const mpq_class B(cauchy_bound(f));
  std::vector<std::pair<mpq_class, mpq_class>> intervals;
  isolate(chain, -B, B, changes_at(chain, -B), changes_at(chain, B), intervals);
  for (const auto& [lo, hi] : intervals) {
    Real r = refine(f, lo, hi, bits);
    mpfr_prec_round(r.get(), bits, MPFR_RNDN);
    out.push_back(std::move(r));
  }
  return out;
}

std::vector<Real> frobenius_angles(const ZPoly& P, const mpz_class& q, mpfr_prec_t bits) {
  const int g = degree(P) / 2;
  const ZPoly Q = real_weil_polynomial(P, q);
  const mpfr_prec_t wx = 2 * bits + 64;
  const mpfr_prec_t wt = bits + 32;
  const Real two_sqrt_q = ldexp(sqrt(Real::from_mpz(q, wx)), 1);
  const Real two_pi = ldexp(Real::pi(wt), 1);
  const bool square = mpz_perfect_square_p(q.get_mpz_t()) != 0;
  std::vector<Real> theta;
  auto push = [&](const Real& t, int k) {
    for (int i = 0; i < k; ++i) {
      Real v = t;
      mpfr_prec_round(v.get(), bits, MPFR_RNDN);
      theta.push_back(std::move(v));
    }
  };
  for (auto [h, k] : squarefree_decomposition(Q)) {
    ZPoly rest = h, quo;
    if (square) {
      const mpz_class s = sqrt(q);
      if (exact_divide(rest, ZPoly{-2 * s, 1}, quo)) {
        push(Real(wt), k);
        rest = quo;
      }
      if (exact_divide(rest, ZPoly{2 * s, 1}, quo)) {
        push(ldexp(Real::from_long(1, wt), -1), k);
        rest = quo;
      }
    } else if (exact_divide(rest, ZPoly{-4 * q, 0, 1}, quo)) {
      push(Real(wt), k);
      push(ldexp(Real::from_long(1, wt), -1), k);
      rest = quo;
    }
    for (const Real& x : real_roots(rest, wx)) {
      Real c = x / two_sqrt_q;
      if (mpfr_cmp_si(c.get(), 1) > 0) mpfr_set_si(c.get(), 1, MPFR_RNDN);
      if (mpfr_cmp_si(c.get(), -1) < 0) mpfr_set_si(c.get(), -1, MPFR_RNDN);
      Real t = acos(c);
      mpfr_prec_round(t.get(), wt, MPFR_RNDN);
      push(t / two_pi, k);
    }
  }
  if (static_cast<int>(theta.size()) != g)
    throw Error(ErrorKind::RootOffCircle, "real Weil polynomial has roots outside [-2 sqrt q, 2 sqrt q]");
  std::sort(theta.begin(), theta.end(), [](const Real& a, const Real& b) { return a < b; });
  return theta;
}

std::vector<Real> frobenius_angles(const WeilPolynomial& P, mpfr_prec_t bits) {
  return frobenius_angles(P.poly(), P.q, bits);
}

RootSystem roots(const WeilPolynomial& P, mpfr_prec_t precision) {
  if (precision < 32) throw Error(ErrorKind::InvalidArgument, "precision must be at least 32 bits");
  const int g = P.g;
  const mpfr_prec_t w = precision + 32;
  const auto theta = frobenius_angles(P, w);
  const Real sq = sqrt(Real::from_mpz(P.q, w));
  const Real two_pi = ldexp(Real::pi(w), 1);
  RootSystem rs;
  rs.precision = precision;
  rs.roots.resize(static_cast<std::size_t>(2 * g), Complex{Real(w), Real(w)});
  rs.angles.resize(static_cast<std::size_t>(2 * g), Real(precision));
  for (int j = 0; j < g; ++j) {
    const Real phi = two_pi * theta[static_cast<std::size_t>(j)];
    Complex a{sq * cos(phi), sq * sin(phi)};
    Complex b{a.re, -a.im};
    rs.roots[static_cast<std::size_t>(j)] = a;
    rs.roots[static_cast<std::size_t>(g + j)] = b;
    Real t = theta[static_cast<std::size_t>(j)];
    Real u = t.is_zero() ? Real(w) : Real::from_long(1, w) - t;
    mpfr_prec_round(t.get(), precision, MPFR_RNDN);
    mpfr_prec_round(u.get(), precision, MPFR_RNDN);
    rs.angles[static_cast<std::size_t>(j)] = t;
    rs.angles[static_cast<std::size_t>(g + j)] = u;
  }
  // Residual check on every root.
  const ZPoly f = P.poly();
  mpz_class qg;
  mpz_pow_ui(qg.get_mpz_t(), P.q.get_mpz_t(), static_cast<unsigned long>(g));
  const Real tol = ldexp(Real::from_mpz(qg, w), -static_cast<long>(precision) / 2);
  for (const auto& z : rs.roots) {
    Complex acc{Real(w), Real(w)};
    for (std::size_t i = f.size(); i-- > 0;) {
      acc = cmul(acc, z);
      acc.re += Real::from_mpz(f[i], w);
    }
    if (cabs(acc) > tol) throw Error(ErrorKind::NonConvergence, "root residual too large");
  }
  for (auto& z : rs.roots) {
    mpfr_prec_round(z.re.get(), precision, MPFR_RNDN);
    mpfr_prec_round(z.im.get(), precision, MPFR_RNDN);
  }
  return rs;
}

}  // namespace sfg
