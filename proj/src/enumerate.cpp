#include "sfg/enumerate.hpp"

#include <algorithm>

#include "sfg/error.hpp"
#include "sfg/poly.hpp"

namespace sfg {

namespace {

mpz_class factorial_ratio(long n, long k) {
  mpz_class r = 1;
  for (long i = k + 1; i <= n; ++i) r *= i;
  return r;
}

// All roots real and inside [-2 sqrt q, 2 sqrt q], with multiplicity.
bool real_rooted_in_interval(const ZPoly& f, const mpz_class& q) {
  if (degree(f) <= 0) return true;
  const ZPoly sf = squarefree_part(f);
  return count_roots_in_weil_interval(sf, q) == degree(sf);
}

// The (g-k)-th derivative of Q = x^g + b_1 x^{g-1} + ... + b_g depends only
// on b_1..b_k and must itself be real rooted in the interval.
ZPoly derivative_of_prefix(const std::vector<mpz_class>& b, int g) {
  const int k = static_cast<int>(b.size()) - 1;
  ZPoly f(static_cast<std::size_t>(k + 1));
  for (int i = 0; i <= k; ++i) f[static_cast<std::size_t>(k - i)] = b[static_cast<std::size_t>(i)] * factorial_ratio(g - i, k - i);
  return f;
}

void extend(std::vector<mpz_class>& b, int g, const mpz_class& q, const mpz_class& four_q,
            std::vector<ZPoly>& out) {
  const int k = static_cast<int>(b.size());
  if (k > g) {
    ZPoly Q(static_cast<std::size_t>(g + 1));
    for (int i = 0; i <= g; ++i) Q[static_cast<std::size_t>(g - i)] = b[static_cast<std::size_t>(i)];
    out.push_back(Q);
    return;
  }
  // |b_k| <= C(g, k) (2 sqrt q)^k
  mpz_class binom;
  mpz_bin_uiui(binom.get_mpz_t(), static_cast<unsigned long>(g), static_cast<unsigned long>(k));
  mpz_class four_q_k;
  mpz_pow_ui(four_q_k.get_mpz_t(), four_q.get_mpz_t(), static_cast<unsigned long>(k));
  const mpz_class bound = sqrt(binom * binom * four_q_k) + 1;
  for (mpz_class v = -bound; v <= bound; ++v) {
    b.push_back(v);
    if (real_rooted_in_interval(derivative_of_prefix(b, g), q)) extend(b, g, q, four_q, out);
    b.pop_back();
  }
}

}  // namespace

std::vector<WeilPolynomial> enumerate_weil(int g, const mpz_class& q) {
  if (g < 1) throw Error(ErrorKind::InvalidArgument, "dimension must be positive");
  const PrimePower pp = prime_power(q);
  std::vector<mpz_class> b{1};
  std::vector<ZPoly> reals;
  extend(b, g, q, 4 * q, reals);
  std::vector<WeilPolynomial> out;
  for (const auto& Q : reals) out.push_back(validate_poly(weil_from_real(Q, q), q, pp.p, pp.d));
  std::sort(out.begin(), out.end(), [](const WeilPolynomial& x, const WeilPolynomial& y) { return x.coeffs < y.coeffs; });
  return out;
}

}  // namespace sfg
