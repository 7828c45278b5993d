#include "classify_internal.hpp"
#include "sfg/error.hpp"

namespace sfg {

std::optional<EllipticRow> elliptic_row(const mpz_class& a, const mpz_class& q, unsigned long p, int d) {
  const mpz_class pz(p);
  if (mpz_divisible_p(a.get_mpz_t(), pz.get_mpz_t()) == 0) return EllipticRow{"Table2:1", 1, 1};
  const bool even = d % 2 == 0;
  if (even) {
    const mpz_class s = sqrt(q);
    // Trace 2 sqrt(q) gives u = 1; trace -2 sqrt(q) gives u = -1.
    if (a == 2 * s) return EllipticRow{"Table2:2-(i)", 0, 1};
    if (a == -2 * s) return EllipticRow{"Table2:2-(i)", 0, 2};
    if (a == s && p % 3 != 1) return EllipticRow{"Table2:2-(ii)", 0, 6};
    if (a == -s && p % 3 != 1) return EllipticRow{"Table2:2-(iii)", 0, 3};
    if (a == 0 && p % 4 != 1) return EllipticRow{"Table2:2-(iv)", 0, 4};
    return std::nullopt;
  }
  if (a == 0) return EllipticRow{"Table2:2-(v)", 0, 4};
  const mpz_class r = detail::ipow(pz, static_cast<unsigned long>((d + 1) / 2));  // sqrt(p q)
  if (p == 2 && (a == r || a == -r)) return EllipticRow{"Table2:2-(vi)", 0, 8};
  if (p == 3 && (a == r || a == -r)) return EllipticRow{"Table2:2-(vii)", 0, 12};
  return std::nullopt;
}

SerreFrobeniusGroup classify_elliptic(const WeilPolynomial& P) {
  if (P.g != 1) throw Error(ErrorKind::InvalidArgument, "classify_elliptic needs g = 1");
  const mpz_class trace = -P.a(1);
  if (trace * trace > 4 * P.q) throw Error(ErrorKind::InvalidTrace, "trace exceeds the Weil bound");
  const auto row = elliptic_row(trace, P.q, P.p, P.d);
  if (!row) throw Error(ErrorKind::InvalidTrace, "trace " + trace.get_str() + " is not the trace of an elliptic curve");
  return detail::make_group(1, row->delta, row->m, row->row);
}

}  // namespace sfg
