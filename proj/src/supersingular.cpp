#include "sfg/supersingular.hpp"

#include "sfg/error.hpp"

namespace sfg {

const char* to_string(ZhuType t) {
  switch (t) {
    case ZhuType::Z1: return "Z1";
    case ZhuType::Z2: return "Z2";
    case ZhuType::Z3: return "Z3";
  }
  return "?";
}

namespace {

constexpr long kCyclotomicSearch = 400;

struct Family {
  const char* name;
  unsigned long p;
  long m;
};

// Exceptional families with r = p^{(d+1)/2}; sign selects h(T) or h(-T) up to sign.
ZPoly named_family(const std::string& name, int sign, const mpz_class& q, const mpz_class& r) {
  const mpz_class e = sign;
  if (name == "E8" || name == "E12") return ZPoly{q, e * r, 1};
  if (name == "Psi51") return ZPoly{q * q, e * q * r, 3 * q, e * r, 1};
  if (name == "Psi23") return ZPoly{q * q, e * q * r, q, e * r, 1};
  if (name == "h71") return ZPoly{q * q * q, e * q * q * r, 3 * q * q, e * q * r, 3 * q, e * r, 1};
  if (name == "h33") return ZPoly{q * q * q, 0, 0, e * q * r, 0, 0, 1};
  throw Error(ErrorKind::InternalInvariant, "unknown family " + name);
}

}  // namespace

SupersingularMatch supersingular_match(const ZPoly& h, const mpz_class& q, unsigned long p, int d) {
  const int n = degree(h);
  if (n < 1 || h.back() != 1) throw Error(ErrorKind::NoMatch, "not a monic factor");
  if (d % 2 == 0) {
    const mpz_class s = sqrt(q);
    for (long m = 1; m <= kCyclotomicSearch; ++m) {
      if (euler_phi(m) != n) continue;
      if (rescale(cyclotomic(m), s) == h) return {ZhuType::Z1, m, "Phi_" + std::to_string(m)};
    }
    throw Error(ErrorKind::NoMatch, "no cyclotomic match for " + to_string(h));
  }
  if (n % 2 == 0) {
    for (long k = 1; k <= kCyclotomicSearch; ++k) {
      if (2 * euler_phi(k) != n) continue;
      if (substitute_power(rescale(cyclotomic(k), q), 2) == h)
        return {ZhuType::Z2, 2 * k, "Phi_" + std::to_string(k) + "(T^2)"};
    }
  }
  static const Family families[] = {
      {"E8", 2, 8}, {"E12", 3, 12}, {"Psi51", 5, 10}, {"Psi23", 2, 24}, {"h71", 7, 28}, {"h33", 3, 36},
  };
  mpz_class r;
  mpz_pow_ui(r.get_mpz_t(), mpz_class(p).get_mpz_t(), static_cast<unsigned long>((d + 1) / 2));
  for (const auto& f : families) {
    if (f.p != p) continue;
    for (int sign : {1, -1}) {
      const ZPoly cand = named_family(f.name, sign, q, r);
      if (cand == h) return {ZhuType::Z3, f.m, std::string(f.name) + (sign > 0 ? "+" : "-")};
    }
  }
  throw Error(ErrorKind::NoMatch, "no supersingular family matches " + to_string(h));
}

long supersingular_torsion_order(const ZPoly& P, const mpz_class& q, long bound) {
  const int n = degree(P);
  const bool q_square = mpz_perfect_square_p(q.get_mpz_t()) != 0;
  const auto s = power_sums(P, static_cast<std::size_t>(n) * static_cast<std::size_t>(bound));
  for (long r = 1; r <= bound; ++r) {
    if (!q_square && r % 2 != 0) continue;
    mpz_class qr;
    mpz_pow_ui(qr.get_mpz_t(), q.get_mpz_t(), static_cast<unsigned long>(r));
    const mpz_class root = sqrt(qr);
    mpz_class pw = root;
    bool ok = true;
    for (int k = 1; k <= n && ok; ++k) {
      if (s[static_cast<std::size_t>(k * r - 1)] != n * pw) ok = false;
      pw *= root;
    }
    if (ok) return r;
  }
  throw Error(ErrorKind::BoundExceeded, "no torsion order up to " + std::to_string(bound));
}

long supersingular_torsion_order(const WeilPolynomial& P, long bound) {
  return supersingular_torsion_order(P.poly(), P.q, bound);
}

}  // namespace sfg
