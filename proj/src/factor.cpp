#include "sfg/factor.hpp"

#include <algorithm>

#include "sfg/error.hpp"

namespace sfg {

namespace {

long max_bits(const ZPoly& f) {
  long b = 1;
  for (const auto& c : f) b = std::max(b, static_cast<long>(mpz_sizeinbase(c.get_mpz_t(), 2)));
  return b;
}

// prod (T - x_i) with rounded integer coefficients, or false if some
// coefficient is not close to an integer.
bool rounded_product(const std::vector<const Real*>& xs, mpfr_prec_t bits, ZPoly& out) {
  std::vector<Real> c{Real::from_long(1, bits)};
  for (const Real* x : xs) {
    std::vector<Real> next(c.size() + 1, Real(bits));
    for (std::size_t i = 0; i < c.size(); ++i) {
      next[i + 1] += c[i];
      next[i] -= c[i] * *x;
    }
    c = std::move(next);
  }
  out.clear();
  const Real tol = ldexp(Real::from_long(1, bits), -static_cast<long>(bits) / 4);
  for (const auto& v : c) {
    const mpz_class z = round_to_mpz(v);
    if (abs(v - Real::from_mpz(z, bits)) > tol) return false;
    out.push_back(z);
  }
  return true;
}

// Irreducible factors of a squarefree monic polynomial with only real roots.
std::vector<ZPoly> split_squarefree(ZPoly f) {
  std::vector<ZPoly> out;
  if (degree(f) <= 0) return out;
  const mpfr_prec_t bits = (degree(f) + 2) * max_bits(f) + 128;
  std::vector<Real> roots = real_roots(f, bits);
  if (static_cast<int>(roots.size()) != degree(f))
    throw Error(ErrorKind::InternalInvariant, "polynomial is not real-rooted");
  while (degree(f) > 0) {
    const int n = static_cast<int>(roots.size());
    bool found = false;
    // Smallest subset containing roots[0] whose product is an integer divisor.
    for (int k = 1; k < n && !found; ++k) {
      std::vector<int> idx(static_cast<std::size_t>(k));
      idx[0] = 0;
      for (int i = 1; i < k; ++i) idx[static_cast<std::size_t>(i)] = i;
      while (true) {
        std::vector<const Real*> xs;
        for (int i : idx) xs.push_back(&roots[static_cast<std::size_t>(i)]);
        ZPoly cand, quo;
        if (rounded_product(xs, bits, cand) && exact_divide(f, cand, quo)) {
          out.push_back(cand);
          f = quo;
          std::vector<Real> rest;
          for (int i = 0; i < n; ++i)
            if (std::find(idx.begin(), idx.end(), i) == idx.end()) rest.push_back(roots[static_cast<std::size_t>(i)]);
          roots = std::move(rest);
          found = true;
          break;
        }
        // Next combination of idx[1..k-1] from {1..n-1}.
        int pos = k - 1;
        while (pos >= 1 && idx[static_cast<std::size_t>(pos)] == n - k + pos) --pos;
        if (pos < 1) break;
        ++idx[static_cast<std::size_t>(pos)];
        for (int i = pos + 1; i < k; ++i) idx[static_cast<std::size_t>(i)] = idx[static_cast<std::size_t>(i - 1)] + 1;
      }
    }
    if (!found) {
      out.push_back(f);
      break;
    }
  }
  return out;
}

void sort_factors(std::vector<IsogenyFactor>& fs) {
  std::sort(fs.begin(), fs.end(), [](const IsogenyFactor& a, const IsogenyFactor& b) {
    if (a.h == b.h) return a.e < b.e;
    return factor_less(a.h, b.h);
  });
}

}  // namespace

bool factor_less(const ZPoly& a, const ZPoly& b) {
  if (degree(a) != degree(b)) return degree(a) < degree(b);
  const auto da = to_descending(a), db = to_descending(b);
  return std::lexicographical_compare(da.begin(), da.end(), db.begin(), db.end());
}

std::vector<IsogenyFactor> factor_real_rooted(const ZPoly& Q) {
  if (degree(Q) < 0 || Q.back() != 1) throw Error(ErrorKind::NotMonic, "expected a monic polynomial");
  std::vector<IsogenyFactor> out;
  for (const auto& [part, k] : squarefree_decomposition(Q))
    for (auto& h : split_squarefree(part)) out.push_back({h, k});
  sort_factors(out);
  return out;
}

IsogenyFactorization factor_weil(const ZPoly& P, const mpz_class& q) {
  const ZPoly Q = real_weil_polynomial(P, q);
  const bool square = mpz_perfect_square_p(q.get_mpz_t()) != 0;
  std::vector<IsogenyFactor> fs;
  for (const auto& [f, k] : factor_real_rooted(Q)) {
    if (square && degree(f) == 1) {
      // x - c with c = +-2 sqrt(q) gives (T - c/2)^2.
      const mpz_class s = sqrt(q);
      if (f[0] == -2 * s || f[0] == 2 * s) {
        fs.push_back({ZPoly{f[0] / 2, 1}, 2 * k});
        continue;
      }
    }
    if (!square && f == ZPoly{-4 * q, 0, 1}) {
      fs.push_back({ZPoly{-q, 0, 1}, 2 * k});
      continue;
    }
    fs.push_back({weil_from_real(f, q), k});
  }
  sort_factors(fs);
  IsogenyFactorization F;
  F.factors = std::move(fs);
  return F;
}

IsogenyFactorization factor(const WeilPolynomial& P) { return factor_weil(P.poly(), P.q); }

ZPoly expand(const IsogenyFactorization& F) {
  ZPoly r{1};
  for (const auto& f : F.factors) r = mul(r, pow(f.h, static_cast<unsigned>(f.e)));
  return r;
}

bool is_pure_power(const IsogenyFactorization& F) { return F.factors.size() == 1; }

ZPoly base_change_poly(const ZPoly& P, unsigned r) {
  if (r == 0) throw Error(ErrorKind::InvalidArgument, "base change degree must be positive");
  if (r == 1) return P;
  const std::size_t n = static_cast<std::size_t>(degree(P));
  const auto s = power_sums(P, n * r);
  std::vector<mpz_class> t(n);
  for (std::size_t k = 1; k <= n; ++k) t[k - 1] = s[k * r - 1];
  return from_power_sums(t, n);
}

WeilPolynomial base_change(const WeilPolynomial& P, unsigned r) {
  mpz_class qr;
  mpz_pow_ui(qr.get_mpz_t(), P.q.get_mpz_t(), r);
  return validate_poly(base_change_poly(P.poly(), r), qr, P.p, P.d * static_cast<int>(r));
}

}  // namespace sfg
