#include "oracles.hpp"

#include <algorithm>
#include <complex>
#include <functional>
#include <map>
#include <numeric>
#include <stdexcept>

namespace oracle {

namespace {

using QPoly = std::vector<mpq_class>;  // ascending

void trim(QPoly& f) {
  while (!f.empty() && f.back() == 0) f.pop_back();
}

QPoly to_q(const std::vector<mpz_class>& desc) {
  QPoly f(desc.rbegin(), desc.rend());
  trim(f);
  return f;
}

QPoly rem(QPoly a, const QPoly& b) {
  trim(a);
  while (a.size() >= b.size()) {
    const mpq_class c = a.back() / b.back();
    const std::size_t shift = a.size() - b.size();
    for (std::size_t i = 0; i < b.size(); ++i) a[shift + i] -= c * b[i];
    a.pop_back();
    trim(a);
  }
  return a;
}

QPoly quo(QPoly a, const QPoly& b) {
  trim(a);
  if (a.size() < b.size()) return {};
  QPoly out(a.size() - b.size() + 1);
  while (a.size() >= b.size()) {
    const mpq_class c = a.back() / b.back();
    const std::size_t shift = a.size() - b.size();
    out[shift] = c;
    for (std::size_t i = 0; i < b.size(); ++i) a[shift + i] -= c * b[i];
    a.pop_back();
  }
  return out;
}

QPoly monic(QPoly f) {
  const mpq_class lc = f.back();
  for (auto& c : f) c /= lc;
  return f;
}

QPoly gcd(QPoly a, QPoly b) {
  trim(a);
  trim(b);
  while (!b.empty()) {
    QPoly r = rem(a, b);
    a = std::move(b);
    b = std::move(r);
  }
  return monic(a);
}

QPoly derivative(const QPoly& f) {
  QPoly d;
  for (std::size_t i = 1; i < f.size(); ++i) d.push_back(f[i] * static_cast<long>(i));
  return d;
}

std::vector<mpz_class> to_desc_integral(const QPoly& f) {
  mpz_class den = 1;
  for (const auto& c : f) den = lcm(den, c.get_den());
  std::vector<mpz_class> out;
  for (auto it = f.rbegin(); it != f.rend(); ++it) out.push_back(mpz_class((*it) * den));
  return out;
}

complex50 horner(const std::vector<complex50>& desc, const complex50& z) {
  complex50 v = 0;
  for (const auto& c : desc) v = v * z + c;
  return v;
}

mpz_class binomial(long n, long k) {
  mpz_class r;
  mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
  return r;
}

std::pair<unsigned long, int> split_prime_power(long q) {
  for (long p = 2; p <= q; ++p) {
    if (q % p != 0) continue;
    int d = 0;
    long r = q;
    while (r % p == 0) {
      r /= p;
      ++d;
    }
    if (r != 1) throw std::invalid_argument("not a prime power");
    return {static_cast<unsigned long>(p), d};
  }
  throw std::invalid_argument("q must exceed 1");
}

}  // namespace

std::vector<complex50> aberth_roots(const std::vector<mpz_class>& desc) {
  const std::size_t n = desc.size() - 1;
  if (n == 0) return {};
  std::vector<complex50> c, dc;
  for (const auto& v : desc) c.emplace_back(real50(v.get_str()));
  for (std::size_t i = 0; i < n; ++i) dc.push_back(c[i] * real50(static_cast<long>(n - i)));
  real50 radius = 0;
  for (std::size_t i = 1; i <= n; ++i) {
    real50 r = pow(abs(c[i].real() / c[0].real()), real50(1) / real50(static_cast<long>(i)));
    radius = std::max(radius, r);
  }
  std::vector<complex50> z(n);
  for (std::size_t i = 0; i < n; ++i) {
    const real50 a = 2 * boost::math::constants::pi<real50>() * (real50(static_cast<long>(i)) + real50(0.4)) /
                     real50(static_cast<long>(n));
    z[i] = complex50(radius * cos(a), radius * sin(a));
  }
  const real50 tol("1e-45");
  for (int it = 0; it < 2000; ++it) {
    real50 worst = 0;
    for (std::size_t i = 0; i < n; ++i) {
      const complex50 p = horner(c, z[i]);
      const complex50 dp = horner(dc, z[i]);
      const complex50 w = p / dp;
      complex50 s = 0;
      for (std::size_t j = 0; j < n; ++j)
        if (j != i) s += complex50(1) / (z[i] - z[j]);
      const complex50 step = w / (complex50(1) - w * s);
      z[i] -= step;
      worst = std::max(worst, abs(step) / std::max(real50(1), abs(z[i])));
    }
    if (worst < tol) break;
  }
  return z;
}

std::vector<complex50> weil_roots(const sfg::WeilPolynomial& P) {
  std::vector<complex50> out;
  QPoly f = to_q(P.coeffs);
  while (f.size() > 1) {
    const QPoly sf = monic(quo(f, gcd(f, derivative(f))));
    for (const auto& z : aberth_roots(to_desc_integral(sf))) out.push_back(z);
    f = quo(f, sf);
  }
  return out;
}

std::vector<real50> aberth_angles(const sfg::WeilPolynomial& P) {
  const real50 two_pi = 2 * boost::math::constants::pi<real50>();
  std::vector<real50> t;
  for (const auto& z : weil_roots(P)) {
    real50 a = atan2(z.imag(), z.real()) / two_pi;
    if (a < 0) a = -a;
    t.push_back(a);
  }
  std::sort(t.begin(), t.end());
  std::vector<real50> out;
  for (std::size_t i = 0; i < t.size(); i += 2) out.push_back(t[i]);
  return out;
}

std::vector<std::pair<sfg::ZPoly, int>> brute_factor_real(const sfg::ZPoly& Q, const mpz_class& q) {
  std::vector<std::pair<sfg::ZPoly, int>> out;
  sfg::ZPoly f = Q;
  while (f.size() > 1) {
    const long n = static_cast<long>(f.size()) - 1;
    sfg::ZPoly found;
    for (long k = 1; k <= n && found.empty(); ++k) {
      if (k < n && 2 * k > n) continue;
      if (k == n) {
        found = f;
        break;
      }
      // Monic degree-k divisors: coefficient of x^{k-i} bounded by C(k, i) (2 sqrt q)^i.
      std::vector<mpz_class> bound(static_cast<std::size_t>(k + 1));
      for (long i = 1; i <= k; ++i) {
        mpz_class four_q_i;
        mpz_pow_ui(four_q_i.get_mpz_t(), mpz_class(4 * q).get_mpz_t(), static_cast<unsigned long>(i));
        bound[static_cast<std::size_t>(i)] = sqrt(binomial(k, i) * binomial(k, i) * four_q_i) + 1;
      }
      std::vector<mpz_class> cur(static_cast<std::size_t>(k + 1));
      cur[0] = 1;
      std::function<bool(long)> search = [&](long i) -> bool {
        if (i > k) {
          sfg::ZPoly d(cur.rbegin(), cur.rend());
          // Exact monic division.
          sfg::ZPoly a = f;
          while (a.size() >= d.size()) {
            const mpz_class c = a.back();
            const std::size_t shift = a.size() - d.size();
            for (std::size_t j = 0; j < d.size(); ++j) a[shift + j] -= c * d[j];
            a.pop_back();
          }
          if (std::all_of(a.begin(), a.end(), [](const mpz_class& v) { return v == 0; })) {
            found = d;
            return true;
          }
          return false;
        }
        for (mpz_class v = -bound[static_cast<std::size_t>(i)]; v <= bound[static_cast<std::size_t>(i)]; ++v) {
          cur[static_cast<std::size_t>(i)] = v;
          if (search(i + 1)) return true;
        }
        return false;
      };
      search(1);
    }
    int e = 0;
    while (true) {
      sfg::ZPoly a = f, quotient(f.size() - found.size() + 1);
      while (a.size() >= found.size()) {
        const mpz_class c = a.back();
        const std::size_t shift = a.size() - found.size();
        quotient[shift] = c;
        for (std::size_t j = 0; j < found.size(); ++j) a[shift + j] -= c * found[j];
        a.pop_back();
      }
      if (!std::all_of(a.begin(), a.end(), [](const mpz_class& v) { return v == 0; })) break;
      f = quotient;
      ++e;
      if (f.size() < found.size()) break;
    }
    out.emplace_back(found, e);
  }
  return out;
}

sfg::ZPoly zeta_base_change(const sfg::ZPoly& P, unsigned r) {
  using Elt = std::vector<mpz_class>;  // element of Z[x]/(x^r - 1)
  auto emul = [r](const Elt& a, const Elt& b) {
    Elt c(r, 0);
    for (unsigned i = 0; i < r; ++i)
      if (a[i] != 0)
        for (unsigned j = 0; j < r; ++j) c[(i + j) % r] += a[i] * b[j];
    return c;
  };
  std::vector<Elt> prod{Elt(r, 0)};
  prod[0][0] = 1;
  for (unsigned k = 0; k < r; ++k) {
    std::vector<Elt> factor;
    for (std::size_t i = 0; i < P.size(); ++i) {
      Elt e(r, 0);
      e[(k * i) % r] = P[i];
      factor.push_back(e);
    }
    std::vector<Elt> next(prod.size() + factor.size() - 1, Elt(r, 0));
    for (std::size_t i = 0; i < prod.size(); ++i)
      for (std::size_t j = 0; j < factor.size(); ++j) {
        const Elt m = emul(prod[i], factor[j]);
        for (unsigned t = 0; t < r; ++t) next[i + j][t] += m[t];
      }
    prod = std::move(next);
  }
  // Reduce modulo the r-th cyclotomic polynomial, computed by division.
  QPoly phi(r + 1, 0);
  phi[0] = -1;
  phi[r] = 1;
  for (unsigned d = 1; d < r; ++d) {
    if (r % d != 0) continue;
    QPoly xd(d + 1, 0);
    xd[0] = -1;
    xd[d] = 1;
    const QPoly g = gcd(phi, xd);
    if (g.size() > 1) phi = quo(phi, g);
  }
  sfg::ZPoly out;
  for (std::size_t i = 0; i < prod.size(); ++i) {
    QPoly e(prod[i].begin(), prod[i].end());
    e = rem(e, phi);
    if (e.size() > 1) throw std::logic_error("coefficient outside Z");
    const mpq_class v = e.empty() ? mpq_class(0) : e[0];
    if (v.get_den() != 1) throw std::logic_error("non-integral coefficient");
    if (i % r != 0) {
      if (v != 0) throw std::logic_error("term outside Z[T^r]");
      continue;
    }
    out.push_back(v.get_num());
  }
  return out;
}

AngleGroup brute_relations(const std::vector<real50>& theta, int box, long max_den) {
  const int g = static_cast<int>(theta.size());
  const real50 tol("1e-30");
  std::vector<std::vector<mpq_class>> basis;  // row echelon, for the rank
  long m = 1;
  std::vector<int> c(static_cast<std::size_t>(g), -box);
  while (true) {
    if (std::any_of(c.begin(), c.end(), [](int v) { return v != 0; })) {
      real50 s = 0;
      for (int j = 0; j < g; ++j) s += c[static_cast<std::size_t>(j)] * theta[static_cast<std::size_t>(j)];
      for (long den = 1; den <= max_den; ++den) {
        const real50 v = s * den;
        if (abs(v - round(v)) < tol * den) {
          m = std::lcm(m, den);
          std::vector<mpq_class> row;
          for (int v2 : c) row.emplace_back(v2);
          for (const auto& b : basis) {
            std::size_t piv = 0;
            while (b[piv] == 0) ++piv;
            const mpq_class f = row[piv] / b[piv];
            for (int j = 0; j < g; ++j) row[static_cast<std::size_t>(j)] -= f * b[static_cast<std::size_t>(j)];
          }
          if (std::any_of(row.begin(), row.end(), [](const mpq_class& v2) { return v2 != 0; })) {
            basis.push_back(row);
            std::sort(basis.begin(), basis.end(), [](const auto& a, const auto& b) {
              auto lead = [](const auto& r) {
                std::size_t i = 0;
                while (r[i] == 0) ++i;
                return i;
              };
              return lead(a) < lead(b);
            });
            // Re-echelonize so every pivot column is distinct.
            for (std::size_t i = 0; i < basis.size(); ++i)
              for (std::size_t k = i + 1; k < basis.size(); ++k) {
                std::size_t piv = 0;
                while (basis[i][piv] == 0) ++piv;
                const mpq_class f = basis[k][piv] / basis[i][piv];
                for (int j = 0; j < g; ++j)
                  basis[k][static_cast<std::size_t>(j)] -= f * basis[i][static_cast<std::size_t>(j)];
              }
            basis.erase(std::remove_if(basis.begin(), basis.end(),
                                       [](const auto& r) {
                                         return std::all_of(r.begin(), r.end(),
                                                            [](const mpq_class& v2) { return v2 == 0; });
                                       }),
                        basis.end());
          }
          break;
        }
      }
    }
    int j = 0;
    while (j < g && ++c[static_cast<std::size_t>(j)] > box) {
      c[static_cast<std::size_t>(j)] = -box;
      ++j;
    }
    if (j == g) break;
  }
  return {g - static_cast<int>(basis.size()), m};
}

std::vector<mpz_class> word_moments(const std::vector<real50>& theta, int K) {
  const int g = static_cast<int>(theta.size());
  const real50 tol("1e-30");
  std::map<std::vector<int>, mpz_class> walks{{std::vector<int>(static_cast<std::size_t>(g), 0), 1}};
  std::vector<mpz_class> out;
  for (int k = 1; k <= K; ++k) {
    std::map<std::vector<int>, mpz_class> next;
    for (const auto& [v, n] : walks)
      for (int j = 0; j < g; ++j)
        for (int s : {-1, 1}) {
          std::vector<int> w = v;
          w[static_cast<std::size_t>(j)] += s;
          next[w] += n;
        }
    walks = std::move(next);
    mpz_class total = 0;
    for (const auto& [v, n] : walks) {
      real50 s = 0;
      for (int j = 0; j < g; ++j) s += v[static_cast<std::size_t>(j)] * theta[static_cast<std::size_t>(j)];
      if (abs(s - round(s)) < tol) total += n;
    }
    out.push_back(total);
  }
  return out;
}

bool waterhouse_admissible(long a, long q) {
  const auto [p, d] = split_prime_power(q);
  const long ap = a < 0 ? -a : a;
  if (ap % static_cast<long>(p) != 0) return true;
  const long a2 = a * a;
  if (d % 2 == 0) {
    if (a2 == 4 * q) return true;
    if (a2 == q && p % 3 != 1) return true;
    if (a == 0 && p % 4 != 1) return true;
    return false;
  }
  if (a == 0) return true;
  if (a2 == 2 * q && p == 2) return true;
  if (a2 == 3 * q && p == 3) return true;
  return false;
}

long elliptic_order(long a, long q) {
  const auto [p, d] = split_prime_power(q);
  (void)d;
  if ((a < 0 ? -a : a) % static_cast<long>(p) != 0) return 0;
  // cos^2 of the angle is a^2 / 4q; the sign of a picks the half plane.
  const long a2 = a * a;
  if (a2 == 4 * q) return a > 0 ? 1 : 2;
  if (4 * a2 == 4 * q) return a > 0 ? 6 : 3;
  if (a == 0) return 4;
  if (2 * a2 == 4 * q) return 8;
  if (4 * a2 == 12 * q) return 12;
  throw std::invalid_argument("trace not admissible");
}

std::vector<sfg::WeilPolynomial> brute_enumerate(int g, long q) {
  using cl = std::complex<long double>;
  const auto [p, d] = split_prime_power(q);
  std::vector<sfg::WeilPolynomial> out;
  std::vector<long> bound(static_cast<std::size_t>(g + 1));
  for (int k = 1; k <= g; ++k)
    bound[static_cast<std::size_t>(k)] =
        static_cast<long>(std::floor(binomial(2 * g, k).get_d() * std::pow(static_cast<long double>(q), k / 2.0L)));
  std::vector<long> a(static_cast<std::size_t>(g + 1), 0);
  for (int k = 1; k <= g; ++k) a[static_cast<std::size_t>(k)] = -bound[static_cast<std::size_t>(k)];
  a[0] = 1;
  while (true) {
    std::vector<mpz_class> desc(static_cast<std::size_t>(2 * g + 1));
    mpz_class qp = 1;
    for (int i = 0; i <= g; ++i) desc[static_cast<std::size_t>(i)] = a[static_cast<std::size_t>(i)];
    for (int i = g - 1; i >= 0; --i) {
      qp *= q;
      desc[static_cast<std::size_t>(2 * g - i)] = qp * a[static_cast<std::size_t>(i)];
    }
    // Quick filter in long double, then confirmation at 50 digits.
    bool near = true;
    {
      const std::size_t n = desc.size() - 1;
      std::vector<cl> z(n);
      const long double R = std::sqrt(static_cast<long double>(q));
      for (std::size_t i = 0; i < n; ++i) z[i] = std::polar(R, 6.2831853071795864769L * (i + 0.4L) / n);
      for (int it = 0; it < 300; ++it) {
        long double worst = 0;
        for (std::size_t i = 0; i < n; ++i) {
          cl pv = 0, dv = 0;
          for (std::size_t t = 0; t < desc.size(); ++t) {
            dv = dv * z[i] + pv;
            pv = pv * z[i] + static_cast<long double>(desc[t].get_d());
          }
          const cl w = pv / dv;
          cl s = 0;
          for (std::size_t j = 0; j < n; ++j)
            if (j != i) s += 1.0L / (z[i] - z[j]);
          const cl step = w / (1.0L - w * s);
          z[i] -= step;
          worst = std::max(worst, std::abs(step));
        }
        if (worst < 1e-16L) break;
      }
      for (const auto& zz : z)
        if (std::fabs(std::norm(zz) / q - 1) > 1e-4L) near = false;
    }
    if (near) {
      sfg::WeilPolynomial P;
      P.g = g;
      P.q = q;
      P.p = p;
      P.d = d;
      P.coeffs = desc;
      bool ok = true;
      for (const auto& z : weil_roots(P))
        if (abs(norm(z) / real50(q) - 1) > real50("1e-20")) ok = false;
      if (ok) out.push_back(P);
    }
    int k = g;
    while (k >= 1 && ++a[static_cast<std::size_t>(k)] > bound[static_cast<std::size_t>(k)]) {
      a[static_cast<std::size_t>(k)] = -bound[static_cast<std::size_t>(k)];
      --k;
    }
    if (k == 0) break;
  }
  return out;
}

}  // namespace oracle
