#include "sfg/poly.hpp"

#include <numeric>
#include <sstream>

#include "sfg/error.hpp"

namespace sfg {

int degree(const ZPoly& f) { return static_cast<int>(f.size()) - 1; }

void trim(ZPoly& f) {
  while (!f.empty() && f.back() == 0) f.pop_back();
}

ZPoly make_poly(std::initializer_list<long> ascending) {
  ZPoly f;
  for (long c : ascending) f.emplace_back(c);
  trim(f);
  return f;
}

ZPoly from_descending(const std::vector<mpz_class>& desc) {
  ZPoly f(desc.rbegin(), desc.rend());
  trim(f);
  return f;
}

std::vector<mpz_class> to_descending(const ZPoly& f) { return {f.rbegin(), f.rend()}; }

ZPoly add(const ZPoly& a, const ZPoly& b) {
  ZPoly r(std::max(a.size(), b.size()));
  for (std::size_t i = 0; i < a.size(); ++i) r[i] += a[i];
  for (std::size_t i = 0; i < b.size(); ++i) r[i] += b[i];
  trim(r);
  return r;
}

ZPoly sub(const ZPoly& a, const ZPoly& b) {
  ZPoly r(std::max(a.size(), b.size()));
  for (std::size_t i = 0; i < a.size(); ++i) r[i] += a[i];
  for (std::size_t i = 0; i < b.size(); ++i) r[i] -= b[i];
  trim(r);
  return r;
}

ZPoly mul(const ZPoly& a, const ZPoly& b) {
  if (a.empty() || b.empty()) return {};
  ZPoly r(a.size() + b.size() - 1);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
  }
  trim(r);
  return r;
}

ZPoly scale(const ZPoly& a, const mpz_class& c) {
  ZPoly r(a);
  for (auto& x : r) x *= c;
  trim(r);
  return r;
}

ZPoly pow(const ZPoly& a, unsigned e) {
  ZPoly result{mpz_class(1)};
  ZPoly base = a;
  while (e > 0) {
    if (e & 1U) result = mul(result, base);
    e >>= 1U;
    if (e > 0) base = mul(base, base);
  }
  return result;
}

ZPoly derivative(const ZPoly& a) {
  if (a.size() <= 1) return {};
  ZPoly r(a.size() - 1);
  for (std::size_t i = 1; i < a.size(); ++i) r[i - 1] = a[i] * static_cast<unsigned long>(i);
  trim(r);
  return r;
}

bool exact_divide(const ZPoly& a, const ZPoly& b, ZPoly& quotient) {
  if (b.empty()) throw Error(ErrorKind::InvalidArgument, "division by zero polynomial");
  quotient.clear();
  if (a.empty()) return true;
  if (a.size() < b.size()) return false;
  ZPoly rem = a;
  const mpz_class& lead = b.back();
  ZPoly q(a.size() - b.size() + 1);
  for (std::size_t k = q.size(); k-- > 0;) {
    const mpz_class& top = rem[k + b.size() - 1];
    if (top == 0) continue;
    if (!mpz_divisible_p(top.get_mpz_t(), lead.get_mpz_t())) return false;
    mpz_class c = top / lead;
    q[k] = c;
    for (std::size_t j = 0; j < b.size(); ++j) rem[k + j] -= c * b[j];
  }
  for (const auto& r : rem)
    if (r != 0) return false;
  trim(q);
  quotient = std::move(q);
  return true;
}

mpz_class content(const ZPoly& a) {
  mpz_class g = 0;
  for (const auto& c : a) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
  return g;
}

ZPoly primitive_part(const ZPoly& a) {
  if (a.empty()) return a;
  mpz_class g = content(a);
  if (a.back() < 0) g = -g;
  ZPoly r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) mpz_divexact(r[i].get_mpz_t(), a[i].get_mpz_t(), g.get_mpz_t());
  return r;
}

namespace {

// Pseudo-remainder of a by b, made primitive.
ZPoly prem_primitive(const ZPoly& a, const ZPoly& b) {
  ZPoly r = a;
  const mpz_class& lb = b.back();
  while (!r.empty() && r.size() >= b.size()) {
    mpz_class lr = r.back();
    std::size_t shift = r.size() - b.size();
    for (auto& c : r) c *= lb;
    for (std::size_t j = 0; j < b.size(); ++j) r[shift + j] -= lr * b[j];
    trim(r);
    if (!r.empty()) r = primitive_part(r);
  }
  return r;
}

}  // namespace

ZPoly gcd(const ZPoly& a, const ZPoly& b) {
  ZPoly x = primitive_part(a);
  ZPoly y = primitive_part(b);
  if (x.size() < y.size()) std::swap(x, y);
  while (!y.empty()) {
    ZPoly r = prem_primitive(x, y);
    x = std::move(y);
    y = std::move(r);
  }
  return primitive_part(x);
}

namespace {

QPoly to_q(const ZPoly& f) { return QPoly(f.begin(), f.end()); }

void qtrim(QPoly& v) {
  while (!v.empty() && v.back() == 0) v.pop_back();
}

ZPoly to_z_primitive(const QPoly& v) {
  mpz_class l = 1;
  for (const auto& x : v) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), x.get_den_mpz_t());
  ZPoly z(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) z[i] = mpz_class(v[i] * l);
  trim(z);
  return primitive_part(z);
}

QPoly qdiv(const QPoly& n, const ZPoly& dz) {
  QPoly num = n;
  QPoly q(num.size() >= dz.size() ? num.size() - dz.size() + 1 : 0);
  for (std::size_t i = q.size(); i-- > 0;) {
    q[i] = num[i + dz.size() - 1] / dz.back();
    for (std::size_t j = 0; j < dz.size(); ++j) num[i + j] -= q[i] * dz[j];
  }
  qtrim(q);
  return q;
}

QPoly qderiv(const QPoly& v) {
  QPoly r(v.size() > 1 ? v.size() - 1 : 0);
  for (std::size_t i = 1; i < v.size(); ++i) r[i - 1] = v[i] * static_cast<long>(i);
  return r;
}

}  // namespace

std::vector<std::pair<ZPoly, int>> squarefree_decomposition(const ZPoly& f) {
  std::vector<std::pair<ZPoly, int>> out;
  if (degree(f) < 1) return out;
  const ZPoly fp = derivative(f);
  const ZPoly a = gcd(f, fp);
  QPoly b = qdiv(to_q(f), a);
  QPoly c = qdiv(to_q(fp), a);
  int k = 1;
  while (b.size() > 1) {
    QPoly bd = qderiv(b);
    QPoly d(std::max(c.size(), bd.size()));
    for (std::size_t i = 0; i < c.size(); ++i) d[i] += c[i];
    for (std::size_t i = 0; i < bd.size(); ++i) d[i] -= bd[i];
    qtrim(d);
    const ZPoly bz = to_z_primitive(b);
    const ZPoly g = d.empty() ? bz : gcd(bz, to_z_primitive(d));
    if (degree(g) >= 1) out.emplace_back(g, k);
    b = qdiv(b, g);
    c = qdiv(d, g);
    ++k;
  }
  return out;
}

ZPoly squarefree_part(const ZPoly& f) {
  ZPoly r{mpz_class(1)};
  for (const auto& [g, k] : squarefree_decomposition(f)) r = mul(r, g);
  return r;
}

mpz_class evaluate(const ZPoly& f, const mpz_class& x) {
  mpz_class r = 0;
  for (std::size_t i = f.size(); i-- > 0;) r = r * x + f[i];
  return r;
}

mpq_class evaluate(const ZPoly& f, const mpq_class& x) {
  mpq_class r = 0;
  for (std::size_t i = f.size(); i-- > 0;) r = r * x + f[i];
  return r;
}

ZPoly negate_variable(const ZPoly& f) {
  ZPoly r = f;
  for (std::size_t i = 1; i < r.size(); i += 2) r[i] = -r[i];
  return r;
}

ZPoly substitute_power(const ZPoly& f, unsigned k) {
  if (f.empty()) return f;
  ZPoly r((f.size() - 1) * k + 1);
  for (std::size_t i = 0; i < f.size(); ++i) r[i * k] = f[i];
  return r;
}

ZPoly rescale(const ZPoly& f, const mpz_class& c) {
  ZPoly r = f;
  mpz_class pw = 1;
  for (std::size_t i = r.size(); i-- > 0;) {
    r[i] *= pw;
    pw *= c;
  }
  trim(r);
  return r;
}

std::vector<mpz_class> power_sums(const ZPoly& f, std::size_t count) {
  const int n = degree(f);
  if (n < 1 || f.back() != 1) throw Error(ErrorKind::NotMonic, "power sums need a monic polynomial");
  // c_i is the coefficient of T^{n-i}.
  std::vector<mpz_class> c(n + 1);
  for (int i = 0; i <= n; ++i) c[i] = f[n - i];
  std::vector<mpz_class> s(count + 1);
  for (std::size_t k = 1; k <= count; ++k) {
    mpz_class acc = 0;
    const std::size_t lim = std::min<std::size_t>(k - 1, n);
    for (std::size_t i = 1; i <= lim; ++i) acc += c[i] * s[k - i];
    if (k <= static_cast<std::size_t>(n)) acc += c[k] * static_cast<unsigned long>(k);
    s[k] = -acc;
  }
  s.erase(s.begin());
  return s;
}

ZPoly from_power_sums(const std::vector<mpz_class>& sums, std::size_t n) {
  if (sums.size() < n) throw Error(ErrorKind::InvalidArgument, "not enough power sums");
  std::vector<mpz_class> b(n + 1);
  b[0] = 1;
  for (std::size_t k = 1; k <= n; ++k) {
    mpz_class acc = 0;
    for (std::size_t i = 1; i <= k; ++i) acc += b[k - i] * sums[i - 1];
    if (!mpz_divisible_ui_p(acc.get_mpz_t(), k))
      throw Error(ErrorKind::InternalInvariant, "power sums do not come from an integer polynomial");
    mpz_divexact_ui(acc.get_mpz_t(), acc.get_mpz_t(), k);
    b[k] = -acc;
  }
  ZPoly f(n + 1);
  for (std::size_t i = 0; i <= n; ++i) f[n - i] = b[i];
  return f;
}

long euler_phi(long n) {
  long result = n;
  for (long p = 2; p * p <= n; ++p) {
    if (n % p == 0) {
      while (n % p == 0) n /= p;
      result -= result / p;
    }
  }
  if (n > 1) result -= result / n;
  return result;
}

ZPoly cyclotomic(long n) {
  if (n < 1) throw Error(ErrorKind::InvalidArgument, "cyclotomic index must be positive");
  // T^n - 1 divided by Phi_d for every proper divisor d.
  ZPoly f(n + 1);
  f[0] = -1;
  f[n] = 1;
  for (long d = 1; d < n; ++d) {
    if (n % d != 0) continue;
    ZPoly q;
    if (!exact_divide(f, cyclotomic(d), q)) throw Error(ErrorKind::InternalInvariant, "cyclotomic division");
    f = std::move(q);
  }
  return f;
}

bool is_prime(long n) {
  if (n < 2) return false;
  for (long p = 2; p * p <= n; ++p)
    if (n % p == 0) return false;
  return true;
}

long lcm(long a, long b) { return a / std::gcd(a, b) * b; }

std::string to_string(const ZPoly& f, const std::string& var) {
  if (f.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (std::size_t i = f.size(); i-- > 0;) {
    const mpz_class& c = f[i];
    if (c == 0) continue;
    mpz_class mag = abs(c);
    if (first) {
      if (c < 0) os << "-";
    } else {
      os << (c < 0 ? " - " : " + ");
    }
    if (i == 0 || mag != 1) os << mag.get_str();
    if (i > 0) {
      os << var;
      if (i > 1) os << "^" << i;
    }
    first = false;
  }
  return os.str();
}

}  // namespace sfg
