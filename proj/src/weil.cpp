#include "sfg/weil.hpp"

#include <cctype>
#include <sstream>

#include "sfg/error.hpp"

namespace sfg {

PrimePower prime_power(const mpz_class& q) {
  if (q < 2) throw Error(ErrorKind::NotPrimePower, q.get_str() + " is not a prime power");
  const long bits = static_cast<long>(mpz_sizeinbase(q.get_mpz_t(), 2));
  mpz_class root;
  for (long k = bits; k >= 2; --k) {
    if (mpz_root(root.get_mpz_t(), q.get_mpz_t(), static_cast<unsigned long>(k)) != 0 &&
        mpz_probab_prime_p(root.get_mpz_t(), 40) > 0) {
      if (!root.fits_ulong_p()) throw Error(ErrorKind::InvalidArgument, "characteristic too large");
      return {root.get_ui(), static_cast<int>(k)};
    }
  }
  if (mpz_probab_prime_p(q.get_mpz_t(), 40) > 0) {
    if (!q.fits_ulong_p()) throw Error(ErrorKind::InvalidArgument, "characteristic too large");
    return {q.get_ui(), 1};
  }
  throw Error(ErrorKind::NotPrimePower, q.get_str() + " is not a prime power");
}

bool functional_equation_holds(const std::vector<mpz_class>& coeffs, const mpz_class& q) {
  if (coeffs.size() % 2 == 0) return false;
  const int g = static_cast<int>(coeffs.size() / 2);
  for (int i = 0; i <= g; ++i) {
    mpz_class qp;
    mpz_pow_ui(qp.get_mpz_t(), q.get_mpz_t(), static_cast<unsigned long>(g - i));
    if (coeffs[static_cast<std::size_t>(2 * g - i)] != qp * coeffs[static_cast<std::size_t>(i)]) return false;
  }
  return true;
}

WeilPolynomial validate(const std::vector<mpz_class>& coeffs, const mpz_class& q, unsigned long p, int d) {
  if (coeffs.size() < 3 || coeffs.size() % 2 == 0)
    throw Error(ErrorKind::InvalidArgument, "Weil polynomial must have even positive degree");
  if (coeffs[0] != 1) throw Error(ErrorKind::NotMonic, "leading coefficient is " + coeffs[0].get_str());
  if (!functional_equation_holds(coeffs, q))
    throw Error(ErrorKind::FunctionalEquationViolated, "a_{2g-i} != q^{g-i} a_i");
  if (!roots_on_circle(from_descending(coeffs), q))
    throw Error(ErrorKind::RootOffCircle, "some root has absolute value != sqrt(q)");
  WeilPolynomial P;
  P.g = static_cast<int>(coeffs.size() / 2);
  P.q = q;
  P.p = p;
  P.d = d;
  P.coeffs = coeffs;
  return P;
}

WeilPolynomial validate(const std::vector<mpz_class>& coeffs, const mpz_class& q) {
  const PrimePower pp = prime_power(q);
  return validate(coeffs, q, pp.p, pp.d);
}

WeilPolynomial validate_poly(const ZPoly& f, const mpz_class& q, unsigned long p, int d) {
  return validate(to_descending(f), q, p, d);
}

WeilPolynomial from_half(const std::vector<mpz_class>& head, const mpz_class& q) {
  const int g = static_cast<int>(head.size());
  std::vector<mpz_class> c(static_cast<std::size_t>(2 * g + 1));
  c[0] = 1;
  for (int i = 1; i <= g; ++i) c[static_cast<std::size_t>(i)] = head[static_cast<std::size_t>(i - 1)];
  for (int i = 0; i < g; ++i) {
    mpz_class qp;
    mpz_pow_ui(qp.get_mpz_t(), q.get_mpz_t(), static_cast<unsigned long>(g - i));
    c[static_cast<std::size_t>(2 * g - i)] = qp * c[static_cast<std::size_t>(i)];
  }
  return validate(c, q);
}

std::string encode_base26(const mpz_class& v) {
  if (v == 0) return "a";
  if (v < 0) return "a" + encode_base26(-v);
  std::string out;
  mpz_class x = v;
  while (x > 0) {
    const unsigned long digit = mpz_fdiv_ui(x.get_mpz_t(), 26);
    out.insert(out.begin(), static_cast<char>('a' + digit));
    x /= 26;
  }
  return out;
}

mpz_class decode_base26(const std::string& token) {
  if (token.empty()) throw Error(ErrorKind::MalformedLabel, "empty coefficient token");
  for (char ch : token)
    if (ch < 'a' || ch > 'z') throw Error(ErrorKind::MalformedLabel, "bad character in token '" + token + "'");
  if (token == "a") return 0;
  bool negative = false;
  std::string body = token;
  if (body[0] == 'a') {
    negative = true;
    body = body.substr(1);
    if (body[0] == 'a') throw Error(ErrorKind::MalformedLabel, "non-canonical token '" + token + "'");
  }
  mpz_class v = 0;
  for (char ch : body) v = v * 26 + (ch - 'a');
  return negative ? mpz_class(-v) : v;
}

namespace {

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> parts;
  std::string cur;
  for (char ch : s) {
    if (ch == sep) {
      parts.push_back(cur);
      cur.clear();
    } else {
      cur.push_back(ch);
    }
  }
  parts.push_back(cur);
  return parts;
}

bool all_digits(const std::string& s) {
  if (s.empty() || s[0] == '0') return false;
  for (char ch : s)
    if (!std::isdigit(static_cast<unsigned char>(ch))) return false;
  return true;
}

}  // namespace

WeilPolynomial parse_label(const std::string& label) {
  const auto parts = split(label, '.');
  if (parts.size() != 3) throw Error(ErrorKind::MalformedLabel, "expected g.q.coefficients in '" + label + "'");
  if (!all_digits(parts[0]) || !all_digits(parts[1]))
    throw Error(ErrorKind::MalformedLabel, "bad dimension or field size in '" + label + "'");
  if (parts[0].size() > 3) throw Error(ErrorKind::MalformedLabel, "dimension too large in '" + label + "'");
  const int g = std::stoi(parts[0]);
  const mpz_class q(parts[1]);
  const auto tokens = split(parts[2], '_');
  if (static_cast<int>(tokens.size()) != g)
    throw Error(ErrorKind::MalformedLabel, "expected " + std::to_string(g) + " coefficients in '" + label + "'");
  std::vector<mpz_class> head;
  for (const auto& t : tokens) head.push_back(decode_base26(t));
  return from_half(head, q);
}

std::string format_label(const WeilPolynomial& P) {
  std::ostringstream os;
  os << P.g << '.' << P.q.get_str() << '.';
  for (int i = 1; i <= P.g; ++i) {
    if (i > 1) os << '_';
    os << encode_base26(P.a(i));
  }
  return os.str();
}

namespace {

// T^(g-k) (T^2 + q)^k, ascending.
ZPoly weil_basis(int g, int k, const mpz_class& q) {
  ZPoly base = pow(ZPoly{q, 0, 1}, static_cast<unsigned>(k));
  ZPoly out(static_cast<std::size_t>(g - k), mpz_class(0));
  out.insert(out.end(), base.begin(), base.end());
  return out;
}

}  // namespace

ZPoly real_weil_polynomial(const ZPoly& P, const mpz_class& q) {
  const int n = degree(P);
  if (n < 0 || n % 2 != 0) throw Error(ErrorKind::InvalidArgument, "expected even degree");
  const int g = n / 2;
  ZPoly rest = P;
  ZPoly Q(static_cast<std::size_t>(g + 1));
  for (int k = g; k >= 0; --k) {
    const std::size_t idx = static_cast<std::size_t>(g + k);
    const mpz_class c = idx < rest.size() ? rest[idx] : mpz_class(0);
    Q[static_cast<std::size_t>(k)] = c;
    if (c != 0) rest = sub(rest, scale(weil_basis(g, k, q), c));
  }
  trim(rest);
  if (!rest.empty()) throw Error(ErrorKind::FunctionalEquationViolated, "polynomial is not q-symmetric");
  trim(Q);
  return Q;
}

ZPoly real_weil_polynomial(const WeilPolynomial& P) { return real_weil_polynomial(P.poly(), P.q); }

ZPoly weil_from_real(const ZPoly& Q, const mpz_class& q) {
  const int g = degree(Q);
  ZPoly out;
  for (int k = 0; k <= g; ++k) {
    const mpz_class& c = Q[static_cast<std::size_t>(k)];
    if (c != 0) out = add(out, scale(weil_basis(g, k, q), c));
  }
  return out;
}

bool roots_on_circle(const ZPoly& P, const mpz_class& q) {
  const int n = degree(P);
  if (n < 0 || n % 2 != 0) return false;
  ZPoly Q;
  try {
    Q = real_weil_polynomial(P, q);
  } catch (const Error&) {
    return false;
  }
  const ZPoly sf = squarefree_part(Q);
  return count_roots_in_weil_interval(sf, q) == degree(sf);
}

}  // namespace sfg
