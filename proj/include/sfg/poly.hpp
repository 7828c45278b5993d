#pragma once

#include <gmpxx.h>

#include <string>
#include <utility>
#include <vector>

namespace sfg {

// Dense integer polynomial, ascending: c[i] is the coefficient of T^i.
// The zero polynomial is the empty vector.
using ZPoly = std::vector<mpz_class>;
using QPoly = std::vector<mpq_class>;

int degree(const ZPoly& f);
void trim(ZPoly& f);
ZPoly make_poly(std::initializer_list<long> ascending);
ZPoly from_descending(const std::vector<mpz_class>& desc);
std::vector<mpz_class> to_descending(const ZPoly& f);

ZPoly add(const ZPoly& a, const ZPoly& b);
ZPoly sub(const ZPoly& a, const ZPoly& b);
ZPoly mul(const ZPoly& a, const ZPoly& b);
ZPoly scale(const ZPoly& a, const mpz_class& c);
ZPoly pow(const ZPoly& a, unsigned e);
ZPoly derivative(const ZPoly& a);

// Quotient if b divides a exactly in Z[T], otherwise false.
bool exact_divide(const ZPoly& a, const ZPoly& b, ZPoly& quotient);

mpz_class content(const ZPoly& a);
// Divides out the content and makes the leading coefficient positive.
ZPoly primitive_part(const ZPoly& a);
ZPoly gcd(const ZPoly& a, const ZPoly& b);

// Yun decomposition over Q: f = c * prod g_k^k with g_k squarefree, coprime,
// primitive with positive leading coefficient. Only nonconstant g_k returned.
std::vector<std::pair<ZPoly, int>> squarefree_decomposition(const ZPoly& f);
ZPoly squarefree_part(const ZPoly& f);

mpz_class evaluate(const ZPoly& f, const mpz_class& x);
mpq_class evaluate(const ZPoly& f, const mpq_class& x);

// f(-T).
ZPoly negate_variable(const ZPoly& f);
// f(T^k).
ZPoly substitute_power(const ZPoly& f, unsigned k);
// c^deg(f) * f(T / c), the coefficientwise rescaling f^{[c]}.
ZPoly rescale(const ZPoly& f, const mpz_class& c);

// Power sums s_1..s_count of the roots of a monic f.
std::vector<mpz_class> power_sums(const ZPoly& f, std::size_t count);
// Monic polynomial of degree n whose roots have power sums s_1..s_n.
ZPoly from_power_sums(const std::vector<mpz_class>& sums, std::size_t n);

long euler_phi(long n);
ZPoly cyclotomic(long n);
bool is_prime(long n);
long lcm(long a, long b);

std::string to_string(const ZPoly& f, const std::string& var = "T");

}  // namespace sfg
