#include "sfg/real.hpp"

#include <algorithm>
#include <utility>

namespace sfg {

Real::Real(mpfr_prec_t prec) {
  mpfr_init2(value_, prec);
  mpfr_set_zero(value_, 1);
}

Real::Real(const Real& other) {
  mpfr_init2(value_, other.precision());
  mpfr_set(value_, other.value_, MPFR_RNDN);
}

Real::Real(Real&& other) noexcept {
  mpfr_init2(value_, MPFR_PREC_MIN);
  mpfr_swap(value_, other.value_);
}

Real& Real::operator=(const Real& other) {
  if (this != &other) {
    mpfr_set_prec(value_, other.precision());
    mpfr_set(value_, other.value_, MPFR_RNDN);
  }
  return *this;
}

Real& Real::operator=(Real&& other) noexcept {
  if (this != &other) mpfr_swap(value_, other.value_);
  return *this;
}

Real::~Real() { mpfr_clear(value_); }

Real Real::from_mpz(const mpz_class& v, mpfr_prec_t prec) {
  Real r(prec);
  mpfr_set_z(r.value_, v.get_mpz_t(), MPFR_RNDN);
  return r;
}

Real Real::from_mpq(const mpq_class& v, mpfr_prec_t prec) {
  Real r(prec);
  mpfr_set_q(r.value_, v.get_mpq_t(), MPFR_RNDN);
  return r;
}

Real Real::from_long(long v, mpfr_prec_t prec) {
  Real r(prec);
  mpfr_set_si(r.value_, v, MPFR_RNDN);
  return r;
}

Real Real::pi(mpfr_prec_t prec) {
  Real r(prec);
  mpfr_const_pi(r.value_, MPFR_RNDN);
  return r;
}

std::string Real::to_string(int digits) const {
  char* buf = nullptr;
  mpfr_asprintf(&buf, "%.*Rg", digits, value_);
  std::string s(buf);
  mpfr_free_str(buf);
  return s;
}

namespace {
mpfr_prec_t join(const Real& a, const Real& b) { return std::max(a.precision(), b.precision()); }
}  // namespace

Real& Real::operator+=(const Real& o) {
  mpfr_add(value_, value_, o.value_, MPFR_RNDN);
  return *this;
}
Real& Real::operator-=(const Real& o) {
  mpfr_sub(value_, value_, o.value_, MPFR_RNDN);
  return *this;
}
Real& Real::operator*=(const Real& o) {
  mpfr_mul(value_, value_, o.value_, MPFR_RNDN);
  return *this;
}
Real& Real::operator/=(const Real& o) {
  mpfr_div(value_, value_, o.value_, MPFR_RNDN);
  return *this;
}

Real operator+(const Real& a, const Real& b) {
  Real r(join(a, b));
  mpfr_add(r.get(), a.get(), b.get(), MPFR_RNDN);
  return r;
}
Real operator-(const Real& a, const Real& b) {
  Real r(join(a, b));
  mpfr_sub(r.get(), a.get(), b.get(), MPFR_RNDN);
  return r;
}
Real operator*(const Real& a, const Real& b) {
  Real r(join(a, b));
  mpfr_mul(r.get(), a.get(), b.get(), MPFR_RNDN);
  return r;
}
Real operator/(const Real& a, const Real& b) {
  Real r(join(a, b));
  mpfr_div(r.get(), a.get(), b.get(), MPFR_RNDN);
  return r;
}
Real operator-(const Real& a) {
  Real r(a.precision());
  mpfr_neg(r.get(), a.get(), MPFR_RNDN);
  return r;
}
bool operator<(const Real& a, const Real& b) { return mpfr_less_p(a.get(), b.get()) != 0; }
bool operator>(const Real& a, const Real& b) { return mpfr_greater_p(a.get(), b.get()) != 0; }

Real abs(const Real& a) {
  Real r(a.precision());
  mpfr_abs(r.get(), a.get(), MPFR_RNDN);
  return r;
}
Real sqrt(const Real& a) {
  Real r(a.precision());
  mpfr_sqrt(r.get(), a.get(), MPFR_RNDN);
  return r;
}
Real cos(const Real& a) {
  Real r(a.precision());
  mpfr_cos(r.get(), a.get(), MPFR_RNDN);
  return r;
}
Real sin(const Real& a) {
  Real r(a.precision());
  mpfr_sin(r.get(), a.get(), MPFR_RNDN);
  return r;
}
Real acos(const Real& a) {
  Real r(a.precision());
  mpfr_acos(r.get(), a.get(), MPFR_RNDN);
  return r;
}
Real atan2(const Real& y, const Real& x) {
  Real r(join(y, x));
  mpfr_atan2(r.get(), y.get(), x.get(), MPFR_RNDN);
  return r;
}
Real ldexp(const Real& a, long e) {
  Real r(a.precision());
  mpfr_mul_2si(r.get(), a.get(), e, MPFR_RNDN);
  return r;
}
Real frac(const Real& a) {
  Real f(a.precision());
  mpfr_floor(f.get(), a.get());
  Real r(a.precision());
  mpfr_sub(r.get(), a.get(), f.get(), MPFR_RNDN);
  return r;
}
mpz_class round_to_mpz(const Real& a) {
  mpz_class z;
  mpfr_get_z(z.get_mpz_t(), a.get(), MPFR_RNDN);
  return z;
}

Complex cmul(const Complex& a, const Complex& b) {
  return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
}
Complex cadd(const Complex& a, const Complex& b) { return {a.re + b.re, a.im + b.im}; }
Real cabs(const Complex& a) {
  Real r(join(a.re, a.im));
  mpfr_hypot(r.get(), a.re.get(), a.im.get(), MPFR_RNDN);
  return r;
}

}  // namespace sfg
