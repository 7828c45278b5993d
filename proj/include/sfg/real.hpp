#pragma once

#include <gmpxx.h>
#include <mpfr.h>

#include <string>

namespace sfg {

// Owning wrapper around an mpfr_t with a fixed precision.
class Real {
 public:
  explicit Real(mpfr_prec_t prec = 64);
  Real(const Real& other);
  Real(Real&& other) noexcept;
  Real& operator=(const Real& other);
  Real& operator=(Real&& other) noexcept;
  ~Real();

  static Real from_mpz(const mpz_class& v, mpfr_prec_t prec);
  static Real from_mpq(const mpq_class& v, mpfr_prec_t prec);
  static Real from_long(long v, mpfr_prec_t prec);
  static Real pi(mpfr_prec_t prec);

  mpfr_ptr get() { return value_; }
  mpfr_srcptr get() const { return value_; }
  mpfr_prec_t precision() const { return mpfr_get_prec(value_); }

  double to_double() const { return mpfr_get_d(value_, MPFR_RNDN); }
  long double to_long_double() const { return mpfr_get_ld(value_, MPFR_RNDN); }
  int sign() const { return mpfr_sgn(value_); }
  bool is_zero() const { return mpfr_zero_p(value_) != 0; }
  std::string to_string(int digits = 30) const;

  Real& operator+=(const Real& o);
  Real& operator-=(const Real& o);
  Real& operator*=(const Real& o);
  Real& operator/=(const Real& o);

 private:
  mpfr_t value_;
};

Real operator+(const Real& a, const Real& b);
Real operator-(const Real& a, const Real& b);
Real operator*(const Real& a, const Real& b);
Real operator/(const Real& a, const Real& b);
Real operator-(const Real& a);
bool operator<(const Real& a, const Real& b);
bool operator>(const Real& a, const Real& b);

Real abs(const Real& a);
Real sqrt(const Real& a);
Real cos(const Real& a);
Real sin(const Real& a);
Real acos(const Real& a);
Real atan2(const Real& y, const Real& x);
Real ldexp(const Real& a, long e);
// Fractional part in [0, 1).
Real frac(const Real& a);
// Nearest integer.
mpz_class round_to_mpz(const Real& a);

struct Complex {
  Real re;
  Real im;
};

Complex cmul(const Complex& a, const Complex& b);
Complex cadd(const Complex& a, const Complex& b);
Real cabs(const Complex& a);

}  // namespace sfg
