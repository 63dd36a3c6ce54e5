#pragma once

#include <mpfr.h>

#include <cstdint>
#include <gmpxx.h>

namespace classlaw::mp {

/// RAII handle on an mpfr_t. Binary operators return a value at the larger
/// of the operand precisions, rounded to nearest.
class Real {
 public:
  explicit Real(mpfr_prec_t prec);
  Real(double v, mpfr_prec_t prec);
  Real(const mpz_class& v, mpfr_prec_t prec);
  Real(const Real& other);
  Real(Real&& other) noexcept;
  Real& operator=(const Real& other);
  Real& operator=(Real&& other) noexcept;
  ~Real();

  mpfr_ptr get() { return x_; }
  mpfr_srcptr get() const { return x_; }
  mpfr_prec_t precision() const { return mpfr_get_prec(x_); }

  double to_double() const { return mpfr_get_d(x_, MPFR_RNDN); }
  /// log2 |x|, -infinity for zero. Safe for values outside double range.
  double log2_abs() const;
  bool is_zero() const { return mpfr_zero_p(x_) != 0; }

  Real& operator+=(const Real& o);
  Real& operator-=(const Real& o);
  Real& operator*=(const Real& o);

 private:
  mpfr_t x_;
};

Real operator+(const Real& a, const Real& b);
Real operator-(const Real& a, const Real& b);
Real operator*(const Real& a, const Real& b);
Real operator/(const Real& a, const Real& b);
Real operator-(const Real& a);
Real abs(const Real& a);
Real sqrt(const Real& a);
Real exp(const Real& a);
Real cos(const Real& a);
Real sin(const Real& a);
Real pi(mpfr_prec_t prec);
/// Nearest integer.
mpz_class round_to_integer(const Real& a);

struct Complex {
  Real re;
  Real im;

  explicit Complex(mpfr_prec_t prec) : re(prec), im(prec) {}
  Complex(Real r, Real i) : re(std::move(r)), im(std::move(i)) {}

  mpfr_prec_t precision() const { return re.precision(); }
  /// |z|^2
  Real norm() const { return re * re + im * im; }
  /// log2 |z|
  double log2_abs() const;
};

Complex operator+(const Complex& a, const Complex& b);
Complex operator-(const Complex& a, const Complex& b);
Complex operator*(const Complex& a, const Complex& b);
Complex operator*(const Complex& a, const Real& s);
Complex operator/(const Complex& a, const Complex& b);
Complex conj(const Complex& a);

}  // namespace classlaw::mp
