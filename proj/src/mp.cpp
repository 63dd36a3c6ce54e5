#include "classlaw/mp.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace classlaw::mp {

namespace {

mpfr_prec_t max_prec(const Real& a, const Real& b) {
  return std::max(a.precision(), b.precision());
}

}  // namespace

Real::Real(mpfr_prec_t prec) {
  mpfr_init2(x_, prec);
  mpfr_set_zero(x_, 1);
}

Real::Real(double v, mpfr_prec_t prec) {
  mpfr_init2(x_, prec);
  mpfr_set_d(x_, v, MPFR_RNDN);
}

Real::Real(const mpz_class& v, mpfr_prec_t prec) {
  mpfr_init2(x_, prec);
  mpfr_set_z(x_, v.get_mpz_t(), MPFR_RNDN);
}

Real::Real(const Real& other) {
  mpfr_init2(x_, other.precision());
  mpfr_set(x_, other.x_, MPFR_RNDN);
}

Real::Real(Real&& other) noexcept {
  mpfr_init2(x_, other.precision());
  mpfr_swap(x_, other.x_);
}

Real& Real::operator=(const Real& other) {
  if (this != &other) {
    mpfr_set_prec(x_, other.precision());
    mpfr_set(x_, other.x_, MPFR_RNDN);
  }
  return *this;
}

Real& Real::operator=(Real&& other) noexcept {
  if (this != &other) mpfr_swap(x_, other.x_);
  return *this;
}

Real::~Real() { mpfr_clear(x_); }

double Real::log2_abs() const {
  if (mpfr_zero_p(x_)) return -std::numeric_limits<double>::infinity();
  long e = 0;
  const double m = mpfr_get_d_2exp(&e, x_, MPFR_RNDN);
  return std::log2(std::fabs(m)) + static_cast<double>(e);
}

Real& Real::operator+=(const Real& o) {
  if (o.precision() > precision()) mpfr_prec_round(x_, o.precision(), MPFR_RNDN);
  mpfr_add(x_, x_, o.x_, MPFR_RNDN);
  return *this;
}

Real& Real::operator-=(const Real& o) {
  if (o.precision() > precision()) mpfr_prec_round(x_, o.precision(), MPFR_RNDN);
  mpfr_sub(x_, x_, o.x_, MPFR_RNDN);
  return *this;
}

Real& Real::operator*=(const Real& o) {
  if (o.precision() > precision()) mpfr_prec_round(x_, o.precision(), MPFR_RNDN);
  mpfr_mul(x_, x_, o.x_, MPFR_RNDN);
  return *this;
}

Real operator+(const Real& a, const Real& b) {
  Real r(max_prec(a, b));
  mpfr_add(r.get(), a.get(), b.get(), MPFR_RNDN);
  return r;
}

Real operator-(const Real& a, const Real& b) {
  Real r(max_prec(a, b));
  mpfr_sub(r.get(), a.get(), b.get(), MPFR_RNDN);
  return r;
}

Real operator*(const Real& a, const Real& b) {
  Real r(max_prec(a, b));
  mpfr_mul(r.get(), a.get(), b.get(), MPFR_RNDN);
  return r;
}

Real operator/(const Real& a, const Real& b) {
  Real r(max_prec(a, b));
  mpfr_div(r.get(), a.get(), b.get(), MPFR_RNDN);
  return r;
}

Real operator-(const Real& a) {
  Real r(a.precision());
  mpfr_neg(r.get(), a.get(), MPFR_RNDN);
  return r;
}

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

Real exp(const Real& a) {
  Real r(a.precision());
  mpfr_exp(r.get(), a.get(), MPFR_RNDN);
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

Real pi(mpfr_prec_t prec) {
  Real r(prec);
  mpfr_const_pi(r.get(), MPFR_RNDN);
  return r;
}

mpz_class round_to_integer(const Real& a) {
  mpz_class z;
  mpfr_get_z(z.get_mpz_t(), a.get(), MPFR_RNDN);
  return z;
}

double Complex::log2_abs() const {
  const double lr = re.log2_abs();
  const double li = im.log2_abs();
  const double hi = std::max(lr, li);
  if (std::isinf(hi)) return hi;
  const double lo = std::min(lr, li);
  return hi + 0.5 * std::log2(1.0 + std::exp2(2.0 * (lo - hi)));
}

Complex operator+(const Complex& a, const Complex& b) { return {a.re + b.re, a.im + b.im}; }

Complex operator-(const Complex& a, const Complex& b) { return {a.re - b.re, a.im - b.im}; }

Complex operator*(const Complex& a, const Complex& b) {
  return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
}

Complex operator*(const Complex& a, const Real& s) { return {a.re * s, a.im * s}; }

Complex operator/(const Complex& a, const Complex& b) {
  const Real n = b.norm();
  return {(a.re * b.re + a.im * b.im) / n, (a.im * b.re - a.re * b.im) / n};
}

Complex conj(const Complex& a) { return {a.re, -a.im}; }

}  // namespace classlaw::mp
