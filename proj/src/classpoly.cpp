#include "classlaw/classpoly.hpp"

#include <cmath>
#include <numbers>
#include <string>

#include "classlaw/error.hpp"
#include "classlaw/parallel.hpp"

namespace classlaw {

namespace {

constexpr mpfr_prec_t kGuardBits = 32;
// Fractional bits a rounded coefficient must retain at the working precision.
constexpr double kFractionBits = 16;
constexpr std::uint64_t kMaxSeriesTerms = 1'000'000;

// sigma_3(n) for the next n, via a running divisor-sum table.
class DivisorCubeSums {
 public:
  mpz_class at(std::uint64_t n) {
    while (table_.size() <= n) grow();
    return table_[n];
  }

 private:
  void grow() {
    const std::uint64_t old = table_.size();
    const std::uint64_t size = std::max<std::uint64_t>(64, old * 2);
    table_.assign(size, 0);
    for (std::uint64_t d = 1; d < size; ++d) {
      const mpz_class cube = mpz_class(d) * d * d;
      for (std::uint64_t m = d; m < size; m += d) table_[m] += cube;
    }
  }

  std::vector<mpz_class> table_;
};

bool self_inverse(const QuadForm& f) { return f.b == 0 || f.b == f.a || f.a == f.c; }

using RealPoly = std::vector<mp::Real>;
using ComplexPoly = std::vector<mp::Complex>;

// Multiplies p by the monic polynomial whose non-leading coefficients are
// `low` (ascending).
RealPoly times_monic(const RealPoly& p, const std::vector<mp::Real>& low, mpfr_prec_t prec) {
  const std::size_t k = low.size();
  RealPoly out(p.size() + k, mp::Real(prec));
  for (std::size_t i = 0; i < p.size(); ++i) {
    out[i + k] += p[i];
    for (std::size_t j = 0; j < k; ++j) out[i + j] += p[i] * low[j];
  }
  return out;
}

std::optional<std::vector<mpz_class>> round_all(const RealPoly& re, const RealPoly* im,
                                                mpfr_prec_t prec) {
  const mp::Real quarter(0.25, prec);
  std::vector<mpz_class> out;
  out.reserve(re.size());
  for (std::size_t i = 0; i < re.size(); ++i) {
    // A value this large has no fractional bits left at the working
    // precision, so a small rounding error would prove nothing.
    if (!re[i].is_zero() && re[i].log2_abs() > static_cast<double>(prec) - kFractionBits)
      return std::nullopt;
    mpz_class z = mp::round_to_integer(re[i]);
    const mp::Real err = mp::abs(re[i] - mp::Real(z, prec));
    if (mpfr_cmp(err.get(), quarter.get()) >= 0) return std::nullopt;
    if (im && mpfr_cmp(mp::abs((*im)[i]).get(), quarter.get()) >= 0) return std::nullopt;
    out.push_back(std::move(z));
  }
  return out;
}

void check_disc_cap(const FundamentalDiscriminant& d, const ClassPolyConfig& config) {
  if (d.abs_value() > config.max_abs_disc)
    throw ResourceError("|D| = " + std::to_string(d.abs_value()) +
                        " exceeds the configured maximum " + std::to_string(config.max_abs_disc));
}

}  // namespace

std::string ClassPolynomial::to_string() const {
  std::string out;
  const std::size_t n = degree();
  for (std::size_t k = n + 1; k-- > 0;) {
    const mpz_class& c = coeffs[k];
    if (c == 0 && k != n) continue;
    const bool negative = c < 0;
    const mpz_class mag = abs(c);
    if (out.empty()) {
      if (negative) out += "-";
    } else {
      out += negative ? " - " : " + ";
    }
    const std::string monomial = k == 0 ? "" : (k == 1 ? "x" : "x^" + std::to_string(k));
    if (k == 0)
      out += mag.get_str();
    else if (mag == 1)
      out += monomial;
    else
      out += mag.get_str() + "*" + monomial;
  }
  return out;
}

std::uint64_t precision_bound(const FundamentalDiscriminant& d, const ClassGroup& cg) {
  double inv_a = 0;
  for (const auto& f : cg.forms()) inv_a += 1.0 / static_cast<double>(f.a);
  const double height =
      std::numbers::pi * std::sqrt(static_cast<double>(d.abs_value())) * inv_a / std::numbers::ln2;
  return static_cast<std::uint64_t>(std::ceil(height)) + 10 * cg.h() + 64;
}

mp::Complex cm_point(const QuadForm& f, mpfr_prec_t prec) {
  const mp::Real two_a(static_cast<double>(2 * f.a), prec);
  const mp::Real abs_d(mpz_class(std::to_string(-f.discriminant())), prec);
  return {mp::Real(static_cast<double>(-f.b), prec) / two_a, mp::sqrt(abs_d) / two_a};
}

mp::Complex j_invariant(const mp::Complex& tau, std::uint64_t bits, std::uint64_t max_bits) {
  if (bits > max_bits)
    throw ResourceError("requested precision of " + std::to_string(bits) +
                        " bits exceeds the configured maximum " + std::to_string(max_bits));
  if (mpfr_sgn(tau.im.get()) <= 0) throw DomainError("j_invariant: Im(tau) must be positive");

  const auto wp = static_cast<mpfr_prec_t>(bits) + kGuardBits;
  mp::Real re(wp), im(wp);
  mpfr_set(re.get(), tau.re.get(), MPFR_RNDN);
  mpfr_set(im.get(), tau.im.get(), MPFR_RNDN);

  const mp::Real two_pi = mp::pi(wp) * mp::Real(2.0, wp);
  const mp::Real radius = mp::exp(-(two_pi * im));
  const mp::Real angle = two_pi * re;
  const mp::Complex q{radius * mp::cos(angle), radius * mp::sin(angle)};

  // E4 = 1 + 240 sum sigma_3(n) q^n, keeping q^n for the eta series.
  const double cutoff = -static_cast<double>(bits) - 8.0;
  DivisorCubeSums sigma3;
  std::vector<mp::Complex> powers;
  powers.emplace_back(mp::Real(1.0, wp), mp::Real(wp));
  mp::Complex e4_tail(wp);
  for (std::uint64_t n = 1;; ++n) {
    if (n > kMaxSeriesTerms) throw PrecisionError("j_invariant: q-series failed to converge");
    powers.push_back(powers.back() * q);
    const mp::Complex term = powers.back() * mp::Real(sigma3.at(n), wp);
    e4_tail = e4_tail + term;
    const double scale = std::max(0.0, (e4_tail * mp::Real(240.0, wp)).log2_abs());
    if (term.log2_abs() + std::log2(240.0) < cutoff + scale) break;
  }
  mp::Complex e4 = e4_tail * mp::Real(240.0, wp);
  e4.re += mp::Real(1.0, wp);

  // prod (1 - q^n) = sum_k (-1)^k q^(k(3k-1)/2); terms past the E4 cutoff
  // are below the target precision.
  const std::uint64_t last = powers.size() - 1;
  mp::Complex eta = powers[0];
  for (std::uint64_t k = 1;; ++k) {
    const std::uint64_t e1 = k * (3 * k - 1) / 2;
    const std::uint64_t e2 = k * (3 * k + 1) / 2;
    if (e1 > last) break;
    const bool odd = k & 1;
    eta = odd ? eta - powers[e1] : eta + powers[e1];
    if (e2 <= last) eta = odd ? eta - powers[e2] : eta + powers[e2];
  }

  const mp::Complex eta2 = eta * eta;
  const mp::Complex eta4 = eta2 * eta2;
  const mp::Complex eta8 = eta4 * eta4;
  const mp::Complex eta16 = eta8 * eta8;
  const mp::Complex delta = q * (eta16 * eta8);
  return (e4 * e4 * e4) / delta;
}

std::vector<mp::Complex> cm_values(const ClassGroup& cg, std::uint64_t bits, unsigned workers,
                                   std::uint64_t max_bits) {
  const auto wp = static_cast<mpfr_prec_t>(bits) + kGuardBits;
  std::vector<mp::Complex> out(cg.forms().size(), mp::Complex(2));
  parallel_for(cg.forms().size(), workers, [&](std::size_t i) {
    out[i] = j_invariant(cm_point(cg.forms()[i], wp), bits, max_bits);
  });
  return out;
}

std::optional<std::vector<mpz_class>> expand_class_poly(const ClassGroup& cg, std::uint64_t bits,
                                                        bool paired, unsigned workers,
                                                        std::uint64_t max_bits) {
  const auto wp = static_cast<mpfr_prec_t>(bits) + kGuardBits;
  const auto& forms = cg.forms();

  if (!paired) {
    const std::vector<mp::Complex> js = cm_values(cg, bits, workers, max_bits);
    ComplexPoly poly;
    poly.emplace_back(mp::Real(1.0, wp), mp::Real(wp));
    for (const auto& j : js) {
      ComplexPoly next(poly.size() + 1, mp::Complex(wp));
      for (std::size_t i = 0; i < poly.size(); ++i) {
        next[i + 1] = next[i + 1] + poly[i];
        next[i] = next[i] - poly[i] * j;
      }
      poly = std::move(next);
    }
    RealPoly re, im;
    for (auto& c : poly) {
      re.push_back(c.re);
      im.push_back(c.im);
    }
    return round_all(re, &im, wp);
  }

  // One j per class-inverse pair: forms with b < 0 are the inverses of the
  // b > 0 forms listed just before them.
  std::vector<std::size_t> reps;
  for (std::size_t i = 0; i < forms.size(); ++i)
    if (forms[i].b >= 0) reps.push_back(i);
  std::vector<mp::Complex> js(reps.size(), mp::Complex(2));
  parallel_for(reps.size(), workers, [&](std::size_t k) {
    js[k] = j_invariant(cm_point(forms[reps[k]], wp), bits, max_bits);
  });

  RealPoly poly{mp::Real(1.0, wp)};
  for (std::size_t k = 0; k < reps.size(); ++k) {
    const mp::Complex& j = js[k];
    if (self_inverse(forms[reps[k]])) {
      poly = times_monic(poly, {-j.re}, wp);
    } else {
      poly = times_monic(poly, {j.norm(), -(j.re * mp::Real(2.0, wp))}, wp);
    }
  }
  return round_all(poly, nullptr, wp);
}

ClassPolynomial hilbert_class_poly(const FundamentalDiscriminant& d, const ClassPolyConfig& config,
                                   std::uint64_t start_bits) {
  check_disc_cap(d, config);
  const ClassGroup cg = class_group(d);
  std::uint64_t bits = start_bits != 0 ? start_bits : precision_bound(d, cg);
  for (unsigned attempt = 0; attempt <= config.max_retries; ++attempt, bits *= 2) {
    auto coeffs = expand_class_poly(cg, bits, true, config.workers, config.max_bits);
    if (coeffs && coeffs->back() == 1 && coeffs->size() == cg.h() + 1)
      return ClassPolynomial{d, std::move(*coeffs)};
  }
  throw PrecisionError("class polynomial coefficients for D = " + std::to_string(d.value()) +
                       " did not round cleanly after " + std::to_string(config.max_retries) +
                       " precision doublings");
}

}  // namespace classlaw
