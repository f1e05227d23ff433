#pragma once

// Test-only reference computations, kept independent of the library code
// paths they are used to check.

#include <mpfr.h>

#include <cmath>
#include <random>

#include "logistic/big_float.hpp"

namespace logistic::testing {

/// Reduction with a 4096-bit 2*pi through mpfr_fmod, rounded to `bits`.
inline BigFloat reference_reduce(const BigFloat& angle, unsigned bits) {
  mpfr_t two_pi, wide, rem;
  mpfr_inits2(4096, two_pi, wide, rem, static_cast<mpfr_ptr>(nullptr));
  mpfr_const_pi(two_pi, MPFR_RNDN);
  mpfr_mul_2ui(two_pi, two_pi, 1, MPFR_RNDN);
  mpfr_set(wide, angle.get(), MPFR_RNDN);
  mpfr_fmod(rem, wide, two_pi, MPFR_RNDN);
  if (mpfr_sgn(rem) < 0) mpfr_add(rem, rem, two_pi, MPFR_RNDN);
  BigFloat out(bits);
  mpfr_set(out.get(), rem, MPFR_RNDN);
  mpfr_clears(two_pi, wide, rem, static_cast<mpfr_ptr>(nullptr));
  return out;
}

/// Distance between two angles on the circle.
inline double circle_distance(const BigFloat& a, const BigFloat& b) {
  const unsigned bits = std::max(a.precision(), b.precision()) + 16;
  const BigFloat two_pi = ldexp(pi(bits), 1);
  BigFloat d = abs(a.rounded_to(bits) - b.rounded_to(bits));
  const BigFloat other = two_pi - d;
  if (other < d) d = other;
  return d.to_double();
}

/// Logistic-map orbit computed with raw MPFR calls.
inline std::vector<BigFloat> raw_orbit(double r, double x0, unsigned n,
                                       unsigned bits) {
  std::vector<BigFloat> out;
  mpfr_t x, t;
  mpfr_inits2(bits, x, t, static_cast<mpfr_ptr>(nullptr));
  mpfr_set_d(x, x0, MPFR_RNDN);
  for (unsigned k = 0; k <= n; ++k) {
    BigFloat v(bits);
    mpfr_set(v.get(), x, MPFR_RNDN);
    out.push_back(v);
    mpfr_ui_sub(t, 1, x, MPFR_RNDN);
    mpfr_mul_d(x, x, r, MPFR_RNDN);
    mpfr_mul(x, x, t, MPFR_RNDN);
  }
  mpfr_clears(x, t, static_cast<mpfr_ptr>(nullptr));
  return out;
}

/// Centered finite difference of f at t.
template <typename F>
double central_difference(F f, double t, double h) {
  return (f(t + h) - f(t - h)) / (2.0 * h);
}

inline std::mt19937_64 seeded_rng(std::uint64_t salt = 0) {
  return std::mt19937_64(0x5eed5eedULL + salt);
}

}  // namespace logistic::testing
