#pragma once

#include <mpfr.h>

#include <compare>
#include <string>

namespace logistic {

/// Binary floating-point value with a per-value significand width, backed by
/// MPFR. All operations round to nearest. Binary operations produce a result
/// at the wider of the two operand precisions; a double operand is exact at
/// any precision the type allows (>= 53 bits is typical, 2 is the minimum).
class BigFloat {
 public:
  explicit BigFloat(unsigned bits = 53);
  BigFloat(double value, unsigned bits);
  BigFloat(const std::string& decimal, unsigned bits);

  BigFloat(const BigFloat& other);
  BigFloat(BigFloat&& other) noexcept;
  BigFloat& operator=(const BigFloat& other);
  BigFloat& operator=(BigFloat&& other) noexcept;
  ~BigFloat();

  unsigned precision() const noexcept;
  /// Copy rounded to `bits` of significand.
  BigFloat rounded_to(unsigned bits) const;

  double to_double() const;
  /// Decimal string with `digits` significant digits; 0 selects enough
  /// digits to round-trip at this precision.
  std::string to_string(int digits = 0) const;

  bool is_finite() const noexcept;
  bool is_zero() const noexcept;
  int sign() const noexcept;
  /// Binary exponent e such that |x| is in [2^(e-1), 2^e); 0 for zero.
  long exponent() const noexcept;

  BigFloat& operator+=(const BigFloat& rhs);
  BigFloat& operator-=(const BigFloat& rhs);
  BigFloat& operator*=(const BigFloat& rhs);
  BigFloat& operator/=(const BigFloat& rhs);

  friend BigFloat operator-(const BigFloat& x);
  friend BigFloat operator+(const BigFloat& a, const BigFloat& b);
  friend BigFloat operator-(const BigFloat& a, const BigFloat& b);
  friend BigFloat operator*(const BigFloat& a, const BigFloat& b);
  friend BigFloat operator/(const BigFloat& a, const BigFloat& b);

  friend BigFloat operator+(const BigFloat& a, double b);
  friend BigFloat operator-(const BigFloat& a, double b);
  friend BigFloat operator*(const BigFloat& a, double b);
  friend BigFloat operator/(const BigFloat& a, double b);
  friend BigFloat operator+(double a, const BigFloat& b);
  friend BigFloat operator-(double a, const BigFloat& b);
  friend BigFloat operator*(double a, const BigFloat& b);
  friend BigFloat operator/(double a, const BigFloat& b);

  friend bool operator==(const BigFloat& a, const BigFloat& b);
  friend std::partial_ordering operator<=>(const BigFloat& a,
                                           const BigFloat& b);
  friend bool operator==(const BigFloat& a, double b);
  friend std::partial_ordering operator<=>(const BigFloat& a, double b);

  mpfr_srcptr get() const noexcept { return value_; }
  mpfr_ptr get() noexcept { return value_; }

 private:
  mpfr_t value_;
};

BigFloat abs(const BigFloat& x);
BigFloat sqrt(const BigFloat& x);
BigFloat cos(const BigFloat& x);
BigFloat acos(const BigFloat& x);
BigFloat exp(const BigFloat& x);
BigFloat log(const BigFloat& x);
BigFloat floor(const BigFloat& x);
/// x * 2^e, exact.
BigFloat ldexp(const BigFloat& x, long e);
/// x^k for an unsigned integer power, correctly rounded.
BigFloat pow(const BigFloat& x, unsigned long k);
BigFloat pi(unsigned bits);

}  // namespace logistic
