#include "logistic/big_float.hpp"

#include <algorithm>
#include <cmath>
#include <memory>

#include "logistic/errors.hpp"

namespace logistic {
namespace {

constexpr mpfr_rnd_t kRound = MPFR_RNDN;

mpfr_prec_t checked_bits(unsigned bits) {
  if (bits < MPFR_PREC_MIN || bits > 1'000'000) {
    throw ConfigError("precision out of range: " + std::to_string(bits) +
                      " bits");
  }
  return static_cast<mpfr_prec_t>(bits);
}

unsigned wider(const BigFloat& a, const BigFloat& b) {
  return std::max(a.precision(), b.precision());
}

template <typename Op>
BigFloat unary(const BigFloat& x, Op op) {
  BigFloat out(x.precision());
  op(out.get(), x.get(), kRound);
  return out;
}

}  // namespace

BigFloat::BigFloat(unsigned bits) {
  mpfr_init2(value_, checked_bits(bits));
  mpfr_set_zero(value_, 1);
}

BigFloat::BigFloat(double value, unsigned bits) {
  mpfr_init2(value_, checked_bits(bits));
  mpfr_set_d(value_, value, kRound);
}

BigFloat::BigFloat(const std::string& decimal, unsigned bits) {
  mpfr_init2(value_, checked_bits(bits));
  if (mpfr_set_str(value_, decimal.c_str(), 10, kRound) != 0) {
    mpfr_clear(value_);
    throw UsageError("not a decimal number: '" + decimal + "'");
  }
}

BigFloat::BigFloat(const BigFloat& other) {
  mpfr_init2(value_, mpfr_get_prec(other.value_));
  mpfr_set(value_, other.value_, kRound);
}

BigFloat::BigFloat(BigFloat&& other) noexcept {
  // Leave `other` as a valid 2-bit zero so its destructor stays well-defined.
  mpfr_init2(value_, MPFR_PREC_MIN);
  mpfr_swap(value_, other.value_);
}

BigFloat& BigFloat::operator=(const BigFloat& other) {
  if (this != &other) {
    mpfr_set_prec(value_, mpfr_get_prec(other.value_));
    mpfr_set(value_, other.value_, kRound);
  }
  return *this;
}

BigFloat& BigFloat::operator=(BigFloat&& other) noexcept {
  mpfr_swap(value_, other.value_);
  return *this;
}

BigFloat::~BigFloat() { mpfr_clear(value_); }

unsigned BigFloat::precision() const noexcept {
  return static_cast<unsigned>(mpfr_get_prec(value_));
}

BigFloat BigFloat::rounded_to(unsigned bits) const {
  BigFloat out(bits);
  mpfr_set(out.value_, value_, kRound);
  return out;
}

double BigFloat::to_double() const { return mpfr_get_d(value_, kRound); }

std::string BigFloat::to_string(int digits) const {
  if (digits <= 0) {
    digits = static_cast<int>(mpfr_get_str_ndigits(10, mpfr_get_prec(value_)));
  }
  char* raw = nullptr;
  if (mpfr_asprintf(&raw, "%.*Rg", digits, value_) < 0) {
    throw Error("mpfr_asprintf failed");
  }
  std::unique_ptr<char, decltype(&mpfr_free_str)> guard(raw, &mpfr_free_str);
  return std::string(raw);
}

bool BigFloat::is_finite() const noexcept { return mpfr_number_p(value_); }
bool BigFloat::is_zero() const noexcept { return mpfr_zero_p(value_); }
int BigFloat::sign() const noexcept { return mpfr_sgn(value_); }

long BigFloat::exponent() const noexcept {
  if (!mpfr_regular_p(value_)) return 0;
  return static_cast<long>(mpfr_get_exp(value_));
}

BigFloat& BigFloat::operator+=(const BigFloat& rhs) {
  return *this = *this + rhs;
}
BigFloat& BigFloat::operator-=(const BigFloat& rhs) {
  return *this = *this - rhs;
}
BigFloat& BigFloat::operator*=(const BigFloat& rhs) {
  return *this = *this * rhs;
}
BigFloat& BigFloat::operator/=(const BigFloat& rhs) {
  return *this = *this / rhs;
}

BigFloat operator-(const BigFloat& x) { return unary(x, mpfr_neg); }

BigFloat operator+(const BigFloat& a, const BigFloat& b) {
  BigFloat out(wider(a, b));
  mpfr_add(out.value_, a.value_, b.value_, kRound);
  return out;
}
BigFloat operator-(const BigFloat& a, const BigFloat& b) {
  BigFloat out(wider(a, b));
  mpfr_sub(out.value_, a.value_, b.value_, kRound);
  return out;
}
BigFloat operator*(const BigFloat& a, const BigFloat& b) {
  BigFloat out(wider(a, b));
  mpfr_mul(out.value_, a.value_, b.value_, kRound);
  return out;
}
BigFloat operator/(const BigFloat& a, const BigFloat& b) {
  BigFloat out(wider(a, b));
  mpfr_div(out.value_, a.value_, b.value_, kRound);
  return out;
}

BigFloat operator+(const BigFloat& a, double b) {
  BigFloat out(a.precision());
  mpfr_add_d(out.value_, a.value_, b, kRound);
  return out;
}
BigFloat operator-(const BigFloat& a, double b) {
  BigFloat out(a.precision());
  mpfr_sub_d(out.value_, a.value_, b, kRound);
  return out;
}
BigFloat operator*(const BigFloat& a, double b) {
  BigFloat out(a.precision());
  mpfr_mul_d(out.value_, a.value_, b, kRound);
  return out;
}
BigFloat operator/(const BigFloat& a, double b) {
  BigFloat out(a.precision());
  mpfr_div_d(out.value_, a.value_, b, kRound);
  return out;
}
BigFloat operator+(double a, const BigFloat& b) { return b + a; }
BigFloat operator-(double a, const BigFloat& b) {
  BigFloat out(b.precision());
  mpfr_d_sub(out.value_, a, b.value_, kRound);
  return out;
}
BigFloat operator*(double a, const BigFloat& b) { return b * a; }
BigFloat operator/(double a, const BigFloat& b) {
  BigFloat out(b.precision());
  mpfr_d_div(out.value_, a, b.value_, kRound);
  return out;
}

bool operator==(const BigFloat& a, const BigFloat& b) {
  return mpfr_equal_p(a.value_, b.value_);
}

std::partial_ordering operator<=>(const BigFloat& a, const BigFloat& b) {
  if (mpfr_unordered_p(a.value_, b.value_)) {
    return std::partial_ordering::unordered;
  }
  const int c = mpfr_cmp(a.value_, b.value_);
  if (c < 0) return std::partial_ordering::less;
  if (c > 0) return std::partial_ordering::greater;
  return std::partial_ordering::equivalent;
}

bool operator==(const BigFloat& a, double b) {
  return !std::isnan(b) && !mpfr_nan_p(a.value_) && mpfr_cmp_d(a.value_, b) == 0;
}

std::partial_ordering operator<=>(const BigFloat& a, double b) {
  if (std::isnan(b) || mpfr_nan_p(a.value_)) {
    return std::partial_ordering::unordered;
  }
  const int c = mpfr_cmp_d(a.value_, b);
  if (c < 0) return std::partial_ordering::less;
  if (c > 0) return std::partial_ordering::greater;
  return std::partial_ordering::equivalent;
}

BigFloat abs(const BigFloat& x) { return unary(x, mpfr_abs); }
BigFloat sqrt(const BigFloat& x) { return unary(x, mpfr_sqrt); }
BigFloat cos(const BigFloat& x) { return unary(x, mpfr_cos); }
BigFloat acos(const BigFloat& x) { return unary(x, mpfr_acos); }
BigFloat exp(const BigFloat& x) { return unary(x, mpfr_exp); }
BigFloat log(const BigFloat& x) { return unary(x, mpfr_log); }

BigFloat floor(const BigFloat& x) {
  BigFloat out(x.precision());
  mpfr_floor(out.get(), x.get());
  return out;
}

BigFloat ldexp(const BigFloat& x, long e) {
  BigFloat out(x.precision());
  mpfr_mul_2si(out.get(), x.get(), e, kRound);
  return out;
}

BigFloat pow(const BigFloat& x, unsigned long k) {
  BigFloat out(x.precision());
  mpfr_pow_ui(out.get(), x.get(), k, kRound);
  return out;
}

BigFloat pi(unsigned bits) {
  BigFloat out(bits);
  mpfr_const_pi(out.get(), kRound);
  return out;
}

}  // namespace logistic
