#pragma once

#include <compare>
#include <optional>
#include <string>
#include <string_view>

#include <gmpxx.h>

#include "plh/error.hpp"

namespace plh {

/// Exact rational number, always stored in lowest terms with a positive
/// denominator. Text form is "num/den", with "/den" omitted when den == 1.
class Rational {
public:
  Rational() = default;
  Rational(long value) : value_(value) {} // NOLINT: implicit by intent
  Rational(long num, long den);
  explicit Rational(mpq_class value);

  static Rational from_integers(const mpz_class& num, const mpz_class& den);
  static Rational parse(std::string_view text);

  mpz_class num() const { return value_.get_num(); }
  mpz_class den() const { return value_.get_den(); }
  const mpq_class& raw() const { return value_; }

  int sign() const { return sgn(value_); }
  bool is_integer() const { return value_.get_den() == 1; }
  bool is_dyadic() const;

  std::string str() const;
  /// Decimal rendering rounded half away from zero to `digits` places.
  std::string to_decimal(int digits) const;
  double to_double() const { return value_.get_d(); }

  Rational& operator+=(const Rational& rhs);
  Rational& operator-=(const Rational& rhs);
  Rational& operator*=(const Rational& rhs);
  Rational& operator/=(const Rational& rhs);

  friend Rational operator+(Rational lhs, const Rational& rhs) { return lhs += rhs; }
  friend Rational operator-(Rational lhs, const Rational& rhs) { return lhs -= rhs; }
  friend Rational operator*(Rational lhs, const Rational& rhs) { return lhs *= rhs; }
  friend Rational operator/(Rational lhs, const Rational& rhs) { return lhs /= rhs; }
  Rational operator-() const { return Rational(mpq_class(-value_)); }

  friend bool operator==(const Rational& a, const Rational& b) { return a.value_ == b.value_; }
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
    const int c = cmp(a.value_, b.value_);
    return c < 0 ? std::strong_ordering::less
                 : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
  }

private:
  mpq_class value_;
};

Rational pow(const Rational& base, long exponent);
Rational abs(const Rational& x);

/// n such that value == base^n, if one exists. Requires base > 1.
std::optional<long> log_exact(const Rational& base, const Rational& value);

/// value = k * 2^{-j} with k odd.
struct OddPart {
  mpz_class k;
  long j = 0;
};

/// Throws ErrorCode::not_dyadic when the denominator is not a power of two,
/// ErrorCode::domain when value <= 0.
OddPart odd_part(const Rational& value);

/// value = xi * a^{-j} with a^{-1} < xi <= 1.
struct XiDecomposition {
  Rational xi;
  long j = 0;
};

XiDecomposition xi_decompose(const Rational& a, const Rational& value);

/// The rational of smallest denominator (then smallest numerator) in the
/// open interval (lo, hi).
Rational simplest_between(const Rational& lo, const Rational& hi);

/// Base-2 logarithm estimate that survives values outside the double range.
double log2_estimate(const Rational& value);

} // namespace plh
