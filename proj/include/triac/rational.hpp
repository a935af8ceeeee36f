#pragma once

#include <compare>
#include <optional>
#include <string>
#include <string_view>

#include "triac/bigint.hpp"

namespace triac {

// Exact rational number. Always stored in lowest terms with a positive
// denominator, so equality is memberwise comparison.
class Rational {
 public:
  Rational() : num_(0), den_(1) {}
  Rational(long long value) : num_(value), den_(1) {}  // NOLINT: implicit
  Rational(BigInt numerator, BigInt denominator);

  // Accepts "p" or "p/q".
  static Rational from_string(std::string_view text);

  const BigInt& num() const { return num_; }
  const BigInt& den() const { return den_; }

  bool is_zero() const { return num_.is_zero(); }
  bool is_integer() const { return den_.is_one(); }
  int sign() const { return num_.sign(); }

  Rational operator-() const;

  friend Rational operator+(const Rational& a, const Rational& b);
  friend Rational operator-(const Rational& a, const Rational& b);
  friend Rational operator*(const Rational& a, const Rational& b);
  friend Rational operator/(const Rational& a, const Rational& b);

  Rational& operator+=(const Rational& o) { return *this = *this + o; }
  Rational& operator-=(const Rational& o) { return *this = *this - o; }
  Rational& operator*=(const Rational& o) { return *this = *this * o; }
  Rational& operator/=(const Rational& o) { return *this = *this / o; }

  bool operator==(const Rational&) const = default;
  std::strong_ordering operator<=>(const Rational& o) const;

  // Canonical "p/q" form in lowest terms, q > 0 (integers print as "p/1").
  std::string to_string() const;
  double to_double() const;

  // The value as an exact machine integer, if it is one and fits.
  std::optional<long long> to_int64() const;

 private:
  BigInt num_;
  BigInt den_;

  void normalize();
};

}  // namespace triac
