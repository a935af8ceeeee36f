#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace triac {

// Arbitrary-precision signed integer, sign-magnitude over 32-bit limbs.
// Magnitudes are little-endian with no trailing zero limbs; zero has an
// empty limb vector and sign 0, so equality is memberwise comparison.
class BigInt {
 public:
  BigInt() = default;
  BigInt(long long value);  // NOLINT: implicit by design, mirrors int literals

  static BigInt from_string(std::string_view text);

  bool is_zero() const { return sign_ == 0; }
  bool is_one() const { return sign_ == 1 && mag_.size() == 1 && mag_[0] == 1; }
  int sign() const { return sign_; }

  BigInt abs() const;
  BigInt operator-() const;

  friend BigInt operator+(const BigInt& a, const BigInt& b);
  friend BigInt operator-(const BigInt& a, const BigInt& b);
  friend BigInt operator*(const BigInt& a, const BigInt& b);

  BigInt& operator+=(const BigInt& o);
  BigInt& operator-=(const BigInt& o);
  BigInt& operator*=(const BigInt& o);

  // Truncating division: quotient rounds toward zero, remainder takes the
  // sign of the numerator. Throws std::domain_error on zero divisor.
  static void divmod(const BigInt& num, const BigInt& den, BigInt& quot,
                     BigInt& rem);
  BigInt operator/(const BigInt& o) const;
  BigInt operator%(const BigInt& o) const;

  bool operator==(const BigInt&) const = default;
  std::strong_ordering operator<=>(const BigInt& o) const;

  std::string to_string() const;
  double to_double() const;

  bool fits_int64() const;
  long long to_int64() const;  // valid only when fits_int64()

  friend BigInt gcd(const BigInt& a, const BigInt& b);

 private:
  using Mag = std::vector<std::uint32_t>;

  int sign_ = 0;  // -1, 0, +1
  Mag mag_;

  static int cmp_mag(const Mag& a, const Mag& b);
  static Mag add_mag(const Mag& a, const Mag& b);
  static Mag sub_mag(const Mag& a, const Mag& b);  // requires a >= b
  static Mag mul_mag(const Mag& a, const Mag& b);
  static void divmod_mag(const Mag& num, const Mag& den, Mag& quot, Mag& rem);
  static void trim(Mag& m);

  void set_mag(Mag m, int sign);
};

BigInt gcd(const BigInt& a, const BigInt& b);

}  // namespace triac
