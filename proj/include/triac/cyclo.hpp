#pragma once

#include <array>
#include <complex>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "triac/rational.hpp"

namespace triac {

// An element of the cyclotomic field Q(zeta), zeta = exp(i*pi/30), a
// primitive 60th root of unity. Values are stored as the 16 rational
// coefficients of zeta^0..zeta^15 in the power basis, reduced modulo the
// 60th cyclotomic polynomial
//
//   Phi_60(x) = x^16 + x^14 - x^10 - x^8 - x^6 + x^2 + 1.
//
// The representation is canonical: two values are equal iff their
// coefficient vectors are identical.
class CycNum {
 public:
  static constexpr int kDegree = 16;  // = phi(60)
  static constexpr int kOrder = 60;   // zeta^60 = 1

  CycNum() = default;  // zero
  explicit CycNum(Rational constant);
  static CycNum from_coeffs(std::array<Rational, kDegree> coeffs);

  static CycNum zero() { return CycNum(); }
  static CycNum one() { return CycNum(Rational(1)); }

  // zeta^k for any integer k (reduced mod 60).
  static CycNum power(int k);

  // c_n = zeta^n + zeta^-n = 2 cos(n*pi/30); real by construction.
  static CycNum two_cos(int n);

  bool is_zero() const;
  bool is_rational() const;
  std::optional<Rational> as_rational() const;

  const Rational& coeff(int i) const { return coeffs_[i]; }
  const std::array<Rational, kDegree>& coeffs() const { return coeffs_; }

  CycNum operator-() const;
  friend CycNum operator+(const CycNum& a, const CycNum& b);
  friend CycNum operator-(const CycNum& a, const CycNum& b);
  friend CycNum operator*(const CycNum& a, const CycNum& b);
  CycNum& operator+=(const CycNum& o);
  CycNum& operator-=(const CycNum& o);
  CycNum& operator*=(const CycNum& o) { return *this = *this * o; }

  CycNum scaled(const Rational& factor) const;

  // Multiplication by zeta^k; cheaper than a general product.
  CycNum mul_power(int k) const;

  // Image under zeta -> zeta^-1 (complex conjugation in the standard
  // embedding).
  CycNum conjugate() const;

  bool operator==(const CycNum&) const = default;

  // Numeric embedding zeta -> exp(i*pi/30).
  std::complex<double> to_complex() const;

  // Compact human-readable form for diagnostics.
  std::string to_string() const;

  // 16 strings "p/q" in lowest terms, q > 0; round-trips bit-exactly.
  std::vector<std::string> to_strings() const;
  static CycNum from_strings(std::span<const std::string> parts);

 private:
  std::array<Rational, kDegree> coeffs_{};
};

// Key that identifies a tuple of exact coordinates; equal tuples produce
// equal keys (canonical representation makes this a plain serialization).
std::string canonical_key(std::span<const CycNum> coords);

// q such that a == q * b, when such a rational exists.
std::optional<Rational> rational_ratio(const CycNum& a, const CycNum& b);

// Recomputes Phi_60 from scratch (via the recursive cyclotomic-polynomial
// construction over the divisors of 60), checks it equals Phi_30(x^2), that
// it divides x^60 - 1 exactly, and that the baked-in reduction row matches.
// Guards the hand-transcribed modulus; returns false with a diagnostic on
// any mismatch.
bool verify_modulus_polynomial(std::string* diagnostic = nullptr);

}  // namespace triac
