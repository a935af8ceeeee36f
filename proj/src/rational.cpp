#include "triac/rational.hpp"

#include <stdexcept>
#include <utility>

namespace triac {

Rational::Rational(BigInt numerator, BigInt denominator)
    : num_(std::move(numerator)), den_(std::move(denominator)) {
  normalize();
}

void Rational::normalize() {
  if (den_.is_zero())
    throw std::domain_error("Rational: zero denominator");
  if (den_.sign() < 0) {
    num_ = -num_;
    den_ = -den_;
  }
  if (num_.is_zero()) {
    den_ = BigInt(1);
    return;
  }
  if (den_.is_one()) return;
  BigInt g = gcd(num_, den_);
  if (!g.is_one()) {
    num_ = num_ / g;
    den_ = den_ / g;
  }
}

Rational Rational::from_string(std::string_view text) {
  auto slash = text.find('/');
  if (slash == std::string_view::npos) {
    return Rational(BigInt::from_string(text), BigInt(1));
  }
  return Rational(BigInt::from_string(text.substr(0, slash)),
                  BigInt::from_string(text.substr(slash + 1)));
}

Rational Rational::operator-() const {
  Rational out = *this;
  out.num_ = -out.num_;
  return out;
}

Rational operator+(const Rational& a, const Rational& b) {
  if (a.den_.is_one() && b.den_.is_one()) {
    Rational out;
    out.num_ = a.num_ + b.num_;
    return out;
  }
  return Rational(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
}

Rational operator-(const Rational& a, const Rational& b) {
  if (a.den_.is_one() && b.den_.is_one()) {
    Rational out;
    out.num_ = a.num_ - b.num_;
    return out;
  }
  return Rational(a.num_ * b.den_ - b.num_ * a.den_, a.den_ * b.den_);
}

Rational operator*(const Rational& a, const Rational& b) {
  if (a.den_.is_one() && b.den_.is_one()) {
    Rational out;
    out.num_ = a.num_ * b.num_;
    return out;
  }
  return Rational(a.num_ * b.num_, a.den_ * b.den_);
}

Rational operator/(const Rational& a, const Rational& b) {
  if (b.is_zero()) throw std::domain_error("Rational: division by zero");
  return Rational(a.num_ * b.den_, a.den_ * b.num_);
}

std::strong_ordering Rational::operator<=>(const Rational& o) const {
  // Denominators are positive, so cross-multiplication preserves order.
  return (num_ * o.den_) <=> (o.num_ * den_);
}

std::string Rational::to_string() const {
  return num_.to_string() + "/" + den_.to_string();
}

double Rational::to_double() const {
  return num_.to_double() / den_.to_double();
}

std::optional<long long> Rational::to_int64() const {
  if (!den_.is_one() || !num_.fits_int64()) return std::nullopt;
  return num_.to_int64();
}

}  // namespace triac
