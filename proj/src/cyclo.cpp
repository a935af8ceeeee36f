#include "triac/cyclo.hpp"

#include <cmath>
#include <map>
#include <numbers>
#include <sstream>
#include <stdexcept>
#include <utility>

namespace triac {

namespace {

// x^16 == kReduction[0] + kReduction[1] x + ... + kReduction[15] x^15
// modulo Phi_60, i.e. x^16 = -x^14 + x^10 + x^8 + x^6 - x^2 - 1.
constexpr std::array<int, CycNum::kDegree> kReduction = {
    -1, 0, -1, 0, 0, 0, 1, 0, 1, 0, 1, 0, 0, 0, -1, 0};

// Reduces a polynomial in zeta of arbitrary degree to the power basis.
void reduce(std::vector<Rational>& poly) {
  for (std::size_t d = poly.size(); d-- > CycNum::kDegree;) {
    if (poly[d].is_zero()) continue;
    Rational t = std::move(poly[d]);
    poly[d] = Rational(0);
    for (int j = 0; j < CycNum::kDegree; ++j) {
      if (kReduction[j] == 0) continue;
      Rational term = kReduction[j] > 0 ? t : -t;
      poly[d - CycNum::kDegree + j] += term;
    }
  }
}

int mod_order(int k) {
  int m = k % CycNum::kOrder;
  return m < 0 ? m + CycNum::kOrder : m;
}

const std::array<std::complex<double>, CycNum::kDegree>& embedding_basis() {
  static const auto basis = [] {
    std::array<std::complex<double>, CycNum::kDegree> out;
    for (int k = 0; k < CycNum::kDegree; ++k) {
      double theta = std::numbers::pi * k / 30.0;
      out[k] = {std::cos(theta), std::sin(theta)};
    }
    return out;
  }();
  return basis;
}

const std::array<CycNum, CycNum::kDegree>& conjugate_basis() {
  // conj(zeta^k) = zeta^(60-k)
  static const auto basis = [] {
    std::array<CycNum, CycNum::kDegree> out;
    out[0] = CycNum::one();
    for (int k = 1; k < CycNum::kDegree; ++k) {
      out[k] = CycNum::power(CycNum::kOrder - k);
    }
    return out;
  }();
  return basis;
}

}  // namespace

CycNum::CycNum(Rational constant) { coeffs_[0] = std::move(constant); }

CycNum CycNum::from_coeffs(std::array<Rational, kDegree> coeffs) {
  CycNum out;
  out.coeffs_ = std::move(coeffs);
  return out;
}

CycNum CycNum::power(int k) {
  int m = mod_order(k);
  if (m < kDegree) {
    CycNum out;
    out.coeffs_[m] = Rational(1);
    return out;
  }
  std::vector<Rational> poly(m + 1);
  poly[m] = Rational(1);
  reduce(poly);
  CycNum out;
  for (int i = 0; i < kDegree; ++i) out.coeffs_[i] = std::move(poly[i]);
  return out;
}

CycNum CycNum::two_cos(int n) { return power(n) + power(-n); }

bool CycNum::is_zero() const {
  for (const auto& c : coeffs_) {
    if (!c.is_zero()) return false;
  }
  return true;
}

bool CycNum::is_rational() const {
  for (int i = 1; i < kDegree; ++i) {
    if (!coeffs_[i].is_zero()) return false;
  }
  return true;
}

std::optional<Rational> CycNum::as_rational() const {
  if (!is_rational()) return std::nullopt;
  return coeffs_[0];
}

CycNum CycNum::operator-() const {
  CycNum out;
  for (int i = 0; i < kDegree; ++i) out.coeffs_[i] = -coeffs_[i];
  return out;
}

CycNum operator+(const CycNum& a, const CycNum& b) {
  CycNum out;
  for (int i = 0; i < CycNum::kDegree; ++i)
    out.coeffs_[i] = a.coeffs_[i] + b.coeffs_[i];
  return out;
}

CycNum operator-(const CycNum& a, const CycNum& b) {
  CycNum out;
  for (int i = 0; i < CycNum::kDegree; ++i)
    out.coeffs_[i] = a.coeffs_[i] - b.coeffs_[i];
  return out;
}

CycNum& CycNum::operator+=(const CycNum& o) {
  for (int i = 0; i < kDegree; ++i) coeffs_[i] += o.coeffs_[i];
  return *this;
}

CycNum& CycNum::operator-=(const CycNum& o) {
  for (int i = 0; i < kDegree; ++i) coeffs_[i] -= o.coeffs_[i];
  return *this;
}

CycNum operator*(const CycNum& a, const CycNum& b) {
  std::vector<Rational> conv(2 * CycNum::kDegree - 1);
  for (int i = 0; i < CycNum::kDegree; ++i) {
    if (a.coeffs_[i].is_zero()) continue;
    for (int j = 0; j < CycNum::kDegree; ++j) {
      if (b.coeffs_[j].is_zero()) continue;
      conv[i + j] += a.coeffs_[i] * b.coeffs_[j];
    }
  }
  reduce(conv);
  CycNum out;
  for (int i = 0; i < CycNum::kDegree; ++i) out.coeffs_[i] = std::move(conv[i]);
  return out;
}

CycNum CycNum::scaled(const Rational& factor) const {
  CycNum out;
  for (int i = 0; i < kDegree; ++i) out.coeffs_[i] = coeffs_[i] * factor;
  return out;
}

CycNum CycNum::mul_power(int k) const {
  int m = mod_order(k);
  if (m == 0) return *this;
  std::vector<Rational> poly(kDegree + m);
  for (int i = 0; i < kDegree; ++i) poly[i + m] = coeffs_[i];
  reduce(poly);
  CycNum out;
  for (int i = 0; i < kDegree; ++i) out.coeffs_[i] = std::move(poly[i]);
  return out;
}

CycNum CycNum::conjugate() const {
  const auto& basis = conjugate_basis();
  CycNum out;
  for (int k = 0; k < kDegree; ++k) {
    if (coeffs_[k].is_zero()) continue;
    out += basis[k].scaled(coeffs_[k]);
  }
  return out;
}

std::complex<double> CycNum::to_complex() const {
  const auto& basis = embedding_basis();
  std::complex<double> out{0.0, 0.0};
  for (int k = 0; k < kDegree; ++k) {
    if (coeffs_[k].is_zero()) continue;
    out += coeffs_[k].to_double() * basis[k];
  }
  return out;
}

std::string CycNum::to_string() const {
  std::ostringstream os;
  bool first = true;
  for (int k = 0; k < kDegree; ++k) {
    if (coeffs_[k].is_zero()) continue;
    if (!first) os << " + ";
    os << coeffs_[k].to_string();
    if (k > 0) os << "*z^" << k;
    first = false;
  }
  if (first) os << "0";
  return os.str();
}

std::vector<std::string> CycNum::to_strings() const {
  std::vector<std::string> out;
  out.reserve(kDegree);
  for (const auto& c : coeffs_) out.push_back(c.to_string());
  return out;
}

CycNum CycNum::from_strings(std::span<const std::string> parts) {
  if (parts.size() != kDegree)
    throw std::invalid_argument("CycNum: expected 16 coefficients, got " +
                                std::to_string(parts.size()));
  std::array<Rational, kDegree> coeffs;
  for (int i = 0; i < kDegree; ++i) coeffs[i] = Rational::from_string(parts[i]);
  return from_coeffs(std::move(coeffs));
}

std::string canonical_key(std::span<const CycNum> coords) {
  std::string key;
  for (const auto& c : coords) {
    for (const auto& s : c.to_strings()) {
      key += s;
      key += ';';
    }
    key += '|';
  }
  return key;
}

std::optional<Rational> rational_ratio(const CycNum& a, const CycNum& b) {
  int pivot = -1;
  for (int i = 0; i < CycNum::kDegree; ++i) {
    if (!b.coeff(i).is_zero()) {
      pivot = i;
      break;
    }
  }
  if (pivot < 0) return std::nullopt;
  Rational q = a.coeff(pivot) / b.coeff(pivot);
  if (a == b.scaled(q)) return q;
  return std::nullopt;
}

namespace {

using Poly = std::vector<long long>;  // coefficient of x^i at index i

Poly x_pow_minus_1(int n) {
  Poly p(n + 1, 0);
  p[0] = -1;
  p[n] = 1;
  return p;
}

void strip(Poly& p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
}

// Exact division of integer polynomials with a monic divisor; returns
// nullopt if the remainder is nonzero.
std::optional<Poly> poly_divide_exact(Poly num, const Poly& den) {
  if (den.empty() || den.back() != 1) return std::nullopt;
  strip(num);
  if (num.size() < den.size()) return std::nullopt;
  Poly quot(num.size() - den.size() + 1, 0);
  for (std::size_t i = quot.size(); i-- > 0;) {
    long long f = num[i + den.size() - 1];
    quot[i] = f;
    if (f == 0) continue;
    for (std::size_t j = 0; j < den.size(); ++j) num[i + j] -= f * den[j];
  }
  for (long long c : num) {
    if (c != 0) return std::nullopt;
  }
  return quot;
}

}  // namespace

bool verify_modulus_polynomial(std::string* diagnostic) {
  auto fail = [&](const std::string& msg) {
    if (diagnostic) *diagnostic = msg;
    return false;
  };

  // Phi_d for every divisor d of 60, via Phi_d = (x^d - 1) / prod_{e|d, e<d}.
  const int divisors[] = {1, 2, 3, 4, 5, 6, 10, 12, 15, 20, 30, 60};
  std::map<int, Poly> phi;
  for (int d : divisors) {
    Poly num = x_pow_minus_1(d);
    for (int e : divisors) {
      if (e >= d || d % e != 0) continue;
      auto q = poly_divide_exact(num, phi[e]);
      if (!q) return fail("cyclotomic recursion failed at d=" +
                          std::to_string(d) + ", e=" + std::to_string(e));
      num = *q;
    }
    phi[d] = num;
  }

  // The reduction row encodes Phi_60 = x^16 - (reduction polynomial).
  Poly baked(CycNum::kDegree + 1, 0);
  baked[CycNum::kDegree] = 1;
  for (int j = 0; j < CycNum::kDegree; ++j) baked[j] = -kReduction[j];
  if (phi[60] != baked) return fail("baked reduction row differs from Phi_60");

  // Phi_60(x) = Phi_30(x^2).
  Poly phi30_x2(2 * (phi[30].size() - 1) + 1, 0);
  for (std::size_t i = 0; i < phi[30].size(); ++i) phi30_x2[2 * i] = phi[30][i];
  if (phi30_x2 != baked) return fail("Phi_30(x^2) differs from Phi_60");

  // Phi_60 divides x^60 - 1 exactly.
  if (!poly_divide_exact(x_pow_minus_1(60), baked))
    return fail("Phi_60 does not divide x^60 - 1");

  return true;
}

}  // namespace triac
