#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <complex>
#include <numbers>
#include <random>
#include <vector>

#include "triac/cyclo.hpp"

using triac::CycNum;
using triac::Rational;

namespace {

// Independent oracle for the modulus: multiply out
// prod_{gcd(k,60)=1} (x - exp(2 pi i k / 60)) in complex arithmetic and
// round. This takes a different route than the library's integer recursion.
std::vector<long long> phi60_from_primitive_roots() {
  std::vector<std::complex<double>> poly = {1.0};  // leading coefficient
  for (int k = 1; k < 60; ++k) {
    if (std::gcd(k, 60) != 1) continue;
    std::complex<double> root =
        std::polar(1.0, 2.0 * std::numbers::pi * k / 60.0);
    std::vector<std::complex<double>> next(poly.size() + 1);
    for (std::size_t i = 0; i < poly.size(); ++i) {
      next[i] += poly[i] * (-root);
      next[i + 1] += poly[i];
    }
    poly = std::move(next);
  }
  std::vector<long long> out;
  for (std::size_t i = 0; i < poly.size(); ++i) {
    // coefficients come out lowest-degree last in this layout; flip below
    REQUIRE(std::abs(poly[i].imag()) < 1e-9);
    REQUIRE(std::abs(poly[i].real() - std::round(poly[i].real())) < 1e-9);
    out.push_back(std::llround(poly[i].real()));
  }
  return out;  // out[i] = coefficient of x^i
}

CycNum random_element(std::mt19937_64& rng) {
  std::array<Rational, CycNum::kDegree> coeffs;
  for (auto& c : coeffs) {
    long long n = static_cast<long long>(rng() % 21) - 10;
    long long d = static_cast<long long>(rng() % 6) + 1;
    c = Rational(triac::BigInt(n), triac::BigInt(d));
  }
  return CycNum::from_coeffs(coeffs);
}

}  // namespace

TEST_CASE("the reduction modulus is the 60th cyclotomic polynomial") {
  std::string diag;
  CHECK_MESSAGE(triac::verify_modulus_polynomial(&diag), diag);

  // Cross-check against the numeric primitive-root product.
  auto phi = phi60_from_primitive_roots();
  REQUIRE(phi.size() == 17);
  // zeta^16 must reduce to -(phi60 truncated below degree 16).
  CycNum z16 = CycNum::power(16);
  for (int i = 0; i < 16; ++i) {
    CHECK(z16.coeff(i) == Rational(-phi[i]));
  }
}

TEST_CASE("zeta powers") {
  CHECK(CycNum::power(0) == CycNum::one());
  CHECK(CycNum::power(30) == -CycNum::one());
  CHECK(CycNum::power(60) == CycNum::one());
  CHECK(CycNum::power(-1) == CycNum::power(59));

  // Frozen reduction of x^16: -x^14 + x^10 + x^8 + x^6 - x^2 - 1.
  const long long expected[16] = {-1, 0, -1, 0, 0, 0, 1, 0,
                                  1,  0, 1,  0, 0, 0, -1, 0};
  CycNum z16 = CycNum::power(16);
  for (int i = 0; i < 16; ++i) CHECK(z16.coeff(i) == Rational(expected[i]));
}

TEST_CASE("power is a homomorphism, exhaustively") {
  std::vector<CycNum> pow(60);
  for (int k = 0; k < 60; ++k) pow[k] = CycNum::power(k);
  for (int j = 0; j < 60; ++j)
    for (int k = 0; k < 60; ++k) CHECK(pow[j] * pow[k] == pow[(j + k) % 60]);
}

TEST_CASE("ring arithmetic") {
  CHECK((CycNum::power(5) + (-CycNum::power(5))).is_zero());
  CHECK(CycNum::power(40) * CycNum::power(20) == CycNum::one());

  // Golden ratio: c6^2 = c6 + 1, numerically ~2.618.
  CycNum c6 = CycNum::two_cos(6);
  CHECK(c6 * c6 == c6 + CycNum::one());
  CHECK((c6 * c6).to_complex().real() == doctest::Approx(2.6180339887).epsilon(1e-10));

  CycNum half = CycNum(Rational(triac::BigInt(1), triac::BigInt(2)));
  CHECK(half + half == CycNum::one());
  CHECK((c6.scaled(Rational(2)) - c6 - c6).is_zero());
}

TEST_CASE("mul_power equals multiplication by the power") {
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 20; ++trial) {
    CycNum z = random_element(rng);
    for (int k : {0, 1, 7, 16, 29, 30, 31, 44, 59}) {
      CHECK(z.mul_power(k) == z * CycNum::power(k));
    }
  }
}

TEST_CASE("conjugation") {
  CHECK(CycNum::one().conjugate() == CycNum::one());
  CHECK(CycNum::power(1).conjugate() == CycNum::power(59));
  CycNum c7 = CycNum::two_cos(7);
  CHECK(c7.conjugate() == c7);

  std::mt19937_64 rng(6);
  for (int trial = 0; trial < 30; ++trial) {
    CycNum a = random_element(rng);
    CycNum b = random_element(rng);
    CHECK(a.conjugate().conjugate() == a);
    CHECK((a * b).conjugate() == a.conjugate() * b.conjugate());
    CHECK((a + b).conjugate() == a.conjugate() + b.conjugate());
    // a * conj(a) is real (fixed by conjugation).
    CycNum aa = a * a.conjugate();
    CHECK(aa.conjugate() == aa);
    // Embedding commutes with conjugation.
    auto z = a.to_complex();
    auto zc = a.conjugate().to_complex();
    CHECK(std::abs(zc - std::conj(z)) < 1e-12);
  }
}

TEST_CASE("two_cos values and symmetries") {
  CHECK(CycNum::two_cos(0) == CycNum(Rational(2)));
  CHECK(CycNum::two_cos(10) == CycNum::one());
  CHECK(CycNum::two_cos(15).is_zero());
  CHECK(CycNum::two_cos(6).to_complex().real() ==
        doctest::Approx(1.6180339887498949).epsilon(1e-13));
  for (int n = 0; n < 60; ++n) {
    CHECK(CycNum::two_cos(n) == CycNum::two_cos(-n));
    CHECK(CycNum::two_cos(n) == -CycNum::two_cos(30 - n));
    CHECK(CycNum::two_cos(n).conjugate() == CycNum::two_cos(n));
  }
}

TEST_CASE("numeric embedding") {
  CHECK(std::abs(CycNum::one().to_complex() -
                 std::complex<double>(1.0, 0.0)) < 1e-15);
  CHECK(std::abs(CycNum::power(15).to_complex() -
                 std::complex<double>(0.0, 1.0)) < 1e-15);
  // c9 = 2 cos(3 pi / 10)
  CHECK(CycNum::two_cos(9).to_complex().real() ==
        doctest::Approx(2.0 * std::cos(3.0 * std::numbers::pi / 10.0))
            .epsilon(1e-14));
  CHECK(CycNum::two_cos(9).to_complex().real() ==
        doctest::Approx(1.1755705045849463).epsilon(1e-14));
}

TEST_CASE("serialization round-trips bit-exactly") {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 30; ++trial) {
    CycNum z = random_element(rng);
    auto parts = z.to_strings();
    REQUIRE(parts.size() == 16);
    CycNum back = CycNum::from_strings(parts);
    CHECK(back == z);
    CHECK(back.to_strings() == parts);
  }
  std::vector<std::string> bad(15, "0/1");
  CHECK_THROWS_AS(CycNum::from_strings(bad), std::invalid_argument);
}

TEST_CASE("rational_ratio") {
  CycNum c13 = CycNum::two_cos(13);
  CycNum scaled = c13.scaled(Rational(triac::BigInt(-7), triac::BigInt(3)));
  auto q = triac::rational_ratio(scaled, c13);
  REQUIRE(q.has_value());
  CHECK(*q == Rational(triac::BigInt(-7), triac::BigInt(3)));
  // Not a rational multiple:
  CHECK_FALSE(triac::rational_ratio(CycNum::one(), c13).has_value());
  // Zero divisor has no well-defined ratio.
  CHECK_FALSE(triac::rational_ratio(c13, CycNum::zero()).has_value());
}

TEST_CASE("canonical keys separate distinct values") {
  CHECK(triac::canonical_key(std::vector<CycNum>{CycNum::power(3)}) !=
        triac::canonical_key(std::vector<CycNum>{CycNum::power(4)}));
  CHECK(triac::canonical_key(std::vector<CycNum>{CycNum::power(3)}) ==
        triac::canonical_key(std::vector<CycNum>{CycNum::power(63)}));
}
