#include "triac/amplitudes.hpp"

#include <cmath>
#include <numbers>
#include <sstream>
#include <stdexcept>

namespace triac {

namespace {

double two_cos_numeric(int n) {
  return 2.0 * std::cos(std::numbers::pi * n / 30.0);
}

}  // namespace

std::string_view to_string(AmplitudeMode mode) {
  return mode == AmplitudeMode::surd ? "surd" : "cyclotomic";
}

double octic_value(double x) {
  double y = x * x;
  return (((45.0 * y - 90.0) * y + 60.0) * y - 15.0) * y + 1.0;
}

std::array<double, 4> abcd_numeric(const Tolerances& tol) {
  const double tau = 0.5 * (1.0 + std::sqrt(5.0));
  const double s = std::pow(3.0, -0.5) * std::pow(5.0, -0.25);
  const double t32 = tau * std::sqrt(tau);  // tau^(3/2)

  std::array<double, 4> abcd = {
      std::sqrt(0.5 * (1.0 + s * t32)),
      std::sqrt(0.5 * (1.0 + s / t32)),
      std::sqrt(0.5 * (1.0 - s / t32)),
      std::sqrt(0.5 * (1.0 - s * t32)),
  };

  for (int i = 0; i < 4; ++i) {
    double res = std::abs(octic_value(abcd[i]));
    if (!(res <= tol.residual)) {
      std::ostringstream os;
      os << "amplitude constant #" << i << " = " << abcd[i]
         << " has octic residual " << res << " > " << tol.residual;
      throw std::runtime_error(os.str());
    }
  }
  if (!(abcd[0] > abcd[1] && abcd[1] > abcd[2] && abcd[2] > abcd[3] &&
        abcd[3] > 0)) {
    throw std::runtime_error("amplitude constants are not ordered a>b>c>d>0");
  }
  return abcd;
}

SurdAmplitudes amplitudes_primary(const Tolerances& tol) {
  auto abcd = abcd_numeric(tol);
  SurdAmplitudes amps;
  amps.a = abcd[0];
  amps.b = abcd[1];
  amps.c = abcd[2];
  amps.d = abcd[3];
  amps.tau = 0.5 * (1.0 + std::sqrt(5.0));
  amps.c9 = two_cos_numeric(9);
  amps.c3 = two_cos_numeric(3);
  for (int i = 0; i < 4; ++i) {
    amps.r[i] = abcd[i] / amps.c9;
    amps.r[i + 4] = abcd[i] / amps.c3;
  }
  return amps;
}

CycAmplitudes amplitudes_cyclotomic() {
  const CycNum c6 = CycNum::two_cos(6);
  const CycNum c11 = CycNum::two_cos(11);
  const CycNum c12 = CycNum::two_cos(12);
  const CycNum c13 = CycNum::two_cos(13);
  const CycNum c14 = CycNum::two_cos(14);
  CycAmplitudes amps;
  amps.r = {CycNum::one(), c11, c6 * c13, c6 * c14,
            c12,           c11 * c12,    c13,      c14};
  return amps;
}

double proportionality_ratio(const Tolerances& tol) {
  SurdAmplitudes surd = amplitudes_primary(tol);
  CycAmplitudes cyc = amplitudes_cyclotomic();

  const double lambda = surd.c9 / surd.a;
  bool ok = true;
  std::ostringstream table;
  for (int i = 0; i < 8; ++i) {
    double ratio = cyc.r[i].to_complex().real() / surd.r[i];
    table << "  r" << (i + 1) << ": " << ratio << "\n";
    if (std::abs(ratio / lambda - 1.0) > tol.residual) ok = false;
  }
  if (!ok) {
    throw std::runtime_error(
        "cyclotomic/surd amplitude ratios disagree (expected common " +
        std::to_string(lambda) + "):\n" + table.str());
  }
  return lambda;
}

}  // namespace triac
