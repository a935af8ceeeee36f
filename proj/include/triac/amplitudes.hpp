#pragma once

#include <array>
#include <string_view>

#include "triac/cyclo.hpp"
#include "triac/tolerances.hpp"

namespace triac {

enum class AmplitudeMode { surd, cyclotomic };

std::string_view to_string(AmplitudeMode mode);

// The eight radial amplitudes in closed (surd) form, normalized so every
// generated root has unit norm. a > b > c > d are the positive roots of
// 45x^8 - 90x^6 + 60x^4 - 15x^2 + 1; the r_i divide them by
// c9 = 2cos(3pi/10) and c3 = 2cos(pi/10).
struct SurdAmplitudes {
  double a = 0, b = 0, c = 0, d = 0;
  double tau = 0;               // golden ratio (1 + sqrt 5)/2
  double c3 = 0, c9 = 0;        // the two denominators
  std::array<double, 8> r{};    // {a,b,c,d}/c9 then {a,b,c,d}/c3
};

// The eight amplitudes as exact elements of Q(zeta_60):
// {1, c11, c6*c13, c6*c14, c12, c11*c12, c13, c14}. Proportional to the
// surd set by the common factor c9/a; norms come out equal but not 1.
struct CycAmplitudes {
  std::array<CycNum, 8> r;
};

// Evaluates 45x^8 - 90x^6 + 60x^4 - 15x^2 + 1.
double octic_value(double x);

// The four closed-form constants {a,b,c,d}, descending. Throws
// std::runtime_error if any of them fails to annihilate the octic within
// tol.residual or the ordering a > b > c > d > 0 breaks (either would mean
// a transcription bug, not a math failure).
std::array<double, 4> abcd_numeric(const Tolerances& tol = {});

SurdAmplitudes amplitudes_primary(const Tolerances& tol = {});
CycAmplitudes amplitudes_cyclotomic();

// The common factor lambda = c9/a with cyclotomic r_i = lambda * surd r_i.
// Throws std::runtime_error with a per-index ratio table if the eight
// ratios disagree beyond tol.residual.
double proportionality_ratio(const Tolerances& tol = {});

}  // namespace triac
