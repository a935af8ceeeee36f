#pragma once

#include <complex>
#include <iosfwd>
#include <span>
#include <string>
#include <vector>

#include "triac/roots.hpp"
#include "triac/tolerances.hpp"

namespace triac {

// One projected root: its first complex coordinate, split into radius and
// a phase index k with position ~ radius * exp(i*pi*k/30).
struct ProjectionPoint {
  std::complex<double> position;
  double radius = 0;
  int phase_index = 0;  // in [0, 60)
  char family = 'A';
  int n = 0;
};

// First-coordinate projection of a full root list (exact roots are embedded
// first). Output is ordered radius-major descending, then phase ascending.
// Throws std::runtime_error if any point fails phase snapping at snap_tol —
// that would contradict the generating formula.
std::vector<ProjectionPoint> project_first_coordinate(
    std::span<const RootVector> roots, double snap_tol = 1e-9);

struct RadiusClassSummary {
  double radius = 0;
  int count = 0;
  char family = '?';           // common source family, '?' if mixed
  double max_phase_residual = 0;
};

// Concentric-cycle structure: points grouped by radius, descending.
std::vector<RadiusClassSummary> radius_classes(
    std::span<const ProjectionPoint> points, double group_tol = 1e-6);

struct PhaseParity {
  double radius = 0;
  char family = '?';
  std::string parity;  // "even", "odd" or "mixed"
};

// Whether each radius class occupies the even phase residues {0,2,..,58}
// or the odd ones {1,3,..,59}.
std::vector<PhaseParity> phase_census(std::span<const ProjectionPoint> points);

struct ScalingCheck {
  bool pass = false;
  double ratio = 0;         // larger scale / smaller scale
  double factor_large = 0;  // 1/c9
  double factor_small = 0;  // 1/c3
  int matched = 0;
  std::string detail;
};

// Verifies that the E8 projection multiset is the union of two scaled
// copies of the H4 projection, with factors 1/c9 and 1/c3 whose ratio is
// the golden ratio.
ScalingCheck h4_e8_scaling_check(std::span<const ProjectionPoint> e8_points,
                                 std::span<const ProjectionPoint> h4_points,
                                 const Tolerances& tol = {});

// family,n,radius,phase_index,re,im — shortest round-trip float format.
void write_projection_csv(std::ostream& os,
                          std::span<const ProjectionPoint> points);
void write_projection_json(std::ostream& os,
                           std::span<const ProjectionPoint> points);

}  // namespace triac
