#pragma once

namespace triac {

// Floating-point tolerances used by the verification checks. Exact-arithmetic
// checks take no tolerance; everything here applies to the double-precision
// paths and is overridable from the CLI. Reports always echo the value used.
struct Tolerances {
  double identity = 1e-12;    // identities among double-precision constants
  double residual = 1e-10;    // polynomial residuals, ratio and census checks
  double membership = 1e-9;   // numeric point matching and phase snapping
  double radius_pin = 1e-3;   // pinned projection radius reference values
};

}  // namespace triac
