#pragma once

#include <complex>
#include <iosfwd>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "triac/amplitudes.hpp"
#include "triac/cyclo.hpp"

namespace triac {

enum class System { e8, h4 };
enum class CoordMode { exact, numeric };

std::string_view to_string(System system);
std::string_view to_string(CoordMode mode);
System system_from_string(std::string_view text);

// One root, identified by its family letter and cycle index n. E8 roots
// live in complex 4-space (families A..H), H4 roots in complex 2-space
// (families A..D). Exact coordinates are elements of Q(zeta_60); numeric
// coordinates are complex doubles.
struct RootVector {
  System system = System::e8;
  CoordMode mode = CoordMode::numeric;
  char family = 'A';
  int n = 0;
  std::vector<CycNum> exact;
  std::vector<std::complex<double>> numeric;

  int dim() const {
    return static_cast<int>(mode == CoordMode::exact ? exact.size()
                                                     : numeric.size());
  }
};

// Symbolic description of one coordinate of a family row: which amplitude
// (1-based), a sign, and a fixed phase exponent of zeta.
struct GeneratorEntry {
  int amp;
  int sign;
  int phase;
};

struct GeneratorRow {
  char family;
  std::vector<GeneratorEntry> entries;
};

// The family rows plus the diagonal exponents of the cyclic action: the
// root (F, n) has j-th coordinate sign * r_amp * zeta^(phase + diag[j]*n).
// Both amplitude modes share this one description.
struct Generator {
  std::vector<GeneratorRow> rows;
  std::vector<int> diag;
};

const Generator& e8_generator();  // 8 rows x 4 coords, diag (2,22,14,26)
const Generator& h4_generator();  // 4 rows x 2 coords, diag (2,22)

// All 240 E8 roots (family-major, then n). Throws std::runtime_error if the
// generated vectors are not pairwise distinct.
std::vector<RootVector> e8_roots(const CycAmplitudes& amps);
std::vector<RootVector> e8_roots(const SurdAmplitudes& amps);

// All 120 H4 roots, numeric coordinates.
std::vector<RootVector> h4_roots(const SurdAmplitudes& amps);

// The order-30 diagonal map zeta^diag[j] on coordinate j. Applying it to
// the root (F, n) yields (F, n+1 mod 30); its 15th power is v -> -v.
class CoxeterRotation {
 public:
  explicit CoxeterRotation(System system);
  const std::vector<int>& diagonal_exponents() const { return diag_; }
  RootVector apply(const RootVector& root) const;

 private:
  std::vector<int> diag_;
};

// Interleaved (re, im) coordinates; 8 reals for E8, 4 for H4. The Euclidean
// norm equals the Hermitian norm of the complex vector. Exact roots are
// embedded numerically first.
std::vector<double> to_real_coords(const RootVector& root);

// Canonical identity key of an exact root's coordinates.
std::string root_key(const RootVector& root);

// Smallest Euclidean distance between distinct roots (numeric embedding).
double min_pairwise_distance(std::span<const RootVector> roots);

// JSON-lines export/import: one root per line, fields system, family, n,
// mode, coords. Exact coordinates serialize as 16 "p/q" strings each and
// round-trip bit-exactly.
void write_roots_jsonl(std::ostream& os, std::span<const RootVector> roots);
std::vector<RootVector> read_roots_jsonl(std::istream& is);

}  // namespace triac
