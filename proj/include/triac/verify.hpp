#pragma once

#include <array>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include <json.hpp>

#include "triac/roots.hpp"
#include "triac/tolerances.hpp"

namespace triac {

// One verified claim. tolerance == 0 means the check ran in exact
// arithmetic. A failing check always carries a counterexample.
struct CheckResult {
  std::string name;
  bool pass = false;
  double tolerance = 0.0;
  std::string detail;
  std::string counterexample;
};

struct VerificationReport {
  std::vector<CheckResult> checks;

  bool all_pass() const;
  void add(CheckResult result);
  void merge(VerificationReport other);

  nlohmann::json to_json() const;
  std::string to_text() const;
};

struct CartanMatrix {
  std::array<std::array<int, 8>, 8> entries{};
  std::array<char, 8> labels{};
};

// Hermitian inner product on complex coordinate tuples, real part:
// <u,v> = Re sum_j u_j conj(v_j). Exact in cyclotomic mode; equals the
// Euclidean inner product of the interleaved real coordinates.
CycNum hermitian_inner(const RootVector& u, const RootVector& v);
double hermitian_inner_numeric(const RootVector& u, const RootVector& v);

// The Cartan scalar 2<v,alpha>/<alpha,alpha> as an exact rational, found by
// coefficientwise division (no cyclotomic inversion). Throws
// std::runtime_error if the quotient is not rational — for two roots of a
// crystallographic system it always is.
Rational cartan_ratio(const RootVector& v, const RootVector& alpha);

// v reflected in the hyperplane normal to alpha.
std::vector<CycNum> reflect(const RootVector& v, const RootVector& alpha);
std::vector<std::complex<double>> reflect_numeric(const RootVector& v,
                                                  const RootVector& alpha);

// Root-system axioms for a full root list in one mode: pairwise distinct,
// closed under negation, equal norms, Cartan integrality (E8) or the
// golden-ratio inner-product spectrum (H4), closure under reflections, and
// the per-root inner-product census.
VerificationReport check_root_system(std::span<const RootVector> roots,
                                     const Tolerances& tol = {});

// Cartan integers 2<a_i,a_j>/<a_j,a_j> of a candidate simple system.
// Throws std::runtime_error on a non-integer entry.
CartanMatrix cartan_integers(std::span<const RootVector> simple);

// Whether the -1 adjacency graph of a Cartan matrix is the E8 diagram:
// a 7-node path with one extra node attached third from one end. Matches
// the abstract shape, not any particular labeling.
bool check_dynkin_e8(const CartanMatrix& m);

// Canonical node order (branch, then arms by increasing length, each walked
// outward) when the matrix has the E8 diagram shape.
std::optional<std::array<int, 8>> e8_diagram_order(const CartanMatrix& m);

struct Decomposition {
  bool ok = false;
  std::array<long long, 8> coeffs{};
  std::string error;

  long long height() const;
};

// Exact integer coefficients of v over a simple system, uniform in sign.
Decomposition simple_root_decomposition(const RootVector& v,
                                        std::span<const RootVector> simple);

// Classical constructions used as oracles.
std::vector<std::array<double, 8>> standard_e8();  // 240, squared norm 2
std::vector<std::array<double, 4>> standard_h4();  // 120, unit 600-cell

struct CensusEntry {
  double value;  // pairwise cosine
  int count;
};

// The per-root census of pairwise cosines, when it is the same for every
// root; nullopt if any two roots disagree.
std::optional<std::vector<CensusEntry>> cosine_census(
    const std::vector<std::vector<double>>& vectors, double value_tol);

bool censuses_match(const std::vector<CensusEntry>& a,
                    const std::vector<CensusEntry>& b, double value_tol);

struct IsometryResult {
  bool ok = false;
  std::array<std::array<double, 8>, 8> matrix{};
  double scale_sq = 0.0;
  double orthogonality_error = 0.0;
  int matched = 0;
  std::string detail;
};

// Builds the linear map sending one simple system to another (after the
// unique E8 diagram relabeling) and checks it is orthogonal up to scale and
// carries the source root set bijectively onto the destination set.
IsometryResult isometry_from_simple_match(
    const std::vector<std::array<double, 8>>& src_simple,
    const std::vector<std::array<double, 8>>& dst_simple,
    const std::vector<std::array<double, 8>>& src_roots,
    const std::vector<std::array<double, 8>>& dst_roots,
    const Tolerances& tol = {});

// Exact dense solve of an 8x8 rational system; nullopt if singular.
std::optional<std::array<Rational, 8>> solve_linear8(
    std::array<std::array<Rational, 8>, 8> m, std::array<Rational, 8> rhs);

// The full machine-verification suite for one system: amplitude and
// modulus checks, root-system axioms in both coordinate modes, simple-root
// and Dynkin structure, the cyclic symmetry, the isomorphism with the
// classical construction, and the projection structure.
VerificationReport run_claim_suite(System system, const Tolerances& tol = {});

}  // namespace triac
