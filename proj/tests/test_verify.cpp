#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <numbers>
#include <set>
#include <unordered_map>
#include <unordered_set>

#include "triac/verify.hpp"

using namespace triac;

namespace {

std::vector<RootVector> exact_e8() {
  static const auto roots = e8_roots(amplitudes_cyclotomic());
  return roots;
}

std::vector<RootVector> simple_system_n0() {
  auto roots = exact_e8();
  std::vector<RootVector> simple;
  for (int f = 0; f < 8; ++f) simple.push_back(roots[f * 30]);
  return simple;
}

RootVector constant_root(std::vector<CycNum> coords) {
  RootVector v;
  v.system = System::e8;
  v.mode = CoordMode::exact;
  v.exact = std::move(coords);
  return v;
}

}  // namespace

TEST_CASE("hermitian inner product") {
  auto amps = amplitudes_primary();
  auto numeric = e8_roots(amps);
  // Unit norm with the surd amplitudes.
  CHECK(std::abs(hermitian_inner_numeric(numeric[0], numeric[0]) - 1.0) <
        1e-12);

  auto exact = exact_e8();
  const RootVector& a0 = exact[0];
  CycNum norm = hermitian_inner(a0, a0);
  CHECK(norm.conjugate() == norm);
  CHECK(norm.to_complex().real() ==
        doctest::Approx(1.5400914578117539).epsilon(1e-12));

  // <v, -v> = -<v, v>, exactly.
  RootVector neg = a0;
  for (auto& c : neg.exact) c = -c;
  CHECK(hermitian_inner(a0, neg) == -norm);

  // Exact inner product agrees with the real-coordinate dot product.
  auto real_a0 = to_real_coords(exact[0]);
  auto real_b0 = to_real_coords(exact[40]);
  double dot = 0;
  for (std::size_t k = 0; k < real_a0.size(); ++k)
    dot += real_a0[k] * real_b0[k];
  CHECK(hermitian_inner(exact[0], exact[40]).to_complex().real() ==
        doctest::Approx(dot).epsilon(1e-12));
}

TEST_CASE("cartan_ratio is scale-invariant and exact") {
  auto exact = exact_e8();
  Rational q = cartan_ratio(exact[0], exact[0]);
  CHECK(q == Rational(2));
  // Between two distinct roots the ratio is a small integer.
  Rational q2 = cartan_ratio(exact[0], exact[35]);
  CHECK(q2.to_int64().has_value());
  CHECK(*q2.to_int64() >= -2);
  CHECK(*q2.to_int64() <= 2);
  // An irrational quotient is rejected: <u,a>/<a,a> = 1/c6 for u=(1,..),
  // a=(c6,..).
  RootVector u = constant_root({CycNum::one(), CycNum::zero(), CycNum::zero(),
                                CycNum::zero()});
  RootVector a = constant_root({CycNum::two_cos(6), CycNum::zero(),
                                CycNum::zero(), CycNum::zero()});
  CHECK_THROWS_AS(cartan_ratio(u, a), std::runtime_error);
}

TEST_CASE("reflection") {
  auto exact = exact_e8();
  std::unordered_set<std::string> keys;
  for (const auto& r : exact) keys.insert(root_key(r));

  // reflect(v, v) = -v
  auto refl = reflect(exact[17], exact[17]);
  for (int j = 0; j < 4; ++j) CHECK(refl[j] == -exact[17].exact[j]);

  // An orthogonal root is fixed.
  for (int cand = 1; cand < 240; ++cand) {
    if (cartan_ratio(exact[0], exact[cand]).is_zero()) {
      CHECK(reflect(exact[0], exact[cand]) == exact[0].exact);
      break;
    }
  }

  // reflect((A,0), (B,0)) lands in the root set.
  auto image = reflect(exact[0], exact[30]);
  CHECK(keys.contains(canonical_key(image)));

  // Numeric reflection agrees with the exact one.
  auto amps = amplitudes_primary();
  auto numeric = e8_roots(amps);
  auto w = reflect_numeric(numeric[0], numeric[30]);
  auto w_exact = reflect(exact[0], exact[30]);
  const double lambda = amps.c9 / amps.a;
  for (int j = 0; j < 4; ++j)
    CHECK(std::abs(w_exact[j].to_complex() / lambda - w[j]) < 1e-12);
}

TEST_CASE("check_root_system passes for both systems and modes") {
  auto rep_exact = check_root_system(exact_e8());
  CHECK(rep_exact.all_pass());

  auto rep_numeric = check_root_system(e8_roots(amplitudes_primary()));
  CHECK(rep_numeric.all_pass());

  auto rep_h4 = check_root_system(h4_roots(amplitudes_primary()));
  CHECK(rep_h4.all_pass());
}

TEST_CASE("check_root_system flags tampered data") {
  auto roots = exact_e8();
  // Swap two coordinates of one root; the set is no longer reflection-closed.
  std::swap(roots[5].exact[0], roots[5].exact[1]);
  auto rep = check_root_system(roots);
  CHECK_FALSE(rep.all_pass());
  bool formula_row_failed = false;
  for (const auto& c : rep.checks)
    if (c.name == "e8.exact.formula-match") formula_row_failed = !c.pass;
  CHECK(formula_row_failed);
}

TEST_CASE("cartan matrix of the n=0 simple system") {
  auto simple = simple_system_n0();
  CartanMatrix m = cartan_integers(simple);
  std::set<std::pair<char, char>> edges;
  for (int i = 0; i < 8; ++i) {
    CHECK(m.entries[i][i] == 2);
    for (int j = 0; j < 8; ++j) {
      if (i == j) continue;
      CHECK((m.entries[i][j] == 0 || m.entries[i][j] == -1));
      CHECK(m.entries[i][j] == m.entries[j][i]);
      if (m.entries[i][j] == -1 && i < j)
        edges.insert({m.labels[i], m.labels[j]});
    }
  }
  // The circle-and-segment diagram: paths F-A-C-D and B-E-G-H plus A-B.
  std::set<std::pair<char, char>> expected = {{'A', 'B'}, {'A', 'C'},
                                              {'A', 'F'}, {'B', 'E'},
                                              {'C', 'D'}, {'E', 'G'},
                                              {'G', 'H'}};
  CHECK(edges == expected);
  CHECK(check_dynkin_e8(m));

  // The same matrix arises for every n.
  auto roots = exact_e8();
  for (int n : {1, 7, 29}) {
    std::vector<RootVector> shifted;
    for (int f = 0; f < 8; ++f) shifted.push_back(roots[f * 30 + n]);
    CHECK(cartan_integers(shifted).entries == m.entries);
  }
}

TEST_CASE("dynkin shape recognition") {
  auto path_matrix = [](const std::vector<std::pair<int, int>>& edges) {
    CartanMatrix m;
    for (int i = 0; i < 8; ++i) {
      m.labels[i] = static_cast<char>('1' + i);
      for (int j = 0; j < 8; ++j) m.entries[i][j] = i == j ? 2 : 0;
    }
    for (auto [i, j] : edges) {
      m.entries[i][j] = -1;
      m.entries[j][i] = -1;
    }
    return m;
  };

  // A8: a plain path of 8 nodes.
  CartanMatrix a8 = path_matrix(
      {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 5}, {5, 6}, {6, 7}});
  CHECK_FALSE(check_dynkin_e8(a8));

  // D8: branch at the second node from one end.
  CartanMatrix d8 = path_matrix(
      {{0, 2}, {1, 2}, {2, 3}, {3, 4}, {4, 5}, {5, 6}, {6, 7}});
  CHECK_FALSE(check_dynkin_e8(d8));

  // E8: branch third from one end (arm lengths 1, 2, 4).
  CartanMatrix e8 = path_matrix(
      {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 5}, {5, 6}, {2, 7}});
  CHECK(check_dynkin_e8(e8));
  auto order = e8_diagram_order(e8);
  REQUIRE(order.has_value());
  CHECK((*order)[0] == 2);  // the branch node

  // A negated simple root flips its row and column; the entries stay
  // integers (+1 appears) but the diagram shape check rejects the matrix.
  auto simple = simple_system_n0();
  for (auto& c : simple[0].exact) c = -c;
  CartanMatrix flipped = cartan_integers(simple);
  bool has_plus_one = false;
  for (int i = 0; i < 8; ++i)
    for (int j = 0; j < 8; ++j)
      if (i != j) has_plus_one = has_plus_one || flipped.entries[i][j] == 1;
  CHECK(has_plus_one);
  CHECK_FALSE(check_dynkin_e8(flipped));
}

TEST_CASE("simple root decomposition") {
  auto roots = exact_e8();
  auto simple = simple_system_n0();

  // A simple root decomposes as a unit vector.
  Decomposition d3 = simple_root_decomposition(simple[3], simple);
  REQUIRE(d3.ok);
  for (int i = 0; i < 8; ++i) CHECK(d3.coeffs[i] == (i == 3 ? 1 : 0));

  RootVector neg = simple[3];
  for (auto& c : neg.exact) c = -c;
  Decomposition dneg = simple_root_decomposition(neg, simple);
  REQUIRE(dneg.ok);
  for (int i = 0; i < 8; ++i) CHECK(dneg.coeffs[i] == (i == 3 ? -1 : 0));

  // Every root decomposes integrally with uniform sign; the height extremes
  // are +-29.
  long long max_height = 0, min_height = 0;
  std::array<long long, 8> top{};
  for (const auto& v : roots) {
    Decomposition dec = simple_root_decomposition(v, simple);
    REQUIRE_MESSAGE(dec.ok, dec.error);
    if (dec.height() > max_height) {
      max_height = dec.height();
      top = dec.coeffs;
    }
    min_height = std::min(min_height, dec.height());
  }
  CHECK(max_height == 29);
  CHECK(min_height == -29);
  std::sort(top.begin(), top.end());
  CHECK(top == std::array<long long, 8>{2, 2, 3, 3, 4, 4, 5, 6});
}

TEST_CASE("highest-root marks match the classical construction") {
  // Oracle: decompose the standard E8 roots over the classical simple
  // system using exact rational arithmetic on the doubled (integer)
  // coordinates.
  auto std_roots = standard_e8();
  std::vector<std::array<double, 8>> simple = {
      {0.5, -0.5, -0.5, -0.5, -0.5, -0.5, -0.5, 0.5},
      {1, 1, 0, 0, 0, 0, 0, 0},
      {-1, 1, 0, 0, 0, 0, 0, 0},
      {0, -1, 1, 0, 0, 0, 0, 0},
      {0, 0, -1, 1, 0, 0, 0, 0},
      {0, 0, 0, -1, 1, 0, 0, 0},
      {0, 0, 0, 0, -1, 1, 0, 0},
      {0, 0, 0, 0, 0, -1, 1, 0},
  };
  auto cartan_int = [&](const std::array<double, 8>& u,
                        const std::array<double, 8>& v) {
    double num = 0, den = 0;
    for (int k = 0; k < 8; ++k) {
      num += u[k] * v[k];
      den += v[k] * v[k];
    }
    double x = 2.0 * num / den;
    REQUIRE(std::abs(x - std::round(x)) < 1e-9);
    return static_cast<int>(std::lround(x));
  };
  std::array<std::array<Rational, 8>, 8> m;
  for (int i = 0; i < 8; ++i)
    for (int j = 0; j < 8; ++j)
      m[i][j] = Rational(cartan_int(simple[i], simple[j]));

  long long best = 0;
  std::array<long long, 8> top{};
  for (const auto& v : std_roots) {
    std::array<Rational, 8> rhs;
    for (int j = 0; j < 8; ++j) rhs[j] = Rational(cartan_int(v, simple[j]));
    auto sol = solve_linear8(m, rhs);
    REQUIRE(sol.has_value());
    long long height = 0;
    std::array<long long, 8> coeffs{};
    for (int i = 0; i < 8; ++i) {
      auto k = (*sol)[i].to_int64();
      REQUIRE(k.has_value());
      coeffs[i] = *k;
      height += *k;
    }
    if (height > best) {
      best = height;
      top = coeffs;
    }
  }
  CHECK(best == 29);
  std::sort(top.begin(), top.end());
  CHECK(top == std::array<long long, 8>{2, 2, 3, 3, 4, 4, 5, 6});
}

TEST_CASE("standard constructions") {
  auto e8 = standard_e8();
  REQUIRE(e8.size() == 240);
  for (const auto& v : e8) {
    double norm = 0;
    for (double x : v) norm += x * x;
    CHECK(norm == doctest::Approx(2.0).epsilon(1e-15));
  }

  auto h4 = standard_h4();
  REQUIRE(h4.size() == 120);
  for (const auto& v : h4) {
    double norm = 0;
    for (double x : v) norm += x * x;
    CHECK(std::abs(norm - 1.0) < 1e-12);
  }
  // All distinct.
  for (std::size_t i = 0; i < h4.size(); ++i)
    for (std::size_t j = i + 1; j < h4.size(); ++j) {
      double d2 = 0;
      for (int k = 0; k < 4; ++k) {
        double t = h4[i][k] - h4[j][k];
        d2 += t * t;
      }
      CHECK(d2 > 0.1);
    }
}

TEST_CASE("censuses") {
  std::vector<std::vector<double>> gen, std_v;
  for (const auto& r : e8_roots(amplitudes_primary()))
    gen.push_back(to_real_coords(r));
  for (const auto& a : standard_e8()) std_v.emplace_back(a.begin(), a.end());

  auto c1 = cosine_census(gen, 1e-10);
  auto c2 = cosine_census(std_v, 1e-10);
  REQUIRE(c1.has_value());
  REQUIRE(c2.has_value());
  CHECK(censuses_match(*c1, *c2, 1e-10));

  REQUIRE(c1->size() == 5);
  const int expected_counts[5] = {1, 56, 126, 56, 1};
  const double expected_values[5] = {1.0, 0.5, 0.0, -0.5, -1.0};
  for (int i = 0; i < 5; ++i) {
    CHECK((*c1)[i].count == expected_counts[i]);
    CHECK(std::abs((*c1)[i].value - expected_values[i]) < 1e-10);
  }

  // A set that is not cosine-transitive has no common census.
  std::vector<std::vector<double>> bad = {{1, 0}, {0, 1}, {1, 1}};
  CHECK_FALSE(cosine_census(bad, 1e-10).has_value());
}

TEST_CASE("h4 census equals the 600-cell census") {
  std::vector<std::vector<double>> gen, std_v;
  for (const auto& r : h4_roots(amplitudes_primary()))
    gen.push_back(to_real_coords(r));
  for (const auto& a : standard_h4()) std_v.emplace_back(a.begin(), a.end());
  auto c1 = cosine_census(gen, 1e-10);
  auto c2 = cosine_census(std_v, 1e-10);
  REQUIRE(c1.has_value());
  REQUIRE(c2.has_value());
  CHECK(censuses_match(*c1, *c2, 1e-10));
  REQUIRE(c1->size() == 9);
  CHECK((*c1)[0].count == 1);    // the root itself
  CHECK((*c1)[1].count == 12);   // cos = tau/2
  CHECK((*c1)[2].count == 20);   // cos = 1/2
  CHECK((*c1)[3].count == 12);   // cos = 1/(2 tau)
  CHECK((*c1)[4].count == 30);   // orthogonal
}

TEST_CASE("isometry from simple-root matching") {
  std::vector<std::array<double, 8>> ours, ours_simple;
  for (const auto& r : e8_roots(amplitudes_primary())) {
    auto v = to_real_coords(r);
    std::array<double, 8> a{};
    std::copy(v.begin(), v.end(), a.begin());
    ours.push_back(a);
    if (r.n == 0) ours_simple.push_back(a);
  }

  // Source equal to destination gives the identity map.
  IsometryResult self =
      isometry_from_simple_match(ours_simple, ours_simple, ours, ours, {});
  CHECK(self.ok);
  for (int i = 0; i < 8; ++i)
    for (int j = 0; j < 8; ++j)
      CHECK(std::abs(self.matrix[i][j] - (i == j ? 1.0 : 0.0)) < 1e-9);

  auto std_roots = standard_e8();
  std::vector<std::array<double, 8>> std_simple = {
      {0.5, -0.5, -0.5, -0.5, -0.5, -0.5, -0.5, 0.5},
      {1, 1, 0, 0, 0, 0, 0, 0},
      {-1, 1, 0, 0, 0, 0, 0, 0},
      {0, -1, 1, 0, 0, 0, 0, 0},
      {0, 0, -1, 1, 0, 0, 0, 0},
      {0, 0, 0, -1, 1, 0, 0, 0},
      {0, 0, 0, 0, -1, 1, 0, 0},
      {0, 0, 0, 0, 0, -1, 1, 0},
  };
  IsometryResult iso = isometry_from_simple_match(ours_simple, std_simple,
                                                  ours, std_roots, {});
  CHECK(iso.ok);
  CHECK(iso.matched == 240);
  CHECK(iso.scale_sq == doctest::Approx(2.0).epsilon(1e-12));
  CHECK(iso.orthogonality_error < 1e-9);

  // Conjugating the cyclic rotation to the standard side gives an order-30
  // permutation of the standard roots whose 15th power is negation.
  const auto& diag = e8_generator().diag;
  auto rotate = [&](const std::array<double, 8>& x) {
    std::array<double, 8> y{};
    for (int j = 0; j < 4; ++j) {
      double theta = std::numbers::pi * diag[j] / 30.0;
      double c = std::cos(theta), s = std::sin(theta);
      y[2 * j] = c * x[2 * j] - s * x[2 * j + 1];
      y[2 * j + 1] = s * x[2 * j] + c * x[2 * j + 1];
    }
    return y;
  };
  auto apply_matrix = [&](const std::array<std::array<double, 8>, 8>& m,
                          const std::array<double, 8>& x) {
    std::array<double, 8> y{};
    for (int i = 0; i < 8; ++i)
      for (int k = 0; k < 8; ++k) y[i] += m[i][k] * x[k];
    return y;
  };
  std::array<std::array<double, 8>, 8> m_inv{};  // M^T / scale^2
  for (int i = 0; i < 8; ++i)
    for (int j = 0; j < 8; ++j) m_inv[i][j] = iso.matrix[j][i] / iso.scale_sq;

  std::vector<int> perm(240, -1);
  for (int i = 0; i < 240; ++i) {
    auto y = apply_matrix(iso.matrix, rotate(apply_matrix(m_inv, std_roots[i])));
    int found = -1;
    for (int j = 0; j < 240; ++j) {
      double d2 = 0;
      for (int k = 0; k < 8; ++k) {
        double t = y[k] - std_roots[j][k];
        d2 += t * t;
      }
      if (std::sqrt(d2) < 1e-9) {
        found = j;
        break;
      }
    }
    REQUIRE(found >= 0);
    perm[i] = found;
  }
  // Order 30: the 30th power is the identity and no smaller power is.
  std::vector<int> current(240);
  for (int i = 0; i < 240; ++i) current[i] = i;
  for (int step = 1; step <= 30; ++step) {
    for (int i = 0; i < 240; ++i) current[i] = perm[current[i]];
    bool identity = true;
    for (int i = 0; i < 240; ++i) identity = identity && current[i] == i;
    if (step < 30) {
      CHECK_FALSE(identity);
    } else {
      CHECK(identity);
    }
    if (step == 15) {
      // Negation permutation at the half turn.
      for (int i = 0; i < 240; ++i) {
        double d2 = 0;
        for (int k = 0; k < 8; ++k) {
          double t = std_roots[current[i]][k] + std_roots[i][k];
          d2 += t * t;
        }
        CHECK(std::sqrt(d2) < 1e-9);
      }
    }
  }
}

TEST_CASE("solve_linear8") {
  std::array<std::array<Rational, 8>, 8> ident{};
  std::array<Rational, 8> rhs;
  for (int i = 0; i < 8; ++i) {
    rhs[i] = Rational(i + 1);
    for (int j = 0; j < 8; ++j) ident[i][j] = Rational(i == j ? 1 : 0);
  }
  auto sol = solve_linear8(ident, rhs);
  REQUIRE(sol.has_value());
  for (int i = 0; i < 8; ++i) CHECK((*sol)[i] == Rational(i + 1));

  // Singular matrix has no solution.
  auto singular = ident;
  singular[7][7] = Rational(0);
  CHECK_FALSE(solve_linear8(singular, rhs).has_value());

  // A dense invertible system solved exactly: m[i][j] = 1/(i+j+1).
  std::array<std::array<Rational, 8>, 8> hilbert;
  for (int i = 0; i < 8; ++i)
    for (int j = 0; j < 8; ++j)
      hilbert[i][j] = Rational(triac::BigInt(1), triac::BigInt(i + j + 1));
  auto hsol = solve_linear8(hilbert, rhs);
  REQUIRE(hsol.has_value());
  for (int i = 0; i < 8; ++i) {
    Rational acc;
    for (int j = 0; j < 8; ++j) acc += hilbert[i][j] * (*hsol)[j];
    CHECK(acc == rhs[i]);
  }
}

TEST_CASE("verification report serialization") {
  VerificationReport rep;
  rep.add({"demo.pass", true, 1e-9, "fine", ""});
  rep.add({"demo.fail", false, 0.0, "broken", "the counterexample"});
  CHECK_FALSE(rep.all_pass());

  std::string text = rep.to_text();
  CHECK(text.find("[PASS] demo.pass") != std::string::npos);
  CHECK(text.find("[FAIL] demo.fail") != std::string::npos);
  CHECK(text.find("the counterexample") != std::string::npos);
  CHECK(text.find("1/2 checks passed") != std::string::npos);

  auto j = rep.to_json();
  REQUIRE(j.size() == 2);
  CHECK(j[0]["status"] == "pass");
  CHECK(j[0]["tolerance"] == 1e-9);
  CHECK(j[1]["status"] == "fail");
  CHECK(j[1]["tolerance"] == "exact");
  CHECK(j[1]["counterexample"] == "the counterexample");
}

TEST_CASE("full claim suites pass") {
  CHECK(run_claim_suite(System::e8).all_pass());
  CHECK(run_claim_suite(System::h4).all_pass());
}

TEST_CASE("check_root_system validates its input") {
  CHECK_THROWS_AS(check_root_system({}), std::invalid_argument);

  auto exact = exact_e8();
  auto numeric = e8_roots(amplitudes_primary());
  std::vector<RootVector> mixed = {exact[0], numeric[0]};
  CHECK_THROWS_AS(check_root_system(mixed), std::invalid_argument);
}

TEST_CASE("failing rows always carry a counterexample") {
  VerificationReport rep;
  rep.add({"demo", false, 0.0, "just a detail", ""});
  REQUIRE(rep.checks.size() == 1);
  CHECK(rep.checks[0].counterexample == "just a detail");
}
