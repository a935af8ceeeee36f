#include "triac/verify.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <iomanip>
#include <map>
#include <numbers>
#include <numeric>
#include <sstream>
#include <stdexcept>
#include <unordered_map>

#include "triac/project.hpp"

namespace triac {

namespace {

constexpr std::int8_t kBadCartan = 127;

std::string root_name(const RootVector& r) {
  return "(" + std::string(1, r.family) + "," + std::to_string(r.n) + ")";
}

std::string fmt(double v) {
  std::ostringstream os;
  os << std::setprecision(12) << v;
  return os.str();
}

// sum_j u_j * conj(v_j); not yet the real part.
CycNum sesquilinear(const RootVector& u, const RootVector& v) {
  CycNum out;
  for (int j = 0; j < u.dim(); ++j) out += u.exact[j] * v.exact[j].conjugate();
  return out;
}

const Rational& one_half() {
  static const Rational half(BigInt(1), BigInt(2));
  return half;
}

void require_same_mode(const RootVector& u, const RootVector& v) {
  if (u.system != v.system || u.mode != v.mode)
    throw std::invalid_argument("roots come from different systems or modes");
}

}  // namespace

bool VerificationReport::all_pass() const {
  return std::all_of(checks.begin(), checks.end(),
                     [](const CheckResult& c) { return c.pass; });
}

void VerificationReport::add(CheckResult result) {
  // A failing check always carries a counterexample payload.
  if (!result.pass && result.counterexample.empty())
    result.counterexample = result.detail;
  checks.push_back(std::move(result));
}

void VerificationReport::merge(VerificationReport other) {
  for (auto& c : other.checks) checks.push_back(std::move(c));
}

nlohmann::json VerificationReport::to_json() const {
  nlohmann::json out = nlohmann::json::array();
  for (const auto& c : checks) {
    nlohmann::json row;
    row["check"] = c.name;
    row["status"] = c.pass ? "pass" : "fail";
    if (c.tolerance > 0) {
      row["tolerance"] = c.tolerance;
    } else {
      row["tolerance"] = "exact";
    }
    row["detail"] = c.detail;
    if (!c.pass) row["counterexample"] = c.counterexample;
    out.push_back(std::move(row));
  }
  return out;
}

std::string VerificationReport::to_text() const {
  std::ostringstream os;
  int passed = 0;
  for (const auto& c : checks) {
    os << (c.pass ? "[PASS] " : "[FAIL] ") << std::left << std::setw(36)
       << c.name << " ";
    if (c.tolerance > 0) {
      os << "tol=" << c.tolerance << "  ";
    } else {
      os << "exact  ";
    }
    os << c.detail << "\n";
    if (!c.pass && !c.counterexample.empty())
      os << "       counterexample: " << c.counterexample << "\n";
    if (c.pass) ++passed;
  }
  os << passed << "/" << checks.size() << " checks passed\n";
  return os.str();
}

CycNum hermitian_inner(const RootVector& u, const RootVector& v) {
  require_same_mode(u, v);
  if (u.mode != CoordMode::exact)
    throw std::invalid_argument("hermitian_inner requires exact coordinates");
  CycNum z = sesquilinear(u, v);
  return (z + z.conjugate()).scaled(one_half());
}

double hermitian_inner_numeric(const RootVector& u, const RootVector& v) {
  require_same_mode(u, v);
  double out = 0;
  if (u.mode == CoordMode::numeric) {
    for (int j = 0; j < u.dim(); ++j)
      out += (u.numeric[j] * std::conj(v.numeric[j])).real();
  } else {
    for (int j = 0; j < u.dim(); ++j)
      out += (u.exact[j].to_complex() * std::conj(v.exact[j].to_complex()))
                 .real();
  }
  return out;
}

Rational cartan_ratio(const RootVector& v, const RootVector& alpha) {
  require_same_mode(v, alpha);
  CycNum z = sesquilinear(v, alpha);
  CycNum two_inner = z + z.conjugate();           // 2<v,alpha>
  CycNum norm = sesquilinear(alpha, alpha);       // <alpha,alpha>, real
  auto q = rational_ratio(two_inner, norm);
  if (!q) {
    throw std::runtime_error("Cartan scalar of " + root_name(v) + " against " +
                             root_name(alpha) + " is not rational");
  }
  return *q;
}

std::vector<CycNum> reflect(const RootVector& v, const RootVector& alpha) {
  Rational q = cartan_ratio(v, alpha);
  std::vector<CycNum> out;
  out.reserve(v.exact.size());
  for (int j = 0; j < v.dim(); ++j)
    out.push_back(v.exact[j] - alpha.exact[j].scaled(q));
  return out;
}

std::vector<std::complex<double>> reflect_numeric(const RootVector& v,
                                                  const RootVector& alpha) {
  double q = 2.0 * hermitian_inner_numeric(v, alpha) /
             hermitian_inner_numeric(alpha, alpha);
  std::vector<std::complex<double>> out;
  out.reserve(v.numeric.size());
  for (int j = 0; j < v.dim(); ++j)
    out.push_back(v.numeric[j] - q * alpha.numeric[j]);
  return out;
}

// ---------------------------------------------------------------------------
// Exact E8 pair sweep.
//
// Every coordinate of every root is sign * r_i * zeta^e, so the sesquilinear
// sum of any ordered pair is a signed sum of four table entries
// r_i * r_k * zeta^(e-f). Precomputing that 8x8x60 table turns the
// 240 x 240 Cartan sweep into table additions.
// ---------------------------------------------------------------------------

namespace {

struct SymbolicCoord {
  int amp;    // 0..7
  int sign;   // +-1
  int phase;  // 0..59
};

struct ExactSweep {
  std::span<const RootVector> roots;
  std::vector<std::array<SymbolicCoord, 4>> sym;  // aligned with roots
  std::vector<std::string> keys;
  std::unordered_map<std::string, int> index;        // coord key -> root
  std::array<int, 240> by_family_n;                  // (f-'A')*30+n -> root
  CycNum norm;                                       // common squared norm
  bool norms_equal = true;
  std::string norm_cex;
  std::vector<std::int8_t> cartan;  // row-major n x n, kBadCartan = invalid
  bool cartan_ok = true;
  std::string cartan_cex;
  bool formula_ok = true;
  std::string formula_cex;
  bool labels_ok = true;
  std::string labels_cex;

  int size() const { return static_cast<int>(roots.size()); }
  std::int8_t q(int i, int j) const { return cartan[i * roots.size() + j]; }
  int idx_of(char family, int n) const {
    return by_family_n[(family - 'A') * 30 + n];
  }
};

ExactSweep build_exact_sweep(std::span<const RootVector> roots) {
  ExactSweep sw;
  sw.roots = roots;
  const Generator& gen = e8_generator();
  const CycAmplitudes amps = amplitudes_cyclotomic();
  const int n = static_cast<int>(roots.size());

  sw.by_family_n.fill(-1);
  sw.sym.resize(n);
  sw.keys.reserve(n);
  for (int i = 0; i < n; ++i) {
    const RootVector& r = roots[i];
    int row = r.family - 'A';
    if (row < 0 || row >= 8 || r.n < 0 || r.n >= 30) {
      sw.labels_ok = false;
      sw.labels_cex = "root #" + std::to_string(i) + " has label " +
                      root_name(r);
      break;
    }
    if (sw.by_family_n[row * 30 + r.n] >= 0) {
      sw.labels_ok = false;
      sw.labels_cex = "duplicate label " + root_name(r);
      break;
    }
    sw.by_family_n[row * 30 + r.n] = i;
    for (int j = 0; j < 4; ++j) {
      const GeneratorEntry& e = gen.rows[row].entries[j];
      sw.sym[i][j] = {e.amp - 1, e.sign, (e.phase + gen.diag[j] * r.n) % 60};
    }
  }
  for (int i = 0; i < n; ++i) {
    sw.keys.push_back(root_key(roots[i]));
    sw.index.emplace(sw.keys.back(), i);
  }

  // Materialized coordinates must agree with the symbolic description.
  for (int i = 0; i < n && sw.labels_ok; ++i) {
    for (int j = 0; j < 4; ++j) {
      CycNum expect = amps.r[sw.sym[i][j].amp].mul_power(sw.sym[i][j].phase);
      if (sw.sym[i][j].sign < 0) expect = -expect;
      if (!(expect == roots[i].exact[j])) {
        sw.formula_ok = false;
        sw.formula_cex = root_name(roots[i]) + " coordinate " +
                         std::to_string(j) + " differs from the formula";
        break;
      }
    }
    if (!sw.formula_ok) break;
  }

  // r_i * r_k * zeta^m table.
  std::array<std::array<CycNum, 8>, 8> prod;
  for (int i = 0; i < 8; ++i)
    for (int k = i; k < 8; ++k) {
      prod[i][k] = amps.r[i] * amps.r[k];
      prod[k][i] = prod[i][k];
    }
  std::vector<CycNum> pz(8 * 8 * 60);
  for (int i = 0; i < 8; ++i)
    for (int k = 0; k < 8; ++k)
      for (int m = 0; m < 60; ++m)
        pz[(i * 8 + k) * 60 + m] = prod[i][k].mul_power(m);

  auto sesq = [&](int u, int v) {
    CycNum acc;
    for (int j = 0; j < 4; ++j) {
      const SymbolicCoord& a = sw.sym[u][j];
      const SymbolicCoord& b = sw.sym[v][j];
      const CycNum& term =
          pz[(a.amp * 8 + b.amp) * 60 + ((a.phase - b.phase + 60) % 60)];
      if (a.sign * b.sign > 0) {
        acc += term;
      } else {
        acc -= term;
      }
    }
    return acc;
  };

  // Norms first: S(v,v) depends only on the family's amplitude multiset.
  sw.norm = sesq(0, 0);
  for (int i = 1; i < n; ++i) {
    if (!(sesq(i, i) == sw.norm)) {
      sw.norms_equal = false;
      sw.norm_cex = root_name(roots[i]) + " has norm " +
                    sesq(i, i).to_string() + " != " + sw.norm.to_string();
      break;
    }
  }

  sw.cartan.assign(static_cast<std::size_t>(n) * n, kBadCartan);
  for (int i = 0; i < n; ++i) sw.cartan[i * n + i] = 2;
  if (!sw.norms_equal) return sw;

  for (int u = 0; u < n; ++u) {
    for (int v = u + 1; v < n; ++v) {
      CycNum two_re = sesq(u, v) + sesq(v, u);
      auto q = rational_ratio(two_re, sw.norm);
      std::optional<long long> qi = q ? q->to_int64() : std::nullopt;
      if (!qi || *qi < -2 || *qi > 2) {
        if (sw.cartan_ok) {
          sw.cartan_ok = false;
          sw.cartan_cex =
              "pair " + root_name(roots[u]) + ", " + root_name(roots[v]) +
              ": 2<u,v>/<v,v> = " + (q ? q->to_string() : "(irrational)");
        }
        continue;
      }
      sw.cartan[u * n + v] = static_cast<std::int8_t>(*qi);
      sw.cartan[v * n + u] = static_cast<std::int8_t>(*qi);
    }
  }
  return sw;
}

void exact_axiom_rows(const ExactSweep& sw, VerificationReport& rep) {
  const int n = sw.size();
  auto roots = sw.roots;

  rep.add({"e8.exact.cardinality",
           sw.labels_ok && n == 240 && static_cast<int>(sw.index.size()) == n,
           0.0,
           std::to_string(sw.index.size()) + " distinct roots of " +
               std::to_string(n),
           sw.labels_ok ? "" : sw.labels_cex});

  rep.add({"e8.exact.formula-match", sw.formula_ok, 0.0,
           "coordinates equal sign * r_i * zeta^(phase + diag*n)",
           sw.formula_cex});

  rep.add({"e8.exact.norms-equal", sw.norms_equal, 0.0,
           "common squared norm = " + sw.norm.to_string() + " ~ " +
               fmt(sw.norm.to_complex().real()),
           sw.norm_cex});

  {
    bool ok = true;
    std::string cex;
    for (int i = 0; i < n && ok; ++i) {
      std::vector<CycNum> neg;
      neg.reserve(4);
      for (const auto& c : roots[i].exact) neg.push_back(-c);
      if (!sw.index.contains(canonical_key(neg))) {
        ok = false;
        cex = "-" + root_name(roots[i]) + " is not in the set";
      }
    }
    rep.add({"e8.exact.negation-closure", ok, 0.0,
             "v in set implies -v in set", cex});
  }

  {
    // +-2 must pin down equal or opposite roots.
    bool ok = sw.cartan_ok;
    std::string cex = sw.cartan_cex;
    for (int u = 0; u < n && ok; ++u) {
      for (int v = 0; v < n; ++v) {
        std::int8_t q = sw.q(u, v);
        if (q == kBadCartan) {
          ok = false;
          cex = "invalid Cartan entry at " + root_name(roots[u]) + ", " +
                root_name(roots[v]);
          break;
        }
        if ((q == 2 && u != v)) {
          ok = false;
          cex = "distinct roots " + root_name(roots[u]) + ", " +
                root_name(roots[v]) + " have Cartan integer 2";
          break;
        }
      }
    }
    rep.add({"e8.exact.cartan-integrality", ok, 0.0,
             "all 240*240 Cartan integers lie in {-2,-1,0,1,2}", cex});
  }

  {
    // Census of Cartan integers per root: {2:1, 1:56, 0:126, -1:56, -2:1}.
    static const std::map<int, int> expected = {
        {2, 1}, {1, 56}, {0, 126}, {-1, 56}, {-2, 1}};
    bool ok = sw.cartan_ok;
    std::string cex = sw.cartan_cex;
    for (int u = 0; u < n && ok; ++u) {
      std::map<int, int> census;
      for (int v = 0; v < n; ++v) {
        std::int8_t q = sw.q(u, v);
        if (q == kBadCartan) {
          ok = false;
          break;
        }
        ++census[q];
      }
      if (ok && census != expected) {
        ok = false;
        std::ostringstream os;
        os << root_name(roots[u]) << " census {";
        for (auto [val, cnt] : census) os << val << ":" << cnt << " ";
        os << "}";
        cex = os.str();
      }
    }
    rep.add({"e8.exact.census", ok, 0.0,
             "every root sees {1,56,126,56,1} partners at inner products "
             "{1,1/2,0,-1/2,-1}",
             cex});
  }

  {
    bool ok = sw.cartan_ok;
    std::string cex = sw.cartan_cex;
    long long reflections = 0;
    for (int v = 0; v < n && ok; ++v) {
      for (int a = 0; a < n; ++a) {
        std::int8_t q = sw.q(v, a);
        if (q == kBadCartan) {
          ok = false;
          cex = "invalid Cartan entry";
          break;
        }
        if (q == 0) continue;  // reflection fixes v
        std::vector<CycNum> w;
        w.reserve(4);
        for (int j = 0; j < 4; ++j)
          w.push_back(roots[v].exact[j] -
                      roots[a].exact[j].scaled(Rational(q)));
        ++reflections;
        if (!sw.index.contains(canonical_key(w))) {
          ok = false;
          cex = "reflecting " + root_name(roots[v]) + " in " +
                root_name(roots[a]) + " leaves the set";
          break;
        }
      }
    }
    rep.add({"e8.exact.reflection-closure", ok, 0.0,
             std::to_string(reflections) + " nontrivial reflections verified",
             cex});
  }
}

// Generic numeric sweep shared by surd-mode E8 and H4.
void numeric_axiom_rows(std::span<const RootVector> roots,
                        const Tolerances& tol, VerificationReport& rep) {
  const int n = static_cast<int>(roots.size());
  const bool e8 = roots[0].system == System::e8;
  const std::string prefix =
      e8 ? "e8.numeric." : "h4.";
  const int expected_count = e8 ? 240 : 120;

  std::vector<std::vector<double>> reals;
  reals.reserve(n);
  for (const auto& r : roots) reals.push_back(to_real_coords(r));

  auto dot = [&](int i, int j) {
    double s = 0;
    for (std::size_t k = 0; k < reals[i].size(); ++k)
      s += reals[i][k] * reals[j][k];
    return s;
  };
  auto find_vec = [&](const std::vector<double>& target) {
    for (int i = 0; i < n; ++i) {
      double d2 = 0;
      for (std::size_t k = 0; k < target.size(); ++k) {
        double t = reals[i][k] - target[k];
        d2 += t * t;
      }
      if (std::sqrt(d2) <= tol.membership) return i;
    }
    return -1;
  };

  {
    double dmin = min_pairwise_distance(roots);
    rep.add({prefix + "cardinality",
             n == expected_count && dmin > tol.membership, tol.membership,
             std::to_string(n) + " roots, min pairwise distance " + fmt(dmin),
             ""});
  }

  {
    double worst = 0;
    int worst_i = 0;
    for (int i = 0; i < n; ++i) {
      double dev = std::abs(dot(i, i) - 1.0);
      if (dev > worst) {
        worst = dev;
        worst_i = i;
      }
    }
    rep.add({prefix + "norms-unit", worst <= tol.identity, tol.identity,
             "max |<v,v>-1| = " + fmt(worst),
             worst <= tol.identity ? "" : root_name(roots[worst_i])});
  }

  {
    bool ok = true;
    std::string cex;
    for (int i = 0; i < n && ok; ++i) {
      std::vector<double> neg(reals[i].size());
      for (std::size_t k = 0; k < neg.size(); ++k) neg[k] = -reals[i][k];
      if (find_vec(neg) < 0) {
        ok = false;
        cex = "-" + root_name(roots[i]) + " not found";
      }
    }
    rep.add({prefix + "negation-closure", ok, tol.membership,
             "v in set implies -v in set", cex});
  }

  if (e8) {
    bool ok = true;
    std::string cex;
    double worst = 0;
    for (int u = 0; u < n && ok; ++u) {
      for (int v = 0; v < n; ++v) {
        double x = 2.0 * dot(u, v) / dot(v, v);
        double k = std::round(x);
        worst = std::max(worst, std::abs(x - k));
        if (std::abs(x - k) > tol.membership || k < -2 || k > 2) {
          ok = false;
          cex = "pair " + root_name(roots[u]) + ", " + root_name(roots[v]) +
                ": 2<u,v>/<v,v> = " + fmt(x);
          break;
        }
      }
    }
    rep.add({prefix + "cartan-integrality", ok, tol.membership,
             "max deviation from an integer in [-2,2]: " + fmt(worst), cex});
  } else {
    // H4 inner products lie in {0, +-1/2, +-1/(2tau), +-tau/2, +-1}.
    const double tau = 0.5 * (1.0 + std::sqrt(5.0));
    const std::vector<double> allowed = {
        -1.0, -tau / 2, -0.5, -1 / (2 * tau), 0.0,
        1 / (2 * tau), 0.5, tau / 2, 1.0};
    bool ok = true;
    std::string cex;
    double worst = 0;
    for (int u = 0; u < n && ok; ++u) {
      for (int v = 0; v < n; ++v) {
        double x = dot(u, v);
        double best = 1e9;
        for (double a : allowed) best = std::min(best, std::abs(x - a));
        worst = std::max(worst, best);
        if (best > tol.residual) {
          ok = false;
          cex = "pair " + root_name(roots[u]) + ", " + root_name(roots[v]) +
                ": <u,v> = " + fmt(x);
          break;
        }
      }
    }
    rep.add({prefix + "spectrum", ok, tol.residual,
             "inner products in {0,+-1/2,+-1/(2tau),+-tau/2,+-1}, max "
             "deviation " +
                 fmt(worst),
             cex});
  }

  {
    auto census = cosine_census(reals, tol.residual);
    std::ostringstream os;
    if (census) {
      for (const auto& e : *census) os << e.count << "@" << fmt(e.value) << " ";
    }
    rep.add({prefix + "census-uniform", census.has_value(), tol.residual,
             census ? "per-root cosine census: " + os.str()
                    : "censuses differ between roots",
             census ? "" : "see census-uniform"});
  }

  {
    bool ok = true;
    std::string cex;
    long long count = 0;
    for (int v = 0; v < n && ok; ++v) {
      for (int a = 0; a < n; ++a) {
        double q = 2.0 * dot(v, a) / dot(a, a);
        if (std::abs(q) < 1e-14) continue;
        std::vector<double> w(reals[v].size());
        for (std::size_t k = 0; k < w.size(); ++k)
          w[k] = reals[v][k] - q * reals[a][k];
        ++count;
        if (find_vec(w) < 0) {
          ok = false;
          cex = "reflecting " + root_name(roots[v]) + " in " +
                root_name(roots[a]) + " leaves the set";
          break;
        }
      }
    }
    rep.add({prefix + "reflection-closure", ok, tol.membership,
             std::to_string(count) + " nontrivial reflections verified", cex});
  }
}

}  // namespace

VerificationReport check_root_system(std::span<const RootVector> roots,
                                     const Tolerances& tol) {
  if (roots.empty())
    throw std::invalid_argument("check_root_system: empty root list");
  for (const auto& r : roots) {
    if (r.system != roots[0].system || r.mode != roots[0].mode)
      throw std::invalid_argument(
          "check_root_system: mixed systems or modes in root list");
  }
  VerificationReport rep;
  if (roots[0].mode == CoordMode::exact) {
    if (roots[0].system != System::e8)
      throw std::invalid_argument("exact coordinates are E8-only");
    ExactSweep sw = build_exact_sweep(roots);
    exact_axiom_rows(sw, rep);
  } else {
    numeric_axiom_rows(roots, tol, rep);
  }
  return rep;
}

CartanMatrix cartan_integers(std::span<const RootVector> simple) {
  if (simple.size() != 8)
    throw std::invalid_argument("cartan_integers expects 8 roots");
  CartanMatrix m;
  for (int i = 0; i < 8; ++i) m.labels[i] = simple[i].family;
  for (int i = 0; i < 8; ++i) {
    for (int j = 0; j < 8; ++j) {
      if (simple[i].mode == CoordMode::exact) {
        Rational q = cartan_ratio(simple[i], simple[j]);
        auto qi = q.to_int64();
        if (!qi)
          throw std::runtime_error("non-integer Cartan entry " + q.to_string() +
                                   " at (" + std::string(1, m.labels[i]) + "," +
                                   std::string(1, m.labels[j]) + ")");
        m.entries[i][j] = static_cast<int>(*qi);
      } else {
        double x = 2.0 * hermitian_inner_numeric(simple[i], simple[j]) /
                   hermitian_inner_numeric(simple[j], simple[j]);
        double k = std::round(x);
        if (std::abs(x - k) > 1e-9)
          throw std::runtime_error("non-integer Cartan entry " + fmt(x));
        m.entries[i][j] = static_cast<int>(k);
      }
    }
  }
  return m;
}

std::optional<std::array<int, 8>> e8_diagram_order(const CartanMatrix& m) {
  // Validate the entry pattern first.
  for (int i = 0; i < 8; ++i) {
    if (m.entries[i][i] != 2) return std::nullopt;
    for (int j = 0; j < 8; ++j) {
      if (i == j) continue;
      if (m.entries[i][j] != 0 && m.entries[i][j] != -1) return std::nullopt;
      if (m.entries[i][j] != m.entries[j][i]) return std::nullopt;
    }
  }
  std::array<std::vector<int>, 8> adj;
  int edges = 0;
  for (int i = 0; i < 8; ++i)
    for (int j = i + 1; j < 8; ++j)
      if (m.entries[i][j] == -1) {
        adj[i].push_back(j);
        adj[j].push_back(i);
        ++edges;
      }
  if (edges != 7) return std::nullopt;

  int branch = -1;
  for (int i = 0; i < 8; ++i) {
    if (adj[i].size() > 3) return std::nullopt;
    if (adj[i].size() == 3) {
      if (branch >= 0) return std::nullopt;
      branch = i;
    }
  }
  if (branch < 0) return std::nullopt;

  // Walk the three arms; lengths must be {1, 2, 4}.
  std::vector<std::vector<int>> arms;
  for (int start : adj[branch]) {
    std::vector<int> arm = {start};
    int prev = branch;
    int cur = start;
    while (true) {
      if (adj[cur].size() > 2) return std::nullopt;
      int next = -1;
      for (int cand : adj[cur])
        if (cand != prev) next = cand;
      if (next < 0) break;
      arm.push_back(next);
      prev = cur;
      cur = next;
    }
    arms.push_back(std::move(arm));
  }
  std::sort(arms.begin(), arms.end(),
            [](const auto& a, const auto& b) { return a.size() < b.size(); });
  if (arms[0].size() != 1 || arms[1].size() != 2 || arms[2].size() != 4)
    return std::nullopt;

  std::array<int, 8> order{};
  int pos = 0;
  order[pos++] = branch;
  for (const auto& arm : arms)
    for (int node : arm) order[pos++] = node;
  return order;
}

bool check_dynkin_e8(const CartanMatrix& m) {
  return e8_diagram_order(m).has_value();
}

long long Decomposition::height() const {
  return std::accumulate(coeffs.begin(), coeffs.end(), 0ll);
}

std::optional<std::array<Rational, 8>> solve_linear8(
    std::array<std::array<Rational, 8>, 8> m, std::array<Rational, 8> rhs) {
  for (int col = 0; col < 8; ++col) {
    int pivot = -1;
    for (int row = col; row < 8; ++row) {
      if (!m[row][col].is_zero()) {
        pivot = row;
        break;
      }
    }
    if (pivot < 0) return std::nullopt;
    std::swap(m[col], m[pivot]);
    std::swap(rhs[col], rhs[pivot]);
    Rational inv = Rational(1) / m[col][col];
    for (int j = col; j < 8; ++j) m[col][j] *= inv;
    rhs[col] *= inv;
    for (int row = 0; row < 8; ++row) {
      if (row == col || m[row][col].is_zero()) continue;
      Rational f = m[row][col];
      for (int j = col; j < 8; ++j) m[row][j] -= f * m[col][j];
      rhs[row] -= f * rhs[col];
    }
  }
  return rhs;
}

namespace {

Decomposition decompose_from_integers(
    const std::array<std::array<int, 8>, 8>& cartan,
    const std::array<int, 8>& targets, const std::string& name) {
  std::array<std::array<Rational, 8>, 8> m;
  std::array<Rational, 8> rhs;
  for (int i = 0; i < 8; ++i) {
    rhs[i] = Rational(targets[i]);
    for (int j = 0; j < 8; ++j) m[i][j] = Rational(cartan[i][j]);
  }
  Decomposition out;
  auto sol = solve_linear8(m, rhs);
  if (!sol) {
    out.error = name + ": simple-root Gram system is singular";
    return out;
  }
  bool nonneg = true, nonpos = true;
  for (int i = 0; i < 8; ++i) {
    auto k = (*sol)[i].to_int64();
    if (!k) {
      out.error = name + ": non-integer coefficient " + (*sol)[i].to_string();
      return out;
    }
    out.coeffs[i] = *k;
    nonneg = nonneg && *k >= 0;
    nonpos = nonpos && *k <= 0;
  }
  if (!nonneg && !nonpos) {
    out.error = name + ": mixed-sign coefficients";
    return out;
  }
  out.ok = true;
  return out;
}

}  // namespace

Decomposition simple_root_decomposition(const RootVector& v,
                                        std::span<const RootVector> simple) {
  if (v.mode != CoordMode::exact)
    throw std::invalid_argument(
        "simple_root_decomposition requires exact coordinates");
  CartanMatrix cm = cartan_integers(simple);
  std::array<int, 8> targets{};
  for (int j = 0; j < 8; ++j) {
    Rational q = cartan_ratio(v, simple[j]);
    auto qi = q.to_int64();
    if (!qi) {
      Decomposition out;
      out.error = root_name(v) + ": non-integer Cartan scalar " + q.to_string();
      return out;
    }
    targets[j] = static_cast<int>(*qi);
  }
  return decompose_from_integers(cm.entries, targets, root_name(v));
}

std::vector<std::array<double, 8>> standard_e8() {
  std::vector<std::array<double, 8>> out;
  out.reserve(240);
  for (int i = 0; i < 8; ++i) {
    for (int j = i + 1; j < 8; ++j) {
      for (double si : {1.0, -1.0}) {
        for (double sj : {1.0, -1.0}) {
          std::array<double, 8> v{};
          v[i] = si;
          v[j] = sj;
          out.push_back(v);
        }
      }
    }
  }
  for (int mask = 0; mask < 256; ++mask) {
    if (std::popcount(static_cast<unsigned>(mask)) % 2 != 0) continue;
    std::array<double, 8> v;
    for (int k = 0; k < 8; ++k) v[k] = (mask >> k) & 1 ? -0.5 : 0.5;
    out.push_back(v);
  }
  return out;
}

std::vector<std::array<double, 4>> standard_h4() {
  const double tau = 0.5 * (1.0 + std::sqrt(5.0));
  std::vector<std::array<double, 4>> out;
  out.reserve(120);
  for (int i = 0; i < 4; ++i) {
    for (double s : {1.0, -1.0}) {
      std::array<double, 4> v{};
      v[i] = s;
      out.push_back(v);
    }
  }
  for (int mask = 0; mask < 16; ++mask) {
    std::array<double, 4> v;
    for (int k = 0; k < 4; ++k) v[k] = (mask >> k) & 1 ? -0.5 : 0.5;
    out.push_back(v);
  }
  // Even permutations of (tau/2, 1/2, 1/(2 tau), 0) with free signs on the
  // three nonzero entries.
  const std::array<double, 4> base = {tau / 2, 0.5, 1 / (2 * tau), 0.0};
  std::array<int, 4> perm = {0, 1, 2, 3};
  do {
    int inversions = 0;
    for (int i = 0; i < 4; ++i)
      for (int j = i + 1; j < 4; ++j)
        if (perm[i] > perm[j]) ++inversions;
    if (inversions % 2 != 0) continue;
    for (int mask = 0; mask < 8; ++mask) {
      std::array<double, 4> v;
      int bit = 0;
      for (int k = 0; k < 4; ++k) {
        double val = base[perm[k]];
        if (val != 0.0) {
          v[k] = (mask >> bit) & 1 ? -val : val;
          ++bit;
        } else {
          v[k] = 0.0;
        }
      }
      out.push_back(v);
    }
  } while (std::next_permutation(perm.begin(), perm.end()));
  return out;
}

std::optional<std::vector<CensusEntry>> cosine_census(
    const std::vector<std::vector<double>>& vectors, double value_tol) {
  const int n = static_cast<int>(vectors.size());
  std::vector<double> norms(n);
  for (int i = 0; i < n; ++i) {
    double s = 0;
    for (double x : vectors[i]) s += x * x;
    norms[i] = std::sqrt(s);
  }
  std::vector<std::vector<CensusEntry>> per_root(n);
  for (int i = 0; i < n; ++i) {
    std::vector<double> cos(n);
    for (int j = 0; j < n; ++j) {
      double dot = 0;
      for (std::size_t k = 0; k < vectors[i].size(); ++k)
        dot += vectors[i][k] * vectors[j][k];
      cos[j] = dot / (norms[i] * norms[j]);
    }
    std::sort(cos.begin(), cos.end());
    std::vector<CensusEntry> census;
    for (double v : cos) {
      if (census.empty() || v - census.back().value > value_tol) {
        census.push_back({v, 1});
      } else {
        ++census.back().count;
      }
    }
    per_root[i] = std::move(census);
  }
  for (int i = 1; i < n; ++i) {
    if (!censuses_match(per_root[0], per_root[i], value_tol))
      return std::nullopt;
  }
  std::reverse(per_root[0].begin(), per_root[0].end());  // descending
  return per_root[0];
}

bool censuses_match(const std::vector<CensusEntry>& a,
                    const std::vector<CensusEntry>& b, double value_tol) {
  if (a.size() != b.size()) return false;
  auto ascending = [](std::vector<CensusEntry> v) {
    std::sort(v.begin(), v.end(),
              [](const CensusEntry& x, const CensusEntry& y) {
                return x.value < y.value;
              });
    return v;
  };
  auto av = ascending(a);
  auto bv = ascending(b);
  for (std::size_t i = 0; i < av.size(); ++i) {
    if (std::abs(av[i].value - bv[i].value) > value_tol) return false;
    if (av[i].count != bv[i].count) return false;
  }
  return true;
}

namespace {

using Mat8 = std::array<std::array<double, 8>, 8>;

std::optional<Mat8> invert8(Mat8 m) {
  Mat8 inv{};
  for (int i = 0; i < 8; ++i) inv[i][i] = 1.0;
  for (int col = 0; col < 8; ++col) {
    int pivot = col;
    for (int row = col + 1; row < 8; ++row)
      if (std::abs(m[row][col]) > std::abs(m[pivot][col])) pivot = row;
    if (std::abs(m[pivot][col]) < 1e-12) return std::nullopt;
    std::swap(m[col], m[pivot]);
    std::swap(inv[col], inv[pivot]);
    double f = m[col][col];
    for (int j = 0; j < 8; ++j) {
      m[col][j] /= f;
      inv[col][j] /= f;
    }
    for (int row = 0; row < 8; ++row) {
      if (row == col) continue;
      double g = m[row][col];
      if (g == 0) continue;
      for (int j = 0; j < 8; ++j) {
        m[row][j] -= g * m[col][j];
        inv[row][j] -= g * inv[col][j];
      }
    }
  }
  return inv;
}

CartanMatrix cartan_of_real_simple(const std::vector<std::array<double, 8>>& s) {
  CartanMatrix m;
  for (int i = 0; i < 8; ++i) m.labels[i] = static_cast<char>('1' + i);
  for (int i = 0; i < 8; ++i) {
    for (int j = 0; j < 8; ++j) {
      double num = 0, den = 0;
      for (int k = 0; k < 8; ++k) {
        num += s[i][k] * s[j][k];
        den += s[j][k] * s[j][k];
      }
      double x = 2.0 * num / den;
      m.entries[i][j] = static_cast<int>(std::lround(x));
      if (std::abs(x - m.entries[i][j]) > 1e-9)
        throw std::runtime_error("simple system has non-integer Cartan entry " +
                                 fmt(x));
    }
  }
  return m;
}

}  // namespace

IsometryResult isometry_from_simple_match(
    const std::vector<std::array<double, 8>>& src_simple,
    const std::vector<std::array<double, 8>>& dst_simple,
    const std::vector<std::array<double, 8>>& src_roots,
    const std::vector<std::array<double, 8>>& dst_roots,
    const Tolerances& tol) {
  IsometryResult res;
  if (src_simple.size() != 8 || dst_simple.size() != 8) {
    res.detail = "simple systems must have 8 roots";
    return res;
  }
  auto src_order = e8_diagram_order(cartan_of_real_simple(src_simple));
  auto dst_order = e8_diagram_order(cartan_of_real_simple(dst_simple));
  if (!src_order || !dst_order) {
    res.detail = "a simple system does not have the E8 diagram shape";
    return res;
  }

  // Columns of S and T are the relabeled simple roots; M = T S^-1.
  Mat8 s_cols{}, t_cols{};
  for (int i = 0; i < 8; ++i) {
    for (int k = 0; k < 8; ++k) {
      s_cols[k][i] = src_simple[(*src_order)[i]][k];
      t_cols[k][i] = dst_simple[(*dst_order)[i]][k];
    }
  }
  auto s_inv = invert8(s_cols);
  if (!s_inv) {
    res.detail = "source simple system is singular";
    return res;
  }
  for (int i = 0; i < 8; ++i)
    for (int j = 0; j < 8; ++j) {
      double sum = 0;
      for (int k = 0; k < 8; ++k) sum += t_cols[i][k] * (*s_inv)[k][j];
      res.matrix[i][j] = sum;
    }

  // M^T M must be a scalar matrix.
  double scale_sq = 0;
  for (int k = 0; k < 8; ++k) scale_sq += res.matrix[k][0] * res.matrix[k][0];
  res.scale_sq = scale_sq;
  double err = 0;
  for (int i = 0; i < 8; ++i) {
    for (int j = 0; j < 8; ++j) {
      double g = 0;
      for (int k = 0; k < 8; ++k) g += res.matrix[k][i] * res.matrix[k][j];
      err = std::max(err, std::abs(g - (i == j ? scale_sq : 0.0)));
    }
  }
  res.orthogonality_error = err;

  // The image of every source root must hit exactly one destination root.
  std::vector<int> hit(dst_roots.size(), 0);
  int matched = 0;
  for (const auto& x : src_roots) {
    std::array<double, 8> y{};
    for (int i = 0; i < 8; ++i) {
      double sum = 0;
      for (int k = 0; k < 8; ++k) sum += res.matrix[i][k] * x[k];
      y[i] = sum;
    }
    int found = -1;
    for (std::size_t j = 0; j < dst_roots.size(); ++j) {
      double d2 = 0;
      for (int k = 0; k < 8; ++k) {
        double t = y[k] - dst_roots[j][k];
        d2 += t * t;
      }
      if (std::sqrt(d2) <= tol.membership) {
        found = static_cast<int>(j);
        break;
      }
    }
    if (found < 0) {
      res.detail = "an image point matches no destination root";
      return res;
    }
    if (hit[found]++) {
      res.detail = "two source roots map to the same destination root";
      return res;
    }
    ++matched;
  }
  res.matched = matched;
  res.ok = err <= tol.membership &&
           matched == static_cast<int>(src_roots.size()) &&
           src_roots.size() == dst_roots.size();
  if (res.ok) {
    res.detail = "bijective on " + std::to_string(matched) +
                 " roots, scale^2 = " + fmt(scale_sq) +
                 ", orthogonality error " + fmt(err);
  } else if (res.detail.empty()) {
    res.detail = "orthogonality error " + fmt(err);
  }
  return res;
}

// ---------------------------------------------------------------------------
// Full claim suites.
// ---------------------------------------------------------------------------

namespace {

void amplitude_rows(VerificationReport& rep, const Tolerances& tol) {
  {
    std::string diag;
    bool ok = verify_modulus_polynomial(&diag);
    rep.add({"cyclo.modulus-polynomial", ok, 0.0,
             "Phi_60 rebuilt from scratch, equals Phi_30(x^2), divides "
             "x^60 - 1",
             diag});
  }

  auto amps = amplitudes_primary(tol);
  {
    double worst = 0;
    for (double x : {amps.a, amps.b, amps.c, amps.d})
      worst = std::max(worst, std::abs(octic_value(x)));
    rep.add({"amplitudes.octic-residuals", worst <= tol.residual, tol.residual,
             "max |45x^8-90x^6+60x^4-15x^2+1| over {a,b,c,d} = " + fmt(worst),
             ""});
  }
  rep.add({"amplitudes.ordering",
           amps.a > amps.b && amps.b > amps.c && amps.c > amps.d && amps.d > 0,
           0.0,
           "a=" + fmt(amps.a) + " > b=" + fmt(amps.b) + " > c=" + fmt(amps.c) +
               " > d=" + fmt(amps.d) + " > 0",
           ""});
  {
    double e1 = std::abs(amps.a * amps.a + amps.d * amps.d - 1.0);
    double e2 = std::abs(amps.b * amps.b + amps.c * amps.c - 1.0);
    rep.add({"amplitudes.pair-sums",
             e1 <= tol.identity && e2 <= tol.identity, tol.identity,
             "|a^2+d^2-1| = " + fmt(e1) + ", |b^2+c^2-1| = " + fmt(e2), ""});
  }
  {
    const CycNum c3 = CycNum::two_cos(3);
    const CycNum c6 = CycNum::two_cos(6);
    const CycNum c9 = CycNum::two_cos(9);
    const CycNum c12 = CycNum::two_cos(12);
    bool golden = (c6 * c6 == c6 + CycNum::one());
    bool scaling = (c6 * c9 == c3) && (c3 * c12 == c9);
    double dev = std::abs(amps.c3 - amps.tau * amps.c9);
    rep.add({"amplitudes.golden-ratio-identities",
             golden && scaling && dev <= tol.identity, tol.identity,
             "c6^2 = c6+1 and c6*c9 = c3 exactly; |c3 - tau*c9| = " + fmt(dev),
             golden && scaling ? "" : "exact cyclotomic identity failed"});
  }
  {
    bool ok = true;
    std::string detail;
    try {
      double lambda = proportionality_ratio(tol);
      detail = "common factor lambda = c9/a = " + fmt(lambda) +
               ", lambda^2 = " + fmt(lambda * lambda);
    } catch (const std::exception& e) {
      ok = false;
      detail = e.what();
    }
    rep.add({"amplitudes.proportionality", ok, tol.residual, detail, ""});
  }
  {
    auto cyc = amplitudes_cyclotomic();
    bool ok = true;
    std::string cex;
    for (int i = 0; i < 8 && ok; ++i) {
      if (!(cyc.r[i].conjugate() == cyc.r[i]) ||
          cyc.r[i].to_complex().real() <= 0) {
        ok = false;
        cex = "r" + std::to_string(i + 1) + " = " + cyc.r[i].to_string();
      }
    }
    rep.add({"amplitudes.cyclotomic-real-positive", ok, 0.0,
             "all eight exact amplitudes are conjugation-fixed and positive",
             cex});
  }
  {
    auto cyc = amplitudes_cyclotomic();
    const Generator& gen = e8_generator();
    CycNum first;
    bool ok = true;
    std::string cex;
    for (std::size_t row = 0; row < gen.rows.size(); ++row) {
      CycNum norm;
      for (const auto& e : gen.rows[row].entries)
        norm += cyc.r[e.amp - 1] * cyc.r[e.amp - 1];
      if (row == 0) {
        first = norm;
      } else if (!(norm == first)) {
        ok = false;
        cex = std::string("row ") + gen.rows[row].family + " norm " +
              norm.to_string();
      }
    }
    rep.add({"amplitudes.row-norms-equal", ok, 0.0,
             "all 8 generator rows have squared norm " + first.to_string(),
             cex});
  }
}

void projection_rows(VerificationReport& rep, std::string_view prefix,
                     std::span<const RootVector> roots,
                     const std::vector<double>& expected_radii_desc,
                     const std::vector<double>& pinned_radii,
                     const std::string& even_families,
                     const Tolerances& tol) {
  auto points = project_first_coordinate(roots, tol.membership);
  auto classes = radius_classes(points);
  std::string p(prefix);

  {
    bool ok = classes.size() == expected_radii_desc.size();
    double max_resid = 0;
    for (const auto& c : classes) {
      ok = ok && c.count == 30;
      max_resid = std::max(max_resid, c.max_phase_residual);
    }
    rep.add({p + "projection-cycles",
             ok && max_resid <= tol.membership, tol.membership,
             std::to_string(classes.size()) + " concentric cycles of 30, max "
                 "phase snap residual " + fmt(max_resid),
             ok ? "" : "unexpected cycle structure"});
  }
  {
    bool ok = classes.size() == expected_radii_desc.size();
    double worst_exact = 0, worst_pin = 0;
    for (std::size_t i = 0; i < classes.size() && ok; ++i) {
      worst_exact = std::max(
          worst_exact, std::abs(classes[i].radius - expected_radii_desc[i]));
      worst_pin = std::max(worst_pin,
                           std::abs(classes[i].radius - pinned_radii[i]));
    }
    ok = ok && worst_exact <= tol.identity && worst_pin <= tol.radius_pin;
    rep.add({p + "projection-radii", ok, tol.radius_pin,
             "radii match amplitudes to " + fmt(worst_exact) +
                 " and the reference table to " + fmt(worst_pin),
             ok ? "" : "radius mismatch"});
  }
  {
    auto parity = phase_census(points);
    bool ok = parity.size() == classes.size();
    std::string got;
    for (const auto& e : parity) {
      bool expect_even =
          even_families.find(e.family) != std::string::npos;
      ok = ok && e.parity == (expect_even ? "even" : "odd");
      got += std::string(1, e.family) + ":" + e.parity + " ";
    }
    rep.add({p + "projection-phase-parity", ok, 0.0, got,
             ok ? "" : "unexpected parity layout"});
  }
  {
    // Rotating every point by pi/15 (phase index +2) permutes the multiset.
    std::map<std::pair<long long, int>, int> census;
    for (const auto& pt : points) {
      long long rkey = std::llround(pt.radius * 1e7);
      ++census[{rkey, pt.phase_index}];
      --census[{rkey, (pt.phase_index + 2) % 60}];
    }
    bool ok = std::all_of(census.begin(), census.end(),
                          [](const auto& kv) { return kv.second == 0; });
    rep.add({p + "projection-rotation-invariance", ok, tol.membership,
             "point multiset is invariant under rotation by pi/15",
             ok ? "" : "rotated multiset differs"});
  }
  if (prefix == "e8.") {
    double min_gap = 1e9;
    for (std::size_t i = 1; i < classes.size(); ++i)
      min_gap = std::min(min_gap,
                         classes[i - 1].radius - classes[i].radius);
    rep.add({p + "projection-radius-separation", min_gap > 0.02, 0.0,
             "smallest gap between adjacent radii = " + fmt(min_gap), ""});
  }
}

void e8_structure_rows(const ExactSweep& sw, VerificationReport& rep) {
  const int n = sw.size();

  // Simple systems {A_n..H_n} for every n, read off the Cartan table.
  {
    bool ok = sw.cartan_ok && sw.labels_ok;
    std::string cex;
    std::array<std::array<int, 8>, 8> reference{};
    for (int m = 0; m < 30 && ok; ++m) {
      std::array<std::array<int, 8>, 8> cm{};
      for (int i = 0; i < 8 && ok; ++i) {
        for (int j = 0; j < 8; ++j) {
          std::int8_t q = sw.q(sw.idx_of(static_cast<char>('A' + i), m),
                               sw.idx_of(static_cast<char>('A' + j), m));
          if (q == kBadCartan) {
            ok = false;
            cex = "invalid Cartan entry at n=" + std::to_string(m);
            break;
          }
          cm[i][j] = q;
          if (i != j && q != 0 && q != -1) {
            ok = false;
            cex = "off-diagonal Cartan entry " + std::to_string(q) +
                  " at n=" + std::to_string(m);
            break;
          }
        }
      }
      if (!ok) break;
      if (m == 0) {
        reference = cm;
        CartanMatrix full;
        full.entries = cm;
        for (int i = 0; i < 8; ++i) full.labels[i] = static_cast<char>('A' + i);
        if (!check_dynkin_e8(full)) {
          ok = false;
          cex = "adjacency graph at n=0 is not the E8 diagram";
        }
      } else if (cm != reference) {
        ok = false;
        cex = "Cartan matrix at n=" + std::to_string(m) + " differs from n=0";
      }
    }
    std::string edges;
    if (ok) {
      for (int i = 0; i < 8; ++i)
        for (int j = i + 1; j < 8; ++j)
          if (reference[i][j] == -1) {
            edges += std::string(1, static_cast<char>('A' + i)) + "-" +
                     std::string(1, static_cast<char>('A' + j)) + " ";
          }
    }
    rep.add({"e8.simple-roots-dynkin", ok, 0.0,
             ok ? "identical E8-shaped Cartan matrix for all 30 n; edges: " +
                      edges
                : "simple-root check failed",
             cex});
  }

  // Integer decomposition of every root over {A_0..H_0}.
  {
    bool ok = sw.cartan_ok && sw.labels_ok;
    std::string cex;
    long long max_height = 0;
    std::array<long long, 8> top_coeffs{};
    std::array<int, 8> simple_idx{};
    std::array<std::array<int, 8>, 8> cm{};
    if (ok) {
      for (int i = 0; i < 8; ++i)
        simple_idx[i] = sw.idx_of(static_cast<char>('A' + i), 0);
      for (int i = 0; i < 8; ++i)
        for (int j = 0; j < 8; ++j)
          cm[i][j] = sw.q(simple_idx[i], simple_idx[j]);
    }
    for (int v = 0; v < n && ok; ++v) {
      std::array<int, 8> targets{};
      for (int j = 0; j < 8; ++j) targets[j] = sw.q(v, simple_idx[j]);
      Decomposition dec = decompose_from_integers(
          cm, targets, root_name(sw.roots[v]));
      if (!dec.ok) {
        ok = false;
        cex = dec.error;
        break;
      }
      if (dec.height() > max_height) {
        max_height = dec.height();
        top_coeffs = dec.coeffs;
      }
    }
    if (ok && max_height != 29) {
      ok = false;
      cex = "maximal height " + std::to_string(max_height) + " != 29";
    }
    std::array<long long, 8> sorted = top_coeffs;
    std::sort(sorted.begin(), sorted.end());
    const std::array<long long, 8> expected = {2, 2, 3, 3, 4, 4, 5, 6};
    if (ok && sorted != expected) {
      ok = false;
      std::ostringstream os;
      os << "highest-root coefficients {";
      for (long long c : top_coeffs) os << c << " ";
      os << "}";
      cex = os.str();
    }
    std::ostringstream det;
    det << "all 240 roots decompose integrally with uniform sign; highest "
           "root height 29, coefficients {";
    for (long long c : top_coeffs) det << c << " ";
    det << "}";
    rep.add({"e8.decomposition", ok, 0.0, det.str(), cex});
  }

  // The cyclic symmetry of order 30.
  {
    bool ok = sw.labels_ok;
    std::string cex;
    CoxeterRotation rot(System::e8);
    std::vector<int> perm(n, -1);
    for (int i = 0; i < n && ok; ++i) {
      RootVector image = rot.apply(sw.roots[i]);
      auto it = sw.index.find(canonical_key(image.exact));
      if (it == sw.index.end()) {
        ok = false;
        cex = "rotation image of " + root_name(sw.roots[i]) +
              " is not in the set";
        break;
      }
      perm[i] = it->second;
      const RootVector& target = sw.roots[it->second];
      if (target.family != sw.roots[i].family ||
          target.n != (sw.roots[i].n + 1) % 30) {
        ok = false;
        cex = "rotation sends " + root_name(sw.roots[i]) + " to " +
              root_name(target);
        break;
      }
    }
    int orbits = 0;
    bool all_30 = true;
    if (ok) {
      std::vector<bool> seen(n, false);
      for (int i = 0; i < n; ++i) {
        if (seen[i]) continue;
        int len = 0;
        for (int j = i; !seen[j]; j = perm[j]) {
          seen[j] = true;
          ++len;
        }
        ++orbits;
        all_30 = all_30 && len == 30;
      }
    }
    rep.add({"e8.c30-orbits", ok && orbits == 8 && all_30, 0.0,
             "diagonal map permutes the set with " + std::to_string(orbits) +
                 " orbits, all of length 30 (order 30, (F,n) -> (F,n+1))",
             cex});

    bool half_ok = ok;
    std::string half_cex;
    if (ok) {
      for (int i = 0; i < n && half_ok; ++i) {
        int j = i;
        for (int step = 0; step < 15; ++step) j = perm[j];
        std::vector<CycNum> neg;
        for (const auto& c : sw.roots[i].exact) neg.push_back(-c);
        if (sw.keys[j] != canonical_key(neg)) {
          half_ok = false;
          half_cex = "15-fold rotation of " + root_name(sw.roots[i]) +
                     " is not its negative";
        }
      }
    }
    rep.add({"e8.c30-half-turn", half_ok, 0.0,
             "the 15th power of the rotation is v -> -v", half_cex});
  }
}

}  // namespace

VerificationReport run_claim_suite(System system, const Tolerances& tol) {
  VerificationReport rep;
  amplitude_rows(rep, tol);

  const SurdAmplitudes surd = amplitudes_primary(tol);

  if (system == System::e8) {
    const CycAmplitudes cyc = amplitudes_cyclotomic();
    auto exact = e8_roots(cyc);
    auto numeric = e8_roots(surd);

    ExactSweep sw = build_exact_sweep(exact);
    exact_axiom_rows(sw, rep);
    numeric_axiom_rows(numeric, tol, rep);
    e8_structure_rows(sw, rep);

    {
      // The generic single-pair path must agree with the table sweep.
      std::vector<RootVector> simple;
      for (int f = 0; f < 8; ++f) simple.push_back(exact[f * 30]);
      CartanMatrix generic = cartan_integers(simple);
      bool ok = true;
      std::string cex;
      for (int i = 0; i < 8 && ok; ++i)
        for (int j = 0; j < 8; ++j) {
          int table = sw.q(sw.idx_of(static_cast<char>('A' + i), 0),
                           sw.idx_of(static_cast<char>('A' + j), 0));
          if (generic.entries[i][j] != table) {
            ok = false;
            cex = "generic and table Cartan entries differ at (" +
                  std::string(1, static_cast<char>('A' + i)) + "," +
                  std::string(1, static_cast<char>('A' + j)) + ")";
            break;
          }
        }
      rep.add({"e8.cartan-cross-check", ok, 0.0,
               "table sweep agrees with the direct inner-product path", cex});
    }

    {
      // Exact and numeric coordinates differ by the common factor lambda.
      double lambda = surd.c9 / surd.a;
      double worst = 0;
      for (int i = 0; i < 240; ++i) {
        for (int j = 0; j < 4; ++j) {
          auto z = exact[i].exact[j].to_complex();
          worst = std::max(worst,
                           std::abs(z / lambda - numeric[i].numeric[j]));
        }
      }
      rep.add({"e8.mode-consistency", worst <= tol.identity, tol.identity,
               "max |embed(exact)/lambda - numeric| = " + fmt(worst), ""});
    }

    {
      std::vector<std::array<double, 8>> ours, ours_simple;
      for (const auto& r : numeric) {
        auto v = to_real_coords(r);
        std::array<double, 8> a{};
        std::copy(v.begin(), v.end(), a.begin());
        ours.push_back(a);
        if (r.n == 0) ours_simple.push_back(a);
      }
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
      IsometryResult iso = isometry_from_simple_match(
          ours_simple, std_simple, ours, std_roots, tol);
      rep.add({"e8.isometry-standard", iso.ok, tol.membership, iso.detail,
               iso.ok ? "" : iso.detail});

      std::vector<std::vector<double>> ours_v, std_v;
      for (const auto& a : ours) ours_v.emplace_back(a.begin(), a.end());
      for (const auto& a : std_roots) std_v.emplace_back(a.begin(), a.end());
      auto c1 = cosine_census(ours_v, tol.residual);
      auto c2 = cosine_census(std_v, tol.residual);
      bool census_ok =
          c1 && c2 && censuses_match(*c1, *c2, tol.residual);
      rep.add({"e8.census-vs-standard", census_ok, tol.residual,
               "cosine censuses of the generated and classical systems agree",
               census_ok ? "" : "census mismatch"});
    }

    projection_rows(rep, "e8.", numeric,
                    [&] {
                      std::vector<double> v(surd.r.begin(), surd.r.end());
                      std::sort(v.rbegin(), v.rend());
                      return v;
                    }(),
                    {0.8058, 0.6555, 0.5421, 0.4980, 0.4051, 0.3351, 0.2725,
                     0.1684},
                    "ADEH", tol);

    {
      auto h4 = h4_roots(surd);
      auto e8_points = project_first_coordinate(numeric, tol.membership);
      auto h4_points = project_first_coordinate(h4, tol.membership);
      ScalingCheck sc = h4_e8_scaling_check(e8_points, h4_points, tol);
      double tau_dev = std::abs(sc.ratio - surd.tau);
      rep.add({"e8.golden-ratio-scaling",
               sc.pass && tau_dev <= tol.identity, tol.membership,
               "E8 projection = (1/c9)*H4 + (1/c3)*H4, " +
                   std::to_string(sc.matched) +
                   " points matched; scale ratio " + fmt(sc.ratio) +
                   " = tau to " + fmt(tau_dev),
               sc.pass ? "" : sc.detail});
    }
  } else {
    auto h4 = h4_roots(surd);
    numeric_axiom_rows(h4, tol, rep);

    {
      std::vector<std::vector<double>> ours_v, std_v;
      for (const auto& r : h4) ours_v.push_back(to_real_coords(r));
      for (const auto& a : standard_h4())
        std_v.emplace_back(a.begin(), a.end());
      auto c1 = cosine_census(ours_v, tol.residual);
      auto c2 = cosine_census(std_v, tol.residual);
      bool ok = c1 && c2 && censuses_match(*c1, *c2, tol.residual);
      rep.add({"h4.census-vs-600cell", ok, tol.residual,
               "cosine census agrees with the unit 600-cell vertex set",
               ok ? "" : "census mismatch"});
    }

    {
      CoxeterRotation rot(System::h4);
      double worst = 0;
      bool ok = true;
      std::string cex;
      for (const auto& r : h4) {
        RootVector image = rot.apply(r);
        // family-major generation: (family row)*30 + n
        int row = r.family - 'A';
        const RootVector& target = h4[row * 30 + image.n];
        for (int j = 0; j < 2; ++j)
          worst = std::max(worst,
                           std::abs(image.numeric[j] - target.numeric[j]));
      }
      if (worst > tol.identity) {
        ok = false;
        cex = "rotation does not step the cycle index";
      }
      rep.add({"h4.c30-family-step", ok, tol.identity,
               "diagonal map sends (F,n) to (F,n+1); max deviation " +
                   fmt(worst),
               cex});
    }

    projection_rows(rep, "h4.", h4, {surd.a, surd.b, surd.c, surd.d},
                    {0.9473, 0.7706, 0.6373, 0.3204}, "AD", tol);
  }
  return rep;
}

}  // namespace triac
