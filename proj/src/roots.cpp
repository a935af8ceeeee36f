#include "triac/roots.hpp"

#include <cmath>
#include <limits>
#include <numbers>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <unordered_set>

#include <json.hpp>

namespace triac {

namespace {

std::complex<double> unit_phase(int exponent) {
  double theta = std::numbers::pi * exponent / 30.0;
  return {std::cos(theta), std::sin(theta)};
}

int mod60(int k) {
  int m = k % 60;
  return m < 0 ? m + 60 : m;
}

void check_distinct(const std::vector<RootVector>& roots) {
  if (roots.empty()) return;
  if (roots.front().mode == CoordMode::exact) {
    std::unordered_set<std::string> seen;
    for (const auto& r : roots) {
      if (!seen.insert(root_key(r)).second) {
        throw std::runtime_error("duplicate root generated at family " +
                                 std::string(1, r.family) + ", n=" +
                                 std::to_string(r.n));
      }
    }
  } else {
    double dmin = min_pairwise_distance(roots);
    if (dmin <= 1e-9) {
      std::ostringstream os;
      os << "generated roots are not distinct at the 1e-9 threshold "
         << "(min pairwise distance " << dmin << ")";
      throw std::runtime_error(os.str());
    }
  }
}

template <typename MakeCoord>
std::vector<RootVector> generate(System system, CoordMode mode,
                                 const Generator& gen, MakeCoord make_coord) {
  std::vector<RootVector> roots;
  roots.reserve(gen.rows.size() * 30);
  for (const auto& row : gen.rows) {
    for (int n = 0; n < 30; ++n) {
      RootVector root;
      root.system = system;
      root.mode = mode;
      root.family = row.family;
      root.n = n;
      for (std::size_t j = 0; j < row.entries.size(); ++j) {
        const auto& e = row.entries[j];
        int phase = mod60(e.phase + gen.diag[j] * n);
        make_coord(root, e.amp - 1, e.sign, phase);
      }
      roots.push_back(std::move(root));
    }
  }
  check_distinct(roots);
  return roots;
}

}  // namespace

std::string_view to_string(System system) {
  return system == System::e8 ? "e8" : "h4";
}

std::string_view to_string(CoordMode mode) {
  return mode == CoordMode::exact ? "exact" : "numeric";
}

System system_from_string(std::string_view text) {
  if (text == "e8") return System::e8;
  if (text == "h4") return System::h4;
  throw std::invalid_argument("unknown system '" + std::string(text) + "'");
}

const Generator& e8_generator() {
  static const Generator gen = {
      {
          {'A', {{1, +1, 0}, {4, +1, 0}, {6, +1, 1}, {7, +1, 1}}},
          {'B', {{2, +1, 29}, {3, +1, 19}, {8, -1, 24}, {5, -1, 18}}},
          {'C', {{3, +1, 29}, {2, -1, 19}, {5, +1, 24}, {8, -1, 18}}},
          {'D', {{4, +1, 0}, {1, -1, 0}, {7, +1, 1}, {6, -1, 1}}},
          {'E', {{5, +1, 0}, {8, +1, 0}, {2, -1, 1}, {3, -1, 1}}},
          {'F', {{6, +1, 29}, {7, +1, 19}, {4, +1, 24}, {1, +1, 18}}},
          {'G', {{7, +1, 29}, {6, -1, 19}, {1, -1, 24}, {4, +1, 18}}},
          {'H', {{8, +1, 0}, {5, -1, 0}, {3, -1, 1}, {2, +1, 1}}},
      },
      {2, 22, 14, 26},
  };
  return gen;
}

const Generator& h4_generator() {
  static const Generator gen = {
      {
          {'A', {{1, +1, 0}, {4, +1, 0}}},
          {'B', {{2, +1, 1}, {3, +1, 11}}},
          {'C', {{3, +1, 1}, {2, -1, 11}}},
          {'D', {{4, +1, 0}, {1, -1, 0}}},
      },
      {2, 22},
  };
  return gen;
}

std::vector<RootVector> e8_roots(const CycAmplitudes& amps) {
  return generate(System::e8, CoordMode::exact, e8_generator(),
                  [&](RootVector& root, int amp, int sign, int phase) {
                    CycNum coord = amps.r[amp].mul_power(phase);
                    if (sign < 0) coord = -coord;
                    root.exact.push_back(std::move(coord));
                  });
}

std::vector<RootVector> e8_roots(const SurdAmplitudes& amps) {
  return generate(System::e8, CoordMode::numeric, e8_generator(),
                  [&](RootVector& root, int amp, int sign, int phase) {
                    root.numeric.push_back(static_cast<double>(sign) *
                                           amps.r[amp] * unit_phase(phase));
                  });
}

std::vector<RootVector> h4_roots(const SurdAmplitudes& amps) {
  const std::array<double, 4> abcd = {amps.a, amps.b, amps.c, amps.d};
  return generate(System::h4, CoordMode::numeric, h4_generator(),
                  [&](RootVector& root, int amp, int sign, int phase) {
                    root.numeric.push_back(static_cast<double>(sign) *
                                           abcd[amp] * unit_phase(phase));
                  });
}

CoxeterRotation::CoxeterRotation(System system)
    : diag_(system == System::e8 ? e8_generator().diag : h4_generator().diag) {}

RootVector CoxeterRotation::apply(const RootVector& root) const {
  if (root.dim() != static_cast<int>(diag_.size()))
    throw std::invalid_argument("CoxeterRotation: dimension mismatch");
  RootVector out = root;
  out.n = (root.n + 1) % 30;
  if (root.mode == CoordMode::exact) {
    for (std::size_t j = 0; j < out.exact.size(); ++j)
      out.exact[j] = root.exact[j].mul_power(diag_[j]);
  } else {
    for (std::size_t j = 0; j < out.numeric.size(); ++j)
      out.numeric[j] = root.numeric[j] * unit_phase(diag_[j]);
  }
  return out;
}

std::vector<double> to_real_coords(const RootVector& root) {
  std::vector<double> out;
  out.reserve(2 * root.dim());
  if (root.mode == CoordMode::exact) {
    for (const auto& c : root.exact) {
      auto z = c.to_complex();
      out.push_back(z.real());
      out.push_back(z.imag());
    }
  } else {
    for (const auto& z : root.numeric) {
      out.push_back(z.real());
      out.push_back(z.imag());
    }
  }
  return out;
}

std::string root_key(const RootVector& root) {
  if (root.mode != CoordMode::exact)
    throw std::invalid_argument("root_key requires exact coordinates");
  return canonical_key(root.exact);
}

double min_pairwise_distance(std::span<const RootVector> roots) {
  double best = std::numeric_limits<double>::infinity();
  std::vector<std::vector<double>> reals;
  reals.reserve(roots.size());
  for (const auto& r : roots) reals.push_back(to_real_coords(r));
  for (std::size_t i = 0; i < reals.size(); ++i) {
    for (std::size_t j = i + 1; j < reals.size(); ++j) {
      double d2 = 0;
      for (std::size_t k = 0; k < reals[i].size(); ++k) {
        double t = reals[i][k] - reals[j][k];
        d2 += t * t;
      }
      best = std::min(best, std::sqrt(d2));
    }
  }
  return best;
}

void write_roots_jsonl(std::ostream& os, std::span<const RootVector> roots) {
  for (const auto& root : roots) {
    nlohmann::json line;
    line["system"] = to_string(root.system);
    line["family"] = std::string(1, root.family);
    line["n"] = root.n;
    line["mode"] = to_string(root.mode);
    auto coords = nlohmann::json::array();
    if (root.mode == CoordMode::exact) {
      for (const auto& c : root.exact) coords.push_back(c.to_strings());
    } else {
      for (const auto& z : root.numeric)
        coords.push_back({z.real(), z.imag()});
    }
    line["coords"] = std::move(coords);
    os << line.dump() << '\n';
  }
}

std::vector<RootVector> read_roots_jsonl(std::istream& is) {
  std::vector<RootVector> roots;
  std::string line;
  int lineno = 0;
  while (std::getline(is, line)) {
    ++lineno;
    if (line.empty()) continue;
    nlohmann::json j;
    try {
      j = nlohmann::json::parse(line);
    } catch (const nlohmann::json::parse_error& e) {
      throw std::invalid_argument("roots jsonl line " + std::to_string(lineno) +
                                  ": " + e.what());
    }
    RootVector root;
    root.system = system_from_string(j.at("system").get<std::string>());
    std::string family = j.at("family").get<std::string>();
    if (family.size() != 1)
      throw std::invalid_argument("roots jsonl line " + std::to_string(lineno) +
                                  ": bad family label");
    root.family = family[0];
    root.n = j.at("n").get<int>();
    std::string mode = j.at("mode").get<std::string>();
    if (mode == "exact") {
      root.mode = CoordMode::exact;
      for (const auto& coord : j.at("coords")) {
        auto parts = coord.get<std::vector<std::string>>();
        root.exact.push_back(CycNum::from_strings(parts));
      }
    } else if (mode == "numeric") {
      root.mode = CoordMode::numeric;
      for (const auto& coord : j.at("coords")) {
        if (coord.size() != 2)
          throw std::invalid_argument("roots jsonl line " +
                                      std::to_string(lineno) +
                                      ": numeric coord needs [re, im]");
        root.numeric.emplace_back(coord[0].get<double>(),
                                  coord[1].get<double>());
      }
    } else {
      throw std::invalid_argument("roots jsonl line " + std::to_string(lineno) +
                                  ": unknown mode '" + mode + "'");
    }
    roots.push_back(std::move(root));
  }
  return roots;
}

}  // namespace triac
