#include "triac/project.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <map>
#include <numbers>
#include <ostream>
#include <set>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

namespace triac {

namespace {

std::string shortest(double v) {
  char buf[32];
  auto res = std::to_chars(buf, buf + sizeof buf, v);
  return std::string(buf, res.ptr);
}

}  // namespace

std::vector<ProjectionPoint> project_first_coordinate(
    std::span<const RootVector> roots, double snap_tol) {
  std::vector<ProjectionPoint> points;
  points.reserve(roots.size());
  for (const auto& root : roots) {
    ProjectionPoint pt;
    pt.position = root.mode == CoordMode::exact ? root.exact[0].to_complex()
                                                : root.numeric[0];
    pt.radius = std::abs(pt.position);
    pt.family = root.family;
    pt.n = root.n;
    if (pt.radius <= 0)
      throw std::runtime_error("projected point at the origin for root (" +
                               std::string(1, root.family) + "," +
                               std::to_string(root.n) + ")");
    double arg = std::arg(pt.position);  // (-pi, pi]
    double steps = arg * 30.0 / std::numbers::pi;
    long k = std::lround(steps);
    double residual = std::abs(steps - static_cast<double>(k)) *
                      std::numbers::pi / 30.0;
    if (residual > snap_tol) {
      std::ostringstream os;
      os << "projection phase " << arg << " of root ("
         << std::string(1, root.family) << "," << root.n
         << ") is off the pi/30 grid by " << residual;
      throw std::runtime_error(os.str());
    }
    pt.phase_index = static_cast<int>(((k % 60) + 60) % 60);
    points.push_back(pt);
  }

  // Radius-major descending, then phase ascending. Group radii before
  // sorting so float jitter within one cycle cannot interleave classes.
  std::vector<ProjectionPoint> sorted = points;
  std::sort(sorted.begin(), sorted.end(),
            [](const ProjectionPoint& a, const ProjectionPoint& b) {
              return a.radius > b.radius;
            });
  double current = -1;
  int rank = -1;
  std::map<int, double> reps;
  for (const auto& pt : sorted) {
    if (rank < 0 || current - pt.radius > 1e-6) {
      ++rank;
      current = pt.radius;
      reps[rank] = pt.radius;
    }
  }
  auto rank_of = [&](double radius) {
    for (const auto& [r, rep] : reps) {
      if (std::abs(radius - rep) <= 1e-6) return r;
    }
    return -1;
  };
  std::sort(points.begin(), points.end(),
            [&](const ProjectionPoint& a, const ProjectionPoint& b) {
              int ra = rank_of(a.radius), rb = rank_of(b.radius);
              if (ra != rb) return ra < rb;
              return a.phase_index < b.phase_index;
            });
  return points;
}

std::vector<RadiusClassSummary> radius_classes(
    std::span<const ProjectionPoint> points, double group_tol) {
  std::vector<const ProjectionPoint*> sorted;
  sorted.reserve(points.size());
  for (const auto& p : points) sorted.push_back(&p);
  std::sort(sorted.begin(), sorted.end(),
            [](const ProjectionPoint* a, const ProjectionPoint* b) {
              return a->radius > b->radius;
            });
  std::vector<RadiusClassSummary> classes;
  for (const ProjectionPoint* p : sorted) {
    if (classes.empty() || classes.back().radius - p->radius > group_tol) {
      RadiusClassSummary cls;
      cls.radius = p->radius;
      cls.family = p->family;
      classes.push_back(cls);
    }
    RadiusClassSummary& cls = classes.back();
    ++cls.count;
    if (p->family != cls.family) cls.family = '?';
    double theta = std::numbers::pi * p->phase_index / 30.0;
    std::complex<double> snapped =
        cls.radius * std::complex<double>(std::cos(theta), std::sin(theta));
    cls.max_phase_residual =
        std::max(cls.max_phase_residual, std::abs(snapped - p->position));
  }
  return classes;
}

std::vector<PhaseParity> phase_census(
    std::span<const ProjectionPoint> points) {
  struct Bucket {
    char family = '?';
    std::set<int> phases;
    bool mixed_family = false;
  };
  std::map<double, Bucket, std::greater<>> buckets;
  for (const auto& p : points) {
    // find an existing radius bucket within 1e-6
    auto it = buckets.lower_bound(p.radius + 1e-6);
    if (it == buckets.end() || std::abs(it->first - p.radius) > 1e-6) {
      it = buckets.emplace(p.radius, Bucket{}).first;
      it->second.family = p.family;
    }
    if (it->second.family != p.family) it->second.mixed_family = true;
    it->second.phases.insert(p.phase_index);
  }
  std::vector<PhaseParity> out;
  for (const auto& [radius, bucket] : buckets) {
    PhaseParity pp;
    pp.radius = radius;
    pp.family = bucket.mixed_family ? '?' : bucket.family;
    bool all_even = true, all_odd = true;
    for (int k : bucket.phases) {
      if (k % 2 == 0) {
        all_odd = false;
      } else {
        all_even = false;
      }
    }
    pp.parity = all_even ? "even" : all_odd ? "odd" : "mixed";
    out.push_back(std::move(pp));
  }
  return out;
}

ScalingCheck h4_e8_scaling_check(std::span<const ProjectionPoint> e8_points,
                                 std::span<const ProjectionPoint> h4_points,
                                 const Tolerances& tol) {
  ScalingCheck out;
  out.factor_large = 1.0 / (2.0 * std::cos(std::numbers::pi * 9 / 30.0));
  out.factor_small = 1.0 / (2.0 * std::cos(std::numbers::pi * 3 / 30.0));
  out.ratio = out.factor_large / out.factor_small;
  if (e8_points.empty() || h4_points.empty()) {
    out.detail = "empty projection input";
    return out;
  }
  if (e8_points.size() != 2 * h4_points.size()) {
    out.detail = "expected twice as many E8 points as H4 points, got " +
                 std::to_string(e8_points.size()) + " vs " +
                 std::to_string(h4_points.size());
    return out;
  }

  // Bucket by exact phase index, then match radii within tolerance.
  std::array<std::vector<double>, 60> e8_radii, expected;
  for (const auto& p : e8_points) e8_radii[p.phase_index].push_back(p.radius);
  for (const auto& p : h4_points) {
    expected[p.phase_index].push_back(p.radius * out.factor_large);
    expected[p.phase_index].push_back(p.radius * out.factor_small);
  }
  for (int k = 0; k < 60; ++k) {
    if (e8_radii[k].size() != expected[k].size()) {
      out.detail = "phase " + std::to_string(k) + " has " +
                   std::to_string(e8_radii[k].size()) + " E8 points but " +
                   std::to_string(expected[k].size()) + " scaled H4 points";
      return out;
    }
    std::sort(e8_radii[k].begin(), e8_radii[k].end());
    std::sort(expected[k].begin(), expected[k].end());
    for (std::size_t i = 0; i < e8_radii[k].size(); ++i) {
      if (std::abs(e8_radii[k][i] - expected[k][i]) > tol.membership) {
        std::ostringstream os;
        os << "phase " << k << ": radius " << e8_radii[k][i]
           << " differs from scaled H4 radius " << expected[k][i];
        out.detail = os.str();
        return out;
      }
      ++out.matched;
    }
  }
  out.pass = true;
  out.detail = "matched " + std::to_string(out.matched) + " points";
  return out;
}

void write_projection_csv(std::ostream& os,
                          std::span<const ProjectionPoint> points) {
  os << "family,n,radius,phase_index,re,im\n";
  for (const auto& p : points) {
    os << p.family << ',' << p.n << ',' << shortest(p.radius) << ','
       << p.phase_index << ',' << shortest(p.position.real()) << ','
       << shortest(p.position.imag()) << '\n';
  }
}

void write_projection_json(std::ostream& os,
                           std::span<const ProjectionPoint> points) {
  nlohmann::json arr = nlohmann::json::array();
  for (const auto& p : points) {
    nlohmann::json row;
    row["family"] = std::string(1, p.family);
    row["n"] = p.n;
    row["radius"] = p.radius;
    row["phase_index"] = p.phase_index;
    row["re"] = p.position.real();
    row["im"] = p.position.imag();
    arr.push_back(std::move(row));
  }
  os << arr.dump(2) << '\n';
}

}  // namespace triac
