#include "triac/render.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <stdexcept>
#include <vector>

namespace triac {

namespace {

// One distinguishable color per family A..H on a white background.
constexpr const char* kPalette[8] = {
    "#b2182b",  // A dark red
    "#2166ac",  // B blue
    "#1b7837",  // C green
    "#762a83",  // D purple
    "#e08214",  // E orange
    "#35978f",  // F teal
    "#c51b7d",  // G magenta
    "#4d4d4d",  // H gray
};

std::string fixed6(double v) {
  char buf[40];
  auto res =
      std::to_chars(buf, buf + sizeof buf, v, std::chars_format::fixed, 6);
  return std::string(buf, res.ptr);
}

}  // namespace

ColorScheme color_scheme_from_string(std::string_view text) {
  if (text == "by-family") return ColorScheme::by_family;
  if (text == "by-radius") return ColorScheme::by_radius;
  if (text == "monochrome") return ColorScheme::monochrome;
  throw std::invalid_argument("unknown color scheme '" + std::string(text) +
                              "'");
}

std::string render_svg(std::span<const ProjectionPoint> points,
                       const RenderStyle& style) {
  if (points.empty())
    throw std::invalid_argument("render_svg: empty point list");
  if (style.canvas_size <= 0)
    throw std::invalid_argument("render_svg: canvas_size must be positive");
  if (!(style.margin >= 0.0 && style.margin < 0.5))
    throw std::invalid_argument("render_svg: margin must lie in [0, 0.5)");
  if (!(style.point_radius > 0))
    throw std::invalid_argument("render_svg: point_radius must be positive");

  double max_radius = 0;
  for (const auto& p : points) max_radius = std::max(max_radius, p.radius);
  if (max_radius <= 0)
    throw std::invalid_argument("render_svg: all points at the origin");

  const double center = style.canvas_size / 2.0;
  const double scale =
      (1.0 - 2.0 * style.margin) * style.canvas_size / 2.0 / max_radius;

  // Ranks of the distinct radii, descending, for by-radius coloring and the
  // guide circles.
  std::vector<double> radii;
  for (const auto& p : points) {
    bool known = false;
    for (double r : radii) known = known || std::abs(r - p.radius) <= 1e-6;
    if (!known) radii.push_back(p.radius);
  }
  std::sort(radii.rbegin(), radii.rend());
  auto radius_rank = [&](double r) {
    for (std::size_t i = 0; i < radii.size(); ++i)
      if (std::abs(radii[i] - r) <= 1e-6) return i;
    return radii.size() - 1;
  };

  std::string svg;
  const std::string size = std::to_string(style.canvas_size);
  svg += "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
  svg += "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"" +
         size + "\" height=\"" + size + "\" viewBox=\"0 0 " + size + " " +
         size + "\">\n";
  svg += "<rect x=\"0\" y=\"0\" width=\"" + size + "\" height=\"" + size +
         "\" fill=\"" + style.background + "\"/>\n";

  if (style.guide_circles) {
    svg += "<g fill=\"none\" stroke=\"#d8d8d8\" stroke-width=\"1\">\n";
    for (double r : radii) {
      svg += "<circle class=\"guide\" cx=\"" + fixed6(center) + "\" cy=\"" +
             fixed6(center) + "\" r=\"" + fixed6(r * scale) + "\"/>\n";
    }
    svg += "</g>\n";
  }

  svg += "<g stroke=\"none\">\n";
  for (const auto& p : points) {
    double cx = center + scale * p.position.real();
    double cy = center - scale * p.position.imag();  // SVG y axis points down
    const char* color = "#303030";
    if (style.scheme == ColorScheme::by_family) {
      int idx = p.family - 'A';
      color = kPalette[idx >= 0 && idx < 8 ? idx : 7];
    } else if (style.scheme == ColorScheme::by_radius) {
      color = kPalette[radius_rank(p.radius) % 8];
    }
    svg += "<circle class=\"pt\" cx=\"" + fixed6(cx) + "\" cy=\"" +
           fixed6(cy) + "\" r=\"" + fixed6(style.point_radius) +
           "\" fill=\"" + std::string(color) + "\"/>\n";
  }
  svg += "</g>\n</svg>\n";
  return svg;
}

}  // namespace triac
