#pragma once

#include <span>
#include <string>

#include "triac/project.hpp"

namespace triac {

enum class ColorScheme { by_family, by_radius, monochrome };

ColorScheme color_scheme_from_string(std::string_view text);

struct RenderStyle {
  int canvas_size = 800;        // square canvas, pixels
  double point_radius = 3.0;
  double margin = 0.06;         // fraction of the canvas on each side
  ColorScheme scheme = ColorScheme::by_family;
  std::string background = "#ffffff";
  bool guide_circles = false;
};

// Renders projection points as an SVG 1.1 document. The largest radius maps
// to (1 - 2*margin) * canvas_size / 2; coordinates are written with fixed
// 6-decimal formatting and elements in input order, so equal inputs yield
// byte-identical output. Throws std::invalid_argument on an empty point
// list or an invalid style.
std::string render_svg(std::span<const ProjectionPoint> points,
                       const RenderStyle& style);

}  // namespace triac
