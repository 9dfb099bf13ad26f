#pragma once

#include "gaugekit/bodies.hpp"

#include <iosfwd>
#include <string>
#include <vector>

namespace gaugekit {

struct SvgBody {
  ConvexBody body;
  std::string label;
  std::string color = "black";
};

struct SvgCurve {
  std::vector<Eigen::Vector2d> points;
  std::string label;
  std::string color = "blue";
};

struct SvgOptions {
  int size_px = 600;
  std::string title;
  std::string orientation_note;  // printed under the legend when non-empty
};

// Planar bodies and curves with axes, a unit-length marker and a legend.
// Geometry is written in model coordinates (6 decimals) under a y-flip
// transform, so polygon vertices appear verbatim in the file.
void render_svg(std::ostream& out, const std::vector<SvgBody>& bodies, const std::vector<SvgCurve>& curves,
                const SvgOptions& options = {});
void render_svg_file(const std::string& path, const std::vector<SvgBody>& bodies, const std::vector<SvgCurve>& curves,
                     const SvgOptions& options = {});

// Boundary of a planar body as a closed polygon: exact vertices for
// polytopes, 256 ray samples for smooth bodies.
std::vector<Eigen::Vector2d> boundary_outline(const ConvexBody& body);

}  // namespace gaugekit
