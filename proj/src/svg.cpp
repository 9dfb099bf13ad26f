#include "gaugekit/svg.hpp"

#include <cmath>
#include <fstream>
#include <iomanip>
#include <numbers>
#include <ostream>

namespace gaugekit {

std::vector<Eigen::Vector2d> boundary_outline(const ConvexBody& body) {
  require(body.dim() == 2, "render_svg: only planar bodies can be drawn; section 4-D bodies first");
  if (!body.is_smooth()) return polygon_vertices(body);
  std::vector<Eigen::Vector2d> pts;
  for (int k = 0; k < 256; ++k) {
    const double a = 2.0 * std::numbers::pi * k / 256.0;
    const Vector p = body.boundary_ray_intersection(Eigen::Vector2d(std::cos(a), std::sin(a)));
    pts.emplace_back(p(0), p(1));
  }
  return pts;
}

namespace {

std::string escape(const std::string& s) {
  std::string r;
  for (char c : s) {
    switch (c) {
      case '<': r += "&lt;"; break;
      case '>': r += "&gt;"; break;
      case '&': r += "&amp;"; break;
      case '"': r += "&quot;"; break;
      default: r += c;
    }
  }
  return r;
}

void write_points(std::ostream& out, const std::vector<Eigen::Vector2d>& pts) {
  for (std::size_t i = 0; i < pts.size(); ++i) out << (i ? " " : "") << pts[i].x() << ',' << pts[i].y();
}

}  // namespace

void render_svg(std::ostream& out, const std::vector<SvgBody>& bodies, const std::vector<SvgCurve>& curves,
                const SvgOptions& options) {
  std::vector<std::vector<Eigen::Vector2d>> outlines;
  double extent = 1.0;
  for (const auto& b : bodies) {
    outlines.push_back(boundary_outline(b.body));
    for (const auto& p : outlines.back()) extent = std::max(extent, p.cwiseAbs().maxCoeff());
  }
  for (const auto& c : curves)
    for (const auto& p : c.points) extent = std::max(extent, p.cwiseAbs().maxCoeff());
  extent *= 1.15;

  const int size = options.size_px;
  const int legend_h = 24 * static_cast<int>(bodies.size() + curves.size()) + 40;
  const double scale = size / (2.0 * extent);
  const double half = size / 2.0;

  out << std::fixed << std::setprecision(6);
  out << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
      << "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"" << size << "\" height=\""
      << size + legend_h << "\">\n";
  if (!options.title.empty()) out << "  <title>" << escape(options.title) << "</title>\n";
  out << "  <rect x=\"0\" y=\"0\" width=\"" << size << "\" height=\"" << size + legend_h << "\" fill=\"white\"/>\n";

  const double stroke = 1.5 / scale;
  out << "  <g transform=\"translate(" << half << ',' << half << ") scale(" << scale << ',' << -scale << ")\">\n";
  out << "    <g id=\"axes\" stroke=\"#999999\" stroke-width=\"" << stroke / 1.5 << "\">\n"
      << "      <line x1=\"" << -extent << "\" y1=\"0\" x2=\"" << extent << "\" y2=\"0\"/>\n"
      << "      <line x1=\"0\" y1=\"" << -extent << "\" x2=\"0\" y2=\"" << extent << "\"/>\n"
      << "    </g>\n";
  for (std::size_t i = 0; i < bodies.size(); ++i) {
    out << "    <polygon class=\"body\" data-label=\"" << escape(bodies[i].label) << "\" fill=\"none\" stroke=\""
        << escape(bodies[i].color) << "\" stroke-width=\"" << stroke << "\" points=\"";
    write_points(out, outlines[i]);
    out << "\"/>\n";
  }
  for (const auto& c : curves) {
    out << "    <polyline class=\"curve\" data-label=\"" << escape(c.label) << "\" fill=\"none\" stroke=\""
        << escape(c.color) << "\" stroke-width=\"" << stroke << "\" points=\"";
    write_points(out, c.points);
    out << "\"/>\n";
  }
  // Unit marker from (0,0) to (1,0), drawn just below the x axis.
  const double tick = 6.0 / scale;
  out << "    <g id=\"unit\" stroke=\"black\" stroke-width=\"" << stroke << "\">\n"
      << "      <line x1=\"0\" y1=\"" << -tick << "\" x2=\"1\" y2=\"" << -tick << "\"/>\n"
      << "      <line x1=\"1\" y1=\"" << -2 * tick << "\" x2=\"1\" y2=\"0\"/>\n"
      << "    </g>\n";
  out << "  </g>\n";
  out << "  <text x=\"" << half + scale * 0.5 << "\" y=\"" << half + 24 << "\" font-size=\"12\" "
      << "text-anchor=\"middle\">1</text>\n";

  out << "  <g id=\"legend\" font-size=\"13\" font-family=\"sans-serif\">\n";
  double y = size + 20.0;
  auto entry = [&](const std::string& label, const std::string& color) {
    out << "    <line x1=\"12\" y1=\"" << y - 4 << "\" x2=\"36\" y2=\"" << y - 4 << "\" stroke=\"" << escape(color)
        << "\" stroke-width=\"2\"/>\n"
        << "    <text x=\"44\" y=\"" << y << "\">" << escape(label) << "</text>\n";
    y += 24.0;
  };
  for (const auto& b : bodies) entry(b.label, b.color);
  for (const auto& c : curves) entry(c.label, c.color);
  if (!options.orientation_note.empty())
    out << "    <text x=\"12\" y=\"" << y << "\" font-style=\"italic\">" << escape(options.orientation_note)
        << "</text>\n";
  out << "  </g>\n</svg>\n";
}

void render_svg_file(const std::string& path, const std::vector<SvgBody>& bodies, const std::vector<SvgCurve>& curves,
                     const SvgOptions& options) {
  std::ofstream out(path);
  if (!out) throw InvalidInput("render_svg: cannot write " + path);
  render_svg(out, bodies, curves, options);
}

}  // namespace gaugekit
