#include "stripcover/svg_render.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "stripcover/errors.hpp"
#include "stripcover/geometry.hpp"

namespace stripcover {

namespace {

constexpr double kPadPx = 20.0;

struct Mapper {
  double min_x, max_y, ppu;
  double x(double wx) const { return kPadPx + (wx - min_x) * ppu; }
  // World y grows upward, SVG y grows downward.
  double y(double wy) const { return kPadPx + (max_y - wy) * ppu; }
};

void check_render_inputs(const Cover& cover, const RenderSpec& spec) {
  if (spec.pixels_per_unit < 10) {
    throw InvalidParametersError("pixels_per_unit must be at least 10");
  }
  if (!(spec.sector_fill_opacity > 0.0 && spec.sector_fill_opacity <= 1.0)) {
    throw InvalidParametersError("sector_fill_opacity must lie in (0, 1]");
  }
  if (!(cover.period > 0.0) || !std::isfinite(cover.period)) {
    throw InvalidParametersError("cover period must be positive and finite");
  }
  if (!(cover.window.x_max > cover.window.x_min)) {
    throw InvalidParametersError("cover window must have x_max > x_min");
  }
  if (cover.placements.empty()) {
    throw InvalidParametersError("cover has no placements");
  }
}

}  // namespace

std::string render_svg(const Cover& cover, const RenderSpec& spec) {
  check_render_inputs(cover, spec);

  double min_x = cover.window.x_min;
  double max_x = cover.window.x_max;
  double min_y = 0.0;
  double max_y = 1.0;
  for (const SectorPlacement& p : cover.placements) {
    const double r = p.shape.radius;
    min_x = std::min(min_x, p.vertex.x - r);
    max_x = std::max(max_x, p.vertex.x + r);
    min_y = std::min(min_y, p.vertex.y - r);
    max_y = std::max(max_y, p.vertex.y + r);
  }

  const double ppu = static_cast<double>(spec.pixels_per_unit);
  const Mapper m{min_x, max_y, ppu};
  const double width = 2.0 * kPadPx + (max_x - min_x) * ppu;
  const double height = 2.0 * kPadPx + (max_y - min_y) * ppu;

  std::ostringstream svg;
  svg << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << width
      << "\" height=\"" << height << "\" viewBox=\"0 0 " << width << ' ' << height
      << "\">\n";
  svg << "  <rect x=\"0\" y=\"0\" width=\"" << width << "\" height=\"" << height
      << "\" fill=\"white\"/>\n";

  if (spec.show_tiles) {
    const long k_lo = static_cast<long>(std::ceil(min_x / cover.period));
    const long k_hi = static_cast<long>(std::floor(max_x / cover.period));
    for (long k = k_lo; k <= k_hi; ++k) {
      const double gx = m.x(static_cast<double>(k) * cover.period);
      svg << "  <line x1=\"" << gx << "\" y1=\"" << m.y(0.0) << "\" x2=\"" << gx
          << "\" y2=\"" << m.y(1.0)
          << "\" stroke=\"#bbbbbb\" stroke-width=\"1\" stroke-dasharray=\"4 4\"/>\n";
    }
  }

  for (const double strip_y : {0.0, 1.0}) {
    svg << "  <line x1=\"" << m.x(cover.window.x_min) << "\" y1=\"" << m.y(strip_y)
        << "\" x2=\"" << m.x(cover.window.x_max) << "\" y2=\"" << m.y(strip_y)
        << "\" stroke=\"#333333\" stroke-width=\"2\"/>\n";
  }

  for (const SectorPlacement& p : cover.placements) {
    const double r = p.shape.radius;
    const double s = p.start_direction;
    const double e = s + p.shape.angle;
    const double ax = p.vertex.x + r * std::cos(s);
    const double ay = p.vertex.y + r * std::sin(s);
    const double bx = p.vertex.x + r * std::cos(e);
    const double by = p.vertex.y + r * std::sin(e);
    // Counterclockwise in world coordinates flips to sweep-flag 0 on screen;
    // the angle never exceeds pi, so the small arc (large-arc 0) is correct.
    const bool top = p.vertex.y > 0.5;
    const char* fill = top ? "#cc6677" : "#4477aa";
    const char* stroke = top ? "#882233" : "#223355";
    svg << "  <path d=\"M " << m.x(p.vertex.x) << ' ' << m.y(p.vertex.y) << " L "
        << m.x(ax) << ' ' << m.y(ay) << " A " << r * ppu << ' ' << r * ppu
        << " 0 0 0 " << m.x(bx) << ' ' << m.y(by) << " Z\" fill=\"" << fill
        << "\" fill-opacity=\"" << spec.sector_fill_opacity << "\" stroke=\""
        << stroke << "\" stroke-width=\"1\"/>\n";
  }

  for (const SectorPlacement& p : cover.placements) {
    svg << "  <circle cx=\"" << m.x(p.vertex.x) << "\" cy=\"" << m.y(p.vertex.y)
        << "\" r=\"3\" fill=\"#202020\"/>\n";
  }

  svg << "</svg>\n";
  return svg.str();
}

}  // namespace stripcover
