#pragma once

#include <string>

#include "stripcover/placement.hpp"

namespace stripcover {

struct RenderSpec {
  std::string output_path;      // advisory; render_svg itself writes nothing
  int pixels_per_unit = 200;    // must be >= 10
  bool show_tiles = true;       // vertical gridlines at multiples of the period
  double sector_fill_opacity = 0.25;  // in (0, 1]
};

// Draws the cover as a standalone SVG document: strip boundaries, optional
// tile gridlines, each sector as a filled wedge (two straight sides plus a
// counterclockwise arc), and a dot at each vertex. The viewport covers the
// cover window plus everything any sector's disk can reach.
std::string render_svg(const Cover& cover, const RenderSpec& spec);

}  // namespace stripcover
