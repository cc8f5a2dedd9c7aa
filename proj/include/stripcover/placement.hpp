#pragma once

#include <vector>

#include "stripcover/models.hpp"

namespace stripcover {

// An explicit periodic cover over a finite window. `placements` is sorted by
// (vertex.x, vertex.y); consecutive pairs repeat with x-period `period`, two
// placements per period, and the pattern extends one period plus R beyond both
// window edges so points at the right edge still have vertices to their right.
struct Cover {
  CoverageModel model;
  SectorShape shape;
  std::vector<SectorPlacement> placements;
  double period = 0.0;
  StripWindow window;
};

// Build the model's pair layout at (R, alpha) over the window. All spans stay
// inside [pi/2, 3*pi/2] (sectors open leftward, so the directional predicate is
// satisfiable by construction):
//   S1, S2: a bottom sector at (k*period, 0) spanning [pi - alpha, pi] and a
//           top sector at (k*period + d, 1) spanning [pi, pi + alpha];
//           d = R - cot(alpha) for S1, d = sqrt(R^2 - 1) for S2.
//   S3:     top sectors at (k*period, 1) and (k*period + period/2, 1), both
//           spanning [pi, pi + alpha].
// The intra-pair offset is derived analytically and checked against an exact
// interval-sweep coverage gate at the tile-width period; if the gate fails, a
// 1-D offset search tries to recover before giving up. Throws
// InvalidParametersError on infeasible (R, alpha) or a bad window, and
// ConstructionError when no offset completes the cover at this period (for S2
// that happens whenever R*sin(2*alpha) > 1, where a pair's own boundary gap is
// wider than what the neighboring pairs can hand over).
Cover generate_cover(CoverageModel model, double R, double alpha, const StripWindow& window);

}  // namespace stripcover
