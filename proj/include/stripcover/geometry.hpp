#pragma once

namespace stripcover {

// Strip coordinates: x runs along the strip, y across it.
// The strip itself is the band 0 <= y <= 1.
struct Point {
  double x = 0.0;
  double y = 0.0;
};

// The identical device footprint: a circular sector with apex radius `radius`
// and apex angle `angle` in radians, 0 < angle <= pi.
struct SectorShape {
  double radius = 1.0;
  double angle = 1.0;
};

// A positioned, oriented sector. The first straight side points in direction
// `start_direction` (counterclockwise from +x) and the sector spans
// [start_direction, start_direction + angle] counterclockwise:
//   { vertex + r*(cos t, sin t) : 0 <= r <= radius, start <= t <= start + angle }.
struct SectorPlacement {
  SectorShape shape;
  Point vertex;
  double start_direction = 0.0;
};

// Finite x-window of the (conceptually infinite) strip; plumbing for
// construction and verification. Width is fixed: y from 0 to 1.
struct StripWindow {
  double x_min = 0.0;
  double x_max = 1.0;
};

// Closed-sector membership. Boundary points count as inside; the angular test
// normalizes the relative angle into [0, 2*pi) and allows 1e-12 at either side
// so arithmetic noise never flips a boundary verdict. The vertex is inside.
bool sector_contains(const SectorPlacement& s, const Point& p);

// The coverage predicate: the point is inside the sector AND the vertex is not
// to the left of the point (vertex.x >= p.x, exact comparison).
bool directionally_covers(const SectorPlacement& s, const Point& p);

// R^2 * angle / 2.
double sector_area(const SectorShape& shape);

}  // namespace stripcover
