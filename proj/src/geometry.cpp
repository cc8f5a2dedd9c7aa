#include "stripcover/geometry.hpp"

#include <cmath>
#include <numbers>

namespace stripcover {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;
constexpr double kAngleTol = 1e-12;

double normalize_angle(double t) {
  double r = std::fmod(t, kTwoPi);
  if (r < 0.0) r += kTwoPi;
  return r;
}

}  // namespace

bool sector_contains(const SectorPlacement& s, const Point& p) {
  const double dx = p.x - s.vertex.x;
  const double dy = p.y - s.vertex.y;
  const double r2 = dx * dx + dy * dy;
  const double R = s.shape.radius;
  if (r2 > R * R) return false;
  if (r2 == 0.0) return true;
  const double rel = normalize_angle(std::atan2(dy, dx) - s.start_direction);
  // rel may also land just below 2*pi when the point sits on the first side.
  return rel <= s.shape.angle + kAngleTol || rel >= kTwoPi - kAngleTol;
}

bool directionally_covers(const SectorPlacement& s, const Point& p) {
  return s.vertex.x >= p.x && sector_contains(s, p);
}

double sector_area(const SectorShape& shape) {
  return shape.radius * shape.radius * shape.angle / 2.0;
}

}  // namespace stripcover
