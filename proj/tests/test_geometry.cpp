#include <doctest.h>

#include <cmath>
#include <numbers>

#include "stripcover/geometry.hpp"

using namespace stripcover;

namespace {
constexpr double kPi = std::numbers::pi;
}

TEST_CASE("sector_contains respects radius and angular span") {
  const SectorPlacement s{{2.0, kPi / 2.0}, {0.0, 0.0}, 0.0};  // spans [0, pi/2]
  CHECK(sector_contains(s, {1.0, 1.0}));
  CHECK_FALSE(sector_contains(s, {1.9, 1.9}));   // right direction, beyond the arc
  CHECK_FALSE(sector_contains(s, {-1.0, 0.5}));  // behind the first side
  CHECK_FALSE(sector_contains(s, {0.5, -0.5}));  // below the first side
  CHECK(sector_contains(s, {0.0, 0.0}));         // the vertex itself
  CHECK(sector_contains(s, {2.0, 0.0}));         // end of the first straight side
  CHECK(sector_contains(s, {0.0, 2.0}));         // end of the second straight side
  const double on_arc = 2.0 / std::sqrt(2.0);
  CHECK(sector_contains(s, {on_arc, on_arc}));   // on the arc, mid-span
}

TEST_CASE("sector_contains handles spans crossing the atan2 branch cut") {
  const SectorPlacement s{{1.0, kPi / 2.0}, {0.0, 0.0}, -kPi / 4.0};  // spans [-pi/4, pi/4]
  CHECK(sector_contains(s, {0.5, 0.0}));
  CHECK(sector_contains(s, {0.5, 0.4}));
  CHECK(sector_contains(s, {0.5, -0.4}));
  CHECK_FALSE(sector_contains(s, {0.0, 0.5}));
  CHECK_FALSE(sector_contains(s, {0.0, -0.5}));
  CHECK_FALSE(sector_contains(s, {-0.5, 0.0}));
}

TEST_CASE("directional coverage needs the vertex at or right of the point") {
  const SectorShape shape{1.0, kPi / 2.0};
  // Opens leftward: spans [3pi/4, 5pi/4].
  const SectorPlacement leftward{shape, {1.0, 0.5}, 3.0 * kPi / 4.0};
  CHECK(directionally_covers(leftward, {0.5, 0.5}));
  CHECK(directionally_covers(leftward, {1.0, 0.5}));  // equal x still counts
  // Opens rightward: geometric containment alone is not coverage.
  const SectorPlacement rightward{shape, {0.0, 0.0}, -kPi / 4.0};
  CHECK(sector_contains(rightward, {0.5, 0.0}));
  CHECK_FALSE(directionally_covers(rightward, {0.5, 0.0}));
}

TEST_CASE("sector area") {
  CHECK(sector_area({2.0, kPi / 2.0}) == doctest::Approx(kPi).epsilon(1e-15));
  CHECK(sector_area({1.0, 2.0}) == doctest::Approx(1.0).epsilon(1e-15));
  CHECK(sector_area({3.0, kPi}) == doctest::Approx(4.5 * kPi).epsilon(1e-15));
}
