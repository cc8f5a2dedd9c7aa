#pragma once

#include <optional>
#include <string_view>

#include "stripcover/errors.hpp"
#include "stripcover/geometry.hpp"

namespace stripcover {

// The three pair layouts. S1: one straight side on a strip boundary, slanted
// side crossing to the other boundary, pairs mirrored across the midline.
// S2: boundary-vertex pairs mirrored across the midline, consecutive
// same-boundary sectors disjoint. S3: every vertex on the top boundary.
enum class CoverageModel { S1, S2, S3 };

const char* model_name(CoverageModel m);  // "s1" / "s2" / "s3"
std::optional<CoverageModel> parse_model(std::string_view text);

struct DensityReport {
  CoverageModel model;
  double radius = 0.0;
  double angle = 0.0;       // radians
  double tile_width = 0.0;  // x-period of the regular cover
  double density = 0.0;     // sector area per unit strip area
  bool feasible = false;
};

// Width of the 1-by-a rectangular tile covered by one pair of sectors:
//   S1: sqrt(R^2 - (1 - (R/2) tan a)^2) - 1/tan a + R/2
//   S2: 2 sqrt(R^2 - 1)
//   S3: 2 (sqrt(R^2 - 1) - cot a)
// Throws InvalidParametersError when the formula itself is undefined (negative
// radicand, S1 at a = pi/2, angle outside (0, pi/2], R <= 0). A nonpositive
// width is returned as-is: degeneracy is a feasibility question, not a domain
// error here.
double tile_width(CoverageModel model, double R, double alpha);

// D = R^2 * a / tile_width. Deliberately evaluates outside the feasible box
// (the S1 angle analysis needs the formula beyond a = pi/3); the `feasible`
// flag carries the verdict. Throws when tile_width errs or is nonpositive.
DensityReport density(CoverageModel model, double R, double alpha);

// Feasibility boxes:
//   S1: 0 < a <= pi/3,   R sin a >= 1, tile width > 0
//   S2: pi/3 <= a <= pi/2, R sin a >= 1, R > 1
//   S3: 0 < a <= pi/2,   R sin a >= 1, tile width > 0
// The reach inequality gets 1e-12 absolute slack so R = 1/sin(a) rounded to
// double is not rejected by one ulp. Returns false (never throws) on any
// formula-domain violation.
bool is_feasible(CoverageModel model, double R, double alpha);

// Smallest double R with R * sin(alpha) >= 1 (1/sin(alpha), nudged up by ulps
// when the product rounds below 1).
double tight_radius(double alpha);

// Best density when the angle is capped at alpha_max < pi/3: the cap itself is
// optimal with R = 1/sin(alpha_max), and the value has the closed form
//   2a / (2 sin^2(a) sqrt(1/sin^2(a) - (1 - 1/(2 cos a))^2) - sin 2a + sin a),
// algebraically identical to density(S1, 1/sin a, a).
DensityReport remark_restricted_density(double alpha_max);

// Obtuse sectors (pi/2 < a <= pi) go on the strip midline, opening left,
// symmetric about it. Each half-strip then carries an S3 cover of half width;
// rescaling the half strip to unit width doubles R, halves the angle, and
// leaves the (dimensionless) density unchanged. Requires R sin(a/2) >= 1/2 so
// the sector reaches the strip boundary from the midline.
DensityReport obtuse_midline_density(double R, double alpha);

// Watching both directions: superpose the x-mirrored cover; density doubles.
double bidirectional_density(const DensityReport& base);

}  // namespace stripcover
