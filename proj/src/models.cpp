#include "stripcover/models.hpp"

#include <cmath>
#include <limits>
#include <numbers>
#include <string>

namespace stripcover {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kReachSlack = 1e-12;

[[noreturn]] void bad(const std::string& what) { throw InvalidParametersError(what); }

void check_formula_domain(double R, double alpha) {
  if (!std::isfinite(R) || !(R > 0.0)) bad("radius must be positive and finite");
  if (!std::isfinite(alpha) || !(alpha > 0.0) || !(alpha <= kPi / 2.0))
    bad("tile formulas need an angle in (0, pi/2]");
}

}  // namespace

const char* model_name(CoverageModel m) {
  switch (m) {
    case CoverageModel::S1: return "s1";
    case CoverageModel::S2: return "s2";
    default: return "s3";
  }
}

std::optional<CoverageModel> parse_model(std::string_view text) {
  if (text == "s1" || text == "S1") return CoverageModel::S1;
  if (text == "s2" || text == "S2") return CoverageModel::S2;
  if (text == "s3" || text == "S3") return CoverageModel::S3;
  return std::nullopt;
}

double tile_width(CoverageModel model, double R, double alpha) {
  check_formula_domain(R, alpha);
  switch (model) {
    case CoverageModel::S1: {
      if (!(alpha < kPi / 2.0)) bad("s1 tile formula is undefined at angle = pi/2");
      const double t = std::tan(alpha);
      const double ob = 1.0 - 0.5 * R * t;  // opposite-boundary offset of the slant side
      const double radicand = R * R - ob * ob;
      if (radicand < 0.0) bad("s1 tile formula radicand is negative (slant side cannot span the strip)");
      return std::sqrt(radicand) - 1.0 / t + 0.5 * R;
    }
    case CoverageModel::S2: {
      const double radicand = R * R - 1.0;
      if (radicand < 0.0) bad("s2 tile formula needs R >= 1");
      return 2.0 * std::sqrt(radicand);
    }
    default: {
      const double radicand = R * R - 1.0;
      if (radicand < 0.0) bad("s3 tile formula needs R >= 1");
      const double cot = std::cos(alpha) / std::sin(alpha);
      return 2.0 * (std::sqrt(radicand) - cot);
    }
  }
}

DensityReport density(CoverageModel model, double R, double alpha) {
  const double tile = tile_width(model, R, alpha);
  if (!(tile > 0.0)) bad("tile width is nonpositive: the pair does not advance along the strip");
  return {model, R, alpha, tile, R * R * alpha / tile, is_feasible(model, R, alpha)};
}

bool is_feasible(CoverageModel model, double R, double alpha) {
  if (!std::isfinite(R) || !std::isfinite(alpha) || !(R > 0.0) || !(alpha > 0.0)) return false;
  double tile = 0.0;
  try {
    tile = tile_width(model, R, alpha);
  } catch (const InvalidParametersError&) {
    return false;
  }
  const double reach = R * std::sin(alpha);
  switch (model) {
    case CoverageModel::S1:
      return alpha <= kPi / 3.0 && reach >= 1.0 - kReachSlack && tile > 0.0;
    case CoverageModel::S2:
      return alpha >= kPi / 3.0 && alpha <= kPi / 2.0 && reach >= 1.0 - kReachSlack && R > 1.0;
    default:
      return alpha <= kPi / 2.0 && reach >= 1.0 - kReachSlack && tile > 0.0;
  }
}

double tight_radius(double alpha) {
  if (!std::isfinite(alpha) || !(alpha > 0.0) || !(alpha < kPi))
    bad("tight_radius needs an angle in (0, pi)");
  const double s = std::sin(alpha);
  double r = 1.0 / s;
  while (r * s < 1.0) r = std::nextafter(r, std::numeric_limits<double>::infinity());
  return r;
}

DensityReport remark_restricted_density(double alpha_max) {
  if (!std::isfinite(alpha_max) || !(alpha_max > 0.0) || !(alpha_max < kPi / 3.0))
    bad("restricted angle cap must lie in (0, pi/3)");
  const double a = alpha_max;
  const double s = std::sin(a);
  const double c = std::cos(a);
  const double inner = 1.0 - 1.0 / (2.0 * c);
  const double root = std::sqrt(1.0 / (s * s) - inner * inner);
  const double value = 2.0 * a / (2.0 * s * s * root - std::sin(2.0 * a) + s);
  const double R = 1.0 / s;
  // Tile backed out of the value keeps the report internally consistent; the
  // independently computed tile_width(S1, R, a) agrees to rounding error.
  return {CoverageModel::S1, R, a, R * R * a / value, value,
          is_feasible(CoverageModel::S1, R, a)};
}

DensityReport obtuse_midline_density(double R, double alpha) {
  if (!std::isfinite(alpha) || !(alpha > kPi / 2.0) || !(alpha <= kPi))
    bad("obtuse midline reduction needs an angle in (pi/2, pi]");
  if (!std::isfinite(R) || !(R > 0.0)) bad("radius must be positive and finite");
  if (R * std::sin(alpha / 2.0) < 0.5 - kReachSlack)
    bad("sector cannot reach the strip boundary from the midline (R sin(a/2) < 1/2)");
  DensityReport rep = density(CoverageModel::S3, 2.0 * R, alpha / 2.0);
  if (!rep.feasible) bad("the half-strip reduction lands outside the S3 feasible domain");
  return rep;
}

double bidirectional_density(const DensityReport& base) {
  if (!base.feasible) bad("bidirectional doubling needs a feasible base cover");
  return 2.0 * base.density;
}

}  // namespace stripcover
