#include "stripcover/compare.hpp"

#include "stripcover/errors.hpp"
#include "stripcover/optimize.hpp"

namespace stripcover {

ComparisonReport compare_models(const DensityReport& a, const DensityReport& b) {
  if (!a.feasible || !b.feasible) {
    throw InvalidParametersError("compare_models requires two feasible density reports");
  }
  if (!(a.density > 0.0) || !(b.density > 0.0)) {
    throw InvalidParametersError("compare_models requires positive densities");
  }
  ComparisonReport rep;
  rep.model_a = a.model;
  rep.model_b = b.model;
  rep.density_a = a.density;
  rep.density_b = b.density;
  rep.energy_excess = a.density - b.density;
  rep.lifetime_gain = a.density / b.density - 1.0;
  return rep;
}

ComparisonReport compare_at_optima(CoverageModel a, CoverageModel b) {
  const OptimalResult ra = optimize_model(default_domain(a));
  const OptimalResult rb = optimize_model(default_domain(b));
  const DensityReport da = density(a, ra.radius_star, ra.alpha_star);
  const DensityReport db = density(b, rb.radius_star, rb.alpha_star);
  ComparisonReport rep = compare_models(da, db);
  if (a == CoverageModel::S3 && b == CoverageModel::S2) {
    rep.note =
        "lifetime_gain is exactly 1/2 (density ratio (pi/2)/(pi/3) = 3/2); "
        "the commonly quoted 52% overstates the gap";
  }
  return rep;
}

}  // namespace stripcover
