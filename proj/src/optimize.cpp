#include "stripcover/optimize.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>

namespace stripcover {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kAlphaClip = 1e-3;
constexpr double kRadiusSpan = 3.0;
constexpr int kEvalCap = 10000;
constexpr double kInf = std::numeric_limits<double>::infinity();

struct SearchPoint {
  double x = 0.0;
  double value = kInf;
};

// Endpoint-aware golden-section minimization on [lo, hi]. The objective may
// return +inf where undefined. Ties prefer the exact endpoint so searches that
// bottom out on a constraint report it exactly. `evals` accumulates objective
// calls across nested searches and enforces the shared cap.
template <typename F>
SearchPoint golden_min(F&& f, double lo, double hi, double tol, int& evals) {
  const auto eval = [&](double x) {
    if (++evals > kEvalCap) throw NoConvergenceError("1-D search exceeded its evaluation cap");
    return f(x);
  };
  SearchPoint best{lo, eval(lo)};
  const double fhi = eval(hi);
  if (fhi < best.value) best = {hi, fhi};
  const double invphi = 0.5 * (std::sqrt(5.0) - 1.0);
  double a = lo;
  double b = hi;
  double c = b - invphi * (b - a);
  double d = a + invphi * (b - a);
  double fc = eval(c);
  double fd = eval(d);
  while (b - a > tol) {
    if (fc <= fd) {
      b = d; d = c; fd = fc;
      c = b - invphi * (b - a);
      fc = eval(c);
    } else {
      a = c; c = d; fc = fd;
      d = a + invphi * (b - a);
      fd = eval(d);
    }
  }
  const SearchPoint interior = fc <= fd ? SearchPoint{c, fc} : SearchPoint{d, fd};
  if (interior.value < best.value) best = interior;
  return best;
}

double density_or_inf(CoverageModel model, double R, double alpha) {
  try {
    return density(model, R, alpha).density;
  } catch (const InvalidParametersError&) {
    return kInf;
  }
}

// Best radius at a fixed angle. S1 keeps the tight radius (slack only pays
// off at small angles whose density sits far above the minimum, so the pin is
// safe for the optimum); S2 and S3 are searched over the delta span.
SearchPoint best_radius_at(CoverageModel model, double alpha, RadiusRule rule,
                           double tol, int& evals) {
  const double rlo = tight_radius(alpha);
  if (rule == RadiusRule::tight || model == CoverageModel::S1)
    return {rlo, density_or_inf(model, rlo, alpha)};
  const auto f = [&](double R) { return density_or_inf(model, R, alpha); };
  return golden_min(f, rlo, rlo + kRadiusSpan, tol, evals);
}

void model_alpha_box(CoverageModel model, double& lo, double& hi) {
  switch (model) {
    case CoverageModel::S1: lo = kAlphaClip; hi = kPi / 3.0; break;
    case CoverageModel::S2: lo = kPi / 3.0; hi = kPi / 2.0; break;
    default: lo = kAlphaClip; hi = kPi / 2.0; break;
  }
}

}  // namespace

OptimizationDomain default_domain(CoverageModel model) {
  OptimizationDomain d{model, 0.0, 0.0, RadiusRule::free};
  model_alpha_box(model, d.alpha_min, d.alpha_max);
  return d;
}

OptimalResult optimize_model(const OptimizationDomain& domain, double tol) {
  if (!(tol > 0.0)) throw InvalidParametersError("tolerance must be positive");
  if (!std::isfinite(domain.alpha_min) || !std::isfinite(domain.alpha_max) ||
      !(domain.alpha_min > 0.0) || !(domain.alpha_min <= domain.alpha_max))
    throw InvalidParametersError("need 0 < alpha_min <= alpha_max");
  double box_lo = 0.0;
  double box_hi = 0.0;
  model_alpha_box(domain.model, box_lo, box_hi);
  const double lo = std::max({domain.alpha_min, box_lo, kAlphaClip});
  const double hi = std::min(domain.alpha_max, box_hi);
  if (!(lo <= hi)) throw EmptyDomainError("alpha range does not meet the model's feasibility box");

  int evals = 0;
  const auto outer = [&](double alpha) {
    return best_radius_at(domain.model, alpha, domain.radius_rule, tol, evals).value;
  };
  const SearchPoint best = golden_min(outer, lo, hi, tol, evals);
  if (!std::isfinite(best.value)) throw EmptyDomainError("no feasible point in the search box");

  const SearchPoint radius = best_radius_at(domain.model, best.x, domain.radius_rule, tol, evals);
  return {domain.model, best.x, radius.x, radius.value, evals, true};
}

std::pair<double, double> find_alpha1(double tol) {
  if (!(tol > 0.0)) throw InvalidParametersError("tolerance must be positive");
  int evals = 0;
  const auto f = [](double alpha) {
    return density_or_inf(CoverageModel::S1, 1.0 / std::sin(alpha), alpha);
  };
  // The formula's own domain ends before pi/2 (the radicand turns negative),
  // where f becomes +inf; that still brackets the single interior minimum.
  const SearchPoint best = golden_min(f, kAlphaClip, kPi / 2.0 - 1e-9, tol, evals);
  if (!std::isfinite(best.value)) throw NoConvergenceError("angle-only density search failed");
  return {best.x, best.value};
}

OptimalResult grid_cross_check(CoverageModel model, int grid_resolution) {
  if (grid_resolution < 100) throw InvalidParametersError("grid resolution must be at least 100");
  double lo = 0.0;
  double hi = 0.0;
  model_alpha_box(model, lo, hi);
  const int n = grid_resolution;
  bool found = false;
  double best_density = kInf;
  double best_alpha = 0.0;
  double best_radius = 0.0;
  long long cells = 0;
  for (int i = 0; i < n; ++i) {
    const double alpha = (i + 1 == n) ? hi : lo + (hi - lo) * i / (n - 1);
    const double rbase = tight_radius(alpha);
    for (int j = 0; j < n; ++j) {
      const double R = rbase + kRadiusSpan * j / (n - 1);
      double tile = 0.0;
      try {
        tile = tile_width(model, R, alpha);
      } catch (const InvalidParametersError&) {
        continue;
      }
      if (!(tile > 0.0)) continue;
      if (model == CoverageModel::S2 && !(R > 1.0)) continue;
      ++cells;
      const double D = R * R * alpha / tile;
      if (D < best_density) {
        best_density = D;
        best_alpha = alpha;
        best_radius = R;
        found = true;
      }
    }
  }
  if (!found) throw EmptyDomainError("no feasible cell in the evaluation grid");
  return {model, best_alpha, best_radius, best_density,
          static_cast<int>(std::min<long long>(cells, std::numeric_limits<int>::max())), true};
}

}  // namespace stripcover
