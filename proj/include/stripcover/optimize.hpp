#pragma once

#include <utility>

#include "stripcover/models.hpp"

namespace stripcover {

// How the radius is tied to the angle during the search. `tight` pins
// R = 1/sin(alpha) (the substitution R = 1/sin(alpha) + delta with delta = 0);
// `free` lets delta >= 0 float and minimizes over it. For S1 the two rules
// coincide (see optimize_model).
enum class RadiusRule { tight, free };

struct OptimizationDomain {
  CoverageModel model;
  double alpha_min = 0.0;
  double alpha_max = 0.0;
  RadiusRule radius_rule = RadiusRule::free;
};

struct OptimalResult {
  CoverageModel model;
  double alpha_star = 0.0;
  double radius_star = 0.0;
  double density_star = 0.0;
  int iterations = 0;
  bool converged = false;
};

// The full search box for a model, with open alpha ends clipped at 1e-3
// (density blows up toward alpha = 0, so nothing is lost).
OptimizationDomain default_domain(CoverageModel model);

// Minimize density over the domain to within tol in the parameters. For S1 the
// radius is pinned at 1/sin(alpha) under either rule: slack can undercut the
// tight radius only far below the angle cap, where the density is nowhere near
// the minimum, so the pin still lands the model's optimum. S2 and S3 run a
// bracketed golden-section over R in [1/sin(alpha), 1/sin(alpha) + 3]. The
// outer 1-D angle search is endpoint-aware: all three models bottom out at an
// alpha endpoint, which interior-only descent would miss. Deterministic.
// Throws EmptyDomainError when the range misses the feasibility box and
// NoConvergenceError past 10000 objective evaluations.
OptimalResult optimize_model(const OptimizationDomain& domain, double tol = 1e-9);

// Stationary point of the angle-only density D1(alpha) with R = 1/sin(alpha)
// and the angle cap ignored: the unconstrained best lies above pi/3, where the
// layout stops being a cover, so this value only bounds what lifting the cap
// could buy. Returns (alpha, density there).
std::pair<double, double> find_alpha1(double tol = 1e-9);

// Brute-force argmin of density over a uniform (alpha, R) grid on the model's
// box, R sampled in [1/sin(alpha), 1/sin(alpha) + 3]. Ties break toward the
// smaller alpha, then the smaller R; `iterations` reports feasible cells seen.
// Independent check of optimize_model, good to one grid cell.
OptimalResult grid_cross_check(CoverageModel model, int grid_resolution);

}  // namespace stripcover
