#pragma once

#include <cstdint>
#include <optional>

#include "stripcover/placement.hpp"

namespace stripcover {

// Deterministic grid plus seeded uniform samples over one interior period of
// the cover's window, inset by edge_shrink on every side so exact-boundary
// ties (closed sectors, vertex.x == p.x) never decide an outcome.
struct SamplingSpec {
  int grid_nx = 2000;
  int grid_ny = 1000;
  long long random_samples = 100000;
  std::uint64_t seed = 42;
  double edge_shrink = 1e-9;
};

struct CoverageReport {
  double coverage_fraction = 0.0;          // 1.0 iff every sample was covered
  std::optional<Point> worst_uncovered;    // lexicographically smallest failure
  double empirical_density = 0.0;          // in-period sector area over period
  long long samples_used = 0;
};

// Brute-force check of the coverage predicate: a sample passes iff some
// placement directionally covers it. Reports, never throws, on incomplete
// coverage; the report is identical for a fixed spec regardless of evaluation
// order. Throws InvalidParametersError only on a malformed spec or cover.
CoverageReport verify_cover(const Cover& cover, const SamplingSpec& spec);

// Closed-path density of the generated cover: the summed area of the sectors
// whose vertices fall in one period cell, divided by the cell's strip area.
// Equal to 2 * sector_area / period for a well-formed pair pattern, and to the
// model's closed-form density bit-for-bit when the cover came from
// generate_cover.
double empirical_density(const Cover& cover);

// Monte Carlo multiplicity integral: average cover count over a box spanning
// one period and the full y-extent of the pattern (sectors may poke outside
// the strip; clipping the box to the strip would bias the estimate), scaled by
// box area over period. Converges to the closed-form density; repeatable for a
// fixed seed.
double monte_carlo_density(const Cover& cover, long long samples, std::uint64_t seed);

}  // namespace stripcover
