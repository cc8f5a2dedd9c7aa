#include "stripcover/placement.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <optional>
#include <sstream>

namespace stripcover {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kHeightInset = 1e-9;  // keeps the sweep off exact boundary ties
constexpr int kGateHeights = 2001;
constexpr int kCoarseHeights = 201;
constexpr int kOffsetSteps = 2001;

struct Slice {
  double lo = 0.0;
  double hi = 0.0;
};

// Horizontal slice of a closed sector at height y. Apex angles are <= pi, so
// the sector is convex (disk cut by two half-planes) and the slice is a single
// interval. Callers keep y strictly away from the vertex height; exactly at it
// the side ray lying on that line is dropped, which is harmless off-boundary.
std::optional<Slice> slice_at_height(const SectorPlacement& s, double y) {
  const double R = s.shape.radius;
  const double dy = y - s.vertex.y;
  if (std::abs(dy) > R) return std::nullopt;
  const double half = std::sqrt(std::max(0.0, R * R - dy * dy));
  double lo = s.vertex.x - half;
  double hi = s.vertex.x + half;
  const auto clip_side = [&](double t, bool is_first) -> bool {
    // First side: cross(e(t), p - v) >= 0; second side: <= 0.
    const double st = std::sin(t);
    const double ct = std::cos(t);
    const double sign = is_first ? 1.0 : -1.0;
    if (st == 0.0) return sign * ct * dy >= 0.0;  // no x constraint, just a verdict
    const double bound = s.vertex.x + ct * dy / st;
    if (sign * st > 0.0) hi = std::min(hi, bound);
    else lo = std::max(lo, bound);
    return true;
  };
  if (!clip_side(s.start_direction, true)) return std::nullopt;
  if (!clip_side(s.start_direction + s.shape.angle, false)) return std::nullopt;
  if (!(lo <= hi)) return std::nullopt;
  return Slice{lo, hi};
}

// Largest uncovered gap of [x0, x0 + width] at height y, given every placement
// of the pattern. Exact in x (interval arithmetic), so the only sampling is
// over heights.
double gap_at_height(const std::vector<SectorPlacement>& placements, double y,
                     double x0, double width) {
  std::vector<Slice> slices;
  slices.reserve(placements.size());
  for (const SectorPlacement& p : placements) {
    if (const auto s = slice_at_height(p, y)) {
      if (s->hi > x0 && s->lo < x0 + width) slices.push_back(*s);
    }
  }
  std::sort(slices.begin(), slices.end(),
            [](const Slice& a, const Slice& b) { return a.lo < b.lo; });
  double reach = x0;
  double worst = 0.0;
  for (const Slice& s : slices) {
    if (s.lo > reach) worst = std::max(worst, s.lo - reach);
    reach = std::max(reach, s.hi);
    if (reach >= x0 + width) break;
  }
  if (reach < x0 + width) worst = std::max(worst, x0 + width - reach);
  return worst;
}

// Worst gap across sampled heights for one period cell of the pattern.
double pattern_worst_gap(const std::vector<SectorPlacement>& placements,
                         double x0, double period, int heights) {
  double worst = 0.0;
  for (int t = 0; t < heights; ++t) {
    const double y = kHeightInset + (1.0 - 2.0 * kHeightInset) * t / (heights - 1);
    worst = std::max(worst, gap_at_height(placements, y, x0, period));
    if (worst >= period) break;  // a fully uncovered height; cannot get worse
  }
  return worst;
}

std::vector<SectorPlacement> assemble(CoverageModel model, const SectorShape& shape,
                                      double offset, double period,
                                      const StripWindow& window) {
  const double base_y = model == CoverageModel::S3 ? 1.0 : 0.0;
  const double base_start = model == CoverageModel::S3 ? kPi : kPi - shape.angle;
  const double margin = period + shape.radius;
  const long long k_lo = static_cast<long long>(std::floor((window.x_min - margin) / period));
  const long long k_hi = static_cast<long long>(std::ceil((window.x_max + margin) / period));
  std::vector<SectorPlacement> out;
  out.reserve(static_cast<size_t>(2 * (k_hi - k_lo + 1)));
  for (long long k = k_lo; k <= k_hi; ++k) {
    const double x = static_cast<double>(k) * period;
    out.push_back({shape, {x, base_y}, base_start});
    out.push_back({shape, {x + offset, 1.0}, kPi});
  }
  return out;
}

double analytic_offset(CoverageModel model, double R, double alpha, double period) {
  switch (model) {
    case CoverageModel::S1: return R - std::cos(alpha) / std::sin(alpha);
    case CoverageModel::S2: return std::sqrt(R * R - 1.0);
    default: return period / 2.0;
  }
}

}  // namespace

Cover generate_cover(CoverageModel model, double R, double alpha, const StripWindow& window) {
  if (!std::isfinite(window.x_min) || !std::isfinite(window.x_max) ||
      !(window.x_max > window.x_min))
    throw InvalidParametersError("window must have positive length");
  if (!is_feasible(model, R, alpha))
    throw InvalidParametersError("parameters are outside the model's feasible domain");

  const double period = tile_width(model, R, alpha);
  const SectorShape shape{R, alpha};
  const double slack = 1e-9 * std::max(1.0, period);
  // Any period cell of the infinite pattern will do for the gate; take one near
  // the middle of the window, where the margins guarantee full surroundings.
  const double x0 = std::floor(0.5 * (window.x_min + window.x_max) / period) * period;

  double offset = analytic_offset(model, R, alpha, period);
  std::vector<SectorPlacement> placements = assemble(model, shape, offset, period, window);
  if (pattern_worst_gap(placements, x0, period, kGateHeights) > slack) {
    // Derived offset failed the gate: search the intra-pair shift directly.
    double best_offset = offset;
    double best_gap = std::numeric_limits<double>::infinity();
    for (int i = 0; i < kOffsetSteps; ++i) {
      const double cand = period * i / kOffsetSteps;
      const auto trial = assemble(model, shape, cand, period, window);
      const double gap = pattern_worst_gap(trial, x0, period, kCoarseHeights);
      if (gap < best_gap) {
        best_gap = gap;
        best_offset = cand;
      }
    }
    placements = assemble(model, shape, best_offset, period, window);
    if (pattern_worst_gap(placements, x0, period, kGateHeights) > slack) {
      std::ostringstream msg;
      msg << "no intra-pair offset completes a " << model_name(model) << " cover at R=" << R
          << ", alpha=" << alpha << " with period " << period
          << " (best residual gap " << best_gap << ")";
      if (model == CoverageModel::S2 && R * std::sin(2.0 * alpha) > 1.0) {
        msg << "; R*sin(2*alpha) = " << R * std::sin(2.0 * alpha)
            << " exceeds 1, so a pair's uncovered notch at its own boundary is wider"
               " than what the neighboring pairs can reach without overlapping";
      }
      throw ConstructionError(msg.str());
    }
    offset = best_offset;
  }

  std::sort(placements.begin(), placements.end(),
            [](const SectorPlacement& a, const SectorPlacement& b) {
              if (a.vertex.x != b.vertex.x) return a.vertex.x < b.vertex.x;
              return a.vertex.y < b.vertex.y;
            });
  return {model, shape, std::move(placements), period, window};
}

}  // namespace stripcover
