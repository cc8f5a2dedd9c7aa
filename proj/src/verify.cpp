#include "stripcover/verify.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <vector>

namespace stripcover {

namespace {

double uniform01(std::mt19937_64& rng) {
  // Top 53 bits; avoids distribution objects whose streams differ across
  // standard libraries.
  return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

struct SortedCover {
  std::vector<SectorPlacement> placements;  // ascending vertex.x
  std::vector<double> xs;
};

SortedCover sort_by_vertex(const Cover& cover) {
  SortedCover s{cover.placements, {}};
  std::sort(s.placements.begin(), s.placements.end(),
            [](const SectorPlacement& a, const SectorPlacement& b) {
              return a.vertex.x < b.vertex.x;
            });
  s.xs.reserve(s.placements.size());
  for (const SectorPlacement& p : s.placements) s.xs.push_back(p.vertex.x);
  return s;
}

// Only vertices in [p.x, p.x + R] can directionally cover p.
bool covered(const SortedCover& s, double radius, const Point& p) {
  auto it = std::lower_bound(s.xs.begin(), s.xs.end(), p.x);
  for (size_t i = static_cast<size_t>(it - s.xs.begin()); i < s.xs.size(); ++i) {
    if (s.xs[i] > p.x + radius) break;
    if (directionally_covers(s.placements[i], p)) return true;
  }
  return false;
}

bool lex_less(const Point& a, const Point& b) {
  if (a.x != b.x) return a.x < b.x;
  return a.y < b.y;
}

// One interior period cell of the window, or the whole window if it is shorter
// than a period.
std::pair<double, double> period_cell(const Cover& cover) {
  const double a = cover.period;
  const double lo = cover.window.x_min;
  const double hi = cover.window.x_max;
  if (!(hi - lo > a)) return {lo, hi};
  double x0 = std::floor(0.5 * (lo + hi) / a) * a;
  x0 = std::min(std::max(x0, lo), hi - a);
  return {x0, x0 + a};
}

void check_cover(const Cover& cover) {
  if (!(cover.period > 0.0) || !std::isfinite(cover.period))
    throw InvalidParametersError("cover period must be positive");
  if (!(cover.window.x_max > cover.window.x_min))
    throw InvalidParametersError("cover window must have positive length");
  if (cover.placements.empty()) throw InvalidParametersError("cover has no placements");
}

}  // namespace

CoverageReport verify_cover(const Cover& cover, const SamplingSpec& spec) {
  check_cover(cover);
  if (spec.grid_nx < 2 || spec.grid_ny < 2)
    throw InvalidParametersError("sampling grid needs at least 2 points per axis");
  if (spec.random_samples < 0) throw InvalidParametersError("random sample count cannot be negative");
  if (!(spec.edge_shrink > 0.0)) throw InvalidParametersError("edge shrink must be positive");

  const SortedCover sorted = sort_by_vertex(cover);
  const double radius = cover.shape.radius;
  const auto [cx0, cx1] = period_cell(cover);
  const double es = spec.edge_shrink;
  const double x_lo = cx0 + es;
  const double x_span = (cx1 - cx0) - 2.0 * es;
  const double y_lo = es;
  const double y_span = 1.0 - 2.0 * es;

  long long passed = 0;
  std::optional<Point> witness;
  const auto visit = [&](const Point& p) {
    if (covered(sorted, radius, p)) {
      ++passed;
    } else if (!witness || lex_less(p, *witness)) {
      witness = p;
    }
  };

  // x-major enumeration: the first grid failure found is the smallest.
  for (int ix = 0; ix < spec.grid_nx; ++ix) {
    const double x = x_lo + x_span * ix / (spec.grid_nx - 1);
    for (int iy = 0; iy < spec.grid_ny; ++iy) {
      visit({x, y_lo + y_span * iy / (spec.grid_ny - 1)});
    }
  }
  std::mt19937_64 rng(spec.seed);
  for (long long i = 0; i < spec.random_samples; ++i) {
    const double x = x_lo + x_span * uniform01(rng);
    const double y = y_lo + y_span * uniform01(rng);
    visit({x, y});
  }

  const long long total =
      static_cast<long long>(spec.grid_nx) * spec.grid_ny + spec.random_samples;
  return {static_cast<double>(passed) / static_cast<double>(total), witness,
          empirical_density(cover), total};
}

double empirical_density(const Cover& cover) {
  check_cover(cover);
  const auto [cx0, cx1] = period_cell(cover);
  // Cell boundaries sit on vertex columns (cells start at multiples of the
  // period), so nudge them off by half the smallest vertex spacing; otherwise
  // a one-ulp tie could double- or zero-count a placement.
  std::vector<double> xs;
  xs.reserve(cover.placements.size());
  for (const SectorPlacement& p : cover.placements) xs.push_back(p.vertex.x);
  std::sort(xs.begin(), xs.end());
  double min_gap = cover.period;
  for (size_t i = 1; i < xs.size(); ++i) {
    const double gap = xs[i] - xs[i - 1];
    if (gap > 0.0) min_gap = std::min(min_gap, gap);
  }
  // The cell width is the period itself for full-period cells; recomputing it
  // as cx1 - cx0 would pick up a rounding ulp that the closed form lacks.
  const double cell_width = cover.window.x_max - cover.window.x_min > cover.period
                                ? cover.period
                                : cx1 - cx0;
  const double lo = cx0 - 0.5 * min_gap;
  const double hi = lo + cell_width;
  double area = 0.0;
  for (const SectorPlacement& p : cover.placements) {
    if (p.vertex.x >= lo && p.vertex.x < hi) area += sector_area(p.shape);
  }
  return area / cell_width;
}

double monte_carlo_density(const Cover& cover, long long samples, std::uint64_t seed) {
  check_cover(cover);
  if (samples <= 0) throw InvalidParametersError("sample count must be positive");
  const SortedCover sorted = sort_by_vertex(cover);
  const double radius = cover.shape.radius;
  const auto [cx0, cx1] = period_cell(cover);
  // The box must contain every sector that meets the period slab; by
  // periodicity, whatever a slab boundary cuts off re-enters on the other side.
  double y_lo = 0.0;
  double y_hi = 1.0;
  for (const SectorPlacement& p : cover.placements) {
    y_lo = std::min(y_lo, p.vertex.y - p.shape.radius);
    y_hi = std::max(y_hi, p.vertex.y + p.shape.radius);
  }
  std::mt19937_64 rng(seed);
  long long hits = 0;
  for (long long i = 0; i < samples; ++i) {
    Point p{cx0 + (cx1 - cx0) * uniform01(rng), y_lo + (y_hi - y_lo) * uniform01(rng)};
    auto it = std::lower_bound(sorted.xs.begin(), sorted.xs.end(), p.x - radius);
    for (size_t k = static_cast<size_t>(it - sorted.xs.begin()); k < sorted.xs.size(); ++k) {
      if (sorted.xs[k] > p.x + radius) break;
      if (sector_contains(sorted.placements[k], p)) ++hits;
    }
  }
  const double box_area = (cx1 - cx0) * (y_hi - y_lo);
  const double mean_multiplicity = static_cast<double>(hits) / static_cast<double>(samples);
  return mean_multiplicity * box_area / (cx1 - cx0);
}

}  // namespace stripcover
