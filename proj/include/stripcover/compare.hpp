#pragma once

#include <string>

#include "stripcover/models.hpp"

namespace stripcover {

struct ComparisonReport {
  CoverageModel model_a = CoverageModel::S1;
  CoverageModel model_b = CoverageModel::S2;
  double density_a = 0.0;
  double density_b = 0.0;
  // density_a - density_b: extra sensing area spent per unit strip area.
  double energy_excess = 0.0;
  // density_a / density_b - 1: relative headroom of a over b. When the two
  // covers share a total energy budget, this is the fractional lifetime
  // advantage of the sparser model b.
  double lifetime_gain = 0.0;
  std::string note;
};

// Compares two already-evaluated density reports. Both must be feasible with
// positive density.
ComparisonReport compare_models(const DensityReport& a, const DensityReport& b);

// Optimizes both models over their default domains and compares the optima.
// For (S3, S2) the note flags that the exact gain is 1/2, not the commonly
// quoted 52%.
ComparisonReport compare_at_optima(CoverageModel a, CoverageModel b);

}  // namespace stripcover
