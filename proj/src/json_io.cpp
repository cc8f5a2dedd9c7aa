#include "stripcover/json_io.hpp"

#include <cmath>
#include <numbers>
#include <sstream>

#include "stripcover/errors.hpp"

namespace stripcover {

using nlohmann::json;

nlohmann::json to_json(const DensityReport& rep) {
  return json{
      {"model", model_name(rep.model)}, {"radius", rep.radius},
      {"angle", rep.angle},             {"tile_width", rep.tile_width},
      {"density", rep.density},         {"feasible", rep.feasible},
  };
}

nlohmann::json to_json(const OptimalResult& res) {
  return json{
      {"model", model_name(res.model)},
      {"alpha_star", res.alpha_star},
      {"radius_star", res.radius_star},
      {"density_star", res.density_star},
      {"iterations", res.iterations},
      {"converged", res.converged},
  };
}

nlohmann::json to_json(const Cover& cover) {
  json placements = json::array();
  for (const SectorPlacement& p : cover.placements) {
    placements.push_back(json{
        {"vertex", json::array({p.vertex.x, p.vertex.y})},
        {"start_direction", p.start_direction},
        {"angle", p.shape.angle},
        {"radius", p.shape.radius},
    });
  }
  return json{
      {"model", model_name(cover.model)},
      {"radius", cover.shape.radius},
      {"angle", cover.shape.angle},
      {"period", cover.period},
      {"window", json{{"x_min", cover.window.x_min}, {"x_max", cover.window.x_max}}},
      {"placements", std::move(placements)},
  };
}

nlohmann::json to_json(const CoverageReport& rep) {
  json worst = nullptr;
  if (rep.worst_uncovered) {
    worst = json::array({rep.worst_uncovered->x, rep.worst_uncovered->y});
  }
  return json{
      {"coverage_fraction", rep.coverage_fraction},
      {"worst_uncovered", std::move(worst)},
      {"empirical_density", rep.empirical_density},
      {"samples_used", rep.samples_used},
  };
}

nlohmann::json to_json(const ComparisonReport& rep) {
  return json{
      {"model_a", model_name(rep.model_a)},
      {"model_b", model_name(rep.model_b)},
      {"density_a", rep.density_a},
      {"density_b", rep.density_b},
      {"energy_excess", rep.energy_excess},
      {"lifetime_gain", rep.lifetime_gain},
      {"note", rep.note},
  };
}

namespace {

double finite_number(const json& j, const char* what) {
  const double v = j.get<double>();
  if (!std::isfinite(v)) {
    throw InvalidParametersError(std::string(what) + " must be finite");
  }
  return v;
}

}  // namespace

Cover cover_from_json(const nlohmann::json& j) {
  Cover cover;
  const auto model = parse_model(j.at("model").get<std::string>());
  if (!model) {
    throw InvalidParametersError("unknown model name in cover file");
  }
  cover.model = *model;
  cover.shape.radius = finite_number(j.at("radius"), "radius");
  cover.shape.angle = finite_number(j.at("angle"), "angle");
  cover.period = finite_number(j.at("period"), "period");
  cover.window.x_min = finite_number(j.at("window").at("x_min"), "window.x_min");
  cover.window.x_max = finite_number(j.at("window").at("x_max"), "window.x_max");
  if (!(cover.period > 0.0)) {
    throw InvalidParametersError("cover period must be positive");
  }
  if (!(cover.window.x_max > cover.window.x_min)) {
    throw InvalidParametersError("cover window must have x_max > x_min");
  }
  for (const json& pj : j.at("placements")) {
    SectorPlacement p;
    const json& v = pj.at("vertex");
    p.vertex.x = finite_number(v.at(0), "vertex.x");
    p.vertex.y = finite_number(v.at(1), "vertex.y");
    p.start_direction = finite_number(pj.at("start_direction"), "start_direction");
    p.shape.radius = finite_number(pj.at("radius"), "placement radius");
    p.shape.angle = finite_number(pj.at("angle"), "placement angle");
    if (!(p.shape.radius > 0.0)) {
      throw InvalidParametersError("placement radius must be positive");
    }
    if (!(p.shape.angle > 0.0 && p.shape.angle <= std::numbers::pi)) {
      throw InvalidParametersError("placement angle must lie in (0, pi]");
    }
    cover.placements.push_back(p);
  }
  if (cover.placements.empty()) {
    throw InvalidParametersError("cover has no placements");
  }
  return cover;
}

std::string comparison_csv(const ComparisonReport& rep) {
  std::string quoted = "\"";
  for (const char c : rep.note) {
    quoted += c;
    if (c == '"') quoted += '"';
  }
  quoted += '"';
  std::ostringstream out;
  out << "model_a,model_b,density_a,density_b,energy_excess,lifetime_gain,note\n";
  out << model_name(rep.model_a) << ',' << model_name(rep.model_b) << ','
      << json(rep.density_a).dump() << ',' << json(rep.density_b).dump() << ','
      << json(rep.energy_excess).dump() << ',' << json(rep.lifetime_gain).dump() << ','
      << quoted << '\n';
  return out.str();
}

}  // namespace stripcover
