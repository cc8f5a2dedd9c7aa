#include "stripcover/cli.hpp"

#include <cmath>
#include <cstdint>
#include <fstream>
#include <numbers>
#include <ostream>
#include <stdexcept>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "stripcover/compare.hpp"
#include "stripcover/errors.hpp"
#include "stripcover/json_io.hpp"
#include "stripcover/models.hpp"
#include "stripcover/optimize.hpp"
#include "stripcover/placement.hpp"
#include "stripcover/svg_render.hpp"
#include "stripcover/verify.hpp"

namespace stripcover {

namespace {

struct FileIoError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

double to_radians(double value, bool degrees) {
  return degrees ? value * (std::numbers::pi / 180.0) : value;
}

// Option values are pre-validated with IsMember, so parse_model cannot fail.
CoverageModel model_from(const std::string& name) { return *parse_model(name); }

nlohmann::json read_json_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw FileIoError("cannot read file: " + path);
  return nlohmann::json::parse(in);
}

void write_text_file(const std::string& path, const std::string& text) {
  std::ofstream file(path, std::ios::binary);
  if (!file) throw FileIoError("cannot write file: " + path);
  file << text;
  file.flush();
  if (!file) throw FileIoError("failed while writing file: " + path);
}

void emit(std::ostream& out, const nlohmann::json& j) { out << j.dump(2) << "\n"; }

}  // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Minimum-density directional sector covers of a unit-width strip"};
  app.require_subcommand(1);
  const std::vector<std::string> model_names{"s1", "s2", "s3"};
  int exit_code = 0;

  // density
  auto* density_cmd = app.add_subcommand("density", "Evaluate closed-form cover density");
  std::string density_model;
  double density_radius = 0.0;
  double density_angle = 0.0;
  bool density_degrees = false;
  density_cmd->add_option("--model", density_model, "Coverage model")
      ->required()
      ->check(CLI::IsMember(model_names));
  density_cmd->add_option("--radius", density_radius, "Sector radius R")->required();
  density_cmd->add_option("--angle", density_angle, "Sector angle")->required();
  density_cmd->add_flag("--degrees", density_degrees, "Interpret --angle in degrees");
  density_cmd->callback([&] {
    const double alpha = to_radians(density_angle, density_degrees);
    emit(out, to_json(density(model_from(density_model), density_radius, alpha)));
  });

  // optimize
  auto* optimize_cmd = app.add_subcommand("optimize", "Minimize density over a model's domain");
  std::string optimize_model_name;
  double optimize_alpha_min = 0.0;
  double optimize_alpha_max = 0.0;
  double optimize_tol = 1e-9;
  std::string optimize_rule = "free";
  bool optimize_degrees = false;
  optimize_cmd->add_option("--model", optimize_model_name, "Coverage model")
      ->required()
      ->check(CLI::IsMember(model_names));
  auto* alpha_min_opt =
      optimize_cmd->add_option("--alpha-min", optimize_alpha_min, "Lower angle bound");
  auto* alpha_max_opt =
      optimize_cmd->add_option("--alpha-max", optimize_alpha_max, "Upper angle bound");
  optimize_cmd->add_option("--tol", optimize_tol, "Parameter tolerance (default 1e-9)");
  optimize_cmd->add_option("--radius-rule", optimize_rule, "tight (R = 1/sin angle) or free")
      ->check(CLI::IsMember(std::vector<std::string>{"tight", "free"}));
  optimize_cmd->add_flag("--degrees", optimize_degrees, "Interpret angle bounds in degrees");
  optimize_cmd->callback([&] {
    OptimizationDomain domain = default_domain(model_from(optimize_model_name));
    if (alpha_min_opt->count() > 0) {
      domain.alpha_min = to_radians(optimize_alpha_min, optimize_degrees);
    }
    if (alpha_max_opt->count() > 0) {
      domain.alpha_max = to_radians(optimize_alpha_max, optimize_degrees);
    }
    domain.radius_rule = optimize_rule == "tight" ? RadiusRule::tight : RadiusRule::free;
    const OptimalResult res = optimize_model(domain, optimize_tol);
    if (domain.model == CoverageModel::S1 && alpha_max_opt->count() > 0 &&
        domain.alpha_max < std::numbers::pi / 3.0) {
      // Capped-angle runs have a closed form; a disagreement means the search
      // itself went wrong, so refuse to report a number we cannot stand by.
      const DensityReport closed = remark_restricted_density(res.alpha_star);
      const double scale = std::max(1.0, std::abs(closed.density));
      if (std::abs(closed.density - res.density_star) > 1e-9 * scale) {
        throw NoConvergenceError(
            "capped-angle search result disagrees with its closed form");
      }
    }
    emit(out, to_json(res));
  });

  // alpha1
  auto* alpha1_cmd =
      app.add_subcommand("alpha1", "Stationary angle of the uncapped boundary-pair density");
  double alpha1_tol = 1e-9;
  alpha1_cmd->add_option("--tol", alpha1_tol, "Parameter tolerance (default 1e-9)");
  alpha1_cmd->callback([&] {
    const auto [alpha, dens] = find_alpha1(alpha1_tol);
    emit(out, nlohmann::json{{"alpha1", alpha}, {"density", dens}});
  });

  // cover
  auto* cover_cmd = app.add_subcommand("cover", "Generate an explicit cover as a JSON file");
  std::string cover_model;
  double cover_radius = 0.0;
  double cover_angle = 0.0;
  double cover_length = 0.0;
  std::string cover_out;
  bool cover_degrees = false;
  cover_cmd->add_option("--model", cover_model, "Coverage model")
      ->required()
      ->check(CLI::IsMember(model_names));
  cover_cmd->add_option("--radius", cover_radius, "Sector radius R")->required();
  cover_cmd->add_option("--angle", cover_angle, "Sector angle")->required();
  cover_cmd->add_option("--length", cover_length, "Window length L (covers x in [0, L])")
      ->required();
  cover_cmd->add_option("--out", cover_out, "Output JSON path")->required();
  cover_cmd->add_flag("--degrees", cover_degrees, "Interpret --angle in degrees");
  cover_cmd->callback([&] {
    const double alpha = to_radians(cover_angle, cover_degrees);
    const StripWindow window{0.0, cover_length};
    const Cover cover = generate_cover(model_from(cover_model), cover_radius, alpha, window);
    write_text_file(cover_out, to_json(cover).dump(2) + "\n");
    emit(out, nlohmann::json{{"written", cover_out},
                             {"placements", cover.placements.size()},
                             {"period", cover.period}});
  });

  // verify
  auto* verify_cmd = app.add_subcommand("verify", "Sample a cover file for uncovered points");
  std::string verify_cover_path;
  std::vector<int> verify_grid;
  SamplingSpec sampling;
  verify_cmd->add_option("--cover", verify_cover_path, "Cover JSON path")
      ->required()
      ->check(CLI::ExistingFile);
  verify_cmd->add_option("--grid", verify_grid, "Grid resolution NX NY")->expected(2);
  verify_cmd->add_option("--samples", sampling.random_samples, "Random sample count");
  verify_cmd->add_option("--seed", sampling.seed, "Random seed");
  verify_cmd->add_option("--edge-shrink", sampling.edge_shrink,
                         "Inset from exact sample-region boundaries");
  verify_cmd->callback([&] {
    if (verify_grid.size() == 2) {
      sampling.grid_nx = verify_grid[0];
      sampling.grid_ny = verify_grid[1];
    }
    const Cover cover = cover_from_json(read_json_file(verify_cover_path));
    const CoverageReport report = verify_cover(cover, sampling);
    emit(out, to_json(report));
    if (report.coverage_fraction < 1.0) exit_code = 4;
  });

  // compare
  auto* compare_cmd = app.add_subcommand("compare", "Compare two models at their optima");
  std::string compare_a;
  std::string compare_b;
  std::string compare_format = "json";
  compare_cmd->add_option("--a", compare_a, "First model")
      ->required()
      ->check(CLI::IsMember(model_names));
  compare_cmd->add_option("--b", compare_b, "Second model")
      ->required()
      ->check(CLI::IsMember(model_names));
  compare_cmd->add_option("--format", compare_format, "json or csv")
      ->check(CLI::IsMember(std::vector<std::string>{"json", "csv"}));
  compare_cmd->callback([&] {
    const ComparisonReport rep = compare_at_optima(model_from(compare_a), model_from(compare_b));
    if (compare_format == "csv") {
      out << comparison_csv(rep);
    } else {
      emit(out, to_json(rep));
    }
  });

  // render
  auto* render_cmd = app.add_subcommand("render", "Draw a cover file as an SVG figure");
  std::string render_cover_path;
  RenderSpec render_spec;
  bool render_no_tiles = false;
  render_cmd->add_option("--cover", render_cover_path, "Cover JSON path")
      ->required()
      ->check(CLI::ExistingFile);
  render_cmd->add_option("--out", render_spec.output_path, "Output SVG path")->required();
  render_cmd->add_option("--ppu", render_spec.pixels_per_unit, "Pixels per unit length (>= 10)");
  render_cmd->add_flag("--no-tiles", render_no_tiles, "Skip tile gridlines");
  render_cmd->add_option("--fill-opacity", render_spec.sector_fill_opacity,
                         "Sector fill opacity in (0, 1]");
  render_cmd->callback([&] {
    render_spec.show_tiles = !render_no_tiles;
    const Cover cover = cover_from_json(read_json_file(render_cover_path));
    write_text_file(render_spec.output_path, render_svg(cover, render_spec));
    emit(out, nlohmann::json{{"written", render_spec.output_path}});
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e, out, err);
    return rc == 0 ? 0 : 2;
  } catch (const FileIoError& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const nlohmann::json::exception& e) {
    err << "error: malformed cover file: " << e.what() << "\n";
    return 2;
  } catch (const InvalidParametersError& e) {
    err << "error: " << e.what() << "\n";
    return 3;
  } catch (const EmptyDomainError& e) {
    err << "error: " << e.what() << "\n";
    return 3;
  } catch (const ConstructionError& e) {
    err << "error: " << e.what() << "\n";
    return 3;
  } catch (const NoConvergenceError& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  }
  return exit_code;
}

}  // namespace stripcover
