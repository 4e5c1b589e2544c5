// Scenario runner: reproduces the half-plane example, runs the flatness probe
// suite on either model, and samples hulls and exp-interpolated curves.
//
// Settings come from built-in defaults, then an optional JSON config file
// (--config), then command-line flags, each overriding the previous.

#include "hadamard/scenario.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

namespace {

using hadamard::Coords;
using hadamard::scenario::Format;
using hadamard::scenario::ScenarioConfig;
using hadamard::scenario::UsageError;

Coords parse_coords(const std::string& text) {
  std::vector<double> values;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    try {
      std::size_t used = 0;
      values.push_back(std::stod(item, &used));
      if (item.find_first_not_of(" \t", used) != std::string::npos) throw std::invalid_argument(item);
    } catch (const std::exception&) {
      throw UsageError("cannot parse coordinate '" + item + "' in '" + text + "'");
    }
  }
  if (values.empty() || static_cast<int>(values.size()) > hadamard::kMaxDim)
    throw UsageError("bad coordinate list '" + text + "'");
  Coords c(static_cast<int>(values.size()));
  for (std::size_t i = 0; i < values.size(); ++i) c[static_cast<int>(i)] = values[i];
  return c;
}

std::vector<Coords> parse_point_list(const std::string& text) {
  std::vector<Coords> points;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ';'))
    if (!item.empty()) points.push_back(parse_coords(item));
  return points;
}

Format parse_format(const std::string& name) {
  if (name == "csv") return Format::Csv;
  if (name == "json") return Format::Json;
  throw UsageError("unknown format '" + name + "'");
}

Coords coords_from_json(const nlohmann::json& j) {
  const auto values = j.get<std::vector<double>>();
  if (values.empty() || static_cast<int>(values.size()) > hadamard::kMaxDim) throw UsageError("bad coordinates in config");
  Coords c(static_cast<int>(values.size()));
  for (std::size_t i = 0; i < values.size(); ++i) c[static_cast<int>(i)] = values[i];
  return c;
}

void apply_config_file(const std::string& path, ScenarioConfig& config) {
  std::ifstream is(path);
  if (!is) throw UsageError("cannot open config file " + path);
  nlohmann::json j;
  try {
    is >> j;
    if (j.contains("model")) config.model = hadamard::parse_model(j["model"].get<std::string>());
    if (j.contains("dim")) config.dim = j["dim"].get<int>();
    if (j.contains("base")) config.base = coords_from_json(j["base"]);
    if (j.contains("grid")) config.grid = j["grid"].get<int>();
    if (j.contains("t_grid")) config.t_grid = j["t_grid"].get<int>();
    if (j.contains("tol")) config.tol = j["tol"].get<double>();
    if (j.contains("k_max")) config.k_max = j["k_max"].get<int>();
    if (j.contains("seed")) config.seed = j["seed"].get<std::uint64_t>();
    if (j.contains("format")) config.format = parse_format(j["format"].get<std::string>());
    if (j.contains("out")) config.output_dir = j["out"].get<std::string>();
    if (j.contains("points"))
      for (const auto& p : j["points"]) config.points.push_back(coords_from_json(p));
  } catch (const nlohmann::json::exception& e) {
    throw UsageError("config file " + path + ": " + e.what());
  } catch (const hadamard::GeometryError& e) {
    throw UsageError("config file " + path + ": " + e.what());
  }
}

struct Flags {
  std::optional<std::string> config;
  std::optional<std::string> model;
  std::optional<int> dim;
  std::optional<std::string> base;
  std::optional<int> grid;
  std::optional<int> t_grid;
  std::optional<double> tol;
  std::optional<int> k_max;
  std::optional<std::uint64_t> seed;
  std::optional<std::string> format;
  std::optional<std::string> out;
  std::optional<std::string> points;
};

void add_flags(CLI::App& cmd, Flags& f) {
  cmd.add_option("--config", f.config, "JSON config file (flags override it)");
  cmd.add_option("--model", f.model, "euclidean | halfplane");
  cmd.add_option("--dim", f.dim, "dimension of the euclidean model");
  cmd.add_option("--base", f.base, "base point p, comma separated, e.g. 0,1");
  cmd.add_option("--grid", f.grid, "hull segment samples and GC weight grid");
  cmd.add_option("--t-grid", f.t_grid, "curve parameter grid");
  cmd.add_option("--tol", f.tol, "hull convergence tolerance (default: diameter / grid)");
  cmd.add_option("--k-max", f.k_max, "maximum hull iterations");
  cmd.add_option("--seed", f.seed, "random seed");
  cmd.add_option("--format", f.format, "csv | json");
  cmd.add_option("--out", f.out, "output directory (default: stdout)");
  cmd.add_option("--points", f.points, "input points, e.g. '1,1.41;-1,1.41'");
}

ScenarioConfig resolve(const Flags& f) {
  ScenarioConfig config;
  if (f.config) apply_config_file(*f.config, config);
  try {
    if (f.model) config.model = hadamard::parse_model(*f.model);
  } catch (const hadamard::GeometryError& e) {
    throw UsageError(e.what());
  }
  if (f.dim) config.dim = *f.dim;
  if (f.base) config.base = parse_coords(*f.base);
  if (f.grid) config.grid = *f.grid;
  if (f.t_grid) config.t_grid = *f.t_grid;
  if (f.tol) config.tol = *f.tol;
  if (f.k_max) config.k_max = *f.k_max;
  if (f.seed) config.seed = *f.seed;
  if (f.format) config.format = parse_format(*f.format);
  if (f.out) config.output_dir = *f.out;
  if (f.points) config.points = parse_point_list(*f.points);
  if (config.model == hadamard::Model::Euclidean && !f.dim) {
    if (config.base)
      config.dim = static_cast<int>(config.base->size());
    else if (!config.points.empty())
      config.dim = static_cast<int>(config.points.front().size());
  }
  return config;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Convexity probes on flat and hyperbolic Hadamard manifolds"};
  app.require_subcommand(1);

  Flags flags;
  auto* example = app.add_subcommand("example", "reproduce the half-plane counterexample with hull polylines");
  auto* probes = app.add_subcommand("probes", "run the five flatness probes as JSON lines");
  auto* hull = app.add_subcommand("hull", "iterated geodesic closure of a point set");
  auto* curve = app.add_subcommand("curve", "exp-interpolated curve against the true geodesic");
  for (CLI::App* cmd : {example, probes, hull, curve}) add_flags(*cmd, flags);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : hadamard::scenario::kExitUsage;
  }

  try {
    const ScenarioConfig config = resolve(flags);
    if (example->parsed()) return hadamard::scenario::run_example(config, std::cout, std::cerr);
    if (probes->parsed()) return hadamard::scenario::run_probe_suite(config, std::cout, std::cerr);
    if (hull->parsed()) return hadamard::scenario::run_hull(config, std::cout, std::cerr);
    if (curve->parsed()) return hadamard::scenario::run_curve(config, std::cout, std::cerr);
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return hadamard::scenario::kExitUsage;
  } catch (const hadamard::GeometryError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return hadamard::scenario::kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return hadamard::scenario::kExitFail;
  }
  return hadamard::scenario::kExitUsage;
}
