#include "hadamard/scenario.hpp"

#include "hadamard/halfplane.hpp"

#include <fmt/format.h>

#include <algorithm>
#include <cmath>
#include <fstream>
#include <ostream>
#include <random>
#include <sstream>

namespace hadamard::scenario {

namespace {

using probes::Clause;
using probes::DefectReport;

const double kSqrt2 = std::sqrt(2.0);
const double kSqrt3 = std::sqrt(3.0);

// alpha = ln(1 + sqrt 2) / sqrt 2, the common coordinate of both log vectors.
double example_alpha() { return std::log1p(kSqrt2) / kSqrt2; }

ManifoldPoint example_q1() { return ManifoldPoint::halfplane(1.0, kSqrt2); }
ManifoldPoint example_q2() { return ManifoldPoint::halfplane(-1.0, kSqrt2); }

// Thresholds of the half-plane signature.
constexpr double kMinAffinity = 0.07;
constexpr double kMinInterp = 0.07;
constexpr double kMinHull = 0.05;
constexpr double kMinIsometry = 0.07;
constexpr double kCurvatureLow = -1.05;
constexpr double kCurvatureHigh = -0.95;

constexpr double kCurvatureRadius = 0.01;
constexpr int kCurvatureSamples = 512;
constexpr int kRandomGeodesics = 8;
constexpr int kRandomTangentPairs = 64;

double detail(const DefectReport& report, std::string_view key) {
  for (const auto& [name, value] : report.details)
    if (name == key) return value;
  return std::nan("");
}

ManifoldPoint default_base(const ScenarioConfig& config) {
  if (config.base) return {config.model, *config.base};
  if (config.model == Model::HalfPlane) return halfplane::origin();
  std::mt19937_64 rng(config.seed);
  std::uniform_real_distribution<double> coord(-5.0, 5.0);
  Coords c(config.dim);
  for (int i = 0; i < config.dim; ++i) c[i] = coord(rng);
  return ManifoldPoint::euclidean(c);
}

std::vector<ManifoldPoint> input_points(const ScenarioConfig& config) {
  std::vector<ManifoldPoint> points;
  for (const Coords& c : config.points) points.emplace_back(config.model, c);
  return points;
}

std::string csv_header(int dim) {
  if (dim == 2) return "t_or_index,u,v";
  std::string header = "t_or_index";
  for (int i = 1; i <= dim; ++i) header += fmt::format(",x{}", i);
  return header;
}

void write_polyline(std::ostream& os, const PointCloud& cloud, const std::vector<double>& params) {
  os << csv_header(cloud.empty() ? 2 : cloud[0].dim()) << '\n';
  for (std::size_t i = 0; i < cloud.size(); ++i) {
    os << format_real(params[i]);
    for (double c : cloud[i].coords()) os << ',' << format_real(c);
    os << '\n';
  }
}

std::vector<double> index_params(std::size_t n) {
  std::vector<double> params(n);
  for (std::size_t i = 0; i < n; ++i) params[i] = static_cast<double>(i);
  return params;
}

std::vector<double> unit_params(std::size_t n) {
  std::vector<double> params(n);
  for (std::size_t i = 0; i < n; ++i) params[i] = n == 1 ? 0.0 : static_cast<double>(i) / static_cast<double>(n - 1);
  return params;
}

std::string json_coords(const ManifoldPoint& p) {
  std::string s = "[";
  for (int i = 0; i < p.dim(); ++i) s += (i ? "," : "") + format_real(p[i]);
  return s + "]";
}

std::ofstream open_output(const ScenarioConfig& config, const std::string& name) {
  std::filesystem::create_directories(*config.output_dir);
  std::ofstream os(*config.output_dir / name, std::ios::binary);
  if (!os) throw UsageError(fmt::format("cannot write {}", (*config.output_dir / name).string()));
  return os;
}

HullSettings hull_settings(const ScenarioConfig& config) {
  HullSettings settings;
  settings.seg_samples = config.grid;
  settings.tol = config.tol.value_or(0.0);
  settings.k_max = config.k_max;
  settings.seed = config.seed;
  return settings;
}

}  // namespace

void validate(const ScenarioConfig& config) {
  if (config.grid < 1) throw UsageError("--grid must be positive");
  if (config.t_grid < 1) throw UsageError("--t-grid must be positive");
  if (config.k_max < 1) throw UsageError("--k-max must be positive");
  if (config.tol && !(*config.tol > 0.0)) throw UsageError("--tol must be positive");
  if (config.model == Model::Euclidean && (config.dim < 1 || config.dim > kMaxDim))
    throw UsageError(fmt::format("--dim must lie in [1, {}]", kMaxDim));
  const int dim = config.model == Model::HalfPlane ? 2 : config.dim;
  try {
    if (config.base) {
      if (config.base->size() != dim) throw UsageError(fmt::format("--base needs {} coordinates", dim));
      ManifoldPoint(config.model, *config.base);
    }
    for (const Coords& c : config.points) {
      if (c.size() != dim) throw UsageError(fmt::format("every point needs {} coordinates", dim));
      ManifoldPoint(config.model, c);
    }
  } catch (const GeometryError& e) {
    throw UsageError(e.what());
  }
}

std::string format_real(double x) { return fmt::format("{:.17g}", x); }

double ExampleRow::error() const { return std::abs(computed - reference); }

bool ExampleResult::pass() const {
  return x_exceeds_sqrt3 && hulls_differ && endpoints_shared &&
         std::all_of(rows.begin(), rows.end(), [](const ExampleRow& r) { return r.pass(); });
}

ExampleResult compute_example(const ScenarioConfig& config) {
  validate(config);
  if (config.model != Model::HalfPlane) throw UsageError("the example lives on the half-plane");
  if (config.base && !(ManifoldPoint(Model::HalfPlane, *config.base) == halfplane::origin()))
    throw UsageError("the example is defined at the base point (0, 1)");

  const ManifoldPoint p = halfplane::origin();
  const ManifoldPoint q1 = example_q1();
  const ManifoldPoint q2 = example_q2();
  const double alpha = example_alpha();
  const double x_ref = std::pow(kSqrt2 + 1.0, 1.0 / kSqrt2);

  const Eigen::Vector2d eta1 = halfplane::log_base(q1);
  const Eigen::Vector2d eta2 = halfplane::log_base(q2);
  const ManifoldPoint exp1 = halfplane::exp_base({alpha, alpha});
  const ManifoldPoint exp2 = halfplane::exp_base({-alpha, alpha});
  const ManifoldPoint gc_mid = gc_point(p, WeightedSupport({q1, q2}, {0.5, 0.5}));
  const ManifoldPoint geo_mid = geodesic_point(q1, q2, 0.5);
  const auto carrier_k = halfplane::geodesic_params(p, q1);
  const auto carrier_cs = halfplane::geodesic_params(q1, q2);

  ExampleResult result;
  result.x = gc_mid[1];

  const PointCloud S(Model::HalfPlane, {q1, q2});
  const HullResult hull = convex_hull_approx(S, hull_settings(config));
  double arc_residual = 0.0;
  for (const ManifoldPoint& q : hull.cloud) arc_residual = std::max(arc_residual, std::abs(carrier_cs.residual(q)));

  std::vector<ManifoldPoint> ordered = hull.cloud.points();
  std::stable_sort(ordered.begin(), ordered.end(),
                   [&](const ManifoldPoint& a, const ManifoldPoint& b) { return dist(q1, a) < dist(q1, b); });
  result.hull_polyline = PointCloud(Model::HalfPlane, std::move(ordered));
  result.gc_polyline = exp_interp_curve(p, q1, q2, config.grid);
  result.hull_discrepancy = hausdorff(hull.cloud, gc_hull_sample(p, S, config.grid));

  const double tight = kTolerances.comparison;
  const double loose = kTolerances.round_trip;
  result.rows = {
      {"alpha", eta1[0], alpha, tight},
      {"eta1_beta", eta1[1], alpha, tight},
      {"eta2_alpha", eta2[0], -alpha, tight},
      {"eta2_beta", eta2[1], alpha, tight},
      {"norm_eta1", std::hypot(eta1[0], eta1[1]), std::log1p(kSqrt2), tight},
      {"exp_eta1_u", exp1[0], 1.0, loose},
      {"exp_eta1_v", exp1[1], kSqrt2, loose},
      {"exp_eta2_u", exp2[0], -1.0, loose},
      {"exp_eta2_v", exp2[1], kSqrt2, loose},
      {"x", result.x, x_ref, loose},
      {"gc_midpoint_u", gc_mid[0], 0.0, loose},
      {"geodesic_midpoint_u", geo_mid[0], 0.0, loose},
      {"sqrt3", geo_mid[1], kSqrt3, loose},
      {"dist_q1_q2", dist(q1, q2), std::acosh(2.0), tight},
      {"dist_p_q1", dist(p, q1), std::log1p(kSqrt2), tight},
      {"carrier_K_center", carrier_k.center_u, 1.0, loose},
      {"carrier_K_radius", carrier_k.radius, kSqrt2, loose},
      {"carrier_CS_center", carrier_cs.center_u, 0.0, loose},
      {"carrier_CS_radius", carrier_cs.radius, kSqrt3, loose},
      {"midpoint_separation", dist(gc_mid, geo_mid), std::log(x_ref / kSqrt3), loose},
      {"hull_arc_residual", arc_residual, 0.0, 1e-6},
  };

  result.x_exceeds_sqrt3 = result.x > kSqrt3;
  result.hulls_differ = hull.converged && result.hull_discrepancy >= kMinHull;
  auto near = [&](const ManifoldPoint& a, const ManifoldPoint& b) { return dist(a, b) <= loose; };
  const auto& hp = result.hull_polyline.points();
  const auto& gp = result.gc_polyline.points();
  result.endpoints_shared = near(hp.front(), q1) && near(hp.back(), q2) && near(gp.front(), q1) && near(gp.back(), q2);
  return result;
}

int run_example(const ScenarioConfig& config, std::ostream& out, std::ostream& log) {
  const ExampleResult result = compute_example(config);
  const bool pass = result.pass();
  const std::string verdict =
      fmt::format("VERDICT {}: x = {} {} sqrt(3) = {}; hausdorff(C(S), GC_p(S)) = {} ({} {})", pass ? "PASS" : "FAIL",
                  format_real(result.x), result.x_exceeds_sqrt3 ? ">" : "<=", format_real(kSqrt3),
                  format_real(result.hull_discrepancy), result.hulls_differ ? ">=" : "<", format_real(kMinHull));

  std::ostringstream table;
  if (config.format == Format::Csv) {
    table << "quantity,computed,reference,abs_error,tolerance,pass\n";
    for (const ExampleRow& r : result.rows)
      table << r.name << ',' << format_real(r.computed) << ',' << format_real(r.reference) << ','
            << format_real(r.error()) << ',' << format_real(r.tolerance) << ',' << (r.pass() ? 1 : 0) << '\n';
  } else {
    table << "{\"rows\":[";
    for (std::size_t i = 0; i < result.rows.size(); ++i) {
      const ExampleRow& r = result.rows[i];
      table << (i ? "," : "")
            << fmt::format(R"({{"quantity":"{}","computed":{},"reference":{},"abs_error":{},"tolerance":{},"pass":{}}})",
                           r.name, format_real(r.computed), format_real(r.reference), format_real(r.error()),
                           format_real(r.tolerance), r.pass());
    }
    table << fmt::format(R"(],"x":{},"sqrt3":{},"hull_discrepancy":{},"verdict":"{}"}})", format_real(result.x),
                         format_real(kSqrt3), format_real(result.hull_discrepancy), pass ? "PASS" : "FAIL")
          << '\n';
  }

  if (config.output_dir) {
    open_output(config, config.format == Format::Csv ? "example_table.csv" : "example_table.json") << table.str();
    auto hull_os = open_output(config, "hull_polyline.csv");
    write_polyline(hull_os, result.hull_polyline, index_params(result.hull_polyline.size()));
    auto gc_os = open_output(config, "gc_polyline.csv");
    write_polyline(gc_os, result.gc_polyline, unit_params(result.gc_polyline.size()));
  } else {
    out << table.str();
  }
  log << verdict << '\n';
  return pass ? kExitPass : kExitFail;
}

double zero_tolerance(Clause clause) { return clause == Clause::Curvature ? 1e-6 : 1e-9; }

SuiteResult compute_probe_suite(const ScenarioConfig& config) {
  validate(config);
  if (config.model == Model::Euclidean && config.dim < 2)
    throw UsageError("the probe suite needs dimension >= 2 for the curvature clause");

  const ManifoldPoint p = default_base(config);
  const HullSettings settings = hull_settings(config);

  std::vector<probes::GeodesicPair> geodesics;
  std::vector<probes::TangentPair> tangent_pairs;
  ManifoldPoint q1 = p;
  ManifoldPoint q2 = p;
  Coords y_components(p.dim());

  if (config.model == Model::HalfPlane) {
    // The example carried from (0, 1) to p.
    const auto to_p = halfplane::Similarity::from_origin_to(p);
    q1 = to_p.apply(example_q1());
    q2 = to_p.apply(example_q2());
    y_components << 0.0, to_p.scale;
    const double a = example_alpha() * to_p.scale;
    Coords u(2), v(2);
    u << a, a;
    v << -a, a;
    tangent_pairs.emplace_back(TangentVector(p, u), TangentVector(p, v));
  } else {
    std::mt19937_64 rng(config.seed ^ 0x5bd1e995ULL);
    std::uniform_real_distribution<double> coord(-5.0, 5.0);
    std::uniform_real_distribution<double> unit(-1.0, 1.0);
    Coords a(p.dim()), b(p.dim());
    for (int i = 0; i < p.dim(); ++i) {
      a[i] = coord(rng);
      b[i] = coord(rng);
      y_components[i] = unit(rng);
    }
    q1 = ManifoldPoint::euclidean(a);
    q2 = ManifoldPoint::euclidean(b);
  }
  geodesics.emplace_back(q1, q2);
  for (const auto& [u, v] : probes::random_tangent_pairs(p, kRandomGeodesics, 2.0, config.seed))
    geodesics.emplace_back(exp_map(p, u), exp_map(p, v));
  for (auto& pair : probes::random_tangent_pairs(p, kRandomTangentPairs, 1.0, config.seed + 1))
    tangent_pairs.push_back(std::move(pair));

  SuiteResult suite;
  suite.reports.push_back(probes::affinity_defect(p, TangentVector(p, y_components), geodesics, config.t_grid));
  suite.reports.push_back(probes::exp_interp_deviation(p, q1, q2, config.t_grid));
  suite.reports.push_back(probes::hull_discrepancy(p, PointCloud(p.model(), {q1, q2}), settings, config.grid));
  suite.reports.push_back(probes::exp_isometry_defect(p, tangent_pairs));
  suite.reports.push_back(probes::curvature_report(p, kCurvatureRadius, kCurvatureSamples));
  for (DefectReport& r : suite.reports) r.seed = config.seed;
  suite.signature_holds = signature_holds(config.model, suite.reports);
  return suite;
}

bool signature_holds(Model model, const std::vector<DefectReport>& reports) {
  if (reports.size() != 5) return false;
  if (model == Model::Euclidean) {
    return std::all_of(reports.begin(), reports.end(),
                       [](const DefectReport& r) { return r.defect <= zero_tolerance(r.clause); });
  }
  for (const DefectReport& r : reports) {
    switch (r.clause) {
      case Clause::Affinity:
        if (!(r.defect >= kMinAffinity)) return false;
        break;
      case Clause::ExpInterpGeodesic:
        if (!(r.defect >= kMinInterp)) return false;
        break;
      case Clause::HullEquality:
        if (!(r.defect >= kMinHull)) return false;
        break;
      case Clause::ExpIsometry:
        if (!(r.defect >= kMinIsometry)) return false;
        break;
      case Clause::Curvature: {
        const double k = detail(r, "curvature");
        if (!(k >= kCurvatureLow && k <= kCurvatureHigh)) return false;
        break;
      }
    }
  }
  return true;
}

std::string report_to_json(const DefectReport& report) {
  std::string argmax;
  for (std::size_t i = 0; i < report.argmax_param.size(); ++i)
    argmax += (i ? "," : "") + format_real(report.argmax_param[i]);
  std::string details;
  for (std::size_t i = 0; i < report.details.size(); ++i)
    details += fmt::format("{}\"{}\":{}", i ? "," : "", report.details[i].first, format_real(report.details[i].second));
  return fmt::format(
      R"({{"clause":"{}","model":"{}","defect":{},"status":"{}","argmax_param":[{}],"sample_count":{},"seed":{},"degenerate":{},"details":{{{}}}}})",
      probes::clause_name(report.clause), model_name(report.model), format_real(report.defect),
      report.status(zero_tolerance(report.clause)), argmax, report.sample_count, report.seed, report.degenerate,
      details);
}

int run_probe_suite(const ScenarioConfig& config, std::ostream& out, std::ostream& log) {
  const SuiteResult suite = compute_probe_suite(config);
  std::ostringstream lines;
  for (const DefectReport& r : suite.reports) lines << report_to_json(r) << '\n';
  if (config.output_dir)
    open_output(config, "probes.jsonl") << lines.str();
  else
    out << lines.str();
  log << fmt::format("SIGNATURE {}: {} model, seed {}\n", suite.signature_holds ? "PASS" : "FAIL",
                     model_name(config.model), config.seed);
  return suite.signature_holds ? kExitPass : kExitFail;
}

int run_hull(const ScenarioConfig& config, std::ostream& out, std::ostream& log) {
  validate(config);
  std::vector<ManifoldPoint> points = input_points(config);
  if (points.empty()) {
    if (config.model != Model::HalfPlane) throw UsageError("hull on R^n needs --points");
    points = {example_q1(), example_q2()};
  }
  const HullResult hull = convex_hull_approx(PointCloud(config.model, std::move(points)), hull_settings(config));

  std::ostringstream iterations;
  std::ostringstream cloud;
  if (config.format == Format::Csv) {
    iterations << "k,size,pairs,subsampled,residual\n";
    for (const HullIteration& it : hull.history)
      iterations << it.k << ',' << it.size << ',' << it.pairs << ',' << (it.subsampled ? 1 : 0) << ','
                 << format_real(it.residual) << '\n';
    write_polyline(cloud, hull.cloud, index_params(hull.cloud.size()));
  } else {
    iterations << "{\"history\":[";
    for (std::size_t i = 0; i < hull.history.size(); ++i) {
      const HullIteration& it = hull.history[i];
      iterations << (i ? "," : "")
                 << fmt::format(R"({{"k":{},"size":{},"pairs":{},"subsampled":{},"residual":{}}})", it.k, it.size,
                                it.pairs, it.subsampled, format_real(it.residual));
    }
    iterations << fmt::format(R"(],"iterations":{},"converged":{},"tolerance":{},"seed":{},"cloud":[)",
                              hull.iterations, hull.converged, format_real(hull.tolerance), config.seed);
    for (std::size_t i = 0; i < hull.cloud.size(); ++i) iterations << (i ? "," : "") << json_coords(hull.cloud[i]);
    iterations << "]}\n";
  }

  if (config.output_dir) {
    if (config.format == Format::Csv) {
      open_output(config, "hull_iterations.csv") << iterations.str();
      open_output(config, "hull_cloud.csv") << cloud.str();
    } else {
      open_output(config, "hull.json") << iterations.str();
    }
  } else {
    out << iterations.str();
  }
  log << fmt::format("HULL {}: k = {}, {} points, tolerance {}, seed {}\n",
                     hull.converged ? "CONVERGED" : "NOT CONVERGED", hull.iterations, hull.cloud.size(),
                     format_real(hull.tolerance), config.seed);
  return hull.converged ? kExitPass : kExitFail;
}

int run_curve(const ScenarioConfig& config, std::ostream& out, std::ostream& log) {
  validate(config);
  std::vector<ManifoldPoint> points = input_points(config);
  if (points.empty()) {
    if (config.model != Model::HalfPlane) throw UsageError("curve on R^n needs two --points");
    points = {example_q1(), example_q2()};
  }
  if (points.size() != 2) throw UsageError("curve needs exactly two points");
  const ManifoldPoint p = default_base(config);
  const ManifoldPoint& q1 = points[0];
  const ManifoldPoint& q2 = points[1];

  const PointCloud interp = exp_interp_curve(p, q1, q2, config.t_grid);
  PointCloud geodesic(config.model);
  for (int i = 0; i <= config.t_grid; ++i) geodesic.push_back(geodesic_point(q1, q2, static_cast<double>(i) / config.t_grid));
  const probes::DefectReport deviation = probes::exp_interp_deviation(p, q1, q2, config.t_grid);
  const std::vector<double> ts = unit_params(interp.size());

  if (config.format == Format::Csv) {
    if (config.output_dir) {
      auto interp_os = open_output(config, "curve_interp.csv");
      write_polyline(interp_os, interp, ts);
      auto geo_os = open_output(config, "curve_geodesic.csv");
      write_polyline(geo_os, geodesic, ts);
    } else {
      write_polyline(out, interp, ts);
    }
  } else {
    std::ostringstream json;
    json << "{\"base\":" << json_coords(p) << ",\"interp\":[";
    for (std::size_t i = 0; i < interp.size(); ++i) json << (i ? "," : "") << json_coords(interp[i]);
    json << "],\"geodesic\":[";
    for (std::size_t i = 0; i < geodesic.size(); ++i) json << (i ? "," : "") << json_coords(geodesic[i]);
    json << "],\"max_deviation\":" << format_real(deviation.defect) << "}\n";
    if (config.output_dir)
      open_output(config, "curve.json") << json.str();
    else
      out << json.str();
  }
  log << fmt::format("CURVE: max distance from the true geodesic {} at t = {}\n", format_real(deviation.defect),
                     format_real(deviation.argmax_param.front()));
  return kExitPass;
}

}  // namespace hadamard::scenario
