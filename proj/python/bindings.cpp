#include "hadamard/convexity.hpp"
#include "hadamard/halfplane.hpp"
#include "hadamard/manifold.hpp"
#include "hadamard/probes.hpp"
#include "hadamard/scenario.hpp"

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <optional>
#include <vector>

namespace py = pybind11;

namespace {

using hadamard::Coords;
using hadamard::ManifoldPoint;
using hadamard::Model;
using hadamard::PointCloud;
using hadamard::TangentVector;
namespace pr = hadamard::probes;
namespace sc = hadamard::scenario;

using Vec = std::vector<double>;

Coords to_coords(const Vec& v) {
  if (v.empty() || static_cast<int>(v.size()) > hadamard::kMaxDim)
    throw hadamard::GeometryError("coordinate vectors need between 1 and 16 entries");
  return Eigen::Map<const Eigen::VectorXd>(v.data(), static_cast<Eigen::Index>(v.size()));
}

Vec to_vec(const Coords& c) { return {c.data(), c.data() + c.size()}; }

ManifoldPoint point(Model model, const Vec& v) { return {model, to_coords(v)}; }
TangentVector tangent(const ManifoldPoint& p, const Vec& v) { return {p, to_coords(v)}; }

PointCloud cloud(Model model, const std::vector<Vec>& points) {
  PointCloud out(model);
  for (const Vec& v : points) out.push_back(point(model, v));
  return out;
}

std::vector<Vec> rows(const PointCloud& c) {
  std::vector<Vec> out;
  out.reserve(c.size());
  for (const ManifoldPoint& p : c) out.push_back(to_vec(p.coords()));
  return out;
}

py::dict report_dict(const pr::DefectReport& r) {
  py::dict d;
  d["clause"] = std::string(pr::clause_name(r.clause));
  d["model"] = std::string(hadamard::model_name(r.model));
  d["defect"] = r.defect;
  d["argmax_param"] = r.argmax_param;
  d["sample_count"] = r.sample_count;
  d["seed"] = r.seed;
  d["degenerate"] = r.degenerate;
  py::dict details;
  for (const auto& [k, v] : r.details) details[py::str(k)] = v;
  d["details"] = details;
  return d;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Exponential maps, geodesic hulls and flatness probes on R^n and the hyperbolic half-plane";

  py::enum_<Model>(m, "Model")
      .value("EUCLIDEAN", Model::Euclidean)
      .value("HALFPLANE", Model::HalfPlane);

  m.def("dist", [](Model model, const Vec& p, const Vec& q) { return hadamard::dist(point(model, p), point(model, q)); },
        py::arg("model"), py::arg("p"), py::arg("q"));
  m.def(
      "exp",
      [](Model model, const Vec& p, const Vec& w) {
        const ManifoldPoint base = point(model, p);
        return to_vec(hadamard::exp_map(base, tangent(base, w)).coords());
      },
      py::arg("model"), py::arg("p"), py::arg("w"));
  m.def(
      "log",
      [](Model model, const Vec& p, const Vec& q) {
        return to_vec(hadamard::log_map(point(model, p), point(model, q)).components());
      },
      py::arg("model"), py::arg("p"), py::arg("q"));
  m.def(
      "geodesic_point",
      [](Model model, const Vec& q1, const Vec& q2, double t) {
        return to_vec(hadamard::geodesic_point(point(model, q1), point(model, q2), t).coords());
      },
      py::arg("model"), py::arg("q1"), py::arg("q2"), py::arg("t"));
  m.def(
      "metric_inner",
      [](Model model, const Vec& p, const Vec& u, const Vec& v) {
        const ManifoldPoint base = point(model, p);
        return hadamard::metric_inner(base, tangent(base, u), tangent(base, v));
      },
      py::arg("model"), py::arg("p"), py::arg("u"), py::arg("v"));

  m.def(
      "hp_exp_base",
      [](double alpha, double beta) { return to_vec(hadamard::halfplane::exp_base({alpha, beta}).coords()); },
      py::arg("alpha"), py::arg("beta"));
  m.def(
      "hp_log_base",
      [](const Vec& q) {
        const Eigen::Vector2d w = hadamard::halfplane::log_base(point(Model::HalfPlane, q));
        return Vec{w[0], w[1]};
      },
      py::arg("q"));

  m.def(
      "gc_point",
      [](Model model, const Vec& p, const std::vector<Vec>& support, const Vec& weights) {
        std::vector<ManifoldPoint> pts;
        for (const Vec& v : support) pts.push_back(point(model, v));
        return to_vec(hadamard::gc_point(point(model, p), hadamard::WeightedSupport(std::move(pts), weights)).coords());
      },
      py::arg("model"), py::arg("p"), py::arg("support"), py::arg("weights"));
  m.def(
      "gc_hull_sample",
      [](Model model, const Vec& p, const std::vector<Vec>& S, int weight_grid) {
        return rows(hadamard::gc_hull_sample(point(model, p), cloud(model, S), weight_grid));
      },
      py::arg("model"), py::arg("p"), py::arg("S"), py::arg("weight_grid"));
  m.def(
      "exp_interp_curve",
      [](Model model, const Vec& p, const Vec& q1, const Vec& q2, int n_samples) {
        return rows(hadamard::exp_interp_curve(point(model, p), point(model, q1), point(model, q2), n_samples));
      },
      py::arg("model"), py::arg("p"), py::arg("q1"), py::arg("q2"), py::arg("n_samples"));
  m.def(
      "convex_hull",
      [](Model model, const std::vector<Vec>& S, int seg_samples, double tol, int k_max, std::size_t pair_budget,
         std::uint64_t seed) {
        const hadamard::HullResult r =
            hadamard::convex_hull_approx(cloud(model, S), {seg_samples, tol, k_max, pair_budget, seed});
        py::dict d;
        d["points"] = rows(r.cloud);
        d["iterations"] = r.iterations;
        d["converged"] = r.converged;
        d["tolerance"] = r.tolerance;
        return d;
      },
      py::arg("model"), py::arg("S"), py::arg("seg_samples") = 32, py::arg("tol") = 0.0, py::arg("k_max") = 8,
      py::arg("pair_budget") = 4096, py::arg("seed") = 0);
  m.def(
      "hausdorff",
      [](Model model, const std::vector<Vec>& A, const std::vector<Vec>& B) {
        return hadamard::hausdorff(cloud(model, A), cloud(model, B));
      },
      py::arg("model"), py::arg("A"), py::arg("B"));

  m.def(
      "affinity_defect",
      [](Model model, const Vec& p, const Vec& y, const std::vector<std::pair<Vec, Vec>>& geodesics, int t_grid) {
        const ManifoldPoint base = point(model, p);
        std::vector<pr::GeodesicPair> pairs;
        for (const auto& [a, b] : geodesics) pairs.emplace_back(point(model, a), point(model, b));
        return report_dict(pr::affinity_defect(base, tangent(base, y), pairs, t_grid));
      },
      py::arg("model"), py::arg("p"), py::arg("y"), py::arg("geodesics"), py::arg("t_grid") = 16);
  m.def(
      "exp_interp_deviation",
      [](Model model, const Vec& p, const Vec& q1, const Vec& q2, int t_grid) {
        return report_dict(pr::exp_interp_deviation(point(model, p), point(model, q1), point(model, q2), t_grid));
      },
      py::arg("model"), py::arg("p"), py::arg("q1"), py::arg("q2"), py::arg("t_grid") = 16);
  m.def(
      "hull_discrepancy",
      [](Model model, const Vec& p, const std::vector<Vec>& S, int seg_samples, int k_max) {
        hadamard::HullSettings settings;
        settings.seg_samples = seg_samples;
        settings.k_max = k_max;
        return report_dict(pr::hull_discrepancy(point(model, p), cloud(model, S), settings));
      },
      py::arg("model"), py::arg("p"), py::arg("S"), py::arg("seg_samples") = 32, py::arg("k_max") = 8);
  m.def(
      "exp_isometry_defect",
      [](Model model, const Vec& p, int n_pairs, double radius, std::uint64_t seed) {
        return report_dict(pr::exp_isometry_defect(point(model, p), n_pairs, radius, seed));
      },
      py::arg("model"), py::arg("p"), py::arg("n_pairs") = 64, py::arg("radius") = 1.0, py::arg("seed") = 0);
  m.def(
      "curvature_estimate",
      [](Model model, const Vec& p, double r, int n_circle) {
        return pr::curvature_estimate(point(model, p), r, n_circle);
      },
      py::arg("model"), py::arg("p"), py::arg("r") = 0.01, py::arg("n_circle") = 512);

  m.def(
      "probe_suite",
      [](Model model, int dim, std::optional<Vec> base, std::uint64_t seed) {
        sc::ScenarioConfig config;
        config.model = model;
        config.dim = dim;
        if (base) config.base = to_coords(*base);
        config.seed = seed;
        const sc::SuiteResult r = sc::compute_probe_suite(config);
        py::list reports;
        for (const pr::DefectReport& report : r.reports) reports.append(report_dict(report));
        py::dict d;
        d["reports"] = reports;
        d["signature_holds"] = r.signature_holds;
        return d;
      },
      py::arg("model") = Model::HalfPlane, py::arg("dim") = 2, py::arg("base") = py::none(), py::arg("seed") = 1);
  m.def(
      "example",
      [](int grid) {
        sc::ScenarioConfig config;
        config.grid = grid;
        const sc::ExampleResult r = sc::compute_example(config);
        py::dict table;
        for (const sc::ExampleRow& row : r.rows) table[py::str(row.name)] = py::make_tuple(row.computed, row.reference);
        py::dict d;
        d["table"] = table;
        d["x"] = r.x;
        d["hull_discrepancy"] = r.hull_discrepancy;
        d["hull_polyline"] = rows(r.hull_polyline);
        d["gc_polyline"] = rows(r.gc_polyline);
        d["pass"] = r.pass();
        return d;
      },
      py::arg("grid") = 256);

  py::register_exception<sc::UsageError>(m, "UsageError", PyExc_ValueError);
}
