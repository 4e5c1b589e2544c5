#include "hadamard/probes.hpp"

#include <fmt/format.h>

#include <cmath>
#include <numbers>
#include <random>

namespace hadamard::probes {

std::string_view clause_name(Clause clause) {
  switch (clause) {
    case Clause::Affinity:
      return "affinity";
    case Clause::ExpInterpGeodesic:
      return "exp-interp-geodesic";
    case Clause::HullEquality:
      return "hull-equality";
    case Clause::ExpIsometry:
      return "exp-isometry";
    case Clause::Curvature:
      return "curvature";
  }
  return "unknown";
}

std::string_view DefectReport::status(double tol) const {
  return defect > tol ? "falsified" : "consistent at sample level";
}

namespace {

// Columns of an orthonormal basis of T_p M in model coordinates.
Coords frame_vector(const ManifoldPoint& p, int axis) {
  Coords e = Coords::Zero(p.dim());
  e[axis] = p.model() == Model::HalfPlane ? p[1] : 1.0;
  return e;
}

DefectReport empty_report(Clause clause, Model model) {
  DefectReport report;
  report.clause = clause;
  report.model = model;
  return report;
}

void require_grid(int grid, std::string_view what) {
  if (grid < 1) throw GeometryError(fmt::format("{}: grid must be positive", what));
}

}  // namespace

double affine_probe(const ManifoldPoint& p, const TangentVector& y, const ManifoldPoint& q) {
  return metric_inner(p, log_map(p, q), y);
}

DefectReport affinity_defect(const ManifoldPoint& p, const TangentVector& y,
                             std::span<const GeodesicPair> geodesics, int t_grid) {
  if (geodesics.empty()) throw GeometryError("affinity_defect: no geodesics to sample");
  require_grid(t_grid, "affinity_defect");
  require_based_at(p, y);

  DefectReport report = empty_report(Clause::Affinity, p.model());
  report.argmax_param = {0.0, 0.0};
  for (std::size_t g = 0; g < geodesics.size(); ++g) {
    const auto& [q1, q2] = geodesics[g];
    const GeodesicSegment segment(q1, q2);
    const double f0 = affine_probe(p, y, q1);
    const double f1 = affine_probe(p, y, q2);
    for (int j = 0; j <= t_grid; ++j) {
      const double t = static_cast<double>(j) / t_grid;
      const double gap = std::abs(affine_probe(p, y, segment.at(t)) - ((1.0 - t) * f0 + t * f1));
      if (gap > report.defect) {
        report.defect = gap;
        report.argmax_param = {static_cast<double>(g), t};
      }
      ++report.sample_count;
    }
  }
  return report;
}

DefectReport exp_interp_deviation(const ManifoldPoint& p, const ManifoldPoint& q1, const ManifoldPoint& q2,
                                  int t_grid) {
  require_grid(t_grid, "exp_interp_deviation");
  const PointCloud curve = exp_interp_curve(p, q1, q2, t_grid);

  DefectReport report = empty_report(Clause::ExpInterpGeodesic, p.model());
  report.degenerate = q1 == q2;
  report.argmax_param = {0.0};
  if (report.degenerate) {
    // The geodesic is constant; the defect is zero by definition.
    report.sample_count = static_cast<std::size_t>(t_grid) + 1;
    return report;
  }
  for (int j = 0; j <= t_grid; ++j) {
    const double t = static_cast<double>(j) / t_grid;
    const double d = dist(curve[j], geodesic_point(q1, q2, t));
    if (d > report.defect) {
      report.defect = d;
      report.argmax_param = {t};
    }
    ++report.sample_count;
  }
  return report;
}

DefectReport hull_discrepancy(const ManifoldPoint& p, const PointCloud& S, const HullSettings& settings,
                              int weight_grid) {
  const int grid = weight_grid > 0 ? weight_grid : settings.seg_samples;
  const HullResult hull = convex_hull_approx(S, settings);
  const PointCloud gc = gc_hull_sample(p, S, grid);
  const HausdorffResult h = hausdorff_detail(hull.cloud, gc);

  DefectReport report = empty_report(Clause::HullEquality, p.model());
  report.defect = h.distance;
  const ManifoldPoint& worst = h.side == 0 ? hull.cloud[h.index] : gc[h.index];
  report.argmax_param.assign(worst.coords().begin(), worst.coords().end());
  report.sample_count = hull.cloud.size() + gc.size();
  report.seed = settings.seed;
  report.degenerate = S.size() < 2;
  report.details = {{"hull_iterations", static_cast<double>(hull.iterations)},
                    {"hull_converged", hull.converged ? 1.0 : 0.0},
                    {"hull_tolerance", hull.tolerance},
                    {"hull_size", static_cast<double>(hull.cloud.size())},
                    {"gc_size", static_cast<double>(gc.size())}};
  return report;
}

DefectReport exp_isometry_defect(const ManifoldPoint& p, std::span<const TangentPair> pairs) {
  DefectReport report = empty_report(Clause::ExpIsometry, p.model());
  report.argmax_param = {0.0};
  double min_signed = 0.0;
  for (std::size_t i = 0; i < pairs.size(); ++i) {
    const auto& [u, v] = pairs[i];
    const double signed_gap = dist(exp_map(p, u), exp_map(p, v)) - norm(p, u - v);
    if (i == 0 || signed_gap < min_signed) min_signed = signed_gap;
    if (std::abs(signed_gap) > report.defect) {
      report.defect = std::abs(signed_gap);
      report.argmax_param = {static_cast<double>(i)};
    }
    ++report.sample_count;
  }
  report.details = {{"min_signed_difference", min_signed}};
  return report;
}

std::vector<TangentPair> random_tangent_pairs(const ManifoldPoint& p, int n_pairs, double radius,
                                              std::uint64_t seed) {
  if (n_pairs < 1) throw GeometryError("random_tangent_pairs: n_pairs must be positive");
  if (!(radius > 0.0) || !std::isfinite(radius)) throw GeometryError("random_tangent_pairs: radius must be positive");

  std::mt19937_64 rng(seed);
  std::normal_distribution<double> gaussian;
  std::uniform_real_distribution<double> uniform;
  const int dim = p.dim();
  auto sample = [&] {
    Coords direction(dim);
    do {
      for (int i = 0; i < dim; ++i) direction[i] = gaussian(rng);
    } while (direction.norm() == 0.0);
    direction.normalize();
    const double length = radius * (1.0 - uniform(rng));
    Coords components = Coords::Zero(dim);
    for (int i = 0; i < dim; ++i) components += (length * direction[i]) * frame_vector(p, i);
    return TangentVector(p, components);
  };

  std::vector<TangentPair> pairs;
  pairs.reserve(static_cast<std::size_t>(n_pairs));
  for (int i = 0; i < n_pairs; ++i) {
    TangentVector u = sample();
    TangentVector v = sample();
    pairs.emplace_back(std::move(u), std::move(v));
  }
  return pairs;
}

DefectReport exp_isometry_defect(const ManifoldPoint& p, int n_pairs, double radius, std::uint64_t seed) {
  DefectReport report = exp_isometry_defect(p, random_tangent_pairs(p, n_pairs, radius, seed));
  report.seed = seed;
  report.details.emplace_back("radius", radius);
  return report;
}

std::pair<TangentVector, TangentVector> orthonormal_pair(const ManifoldPoint& p) {
  if (p.dim() < 2) throw GeometryError("sectional curvature needs dimension >= 2");
  return {TangentVector(p, frame_vector(p, 0)), TangentVector(p, frame_vector(p, 1))};
}

double curvature_estimate(const ManifoldPoint& p, double r, int n_circle) {
  if (!(r > 0.0 && r <= 0.1)) throw GeometryError(fmt::format("curvature_estimate: r = {} outside (0, 0.1]", r));
  if (n_circle < 64) throw GeometryError("curvature_estimate: n_circle must be at least 64");

  const auto [e1, e2] = orthonormal_pair(p);
  auto circle_point = [&](int i) {
    const double theta = 2.0 * std::numbers::pi * i / n_circle;
    return exp_map(p, e1 * (r * std::cos(theta)) + e2 * (r * std::sin(theta)));
  };

  const ManifoldPoint first = circle_point(0);
  ManifoldPoint previous = first;
  double perimeter = 0.0;
  for (int i = 1; i <= n_circle; ++i) {
    ManifoldPoint current = i == n_circle ? first : circle_point(i);
    perimeter += dist(previous, current);
    previous = std::move(current);
  }
  const double flat_perimeter = 2.0 * n_circle * r * std::sin(std::numbers::pi / n_circle);
  return 3.0 * (flat_perimeter - perimeter) / (std::numbers::pi * r * r * r);
}

DefectReport curvature_report(const ManifoldPoint& p, double r, int n_circle) {
  const double k = curvature_estimate(p, r, n_circle);
  DefectReport report = empty_report(Clause::Curvature, p.model());
  report.defect = std::abs(k);
  report.argmax_param = {r};
  report.sample_count = static_cast<std::size_t>(n_circle);
  report.details = {{"curvature", k}};
  return report;
}

}  // namespace hadamard::probes
