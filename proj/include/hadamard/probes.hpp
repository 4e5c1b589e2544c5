#pragma once

#include "hadamard/convexity.hpp"
#include "hadamard/manifold.hpp"

#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

// Sampled defect functionals for the five equivalent flatness conditions on a
// Hadamard manifold. Each one is zero on flat space; a strictly positive value
// is a counterexample to the corresponding condition.
namespace hadamard::probes {

enum class Clause : std::uint8_t { Affinity, ExpInterpGeodesic, HullEquality, ExpIsometry, Curvature };

std::string_view clause_name(Clause clause);

struct DefectReport {
  Clause clause = Clause::Affinity;
  Model model = Model::Euclidean;
  double defect = 0.0;
  // Locates the worst sample; meaning depends on the clause.
  std::vector<double> argmax_param;
  std::size_t sample_count = 0;
  std::uint64_t seed = 0;
  bool degenerate = false;
  std::vector<std::pair<std::string, double>> details;

  /// "falsified" when defect > tol, otherwise "consistent at sample level".
  /// A sampled defect can refute a universally quantified condition but never
  /// verify one.
  std::string_view status(double tol) const;
};

using GeodesicPair = std::pair<ManifoldPoint, ManifoldPoint>;
using TangentPair = std::pair<TangentVector, TangentVector>;

/// f_y(q) = g_p(log_p q, y).
double affine_probe(const ManifoldPoint& p, const TangentVector& y, const ManifoldPoint& q);

/// max over geodesics and t = j / t_grid of
/// |f_y(gamma(t)) - ((1 - t) f_y(gamma(0)) + t f_y(gamma(1)))|.
/// argmax_param = {geodesic index, t}.
DefectReport affinity_defect(const ManifoldPoint& p, const TangentVector& y,
                             std::span<const GeodesicPair> geodesics, int t_grid);

/// max over t = j / t_grid of the distance between the exp-interpolated curve
/// through p and the true geodesic from q1 to q2. argmax_param = {t}.
DefectReport exp_interp_deviation(const ManifoldPoint& p, const ManifoldPoint& q1,
                                  const ManifoldPoint& q2, int t_grid);

/// hausdorff(convex_hull_approx(S), gc_hull_sample(p, S, weight_grid)).
/// weight_grid <= 0 matches settings.seg_samples. argmax_param = coordinates of
/// the point realizing the Hausdorff distance.
DefectReport hull_discrepancy(const ManifoldPoint& p, const PointCloud& S, const HullSettings& settings,
                              int weight_grid = 0);

/// max over the pairs of |dist(exp_p u, exp_p v) - |u - v|_p|. The smallest
/// signed difference is reported under "min_signed_difference"; it is >= 0 up
/// to rounding on any Hadamard manifold. argmax_param = {pair index}.
DefectReport exp_isometry_defect(const ManifoldPoint& p, std::span<const TangentPair> pairs);

/// Seeded random tangent pairs at p: uniform direction in an orthonormal frame,
/// norm uniform in (0, radius].
std::vector<TangentPair> random_tangent_pairs(const ManifoldPoint& p, int n_pairs, double radius,
                                              std::uint64_t seed);

/// Same over random_tangent_pairs(p, n_pairs, radius, seed).
DefectReport exp_isometry_defect(const ManifoldPoint& p, int n_pairs, double radius, std::uint64_t seed);

/// Geodesic-circle estimate of sectional curvature at p:
///   K ~ 3 (P_flat(r) - P(r)) / (pi r^3)
/// where P(r) is the perimeter of the geodesic n-gon inscribed in the geodesic
/// circle of radius r and P_flat(r) = 2 n r sin(pi / n) its flat counterpart.
/// Requires 0 < r <= 0.1 and n_circle >= 64.
double curvature_estimate(const ManifoldPoint& p, double r, int n_circle);

/// Report wrapper: defect = |K|, estimate under "curvature", argmax_param = {r}.
DefectReport curvature_report(const ManifoldPoint& p, double r, int n_circle);

/// Orthonormal frame of the 2-plane spanned by the first two coordinate axes at p.
std::pair<TangentVector, TangentVector> orthonormal_pair(const ManifoldPoint& p);

}  // namespace hadamard::probes
