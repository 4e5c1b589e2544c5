#pragma once

#include "hadamard/manifold.hpp"

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

namespace hadamard {

inline constexpr double kDefaultSnapResolution = 1e-4;

/// Finite sample of a subset of one manifold model.
///
/// Points are kept in insertion order. deduplicated() removes near
/// duplicates: after it, no two points are closer than snap_resolution / 2
/// in ambient coordinates.
class PointCloud {
 public:
  explicit PointCloud(Model model, double snap_resolution = kDefaultSnapResolution);
  PointCloud(Model model, std::vector<ManifoldPoint> points,
             double snap_resolution = kDefaultSnapResolution);

  void push_back(ManifoldPoint point);

  Model model() const { return model_; }
  double snap_resolution() const { return snap_resolution_; }
  const std::vector<ManifoldPoint>& points() const { return points_; }
  std::size_t size() const { return points_.size(); }
  bool empty() const { return points_.empty(); }
  const ManifoldPoint& operator[](std::size_t i) const { return points_[i]; }
  auto begin() const { return points_.begin(); }
  auto end() const { return points_.end(); }

  /// First-come greedy thinning: a point is kept unless an already kept point
  /// lies within snap_resolution / 2 of it.
  PointCloud deduplicated() const;

 private:
  Model model_;
  double snap_resolution_;
  std::vector<ManifoldPoint> points_;
};

/// Convex weights lambda_i >= 0, sum lambda_i = 1, attached to support points.
class WeightedSupport {
 public:
  WeightedSupport(std::vector<ManifoldPoint> points, std::vector<double> weights);

  const std::vector<ManifoldPoint>& points() const { return points_; }
  const std::vector<double>& weights() const { return weights_; }
  std::size_t size() const { return points_.size(); }

 private:
  std::vector<ManifoldPoint> points_;
  std::vector<double> weights_;
};

/// exp_p(sum_i lambda_i log_p(q_i)): one point of the geodesic convex hull
/// of the support taken with respect to the base point p.
ManifoldPoint gc_point(const ManifoldPoint& p, const WeightedSupport& support);

/// Samples GC_p(S) on the simplex lattice {j / weight_grid} over all points of S.
/// Supports are enumerated with the first weight decreasing, so for |S| = 2 the
/// output is the curve t -> exp_p((1-t) log_p q1 + t log_p q2) at
/// t = 0, 1/grid, ..., 1.
PointCloud gc_hull_sample(const ManifoldPoint& p, const PointCloud& S, int weight_grid);

/// exp_p((1-t) log_p q1 + t log_p q2) at t = i / n_samples, i = 0..n_samples.
PointCloud exp_interp_curve(const ManifoldPoint& p, const ManifoldPoint& q1,
                            const ManifoldPoint& q2, int n_samples);

struct HullSettings {
  int seg_samples = 32;
  // Stop when hausdorff(S_k, S_{k-1}) < tol. Non-positive selects
  // default_hull_tolerance().
  double tol = 0.0;
  int k_max = 8;
  // All-pairs joins are replaced by this many seeded random pairs once the
  // pair count exceeds it.
  std::size_t pair_budget = 4096;
  std::uint64_t seed = 0;
};

struct HullIteration {
  int k = 0;
  std::size_t size = 0;
  std::size_t pairs = 0;
  bool subsampled = false;
  double residual = 0.0;  // hausdorff(S_k, S_{k-1})
};

struct HullResult {
  PointCloud cloud;
  // Index k of the returned iterate S_k.
  int iterations = 0;
  bool converged = false;
  double tolerance = 0.0;
  std::vector<HullIteration> history;
};

/// Diameter of S divided by seg_samples: the largest gap a single sampled
/// geodesic join can leave.
double default_hull_tolerance(const PointCloud& S, int seg_samples);

/// Iterated geodesic closure S_0 = S, S_k = S_{k-1} joined pairwise by sampled
/// geodesic segments. Stops at the first k where S_k adds nothing beyond the
/// tolerance and returns S_{k-1}, so a two point set converges at k = 1 to its
/// sampled segment.
HullResult convex_hull_approx(const PointCloud& S, const HullSettings& settings = {});

struct HausdorffResult {
  double distance = 0.0;
  // Point realizing the maximum and which cloud it belongs to (0 = A, 1 = B).
  int side = 0;
  std::size_t index = 0;
};

/// Exact symmetric Hausdorff distance under the model's Riemannian distance.
HausdorffResult hausdorff_detail(const PointCloud& A, const PointCloud& B);
double hausdorff(const PointCloud& A, const PointCloud& B);

}  // namespace hadamard
