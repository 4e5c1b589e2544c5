#include "hadamard/convexity.hpp"
#include "hadamard/halfplane.hpp"

#include "oracles.hpp"

#include <gtest/gtest.h>

#include <algorithm>
#include <cmath>
#include <random>

namespace {

using hadamard::Coords;
using hadamard::GeometryError;
using hadamard::HullSettings;
using hadamard::ManifoldPoint;
using hadamard::Model;
using hadamard::PointCloud;
using hadamard::WeightedSupport;

const double kSqrt2 = std::sqrt(2.0);

ManifoldPoint hp(double u, double v) { return ManifoldPoint::halfplane(u, v); }
ManifoldPoint r2(double x, double y) {
  Coords c(2);
  c << x, y;
  return ManifoldPoint::euclidean(c);
}

PointCloud example_set() { return PointCloud(Model::HalfPlane, {hp(1, kSqrt2), hp(-1, kSqrt2)}); }

// Distance from (x, y) to the filled triangle with vertices (0,0), (1,0), (0,1).
double dist_to_unit_triangle(double x, double y) {
  if (x >= 0 && y >= 0 && x + y <= 1) return 0.0;
  auto seg = [&](double ax, double ay, double bx, double by) {
    const double dx = bx - ax, dy = by - ay;
    const double t = std::clamp(((x - ax) * dx + (y - ay) * dy) / (dx * dx + dy * dy), 0.0, 1.0);
    return std::hypot(x - ax - t * dx, y - ay - t * dy);
  };
  return std::min({seg(0, 0, 1, 0), seg(1, 0, 0, 1), seg(0, 1, 0, 0)});
}

std::vector<Eigen::Vector2d> as_vectors(const PointCloud& c) {
  std::vector<Eigen::Vector2d> out;
  for (const ManifoldPoint& p : c) out.emplace_back(p[0], p[1]);
  return out;
}

}  // namespace

TEST(GcPoint, Examples) {
  const ManifoldPoint mid = hadamard::gc_point(hadamard::halfplane::origin(),
                                               WeightedSupport({hp(1, kSqrt2), hp(-1, kSqrt2)}, {0.5, 0.5}));
  EXPECT_NEAR(mid[0], 0.0, 1e-12);
  EXPECT_NEAR(mid[1], oracle::x_value(), 1e-12);

  const ManifoldPoint flat = hadamard::gc_point(r2(-3, 8), WeightedSupport({r2(0, 0), r2(2, 0)}, {0.5, 0.5}));
  EXPECT_NEAR(flat[0], 1.0, 1e-12);
  EXPECT_NEAR(flat[1], 0.0, 1e-12);

  const ManifoldPoint single = hadamard::gc_point(hadamard::halfplane::origin(), WeightedSupport({hp(1, kSqrt2)}, {1.0}));
  EXPECT_NEAR(single[0], 1.0, 1e-9);
  EXPECT_NEAR(single[1], kSqrt2, 1e-9);
}

TEST(WeightedSupport, RejectsBadWeights) {
  EXPECT_THROW(WeightedSupport({hp(0, 1), hp(1, 1)}, {0.6, 0.6}), GeometryError);
  EXPECT_THROW(WeightedSupport({hp(0, 1), hp(1, 1)}, {1.5, -0.5}), GeometryError);
  EXPECT_THROW(WeightedSupport({hp(0, 1)}, {0.5, 0.5}), GeometryError);
  EXPECT_THROW(WeightedSupport({}, {}), GeometryError);
  EXPECT_NO_THROW(WeightedSupport({hp(0, 1), hp(1, 1)}, {0.3, 0.7}));
}

TEST(GcPoint, RejectsMixedModels) {
  EXPECT_THROW(hadamard::gc_point(r2(0, 1), WeightedSupport({hp(1, kSqrt2)}, {1.0})), GeometryError);
}

TEST(GcHullSample, Examples) {
  const ManifoldPoint p = hadamard::halfplane::origin();
  const PointCloud grid2 = hadamard::gc_hull_sample(p, example_set(), 2);
  ASSERT_EQ(grid2.size(), 3u);
  EXPECT_NEAR(grid2[0][0], 1.0, 1e-9);
  EXPECT_NEAR(grid2[0][1], kSqrt2, 1e-9);
  EXPECT_NEAR(grid2[1][0], 0.0, 1e-12);
  EXPECT_NEAR(grid2[1][1], oracle::x_value(), 1e-12);
  EXPECT_NEAR(grid2[2][0], -1.0, 1e-9);
  EXPECT_NEAR(grid2[2][1], kSqrt2, 1e-9);

  const double a = oracle::alpha();
  const PointCloud grid4 = hadamard::gc_hull_sample(p, example_set(), 4);
  ASSERT_EQ(grid4.size(), 5u);
  const ManifoldPoint quarter = hadamard::halfplane::exp_base({a / 2, a});
  EXPECT_NEAR(grid4[1][0], quarter[0], 1e-12);
  EXPECT_NEAR(grid4[1][1], quarter[1], 1e-12);

  const PointCloud triangle(Model::Euclidean, {r2(0, 0), r2(1, 0), r2(0, 1)});
  const PointCloud vertices = hadamard::gc_hull_sample(r2(0, 0), triangle, 1);
  ASSERT_EQ(vertices.size(), 3u);
  EXPECT_LT(hadamard::hausdorff(vertices, triangle), 1e-12);
}

TEST(GcHullSample, LatticeSizeForThreePoints) {
  const PointCloud triangle(Model::Euclidean, {r2(0, 0), r2(1, 0), r2(0, 1)});
  // (g + 1)(g + 2) / 2 lattice points for m = 3.
  EXPECT_EQ(hadamard::gc_hull_sample(r2(0.3, 0.3), triangle, 6).size(), 28u);
}

TEST(GcHullSample, RejectsEmptySetAndBadGrid) {
  EXPECT_THROW(hadamard::gc_hull_sample(hp(0, 1), PointCloud(Model::HalfPlane), 4), GeometryError);
  EXPECT_THROW(hadamard::gc_hull_sample(hp(0, 1), example_set(), 0), GeometryError);
}

TEST(GcHullSample, DependsOnTheBasePointOnTheHalfPlane) {
  const PointCloud a = hadamard::gc_hull_sample(hp(0, 1), example_set(), 64);
  const PointCloud b = hadamard::gc_hull_sample(hp(0, 2), example_set(), 64);
  EXPECT_GT(hadamard::hausdorff(a, b), 1e-3);
}

TEST(ExpInterpCurve, Examples) {
  const PointCloud flat = hadamard::exp_interp_curve(r2(5, 5), r2(0, 0), r2(2, 0), 2);
  ASSERT_EQ(flat.size(), 3u);
  for (int i = 0; i < 3; ++i) {
    EXPECT_NEAR(flat[i][0], static_cast<double>(i), 1e-12);
    EXPECT_NEAR(flat[i][1], 0.0, 1e-12);
  }

  const PointCloud curved = hadamard::exp_interp_curve(hp(0, 1), hp(1, kSqrt2), hp(-1, kSqrt2), 2);
  EXPECT_NEAR(curved[0][0], 1.0, 1e-9);
  EXPECT_NEAR(curved[0][1], kSqrt2, 1e-9);
  EXPECT_NEAR(curved[1][1], oracle::x_value(), 1e-12);
  EXPECT_NEAR(curved[2][0], -1.0, 1e-9);

  EXPECT_THROW(hadamard::exp_interp_curve(hp(0, 1), hp(1, 1), hp(2, 1), 0), GeometryError);
  EXPECT_THROW(hadamard::exp_interp_curve(hp(0, 1), r2(1, 1), hp(2, 1), 4), GeometryError);
}

TEST(ConvexHullApprox, TwoPointHalfPlaneSetIsTheArc) {
  const hadamard::HullResult hull = hadamard::convex_hull_approx(example_set(), {.seg_samples = 256});
  EXPECT_TRUE(hull.converged);
  EXPECT_EQ(hull.iterations, 1);
  EXPECT_EQ(hull.cloud.size(), 257u);
  for (const ManifoldPoint& q : hull.cloud) {
    EXPECT_LE(std::abs(q[0] * q[0] + q[1] * q[1] - 3.0), 1e-9);
    EXPECT_GE(q[0], -1.0 - 1e-9);
    EXPECT_LE(q[0], 1.0 + 1e-9);
  }
}

TEST(ConvexHullApprox, EuclideanTriangleStaysInsideTheAnalyticHull) {
  const PointCloud triangle(Model::Euclidean, {r2(0, 0), r2(1, 0), r2(0, 1)});
  const hadamard::HullResult hull = hadamard::convex_hull_approx(triangle, {.seg_samples = 16, .k_max = 4});
  EXPECT_GT(hull.cloud.size(), 3u);
  double worst = 0.0;
  for (const ManifoldPoint& q : hull.cloud) worst = std::max(worst, dist_to_unit_triangle(q[0], q[1]));
  EXPECT_LE(worst, 1e-9);
  // Interior points appear once joins of joins are taken.
  const bool has_interior = std::any_of(hull.cloud.begin(), hull.cloud.end(), [](const ManifoldPoint& q) {
    return q[0] > 0.1 && q[1] > 0.1 && q[0] + q[1] < 0.9;
  });
  EXPECT_TRUE(has_interior);
}

TEST(ConvexHullApprox, SinglePointConvergesImmediately) {
  const PointCloud one(Model::HalfPlane, {hp(3, 0.5)});
  const hadamard::HullResult hull = hadamard::convex_hull_approx(one);
  EXPECT_TRUE(hull.converged);
  EXPECT_EQ(hull.iterations, 0);
  ASSERT_EQ(hull.cloud.size(), 1u);
  EXPECT_EQ(hull.cloud[0], hp(3, 0.5));
}

TEST(ConvexHullApprox, RejectsEmptySet) {
  EXPECT_THROW(hadamard::convex_hull_approx(PointCloud(Model::Euclidean)), GeometryError);
}

TEST(ConvexHullApprox, ReportsNonConvergence) {
  const PointCloud triangle(Model::HalfPlane, {hp(-1, 1), hp(1, 1), hp(0, 3)});
  const hadamard::HullResult hull = hadamard::convex_hull_approx(triangle, {.seg_samples = 8, .tol = 1e-12, .k_max = 1});
  EXPECT_FALSE(hull.converged);
  EXPECT_EQ(hull.iterations, 1);
}

TEST(ConvexHullApprox, ContainsTheInputPoints) {
  std::mt19937_64 rng(21);
  std::uniform_real_distribution<double> u(-2, 2), v(0.3, 3);
  PointCloud S(Model::HalfPlane);
  for (int i = 0; i < 5; ++i) S.push_back(hp(u(rng), v(rng)));
  const hadamard::HullResult hull = hadamard::convex_hull_approx(S, {.seg_samples = 8, .k_max = 2});
  for (const ManifoldPoint& s : S) {
    double nearest = INFINITY;
    for (const ManifoldPoint& q : hull.cloud) nearest = std::min(nearest, hadamard::dist(s, q));
    EXPECT_LE(nearest, 1e-9);
  }
}

TEST(ConvexHullApprox, IteratesAreNestedAndApproachTheLimit) {
  const PointCloud triangle(Model::HalfPlane, {hp(-1, 1), hp(1, 1), hp(0, 2.5)});
  std::vector<PointCloud> iterates;
  for (int k = 1; k <= 3; ++k)
    iterates.push_back(
        hadamard::convex_hull_approx(triangle, {.seg_samples = 8, .tol = 1e-12, .k_max = k}).cloud);
  const double snap = hadamard::kDefaultSnapResolution;
  for (std::size_t k = 0; k + 1 < iterates.size(); ++k) {
    // S_k lies inside S_{k+1} up to the snap resolution.
    for (const ManifoldPoint& q : iterates[k]) {
      double nearest = INFINITY;
      for (const ManifoldPoint& r : iterates[k + 1]) nearest = std::min(nearest, (q.coords() - r.coords()).norm());
      EXPECT_LE(nearest, snap);
    }
  }
  const PointCloud& limit = iterates.back();
  EXPECT_GE(hadamard::hausdorff(iterates[0], limit) + 1e-12, hadamard::hausdorff(iterates[1], limit));
}

TEST(ConvexHullApprox, MatchesGcHullOnEuclideanSpace) {
  std::mt19937_64 rng(22);
  std::uniform_real_distribution<double> c(-2, 2);
  for (int trial = 0; trial < 3; ++trial) {
    // Snapping at a quarter of the sampling pitch keeps the filled hull small.
    const int grid = 24;
    PointCloud S(Model::Euclidean, 0.05);
    for (int i = 0; i < 3; ++i) S.push_back(r2(c(rng), c(rng)));
    const hadamard::HullResult hull = hadamard::convex_hull_approx(S, {.seg_samples = grid, .k_max = 6});
    const PointCloud gc = hadamard::gc_hull_sample(r2(c(rng), c(rng)), S, grid);
    const double pitch = hadamard::default_hull_tolerance(S, grid);
    EXPECT_LE(hadamard::hausdorff(hull.cloud, gc), 2.0 * pitch);
  }
}

TEST(ConvexHullApprox, IsDeterministic) {
  const PointCloud S(Model::HalfPlane, {hp(-1, 1), hp(1, 1), hp(0, 2.5), hp(0.5, 0.4)});
  const HullSettings settings{.seg_samples = 8, .k_max = 2, .pair_budget = 500, .seed = 9};
  const hadamard::HullResult a = hadamard::convex_hull_approx(S, settings);
  const hadamard::HullResult b = hadamard::convex_hull_approx(S, settings);
  ASSERT_EQ(a.cloud.size(), b.cloud.size());
  for (std::size_t i = 0; i < a.cloud.size(); ++i) EXPECT_EQ(a.cloud[i], b.cloud[i]);
  EXPECT_TRUE(std::any_of(a.history.begin(), a.history.end(), [](const auto& h) { return h.subsampled; }));
}

TEST(PointCloud, DeduplicationLeavesNoCloseNeighbours) {
  std::mt19937_64 rng(23);
  std::uniform_real_distribution<double> c(0, 0.01);
  const double snap = 1e-3;
  PointCloud cloud(Model::Euclidean, snap);
  for (int i = 0; i < 2000; ++i) cloud.push_back(r2(c(rng), c(rng)));
  const PointCloud thinned = cloud.deduplicated();
  EXPECT_LT(thinned.size(), cloud.size());
  for (std::size_t i = 0; i < thinned.size(); ++i)
    for (std::size_t j = i + 1; j < thinned.size(); ++j)
      EXPECT_GE((thinned[i].coords() - thinned[j].coords()).norm(), snap / 2);
  // Every dropped point is covered by a kept one.
  for (const ManifoldPoint& q : cloud) {
    double nearest = INFINITY;
    for (const ManifoldPoint& r : thinned) nearest = std::min(nearest, (q.coords() - r.coords()).norm());
    EXPECT_LT(nearest, snap / 2);
  }
}

TEST(PointCloud, RejectsMixedModels) {
  PointCloud cloud(Model::HalfPlane);
  EXPECT_THROW(cloud.push_back(r2(0, 1)), GeometryError);
}

TEST(Hausdorff, Examples) {
  EXPECT_EQ(hadamard::hausdorff(example_set(), example_set()), 0.0);
  EXPECT_NEAR(hadamard::hausdorff(PointCloud(Model::Euclidean, {r2(0, 0)}), PointCloud(Model::Euclidean, {r2(3, 4)})),
              5.0, 1e-15);
  const double x = oracle::x_value();
  const double d = hadamard::hausdorff(PointCloud(Model::HalfPlane, {hp(0, std::sqrt(3.0))}),
                                       PointCloud(Model::HalfPlane, {hp(0, x)}));
  EXPECT_NEAR(d, std::log(x / std::sqrt(3.0)), 1e-12);
  EXPECT_NEAR(d, 0.0739191, 1e-7);
}

TEST(Hausdorff, MatchesBruteForce) {
  std::mt19937_64 rng(24);
  std::uniform_real_distribution<double> u(-2, 2), v(0.2, 3);
  for (int trial = 0; trial < 10; ++trial) {
    PointCloud a(Model::HalfPlane), b(Model::HalfPlane);
    for (int i = 0; i < 60; ++i) a.push_back(hp(u(rng), v(rng)));
    for (int i = 0; i < 45; ++i) b.push_back(hp(u(rng), v(rng)));
    const double expected = oracle::hausdorff_brute(as_vectors(a), as_vectors(b), oracle::hp_dist);
    EXPECT_NEAR(hadamard::hausdorff(a, b), expected, 1e-12);
    EXPECT_EQ(hadamard::hausdorff(a, b), hadamard::hausdorff(b, a));
  }
}

TEST(Hausdorff, RejectsEmptyAndMixedClouds) {
  EXPECT_THROW(hadamard::hausdorff(PointCloud(Model::HalfPlane), example_set()), GeometryError);
  EXPECT_THROW(hadamard::hausdorff(PointCloud(Model::Euclidean, {r2(0, 1)}), example_set()), GeometryError);
}
