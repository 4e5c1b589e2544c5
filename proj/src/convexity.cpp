#include "hadamard/convexity.hpp"

#include <fmt/format.h>

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>
#include <numeric>
#include <random>
#include <unordered_map>
#include <utility>

namespace hadamard {

namespace {

// Uniform grid over ambient coordinates with cell size equal to the snap
// resolution.
class SnapGrid {
 public:
  explicit SnapGrid(double resolution) : resolution_(resolution) {}

  /// Inserts p unless a kept point lies within resolution / 2. Returns whether
  /// p was kept.
  bool insert(const Coords& p) {
    const Key home = key_of(p);
    const double radius2 = 0.25 * resolution_ * resolution_;
    const int dim = static_cast<int>(p.size());

    // A ball of radius resolution / 2 reaches at most one neighbouring cell per
    // axis: the one on the side of the cell midpoint where p sits.
    std::array<int, kMaxDim> side{};
    for (int i = 0; i < dim; ++i) {
      const double frac = p[i] / resolution_ - static_cast<double>(home.cell[i]);
      side[i] = frac < 0.5 ? -1 : 1;
    }
    for (std::uint32_t mask = 0; mask < (1u << dim); ++mask) {
      Key probe = home;
      for (int i = 0; i < dim; ++i)
        if (mask & (1u << i)) probe.cell[i] += side[i];
      if (auto it = cells_.find(probe); it != cells_.end()) {
        for (const Coords& kept : it->second)
          if ((kept - p).squaredNorm() < radius2) return false;
      }
    }
    cells_[home].push_back(p);
    return true;
  }

 private:
  struct Key {
    std::array<std::int64_t, kMaxDim> cell{};
    bool operator==(const Key&) const = default;
  };
  struct KeyHash {
    std::size_t operator()(const Key& k) const {
      std::size_t h = 0x9e3779b97f4a7c15ULL;
      for (std::int64_t c : k.cell) h ^= std::hash<std::int64_t>{}(c) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
      return h;
    }
  };

  Key key_of(const Coords& p) const {
    Key k;
    for (int i = 0; i < p.size(); ++i) k.cell[i] = static_cast<std::int64_t>(std::floor(p[i] / resolution_));
    return k;
  }

  double resolution_;
  std::unordered_map<Key, std::vector<Coords>, KeyHash> cells_;
};

void require_model(const ManifoldPoint& p, Model model) {
  if (p.model() != model)
    throw GeometryError(fmt::format("model mismatch: {} point in a {} cloud", model_name(p.model()),
                                    model_name(model)));
}

// Weight vectors of the simplex lattice {j / grid}, first weight decreasing.
void enumerate_compositions(int remaining, std::size_t slot, std::vector<int>& current,
                            std::vector<std::vector<int>>& out) {
  if (slot + 1 == current.size()) {
    current[slot] = remaining;
    out.push_back(current);
    return;
  }
  for (int j = remaining; j >= 0; --j) {
    current[slot] = j;
    enumerate_compositions(remaining - j, slot + 1, current, out);
  }
}

double binomial(std::size_t n, std::size_t k) {
  double r = 1.0;
  for (std::size_t i = 1; i <= k; ++i) r = r * static_cast<double>(n - k + i) / static_cast<double>(i);
  return r;
}

constexpr double kMaxLatticePoints = 2e7;

}  // namespace

PointCloud::PointCloud(Model model, double snap_resolution)
    : model_(model), snap_resolution_(snap_resolution) {
  if (!(snap_resolution_ > 0.0) || !std::isfinite(snap_resolution_))
    throw GeometryError("snap resolution must be positive");
}

PointCloud::PointCloud(Model model, std::vector<ManifoldPoint> points, double snap_resolution)
    : PointCloud(model, snap_resolution) {
  for (const ManifoldPoint& p : points) {
    require_model(p, model_);
    if (!points_.empty()) require_same_model(points_.front(), p);
  }
  points_ = std::move(points);
}

void PointCloud::push_back(ManifoldPoint point) {
  require_model(point, model_);
  if (!points_.empty()) require_same_model(points_.front(), point);
  points_.push_back(std::move(point));
}

PointCloud PointCloud::deduplicated() const {
  PointCloud out(model_, snap_resolution_);
  SnapGrid grid(snap_resolution_);
  for (const ManifoldPoint& p : points_)
    if (grid.insert(p.coords())) out.points_.push_back(p);
  return out;
}

WeightedSupport::WeightedSupport(std::vector<ManifoldPoint> points, std::vector<double> weights)
    : points_(std::move(points)), weights_(std::move(weights)) {
  if (points_.empty()) throw GeometryError("weighted support needs at least one point");
  if (points_.size() != weights_.size())
    throw GeometryError(fmt::format("weighted support has {} points but {} weights", points_.size(),
                                    weights_.size()));
  for (double w : weights_)
    if (!(w >= 0.0 && w <= 1.0)) throw GeometryError(fmt::format("weight {} outside [0, 1]", w));
  const double total = std::accumulate(weights_.begin(), weights_.end(), 0.0);
  if (std::abs(total - 1.0) > kTolerances.comparison)
    throw GeometryError(fmt::format("weights sum to {}, expected 1", total));
  for (const ManifoldPoint& q : points_) require_same_model(points_.front(), q);
}

ManifoldPoint gc_point(const ManifoldPoint& p, const WeightedSupport& support) {
  // A vertex of the simplex is the support point itself; skip the round trip.
  for (std::size_t i = 0; i < support.size(); ++i) {
    if (support.weights()[i] == 1.0) {
      require_same_model(p, support.points()[i]);
      return support.points()[i];
    }
  }
  Coords combined = Coords::Zero(p.dim());
  for (std::size_t i = 0; i < support.size(); ++i) {
    require_same_model(p, support.points()[i]);
    combined += support.weights()[i] * log_map(p, support.points()[i]).components();
  }
  return exp_map(p, TangentVector(p, combined));
}

PointCloud gc_hull_sample(const ManifoldPoint& p, const PointCloud& S, int weight_grid) {
  if (S.empty()) throw GeometryError("gc_hull_sample: empty point set");
  if (weight_grid < 1) throw GeometryError("gc_hull_sample: weight grid must be positive");
  require_model(p, S.model());

  const std::size_t m = S.size();
  if (binomial(static_cast<std::size_t>(weight_grid) + m - 1, m - 1) > kMaxLatticePoints)
    throw GeometryError("gc_hull_sample: simplex lattice too large");

  std::vector<Coords> logs;
  logs.reserve(m);
  for (const ManifoldPoint& q : S) logs.push_back(log_map(p, q).components());

  std::vector<std::vector<int>> lattice;
  std::vector<int> current(m, 0);
  enumerate_compositions(weight_grid, 0, current, lattice);

  PointCloud out(S.model(), S.snap_resolution());
  const double step = 1.0 / weight_grid;
  for (const std::vector<int>& counts : lattice) {
    if (const auto vertex = std::find(counts.begin(), counts.end(), weight_grid); vertex != counts.end()) {
      out.push_back(S[static_cast<std::size_t>(vertex - counts.begin())]);
      continue;
    }
    Coords combined = Coords::Zero(p.dim());
    for (std::size_t i = 0; i < m; ++i)
      if (counts[i] != 0) combined += (counts[i] * step) * logs[i];
    out.push_back(exp_map(p, TangentVector(p, combined)));
  }
  return out;
}

PointCloud exp_interp_curve(const ManifoldPoint& p, const ManifoldPoint& q1, const ManifoldPoint& q2,
                            int n_samples) {
  if (n_samples < 1) throw GeometryError("exp_interp_curve: n_samples must be positive");
  require_same_model(p, q1);
  require_same_model(p, q2);
  const Coords w1 = log_map(p, q1).components();
  const Coords w2 = log_map(p, q2).components();
  PointCloud out(p.model());
  out.push_back(q1);
  for (int i = 1; i < n_samples; ++i) {
    const double t = static_cast<double>(i) / n_samples;
    out.push_back(exp_map(p, TangentVector(p, (1.0 - t) * w1 + t * w2)));
  }
  out.push_back(q2);
  return out;
}

double default_hull_tolerance(const PointCloud& S, int seg_samples) {
  if (seg_samples < 1) throw GeometryError("seg_samples must be positive");
  double diameter = 0.0;
  for (std::size_t i = 0; i < S.size(); ++i)
    for (std::size_t j = i + 1; j < S.size(); ++j) diameter = std::max(diameter, dist(S[i], S[j]));
  return diameter / seg_samples;
}

HullResult convex_hull_approx(const PointCloud& S, const HullSettings& settings) {
  if (S.empty()) throw GeometryError("convex_hull_approx: empty point set");
  if (settings.seg_samples < 1) throw GeometryError("convex_hull_approx: seg_samples must be positive");
  if (settings.k_max < 1) throw GeometryError("convex_hull_approx: k_max must be positive");
  if (settings.pair_budget < 1) throw GeometryError("convex_hull_approx: pair budget must be positive");

  HullResult result{S.deduplicated(), 0, false, 0.0, {}};
  result.tolerance = settings.tol > 0.0 ? settings.tol : default_hull_tolerance(result.cloud, settings.seg_samples);
  result.history.push_back({0, result.cloud.size(), 0, false, 0.0});
  if (result.cloud.size() == 1) {
    // A point is its own hull; there is nothing to join.
    result.converged = true;
    return result;
  }

  for (int k = 1; k <= settings.k_max; ++k) {
    const PointCloud& prev = result.cloud;
    const std::size_t n = prev.size();

    // Pairs (i, j), i < j, either all of them or a seeded uniform subsample.
    std::vector<std::pair<std::size_t, std::size_t>> pairs;
    const std::size_t all_pairs = n * (n - 1) / 2;
    const bool subsample = all_pairs > settings.pair_budget;
    if (!subsample) {
      pairs.reserve(all_pairs);
      for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j) pairs.emplace_back(i, j);
    } else {
      std::mt19937_64 rng(settings.seed * 0x9e3779b97f4a7c15ULL + static_cast<std::uint64_t>(k));
      std::uniform_int_distribution<std::size_t> first(0, n - 1);
      std::uniform_int_distribution<std::size_t> second(0, n - 2);
      pairs.reserve(settings.pair_budget);
      for (std::size_t b = 0; b < settings.pair_budget; ++b) {
        const std::size_t i = first(rng);
        std::size_t j = second(rng);
        if (j >= i) ++j;
        pairs.emplace_back(std::min(i, j), std::max(i, j));
      }
    }

    // S_{k-1} goes in first so that S_{k-1} is a subset of S_k.
    PointCloud next(prev.model(), prev.snap_resolution());
    SnapGrid grid(prev.snap_resolution());
    for (const ManifoldPoint& q : prev)
      if (grid.insert(q.coords())) next.push_back(q);
    for (const auto& [i, j] : pairs) {
      const GeodesicSegment segment(prev[i], prev[j]);
      for (int s = 1; s < settings.seg_samples; ++s) {
        ManifoldPoint q = segment.at(static_cast<double>(s) / settings.seg_samples);
        if (grid.insert(q.coords())) next.push_back(std::move(q));
      }
    }

    const double residual = hausdorff(next, prev);
    result.history.push_back({k, next.size(), pairs.size(), subsample, residual});
    if (residual < result.tolerance) {
      result.iterations = k - 1;
      result.converged = true;
      return result;
    }
    result.cloud = std::move(next);
    result.iterations = k;
  }
  return result;
}

HausdorffResult hausdorff_detail(const PointCloud& A, const PointCloud& B) {
  if (A.empty() || B.empty()) throw GeometryError("hausdorff: empty cloud");
  if (A.model() != B.model()) throw GeometryError("hausdorff: model mismatch");
  require_same_model(A[0], B[0]);

  // Exact early-break scan: a query point stops searching as soon as it finds
  // a neighbour no farther than the running maximum, since it can no longer
  // raise it. Visiting points in a fixed pseudo-random order makes the break
  // fire early on structured clouds; the result does not depend on the order.
  auto shuffled = [](std::size_t n, std::uint64_t seed) {
    std::vector<std::size_t> order(n);
    std::iota(order.begin(), order.end(), 0);
    std::mt19937_64 rng(seed);
    std::shuffle(order.begin(), order.end(), rng);
    return order;
  };

  HausdorffResult best;
  bool found = false;
  const std::array<const PointCloud*, 2> clouds{&A, &B};
  for (int side = 0; side < 2; ++side) {
    const PointCloud& from = *clouds[side];
    const PointCloud& to = *clouds[1 - side];
    const std::vector<std::size_t> from_order = shuffled(from.size(), 17 + side);
    const std::vector<std::size_t> to_order = shuffled(to.size(), 29 + side);
    for (std::size_t i : from_order) {
      double nearest = std::numeric_limits<double>::infinity();
      for (std::size_t j : to_order) {
        nearest = std::min(nearest, dist(from[i], to[j]));
        if (found && nearest <= best.distance) break;
      }
      if (!found || nearest > best.distance) {
        best = {nearest, side, i};
        found = true;
      }
    }
  }
  return best;
}

double hausdorff(const PointCloud& A, const PointCloud& B) { return hausdorff_detail(A, B).distance; }

}  // namespace hadamard
