#pragma once

#include <Eigen/Core>

#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>

namespace hadamard {

/// Largest supported dimension for Euclidean models. Coordinates are stored
/// inline (no heap allocation) up to this size.
inline constexpr int kMaxDim = 16;

using Coords = Eigen::Matrix<double, Eigen::Dynamic, 1, Eigen::ColMajor, kMaxDim, 1>;

enum class Model : std::uint8_t { Euclidean, HalfPlane };

std::string_view model_name(Model model);
Model parse_model(std::string_view name);

/// Thrown for every precondition violation: model or dimension mismatch,
/// points outside the half-plane, non-finite input, bad parameters.
class GeometryError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Numerical slack used throughout. The underlying math is exact; every
/// tolerance here absorbs floating point error only.
struct Tolerances {
  double round_trip = 1e-9;   // absolute, exp/log and endpoint checks
  double comparison = 1e-12;  // relative, equalities of computed reals
};

inline constexpr Tolerances kTolerances{};

class ManifoldPoint {
 public:
  ManifoldPoint(Model model, Coords coords);

  static ManifoldPoint euclidean(Coords coords);
  static ManifoldPoint halfplane(double u, double v);

  Model model() const { return model_; }
  const Coords& coords() const { return coords_; }
  int dim() const { return static_cast<int>(coords_.size()); }
  double operator[](int i) const { return coords_[i]; }

  friend bool operator==(const ManifoldPoint& a, const ManifoldPoint& b) {
    return a.model_ == b.model_ && a.coords_.size() == b.coords_.size() &&
           a.coords_ == b.coords_;
  }

 private:
  Model model_;
  Coords coords_;
};

class TangentVector {
 public:
  TangentVector(ManifoldPoint base, Coords components);

  static TangentVector zero(const ManifoldPoint& base);

  const ManifoldPoint& base() const { return base_; }
  const Coords& components() const { return components_; }
  int dim() const { return static_cast<int>(components_.size()); }

  TangentVector operator+(const TangentVector& other) const;
  TangentVector operator-(const TangentVector& other) const;
  TangentVector operator*(double s) const;
  friend TangentVector operator*(double s, const TangentVector& w) { return w * s; }

 private:
  ManifoldPoint base_;
  Coords components_;
};

void require_same_model(const ManifoldPoint& a, const ManifoldPoint& b);
void require_based_at(const ManifoldPoint& p, const TangentVector& w);

// Model-dispatched Riemannian primitives. Mixing models throws.
double metric_inner(const ManifoldPoint& p, const TangentVector& u, const TangentVector& v);
double norm(const ManifoldPoint& p, const TangentVector& u);
double dist(const ManifoldPoint& p, const ManifoldPoint& q);
ManifoldPoint exp_map(const ManifoldPoint& p, const TangentVector& w);
TangentVector log_map(const ManifoldPoint& p, const ManifoldPoint& q);

/// Point at parameter t on the constant-speed minimal geodesic from q1
/// (t = 0) to q2 (t = 1), evaluated as exp_{q1}(t * log_{q1}(q2)).
ManifoldPoint geodesic_point(const ManifoldPoint& q1, const ManifoldPoint& q2, double t);

class GeodesicSegment {
 public:
  GeodesicSegment(ManifoldPoint start, ManifoldPoint end);

  const ManifoldPoint& start() const { return start_; }
  const ManifoldPoint& end() const { return end_; }
  double length() const { return length_; }

  ManifoldPoint at(double t) const;

 private:
  ManifoldPoint start_;
  ManifoldPoint end_;
  TangentVector velocity_;
  double length_;
};

}  // namespace hadamard
