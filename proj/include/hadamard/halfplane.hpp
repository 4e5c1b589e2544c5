#pragma once

#include "hadamard/manifold.hpp"

#include <Eigen/Core>

/// Poincare upper half-plane H = {(u, v) : v > 0} with metric g = delta / v^2.
///
/// The exponential map has a closed form at the reference point (0, 1); every
/// other base point is handled by conjugating with the normalizing isometry
/// (u, v) -> ((u - u0) / v0, v / v0).
namespace hadamard::halfplane {

/// The reference base point (0, 1).
ManifoldPoint origin();

/// Translation along the boundary composed with a dilation:
/// (u, v) -> (shift + scale * u, scale * v). Always an isometry of H.
struct Similarity {
  double shift = 0.0;
  double scale = 1.0;

  /// The similarity that maps (0, 1) to p.
  static Similarity from_origin_to(const ManifoldPoint& p);

  ManifoldPoint apply(const ManifoldPoint& q) const;
  ManifoldPoint invert(const ManifoldPoint& q) const;
};

double inner(const ManifoldPoint& p, const TangentVector& u, const TangentVector& v);

/// arccosh(1 + ((u2-u1)^2 + (v2-v1)^2) / (2 v1 v2)), evaluated through log1p
/// so that nearby points keep full relative precision.
double dist(const ManifoldPoint& p, const ManifoldPoint& q);

/// exp at (0, 1) of the tangent vector (alpha, beta).
ManifoldPoint exp_base(const Eigen::Vector2d& w);

/// Inverse of exp_base: the tangent vector (alpha, beta) at (0, 1) with
/// exp_base(alpha, beta) == q.
Eigen::Vector2d log_base(const ManifoldPoint& q);

ManifoldPoint exp(const ManifoldPoint& p, const TangentVector& w);
TangentVector log(const ManifoldPoint& p, const ManifoldPoint& q);

/// Carrier of a geodesic: a vertical half-line or a semicircle centred on v = 0.
struct GeodesicArcParams {
  enum class Kind { VerticalLine, Semicircle };

  Kind kind = Kind::VerticalLine;
  double center_u = 0.0;  // semicircle only
  double radius = 0.0;    // semicircle only
  double line_u = 0.0;    // vertical only

  /// Signed defect of q against the carrier equation: (u-c)^2 + v^2 - r^2 for
  /// a semicircle, u - line_u for a vertical line.
  double residual(const ManifoldPoint& q) const;
};

GeodesicArcParams geodesic_params(const ManifoldPoint& q1, const ManifoldPoint& q2);

}  // namespace hadamard::halfplane
