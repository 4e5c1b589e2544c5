#include "hadamard/halfplane.hpp"

#include <fmt/format.h>

#include <algorithm>
#include <cmath>

namespace hadamard::halfplane {

namespace {

// |alpha| below this fraction of max(1, |beta|) is treated as the vertical
// geodesic: beta / alpha and arcsinh(beta / alpha) are no longer meaningful.
constexpr double kVerticalGuard = 1e-12;

// Beyond |beta| / |alpha| = kSteepSlope the two-branch form loses digits to
// cancellation in beta/alpha + r*tanh(s); the algebraically identical reduced
// form is used instead.
constexpr double kSteepSlope = 1e4;

// Carrier-center formula divides by u2 - u1.
constexpr double kVerticalCarrier = 1e-12;

void require_halfplane(const ManifoldPoint& p) {
  if (p.model() != Model::HalfPlane) throw GeometryError("expected a halfplane point");
}

// Two-branch closed form for alpha != 0 at (0, 1):
//   r = sqrt(1 + (beta/alpha)^2),  s = +-|w| - arcsinh(beta/alpha),
//   exp = (beta/alpha + r tanh s, r / cosh s).
// The carrier is the semicircle centred at (beta/alpha, 0) of radius r.
Eigen::Vector2d exp_base_semicircle(double alpha, double beta) {
  const double slope = beta / alpha;
  const double r = std::hypot(1.0, slope);
  const double speed = std::hypot(alpha, beta);
  const double s = (alpha > 0.0 ? speed : -speed) - std::asinh(slope);
  return {slope + r * std::tanh(s), r / std::cosh(s)};
}

// Same map written with the unit direction (a, b) = w / |w|:
//   exp = (a sinh|w|, 1) / (cosh|w| - b sinh|w|).
// The denominator is rewritten to avoid cancellation when b -> 1.
Eigen::Vector2d exp_base_reduced(double alpha, double beta) {
  const double speed = std::hypot(alpha, beta);
  const double sh = std::sinh(speed);
  double denom;
  if (beta > 0.0) {
    const double one_minus_b = alpha * alpha / (speed * (speed + beta));
    denom = std::exp(-speed) + one_minus_b * sh;
  } else {
    denom = std::cosh(speed) - (beta / speed) * sh;
  }
  return {(alpha / speed) * sh / denom, 1.0 / denom};
}

}  // namespace

ManifoldPoint origin() { return ManifoldPoint::halfplane(0.0, 1.0); }

Similarity Similarity::from_origin_to(const ManifoldPoint& p) {
  require_halfplane(p);
  return {p[0], p[1]};
}

ManifoldPoint Similarity::apply(const ManifoldPoint& q) const {
  require_halfplane(q);
  return ManifoldPoint::halfplane(shift + scale * q[0], scale * q[1]);
}

ManifoldPoint Similarity::invert(const ManifoldPoint& q) const {
  require_halfplane(q);
  return ManifoldPoint::halfplane((q[0] - shift) / scale, q[1] / scale);
}

double inner(const ManifoldPoint& p, const TangentVector& u, const TangentVector& v) {
  require_halfplane(p);
  require_based_at(p, u);
  require_based_at(p, v);
  const double scale = p[1];
  return u.components().dot(v.components()) / (scale * scale);
}

double dist(const ManifoldPoint& p, const ManifoldPoint& q) {
  require_halfplane(p);
  require_halfplane(q);
  const double du = q[0] - p[0];
  const double dv = q[1] - p[1];
  // arccosh(1 + x) = log1p(x + sqrt(x (x + 2))); x >= 0 clamps the argument at 1.
  const double x = std::max(0.0, (du * du + dv * dv) / (2.0 * p[1] * q[1]));
  return std::log1p(x + std::sqrt(x * (x + 2.0)));
}

ManifoldPoint exp_base(const Eigen::Vector2d& w) {
  const double alpha = w[0];
  const double beta = w[1];
  if (!std::isfinite(alpha) || !std::isfinite(beta))
    throw GeometryError("exp_base: non-finite tangent vector");

  if (std::abs(alpha) <= kVerticalGuard * std::max(1.0, std::abs(beta)))
    return ManifoldPoint::halfplane(0.0, std::exp(beta));

  const Eigen::Vector2d q = std::abs(beta) <= kSteepSlope * std::abs(alpha)
                                ? exp_base_semicircle(alpha, beta)
                                : exp_base_reduced(alpha, beta);
  if (!(q[1] > 0.0) || !q.allFinite())
    throw GeometryError(fmt::format("exp_base({}, {}) leaves the representable half-plane", alpha, beta));
  return ManifoldPoint::halfplane(q[0], q[1]);
}

Eigen::Vector2d log_base(const ManifoldPoint& q) {
  require_halfplane(q);
  const double u = q[0];
  const double v = q[1];
  if (u == 0.0) return {0.0, std::log(v)};

  // Initial direction of the semicircle through (0, 1) and q. Its centre is
  // c = (u^2 + v^2 - 1) / (2u) and the tangent at (0, 1) is sign(u) (1, c);
  // scaling by 2|u| gives (2u, u^2 + v^2 - 1) without dividing by u.
  const Eigen::Vector2d direction{2.0 * u, u * u + (v - 1.0) * (v + 1.0)};
  return direction.normalized() * halfplane::dist(origin(), q);
}

ManifoldPoint exp(const ManifoldPoint& p, const TangentVector& w) {
  require_halfplane(p);
  require_based_at(p, w);
  const Similarity to_p = Similarity::from_origin_to(p);
  const Eigen::Vector2d normalized = w.components() / to_p.scale;
  return to_p.apply(exp_base(normalized));
}

TangentVector log(const ManifoldPoint& p, const ManifoldPoint& q) {
  require_halfplane(p);
  require_halfplane(q);
  if (p == q) return TangentVector::zero(p);
  const Similarity to_p = Similarity::from_origin_to(p);
  const Eigen::Vector2d at_origin = log_base(to_p.invert(q));
  return {p, Coords(at_origin * to_p.scale)};
}

double GeodesicArcParams::residual(const ManifoldPoint& q) const {
  require_halfplane(q);
  if (kind == Kind::VerticalLine) return q[0] - line_u;
  const double du = q[0] - center_u;
  return du * du + q[1] * q[1] - radius * radius;
}

GeodesicArcParams geodesic_params(const ManifoldPoint& q1, const ManifoldPoint& q2) {
  require_halfplane(q1);
  require_halfplane(q2);
  if (q1 == q2) throw GeometryError("geodesic_params: coincident points have no unique carrier");

  const double u1 = q1[0], v1 = q1[1];
  const double u2 = q2[0], v2 = q2[1];
  GeodesicArcParams params;
  if (std::abs(u1 - u2) <= kVerticalCarrier * (1.0 + std::abs(u1) + std::abs(u2))) {
    params.kind = GeodesicArcParams::Kind::VerticalLine;
    params.line_u = 0.5 * (u1 + u2);
    return params;
  }
  // (u2^2 + v2^2 - u1^2 - v1^2) / (2 (u2 - u1)), factored.
  params.kind = GeodesicArcParams::Kind::Semicircle;
  params.center_u = 0.5 * (u1 + u2) + (v2 - v1) * (v2 + v1) / (2.0 * (u2 - u1));
  params.radius = std::hypot(u1 - params.center_u, v1);
  return params;
}

}  // namespace hadamard::halfplane
