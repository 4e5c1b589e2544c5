#include "hadamard/manifold.hpp"

#include "hadamard/euclidean.hpp"
#include "hadamard/halfplane.hpp"

#include <fmt/format.h>

#include <cmath>
#include <utility>

namespace hadamard {

std::string_view model_name(Model model) {
  switch (model) {
    case Model::Euclidean:
      return "euclidean-n";
    case Model::HalfPlane:
      return "halfplane";
  }
  return "unknown";
}

Model parse_model(std::string_view name) {
  if (name == "euclidean" || name == "euclidean-n") return Model::Euclidean;
  if (name == "halfplane") return Model::HalfPlane;
  throw GeometryError(fmt::format("unknown model '{}'", name));
}

namespace {

void require_finite(const Coords& c, std::string_view what) {
  if (!c.allFinite()) throw GeometryError(fmt::format("{} has non-finite entries", what));
}

}  // namespace

ManifoldPoint::ManifoldPoint(Model model, Coords coords) : model_(model), coords_(std::move(coords)) {
  require_finite(coords_, "point");
  switch (model_) {
    case Model::Euclidean:
      if (coords_.size() < 1) throw GeometryError("euclidean point needs at least one coordinate");
      break;
    case Model::HalfPlane:
      if (coords_.size() != 2)
        throw GeometryError(fmt::format("halfplane point needs 2 coordinates, got {}", coords_.size()));
      if (!(coords_[1] > 0.0))
        throw GeometryError(fmt::format("halfplane point requires v > 0, got v = {}", coords_[1]));
      break;
  }
}

ManifoldPoint ManifoldPoint::euclidean(Coords coords) { return {Model::Euclidean, std::move(coords)}; }

ManifoldPoint ManifoldPoint::halfplane(double u, double v) {
  Coords c(2);
  c << u, v;
  return {Model::HalfPlane, std::move(c)};
}

TangentVector::TangentVector(ManifoldPoint base, Coords components)
    : base_(std::move(base)), components_(std::move(components)) {
  if (components_.size() != base_.coords().size())
    throw GeometryError(fmt::format("tangent vector has {} components at a {}-dimensional point",
                                    components_.size(), base_.coords().size()));
  require_finite(components_, "tangent vector");
}

TangentVector TangentVector::zero(const ManifoldPoint& base) {
  return {base, Coords::Zero(base.dim())};
}

TangentVector TangentVector::operator+(const TangentVector& other) const {
  require_based_at(base_, other);
  return {base_, components_ + other.components_};
}

TangentVector TangentVector::operator-(const TangentVector& other) const {
  require_based_at(base_, other);
  return {base_, components_ - other.components_};
}

TangentVector TangentVector::operator*(double s) const { return {base_, components_ * s}; }

void require_same_model(const ManifoldPoint& a, const ManifoldPoint& b) {
  if (a.model() != b.model())
    throw GeometryError(
        fmt::format("model mismatch: {} vs {}", model_name(a.model()), model_name(b.model())));
  if (a.dim() != b.dim())
    throw GeometryError(fmt::format("dimension mismatch: {} vs {}", a.dim(), b.dim()));
}

void require_based_at(const ManifoldPoint& p, const TangentVector& w) {
  require_same_model(p, w.base());
  if (!(w.base() == p)) throw GeometryError("tangent vector is not based at the given point");
}

double metric_inner(const ManifoldPoint& p, const TangentVector& u, const TangentVector& v) {
  switch (p.model()) {
    case Model::Euclidean:
      return euclidean::inner(p, u, v);
    case Model::HalfPlane:
      return halfplane::inner(p, u, v);
  }
  throw GeometryError("unknown model");
}

double norm(const ManifoldPoint& p, const TangentVector& u) { return std::sqrt(metric_inner(p, u, u)); }

double dist(const ManifoldPoint& p, const ManifoldPoint& q) {
  require_same_model(p, q);
  switch (p.model()) {
    case Model::Euclidean:
      return euclidean::dist(p, q);
    case Model::HalfPlane:
      return halfplane::dist(p, q);
  }
  throw GeometryError("unknown model");
}

ManifoldPoint exp_map(const ManifoldPoint& p, const TangentVector& w) {
  switch (p.model()) {
    case Model::Euclidean:
      return euclidean::exp(p, w);
    case Model::HalfPlane:
      return halfplane::exp(p, w);
  }
  throw GeometryError("unknown model");
}

TangentVector log_map(const ManifoldPoint& p, const ManifoldPoint& q) {
  require_same_model(p, q);
  switch (p.model()) {
    case Model::Euclidean:
      return euclidean::log(p, q);
    case Model::HalfPlane:
      return halfplane::log(p, q);
  }
  throw GeometryError("unknown model");
}

namespace {

void require_unit_parameter(double t) {
  if (!(t >= 0.0 && t <= 1.0))
    throw GeometryError(fmt::format("geodesic parameter t = {} outside [0, 1]", t));
}

}  // namespace

ManifoldPoint geodesic_point(const ManifoldPoint& q1, const ManifoldPoint& q2, double t) {
  require_same_model(q1, q2);
  require_unit_parameter(t);
  if (t == 0.0) return q1;
  if (t == 1.0) return q2;
  return exp_map(q1, log_map(q1, q2) * t);
}

GeodesicSegment::GeodesicSegment(ManifoldPoint start, ManifoldPoint end)
    : start_(std::move(start)),
      end_(std::move(end)),
      velocity_(log_map(start_, end_)),
      length_(dist(start_, end_)) {}

ManifoldPoint GeodesicSegment::at(double t) const {
  require_unit_parameter(t);
  if (t == 0.0) return start_;
  if (t == 1.0) return end_;
  return exp_map(start_, velocity_ * t);
}

}  // namespace hadamard
