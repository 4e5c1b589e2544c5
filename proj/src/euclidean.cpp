#include "hadamard/euclidean.hpp"

namespace hadamard::euclidean {

namespace {

void require_euclidean(const ManifoldPoint& p) {
  if (p.model() != Model::Euclidean) throw GeometryError("expected a euclidean point");
}

}  // namespace

double inner(const ManifoldPoint& p, const TangentVector& u, const TangentVector& v) {
  require_euclidean(p);
  require_based_at(p, u);
  require_based_at(p, v);
  return u.components().dot(v.components());
}

double dist(const ManifoldPoint& p, const ManifoldPoint& q) {
  require_euclidean(p);
  require_same_model(p, q);
  return (q.coords() - p.coords()).norm();
}

ManifoldPoint exp(const ManifoldPoint& p, const TangentVector& w) {
  require_euclidean(p);
  require_based_at(p, w);
  return ManifoldPoint::euclidean(p.coords() + w.components());
}

TangentVector log(const ManifoldPoint& p, const ManifoldPoint& q) {
  require_euclidean(p);
  require_same_model(p, q);
  return {p, q.coords() - p.coords()};
}

}  // namespace hadamard::euclidean
