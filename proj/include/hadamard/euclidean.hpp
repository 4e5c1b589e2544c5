#pragma once

#include "hadamard/manifold.hpp"

// Flat model (R^n, e). All operations are exact up to floating point rounding.
namespace hadamard::euclidean {

double inner(const ManifoldPoint& p, const TangentVector& u, const TangentVector& v);
double dist(const ManifoldPoint& p, const ManifoldPoint& q);
ManifoldPoint exp(const ManifoldPoint& p, const TangentVector& w);
TangentVector log(const ManifoldPoint& p, const ManifoldPoint& q);

}  // namespace hadamard::euclidean
