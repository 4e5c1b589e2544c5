#pragma once

// Independent reference computations used only by the tests. Nothing here
// calls into the closed forms under test.

#include <Eigen/Core>

#include <algorithm>
#include <cmath>
#include <limits>
#include <vector>

namespace oracle {

// Half-plane distance through the 2 asinh form, algebraically equal to the
// arccosh formula but evaluated along a different path.
inline double hp_dist(const Eigen::Vector2d& a, const Eigen::Vector2d& b) {
  return 2.0 * std::asinh((a - b).norm() / (2.0 * std::sqrt(a[1] * b[1])));
}

// Integrates the half-plane geodesic equations
//   u'' = 2 u' v' / v,   v'' = (v'^2 - u'^2) / v
// with classical RK4 from p with initial velocity w over unit time.
inline Eigen::Vector2d hp_geodesic_ode(const Eigen::Vector2d& p, const Eigen::Vector2d& w, int steps = 20000) {
  using State = Eigen::Vector4d;  // u, v, u', v'
  auto rhs = [](const State& s) {
    State d;
    d << s[2], s[3], 2.0 * s[2] * s[3] / s[1], (s[3] * s[3] - s[2] * s[2]) / s[1];
    return d;
  };
  State s;
  s << p[0], p[1], w[0], w[1];
  const double h = 1.0 / steps;
  for (int i = 0; i < steps; ++i) {
    const State k1 = rhs(s);
    const State k2 = rhs(s + 0.5 * h * k1);
    const State k3 = rhs(s + 0.5 * h * k2);
    const State k4 = rhs(s + h * k3);
    s += (h / 6.0) * (k1 + 2.0 * k2 + 2.0 * k3 + k4);
  }
  return s.head<2>();
}

// Plain all-pairs Hausdorff distance without any pruning.
template <typename Point, typename Dist>
double hausdorff_brute(const std::vector<Point>& a, const std::vector<Point>& b, Dist dist) {
  auto directed = [&](const std::vector<Point>& from, const std::vector<Point>& to) {
    double worst = 0.0;
    for (const Point& x : from) {
      double nearest = std::numeric_limits<double>::infinity();
      for (const Point& y : to) nearest = std::min(nearest, dist(x, y));
      worst = std::max(worst, nearest);
    }
    return worst;
  };
  return std::max(directed(a, b), directed(b, a));
}

// Circumference of a geodesic circle of radius r in constant curvature -1.
inline double hyperbolic_circumference(double r) { return 2.0 * M_PI * std::sinh(r); }

// Example constants.
inline double alpha() { return std::log(1.0 + std::sqrt(2.0)) / std::sqrt(2.0); }
inline double x_value() { return std::pow(std::sqrt(2.0) + 1.0, 1.0 / std::sqrt(2.0)); }

}  // namespace oracle
