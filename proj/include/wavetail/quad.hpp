#pragma once

#include <boost/math/quadrature/gauss_kronrod.hpp>
#include <functional>
#include <limits>

namespace wavetail {

/// Adaptive Gauss-Kronrod quadrature. b may be +infinity.
inline double integrate(const std::function<double(double)> &f, double a, double b,
                        double tol = 1e-12) {
  using boost::math::quadrature::gauss_kronrod;
  double err = 0.0;
  double v = gauss_kronrod<double, 15>::integrate(f, a, b, 14, tol, &err);
  return v;
}

inline double inf() { return std::numeric_limits<double>::infinity(); }

}  // namespace wavetail
