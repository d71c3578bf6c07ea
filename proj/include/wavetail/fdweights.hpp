#pragma once

#include <cstddef>
#include <stdexcept>
#include <vector>

namespace wavetail {

/// Fornberg weights: given nodes x[0..n-1] and a point x0, returns w such that
/// f^(m)(x0) ~ sum_i w[i] f(x[i]). Works on arbitrary (non-uniform) stencils.
inline std::vector<double> fd_weights(double x0, const std::vector<double> &x, int m) {
  const int n = static_cast<int>(x.size());
  if (n < m + 1) throw std::invalid_argument("stencil too small for derivative order");
  std::vector<std::vector<double>> c(n, std::vector<double>(m + 1, 0.0));
  double c1 = 1.0, c4 = x[0] - x0;
  c[0][0] = 1.0;
  for (int i = 1; i < n; ++i) {
    int mn = std::min(i, m);
    double c2 = 1.0, c5 = c4;
    c4 = x[i] - x0;
    for (int j = 0; j < i; ++j) {
      double c3 = x[i] - x[j];
      c2 *= c3;
      if (j == i - 1) {
        for (int k = mn; k >= 1; --k)
          c[i][k] = c1 * (k * c[i - 1][k - 1] - c5 * c[i - 1][k]) / c2;
        c[i][0] = -c1 * c5 * c[i - 1][0] / c2;
      }
      for (int k = mn; k >= 1; --k)
        c[j][k] = (c4 * c[j][k] - k * c[j][k - 1]) / c3;
      c[j][0] = c4 * c[j][0] / c3;
    }
    c1 = c2;
  }
  std::vector<double> w(n);
  for (int i = 0; i < n; ++i) w[i] = c[i][m];
  return w;
}

/// m-th derivative of sampled values at interior index i using a centered
/// (clipped near edges) stencil of the given half width.
template <typename T>
T fd_derivative_at(const std::vector<double> &r, const std::vector<T> &f,
                   std::size_t i, int m, int half_width) {
  std::size_t lo = i > static_cast<std::size_t>(half_width) ? i - half_width : 0;
  std::size_t hi = std::min(f.size() - 1, i + half_width);
  if (static_cast<int>(hi - lo) < m)
    throw std::invalid_argument("not enough nodes for fd derivative");
  std::vector<double> xs(r.begin() + lo, r.begin() + hi + 1);
  auto w = fd_weights(r[i], xs, m);
  T acc{};
  for (std::size_t k = 0; k < xs.size(); ++k) acc += w[k] * f[lo + k];
  return acc;
}

}  // namespace wavetail
