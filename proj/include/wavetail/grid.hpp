#pragma once

#include <cmath>
#include <cstddef>
#include <stdexcept>
#include <vector>

#include "wavetail/radial.hpp"

namespace wavetail {

/// Strictly increasing set of radial nodes. Annulus-resolved norms need the
/// dyadic boundaries among the nodes, so the composite factory places them
/// there exactly.
struct Grid1D {
  std::vector<double> r;

  std::size_t size() const { return r.size(); }
  double rmax() const { return r.back(); }

  /// Uniform nodes 0, h, 2h, ..., n*h.
  static Grid1D uniform(double h, std::size_t n) {
    Grid1D g;
    g.r.resize(n + 1);
    for (std::size_t i = 0; i <= n; ++i) g.r[i] = h * static_cast<double>(i);
    return g;
  }

  /// Composite grid covering annuli m = 0..m_max: uniform on [0,2], then
  /// geometric with >= per_annulus nodes in each dyadic annulus.
  static Grid1D annuli(int m_max, int per_annulus = 64) {
    if (m_max < 1 || per_annulus < 2)
      throw std::invalid_argument("annuli grid needs m_max >= 1, per_annulus >= 2");
    Grid1D g;
    for (int i = 0; i < per_annulus; ++i)
      g.r.push_back(2.0 * i / per_annulus);
    for (int m = 1; m <= m_max; ++m) {
      double lo = std::ldexp(1.0, m), hi = std::ldexp(1.0, m + 1);
      double q = std::pow(hi / lo, 1.0 / per_annulus);
      for (int i = 0; i < per_annulus; ++i) g.r.push_back(lo * std::pow(q, i));
    }
    g.r.push_back(std::ldexp(1.0, m_max + 1));
    return g;
  }

  /// Largest m with the annulus fully inside the grid.
  int covered_annuli() const {
    int m = 0;
    while (std::ldexp(1.0, m + 2) <= rmax() * (1 + 1e-12)) ++m;
    return m;
  }
};

/// Values on a grid. Real scalar fields; complex ones live in the resolvent
/// module as std::vector<std::complex<double>> aligned with the same grid.
using Field = std::vector<double>;

inline Field sample(const RadialProfile &p, const Grid1D &g) {
  Field f(g.size());
  for (std::size_t i = 0; i < g.size(); ++i) f[i] = p.eval(g.r[i]);
  return f;
}

}  // namespace wavetail
