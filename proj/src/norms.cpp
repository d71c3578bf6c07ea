#include "wavetail/norms.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

namespace wavetail {

namespace {

constexpr double kPi = 3.14159265358979323846;

// Trapezoid of 4 pi r^2 |v|^2 over the grid segment [lo, hi] (clipped).
template <typename T>
double l2sq_window(const std::vector<T> &v, const Grid1D &g, double lo, double hi) {
  double acc = 0.0;
  for (std::size_t i = 0; i + 1 < g.size(); ++i) {
    double a = g.r[i], b = g.r[i + 1];
    if (b <= lo || a >= hi) continue;
    double ca = std::max(a, lo), cb = std::min(b, hi);
    // Linear interpolation of the integrand at the clipped endpoints.
    auto w = [&](double r, std::size_t j) {
      double t = (r - a) / (b - a);
      double fa = std::norm(std::complex<double>(v[j])),
             fb = std::norm(std::complex<double>(v[j + 1]));
      double f = fa + t * (fb - fa);
      return 4.0 * kPi * r * r * f;
    };
    acc += 0.5 * (cb - ca) * (w(ca, i) + w(cb, i));
  }
  return acc;
}

template <typename T>
double le_impl(const std::vector<T> &v, const Grid1D &g, bool star) {
  int mm = g.covered_annuli();
  double sup = 0.0, sum = 0.0;
  for (int m = 0; m <= mm; ++m) {
    DyadicAnnulus am{m};
    // weight <r>^{+-1/2}: constant-per-annulus weights are equivalent, but we
    // keep the pointwise weight via a mid-segment bracket factor.
    double lo = am.r_lo(), hi = am.r_hi();
    double acc = 0.0;
    for (std::size_t i = 0; i + 1 < g.size(); ++i) {
      double a = g.r[i], b = g.r[i + 1];
      if (b <= lo || a >= hi) continue;
      double ca = std::max(a, lo), cb = std::min(b, hi);
      auto w = [&](double r, std::size_t j) {
        double t = (r - a) / (b - a);
        double fa = std::norm(std::complex<double>(v[j])),
               fb = std::norm(std::complex<double>(v[j + 1]));
        double f = fa + t * (fb - fa);
        double br = bracket(r);
        double wt = star ? br : 1.0 / br;
        return 4.0 * kPi * r * r * f * wt;
      };
      acc += 0.5 * (cb - ca) * (w(ca, i) + w(cb, i));
    }
    double term = std::sqrt(acc);
    sup = std::max(sup, term);
    sum += term;
  }
  return star ? sum : sup;
}

}  // namespace

double le_norm(const Field &v, const Grid1D &g) { return le_impl(v, g, false); }
double le_star_norm(const Field &v, const Grid1D &g) { return le_impl(v, g, true); }
double le_norm(const std::vector<std::complex<double>> &v, const Grid1D &g) {
  return le_impl(v, g, false);
}
double le_star_norm(const std::vector<std::complex<double>> &v, const Grid1D &g) {
  return le_impl(v, g, true);
}

double l2_annulus(const Field &v, const Grid1D &g, int m) {
  DyadicAnnulus am{m};
  return std::sqrt(l2sq_window(v, g, am.r_lo(), am.r_hi()));
}

double z_norm(const RadialProfile &phi, int n, int q, const Grid1D &g) {
  double best = 0.0;
  for (int i = 0; i + 0 <= n; ++i) {
    for (int k = 0; i + k <= n; ++k) {
      Field f(g.size());
      for (std::size_t p = 0; p < g.size(); ++p) {
        Jet x = Jet::variable(g.r[p]);
        Jet u = phi(x);
        for (int s = 0; s < k; ++s) u = x * u.d();   // S_r = r d/dr
        for (int s = 0; s < i; ++s) u = u.d();       // T = d/dr on radial fields
        f[p] = std::pow(bracket(g.r[p]), q) * u.value();
      }
      best = std::max(best, le_star_norm(f, g));
    }
  }
  return best;
}

SeminormReport estimate_seminorms(const RadialProfile &f, SymbolClass cls,
                                  int m_max, int j_max, int samples_per_annulus) {
  if (f.max_order() < j_max)
    throw std::invalid_argument("profile lacks derivatives for seminorm table");
  if (m_max < 2) throw std::invalid_argument("need m_max >= 2");

  SeminormReport rep;
  rep.cls = cls;
  rep.j_max = j_max;
  rep.m_max = m_max;
  rep.weighted_sup.assign(j_max + 1, std::vector<double>(m_max + 1, 0.0));
  const int q = cls.exponent;

  for (int m = 0; m <= m_max; ++m) {
    DyadicAnnulus am{m};
    double lo = am.r_lo(), hi = am.r_hi();
    for (int s = 0; s <= samples_per_annulus; ++s) {
      double r = lo + (hi - lo) * s / samples_per_annulus;
      Jet u = f.jet(r);
      double br = bracket(r);
      for (int j = 0; j <= j_max; ++j) {
        double w;
        if (cls.kind == SymbolKind::SLog && j == 0)
          w = std::abs(u.deriv(0)) / std::max(std::log(br), 1e-300);
        else if (cls.kind == SymbolKind::SLog)
          w = std::pow(br, j) * std::abs(u.deriv(j));
        else
          w = std::pow(br, j - q) * std::abs(u.deriv(j));
        rep.weighted_sup[j][m] = std::max(rep.weighted_sup[j][m], w);
      }
    }
  }

  auto tail_ok_sup = [&](const std::vector<double> &row) {
    // Non-increasing within a factor 1.5 over the last four annuli.
    double tol = 1.5;
    for (int m = m_max - 3; m <= m_max; ++m) {
      if (m <= 0) continue;
      if (row[m] > tol * std::max(row[m - 1], 1e-300)) return false;
    }
    return true;
  };

  bool ok = true;
  std::ostringstream why;
  if (cls.kind == SymbolKind::L1S) {
    rep.dyadic_partial.assign(j_max + 1, std::vector<double>(m_max + 1, 0.0));
    for (int j = 0; j <= j_max; ++j) {
      double acc = 0.0;
      std::vector<double> inc(m_max + 1, 0.0);
      for (int m = 0; m <= m_max; ++m) {
        // sup |d^j f| over A_m scaled by 2^{m(j-q)}
        double sup_dj = rep.weighted_sup[j][m] / std::pow(std::ldexp(1.0, m), j - q);
        inc[m] = std::ldexp(1.0, m * (j - q)) * sup_dj;
        acc += inc[m];
        rep.dyadic_partial[j][m] = acc;
      }
      // Geometric convergence of the partial sums: shrinking increments.
      for (int m = m_max - 3; m <= m_max; ++m) {
        if (m <= 0) continue;
        if (inc[m] > 0.9 * std::max(inc[m - 1], 1e-300)) {
          if (inc[m] > 1e-14 * std::max(acc, 1e-300)) {
            ok = false;
            why << "l1 increments not geometric at j=" << j << " m=" << m << "; ";
          }
        }
      }
    }
  } else {
    for (int j = 0; j <= j_max; ++j) {
      if (!tail_ok_sup(rep.weighted_sup[j])) {
        ok = false;
        why << "weighted sup grows at j=" << j << "; ";
      }
    }
  }
  rep.consistent = ok;
  rep.detail = why.str();
  return rep;
}

}  // namespace wavetail
