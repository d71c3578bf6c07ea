#pragma once

#include <complex>
#include <functional>
#include <string>
#include <vector>

#include "wavetail/grid.hpp"
#include "wavetail/radial.hpp"

namespace wavetail {

// Annulus-localized spatial norms with the 3D measure 4 pi r^2 dr:
//   LE  (v) = sup_m || <r>^{-1/2} v ||_{L2(A_m)}
//   LE* (g) = sum_m || <r>^{+1/2} g ||_{L2(A_m)}
// evaluated over the annuli the grid covers.

double le_norm(const Field &v, const Grid1D &g);
double le_star_norm(const Field &v, const Grid1D &g);

double le_norm(const std::vector<std::complex<double>> &v, const Grid1D &g);
double le_star_norm(const std::vector<std::complex<double>> &v, const Grid1D &g);

/// L2(A_m) with the 4 pi r^2 dr measure, restricted to one annulus.
double l2_annulus(const Field &v, const Grid1D &g, int m);

/// Z^{n,q} norm restricted to radial fields: rotations annihilate radial
/// functions, T acts as d/dr along rays and S_r = r d/dr, so
///   ||phi||_{Z^{n,q}} = sup_{i+k <= n} || <r>^q T^i S_r^k phi ||_{LE*}.
double z_norm(const RadialProfile &phi, int n, int q, const Grid1D &g);

// ---------------------------------------------------------------------------
// Symbol-class seminorm estimation (a falsification test, not a proof).
// ---------------------------------------------------------------------------

struct SeminormReport {
  SymbolClass cls;
  int j_max = 0;
  int m_max = 0;
  /// sup_{A_m} <r>^{j-q} |d^j f| per (j, m); for SLog the j = 0 row uses the
  /// (log <r>)^{-1} weight instead.
  std::vector<std::vector<double>> weighted_sup;
  /// Partial dyadic sums sum_{m' <= m} 2^{m'(j-q)} sup_{A_m'} |d^j f|
  /// (only filled for the l1 class).
  std::vector<std::vector<double>> dyadic_partial;
  bool consistent = false;
  std::string detail;
};

/// Tabulates the weighted sup-norms of f against the claimed class over
/// annuli m <= m_max and derivative orders j <= j_max. A claim is accepted
/// when the weighted quantity over the last four sampled annuli is
/// non-increasing within a factor 1.5 (S classes) or the dyadic increments
/// keep shrinking (l1 classes).
SeminormReport estimate_seminorms(const RadialProfile &f, SymbolClass cls,
                                  int m_max, int j_max,
                                  int samples_per_annulus = 64);

}  // namespace wavetail
