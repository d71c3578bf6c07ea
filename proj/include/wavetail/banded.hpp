#pragma once

#include <complex>
#include <cstddef>
#include <stdexcept>
#include <vector>

namespace wavetail {

using cplx = std::complex<double>;

/// Complex banded matrix with kl sub- and ku super-diagonals. Assembly keeps a
/// pristine copy for residual checks; solves go through LAPACK zgbsv.
class BandedComplex {
public:
  BandedComplex(int n, int kl, int ku)
      : n_(n), kl_(kl), ku_(ku), a_(static_cast<std::size_t>(kl + ku + 1) * n, cplx(0, 0)) {}

  int size() const { return n_; }
  int kl() const { return kl_; }
  int ku() const { return ku_; }

  bool in_band(int i, int j) const {
    return i >= 0 && j >= 0 && i < n_ && j < n_ && j - i <= ku_ && i - j <= kl_;
  }

  cplx get(int i, int j) const {
    if (!in_band(i, j)) return cplx(0, 0);
    return a_[idx(i, j)];
  }
  void set(int i, int j, cplx v) {
    check(i, j);
    a_[idx(i, j)] = v;
  }
  void add(int i, int j, cplx v) {
    check(i, j);
    a_[idx(i, j)] += v;
  }

  std::vector<cplx> apply(const std::vector<cplx> &x) const;

  /// Solves A y = rhs (A unchanged). Throws on singular factorization.
  std::vector<cplx> solve(const std::vector<cplx> &rhs) const;

private:
  void check(int i, int j) const {
    if (!in_band(i, j)) throw std::out_of_range("banded entry outside band");
  }
  // Band storage, column major: entry (i,j) at row (ku + i - j) of column j.
  std::size_t idx(int i, int j) const {
    return static_cast<std::size_t>(ku_ + i - j) +
           static_cast<std::size_t>(kl_ + ku_ + 1) * j;
  }

  int n_, kl_, ku_;
  std::vector<cplx> a_;
};

}  // namespace wavetail
