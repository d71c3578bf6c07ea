#include "wavetail/banded.hpp"

#include <lapacke.h>

namespace wavetail {

std::vector<cplx> BandedComplex::apply(const std::vector<cplx> &x) const {
  if (static_cast<int>(x.size()) != n_) throw std::invalid_argument("size mismatch");
  std::vector<cplx> y(n_, cplx(0, 0));
  for (int j = 0; j < n_; ++j) {
    int ilo = std::max(0, j - ku_), ihi = std::min(n_ - 1, j + kl_);
    for (int i = ilo; i <= ihi; ++i) y[i] += a_[idx(i, j)] * x[j];
  }
  return y;
}

std::vector<cplx> BandedComplex::solve(const std::vector<cplx> &rhs) const {
  if (static_cast<int>(rhs.size()) != n_) throw std::invalid_argument("size mismatch");
  // zgbsv wants kl extra rows on top of the assembly band for the pivoting fill.
  const int ldab = 2 * kl_ + ku_ + 1;
  std::vector<cplx> ab(static_cast<std::size_t>(ldab) * n_, cplx(0, 0));
  for (int j = 0; j < n_; ++j) {
    int ilo = std::max(0, j - ku_), ihi = std::min(n_ - 1, j + kl_);
    for (int i = ilo; i <= ihi; ++i)
      ab[static_cast<std::size_t>(kl_ + ku_ + i - j) + static_cast<std::size_t>(ldab) * j] =
          a_[idx(i, j)];
  }
  std::vector<cplx> x = rhs;
  std::vector<lapack_int> ipiv(n_);
  lapack_int info = LAPACKE_zgbsv(
      LAPACK_COL_MAJOR, n_, kl_, ku_, 1,
      reinterpret_cast<lapack_complex_double *>(ab.data()), ldab, ipiv.data(),
      reinterpret_cast<lapack_complex_double *>(x.data()), n_);
  if (info != 0)
    throw std::runtime_error("banded solve failed: zgbsv info=" + std::to_string(info));
  return x;
}

}  // namespace wavetail
