#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <random>

#include "wavetail/radial.hpp"

using namespace wavetail;

TEST_CASE("bracket basic values") {
  CHECK(bracket(3.0) == 3.0);  // equals r for r > 2
  CHECK(bracket(0.0) == 1.0);  // sqrt(1+0)
  CHECK(bracket(1.0) == doctest::Approx(std::sqrt(2.0)));
}

TEST_CASE("bracket is r bit-for-bit beyond 2") {
  std::mt19937 rng(7);
  std::uniform_real_distribution<double> u(2.0, 1e6);
  for (int i = 0; i < 1000; ++i) {
    double r = u(rng);
    CHECK(bracket(r) == r);
  }
}

TEST_CASE("bracket monotone on sample points") {
  double pts[] = {0.0, 0.5, 1.0, 1.5, 2.0, 5.0};
  for (int i = 0; i + 1 < 6; ++i) CHECK(bracket(pts[i]) < bracket(pts[i + 1]));
}

TEST_CASE("bracket always >= 1 and smooth derivative positive") {
  for (double r = 0.0; r <= 4.0; r += 0.01) {
    CHECK(bracket(r) >= 1.0);
    Jet j = bracket_jet(Jet::variable(r));
    CHECK(j.deriv(1) >= 0.0);
  }
}

TEST_CASE("bracket rejects negative input") {
  CHECK_THROWS(bracket(-1.0));
}

TEST_CASE("cutoffs partition exactly") {
  std::mt19937 rng(11);
  std::uniform_real_distribution<double> u(0.0, 5.0);
  for (int i = 0; i < 10000; ++i) {
    double r = u(rng);
    CHECK(chi_below(r) + chi_above(r) == doctest::Approx(1.0).epsilon(1e-15));
  }
  CHECK(chi_below(0.7) == 1.0);
  CHECK(chi_below(2.3) == 0.0);
  CHECK(chi_above(2.3) == 1.0);
  CHECK(chi_near(1.5) == 1.0);
  CHECK(chi_near(0.4) == 0.0);
  CHECK(chi_near(4.5) == 0.0);
}

TEST_CASE("cutoff derivatives bounded through order four") {
  for (double r = 0.9; r <= 2.1; r += 0.002) {
    Jet j = chi_below_jet(Jet::variable(r));
    for (int d = 1; d <= 4; ++d) CHECK(std::abs(j.deriv(d)) < 1e4);
  }
}

TEST_CASE("dyadic partition of unity") {
  const int m_max = 14;
  for (double r : {1.0, 1.7, 2.0, 5.0, 37.0, 1000.0, 16000.0}) {
    double s = 0.0;
    for (int m = 0; m <= m_max; ++m) s += beta_annulus(m, r);
    CHECK(std::abs(s - 1.0) < 1e-12);
  }
}

TEST_CASE("annuli tile and share endpoints") {
  for (int m = 0; m < 8; ++m) {
    DyadicAnnulus a{m}, b{m + 1};
    CHECK(a.hi() == b.lo());
  }
  CHECK(DyadicAnnulus{0}.lo() == 1.0);
}

TEST_CASE("smooth_min pins the asymptotic regime") {
  CHECK(smooth_min(10.0, 1.0) == 1.0);
  CHECK(smooth_min(1.0, 10.0) == 1.0);
  CHECK(smooth_min(0.25, 1.0) == 0.25);
  for (double c : {0.3, 1.0, 7.5}) {
    double v = smooth_min(c, c);
    CHECK(v >= c / 2);
    CHECK(v <= c);
  }
  CHECK(smooth_min(3.0, 7.0) == doctest::Approx(smooth_min(7.0, 3.0)).epsilon(1e-15));
  CHECK_THROWS(smooth_min(-1.0, 2.0));
  CHECK_THROWS(smooth_min(1.0, 0.0));
}

TEST_CASE("profile derivatives agree with finite differences under refinement") {
  RadialProfile p = bracket_power(-2.0);
  for (int j = 1; j <= 3; ++j) {
    double r = 1.5;
    double prev_err = 0.0;
    int step = 0;
    for (double h : {1e-2, 5e-3, 2.5e-3}) {
      double fd = (p.deriv(j - 1, r + h) - p.deriv(j - 1, r - h)) / (2 * h);
      double err = std::abs(fd - p.deriv(j, r));
      if (step > 0) CHECK(err < 0.35 * prev_err);  // O(h^2)
      prev_err = err;
      ++step;
    }
  }
  // deriv(0) is eval
  CHECK(p.deriv(0, 2.7) == p.eval(2.7));
}

TEST_CASE("alternative bracket satisfies the same defining properties") {
  for (double r : {2.0, 2.5, 31.0}) CHECK(bracket_alt_jet(Jet::variable(r)).value() == r);
  for (double r = 0.0; r < 2.0; r += 0.01)
    CHECK(bracket_alt_jet(Jet::variable(r)).value() >= 1.0);
  // monotone as well
  double prev = bracket_alt_jet(Jet::variable(0.0)).value();
  for (double r = 0.05; r <= 2.5; r += 0.05) {
    double v = bracket_alt_jet(Jet::variable(r)).value();
    CHECK(v > prev);
    prev = v;
  }
}
