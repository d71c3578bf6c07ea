#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "wavetail/metric.hpp"

using namespace wavetail;

TEST_CASE("flat spec passes all assumption checks") {
  auto rep = check_assumptions(MetricSpec::flat(), 512.0);
  CHECK(rep.stationary);
  CHECK(rep.spacelike);
  CHECK(rep.pass());
}

TEST_CASE("price preset passes for kappa = 1") {
  auto rep = check_assumptions(MetricSpec::price_k1(0.1), 512.0);
  CHECK(rep.pass());
}

TEST_CASE("large h^rr violates the spacelike condition") {
  MetricSpec m = MetricSpec::flat();
  m.hrr = RadialProfile(
      [](const Jet &x) { return chi_above_jet(x * 0.25) * (-2.0); }, Jet::kOrder,
      SymbolClass::srad(-2));
  auto rep = check_assumptions(m, 128.0);
  CHECK_FALSE(rep.spacelike);
}

TEST_CASE("dual components of the flat metric") {
  Eigen::Matrix4d g = dual_components(MetricSpec::flat(), 2.0, M_PI / 2);
  CHECK(g(0, 0) == -1.0);
  CHECK(g(1, 1) == 1.0);
  CHECK(g(2, 2) == doctest::Approx(0.25).epsilon(1e-15));
  CHECK(g(3, 3) == doctest::Approx(0.25).epsilon(1e-15));
  CHECK(g(0, 1) == 0.0);
}

TEST_CASE("angular perturbation scales the angular entries exactly") {
  MetricSpec m = MetricSpec::flat();
  double eps = 0.017;
  m.hww = RadialProfile::constant(eps);
  for (double r : {0.7, 2.0, 11.0}) {
    Eigen::Matrix4d g = dual_components(m, r, 1.1);
    CHECK(g(2, 2) == doctest::Approx((1.0 + eps) / (r * r)).epsilon(1e-15));
  }
}

TEST_CASE("primal/dual round trip") {
  MetricSpec m = MetricSpec::family(2, 0.5);
  for (double r : {1.0, 5.5, 40.0}) {
    Eigen::Matrix4d dual = dual_components(m, r, 0.9);
    Eigen::Matrix4d primal = dual.inverse();
    Eigen::Matrix4d id = dual * primal;
    CHECK((id - Eigen::Matrix4d::Identity()).cwiseAbs().maxCoeff() < 1e-12);
  }
}

TEST_CASE("normalize is the identity on the flat metric") {
  auto nm = normalize(MetricSpec::flat(), 512.0);
  CHECK(nm.rho_of_r.is_identity());
  CHECK(nm.Q.is_zero());
  for (double r : {0.0, 1.0, 17.0, 200.0}) {
    CHECK(nm.comps.htt.eval(r) == 0.0);
    CHECK(nm.comps.frr.eval(r) == 0.0);
    CHECK(nm.rho_of_r.rho(r) == r);
  }
}

TEST_CASE("normalize on an already normalized spec is trivial") {
  MetricSpec m = MetricSpec::flat();
  double eps = 0.3;
  auto prof = [eps](const Jet &x) {
    return jet_pow(bracket_jet(x), -2.0) * chi_above_jet(x * 0.25) * eps;
  };
  m.htt = RadialProfile([prof](const Jet &x) { return -prof(x); }, Jet::kOrder,
                        SymbolClass::srad(-2));
  m.hrr = RadialProfile(prof, Jet::kOrder, SymbolClass::srad(-2));
  auto nm = normalize(m, 512.0);
  CHECK(nm.rho_of_r.is_identity());
  CHECK(nm.Q.is_zero());
  CHECK(nm.comps.frr.is_zero());
  for (double r : {3.0, 9.0, 77.0})
    CHECK(nm.comps.htt.eval(r) == doctest::Approx(m.htt.eval(r)).epsilon(1e-14));
}

TEST_CASE("time shift removes h^tr and leaves the documented remainder") {
  MetricSpec m = MetricSpec::flat();
  m.htr = RadialProfile(
      [](const Jet &x) {
        return jet_pow(bracket_jet(x), -2.0) * chi_above_jet(x * 0.25) * 0.05;
      },
      Jet::kOrder, SymbolClass::srad(-2));
  auto nm = normalize(m, 512.0);
  CHECK(nm.comps.htr.is_zero());
  CHECK_FALSE(nm.Q.is_zero());
  // new g^TT = -1 - (h^tr)^2 here, i.e. the f^tt remainder is -(h^tr)^2
  for (double r : {6.0, 10.0, 43.0}) {
    double htr = m.htr.eval(r);
    CHECK(nm.comps.ftt.eval(r) == doctest::Approx(-htr * htr).epsilon(1e-12));
  }
  // remainder is consistent with l1S(r^-2)
  auto rep = estimate_seminorms(nm.comps.ftt, SymbolClass::l1(-2), 8, 2);
  CHECK(rep.consistent);
  // Q' = -h^tr/(1+h^rr)
  for (double r : {6.0, 20.0})
    CHECK(nm.Q.deriv(1, r) == doctest::Approx(-m.htr.eval(r)).epsilon(1e-12));
}

TEST_CASE("normalization residuals vanish for the kappa = 2 family") {
  auto nm = normalize(MetricSpec::family(2, 0.5), 512.0);
  CHECK_FALSE(nm.rho_of_r.is_identity());
  for (double rho = 0.25; rho < 300.0; rho *= 1.3) {
    CHECK(std::abs(nm.comps.htr.eval(rho)) < 1e-10);
    CHECK(std::abs(nm.comps.hrr.eval(rho) + nm.comps.htt.eval(rho)) < 1e-10);
  }
  // rho'(r) within [1/2, 2] at large radii
  for (double r : {50.0, 100.0, 400.0}) {
    double d = nm.rho_of_r.drho_dr(r);
    CHECK(d > 0.5);
    CHECK(d < 2.0);
  }
}

TEST_CASE("normalize is idempotent") {
  auto nm = normalize(MetricSpec::family(2, 0.5), 512.0);
  auto nm2 = normalize(as_spec(nm), 512.0);
  CHECK(nm2.rho_of_r.is_identity());
  for (double r = 0.5; r < 400.0; r *= 1.7) {
    CHECK(std::abs(nm2.comps.htt.eval(r) - nm.comps.htt.eval(r)) < 1e-10);
    CHECK(std::abs(nm2.comps.hww.eval(r) - nm.comps.hww.eval(r)) < 1e-10);
    CHECK(std::abs(nm2.comps.frr.eval(r) - nm.comps.frr.eval(r)) < 1e-10);
  }
}

TEST_CASE("signature is preserved by normalization") {
  MetricSpec m = MetricSpec::family(2, 0.8);
  auto nm = normalize(m, 512.0);
  for (double r : {1.0, 12.0, 90.0}) {
    Eigen::Matrix4d before = dual_components(m, r, 1.2);
    Eigen::Matrix4d after = dual_components(as_spec(nm), r, 1.2);
    auto signs = [](const Eigen::Matrix4d &g) {
      Eigen::SelfAdjointEigenSolver<Eigen::Matrix4d> es(g);
      int neg = 0;
      for (int i = 0; i < 4; ++i)
        if (es.eigenvalues()[i] < 0) ++neg;
      return neg;
    };
    CHECK(signs(before) == signs(after));
  }
}

TEST_CASE("falloff classes survive normalization (kappa = 2 and 3)") {
  for (int kappa : {2, 3}) {
    auto nm = normalize(MetricSpec::family(kappa, 0.5), 512.0);
    MetricSpec s = as_spec(nm);
    CHECK(estimate_seminorms(s.htt, SymbolClass::srad(-kappa), 9, 2).consistent);
    CHECK(estimate_seminorms(s.hrr, SymbolClass::srad(-kappa), 9, 2).consistent);
    CHECK(estimate_seminorms(s.hww, SymbolClass::srad(-kappa), 9, 2).consistent);
    CHECK(estimate_seminorms(s.frr, SymbolClass::l1(-kappa), 9, 2).consistent);
  }
}

TEST_CASE("blend remainder in f^rr is compactly supported and radial") {
  auto nm = normalize(MetricSpec::family(2, 0.5), 512.0);
  double inner_sup = 0.0;
  for (double rho = 4.0; rho < 16.0; rho += 0.5)
    inner_sup = std::max(inner_sup, std::abs(nm.comps.frr.eval(rho)));
  CHECK(inner_sup > 1e-4);  // remainder genuinely present inside the blend zone
  for (double rho : {64.0, 150.0, 480.0})
    CHECK(std::abs(nm.comps.frr.eval(rho)) < 1e-12);
}

TEST_CASE("kappa = 1 normalization anchors at the origin") {
  auto nm = normalize(MetricSpec::price_k1(0.1), 512.0);
  CHECK(nm.comps.frr.is_zero());  // exact reparametrization everywhere
  CHECK(nm.rho_of_r.rho(0.0) == 0.0);
  CHECK(nm.rho_of_r.rho(2.0) == 2.0);
  // rho grows like r + M log r
  double r = 300.0;
  double expect = nm.rho_of_r.rho(150.0) +
                  0.1 * std::log(300.0 / 150.0) + 150.0;
  CHECK(nm.rho_of_r.rho(r) == doctest::Approx(expect).epsilon(2e-4));
}

TEST_CASE("map inversion and jets are consistent") {
  auto nm = normalize(MetricSpec::family(2, 0.7), 512.0);
  const MonotoneMap &map = nm.rho_of_r;
  for (double r : {5.0, 21.0, 130.0}) {
    double rho = map.rho(r);
    CHECK(map.r_of_rho(rho) == doctest::Approx(r).epsilon(1e-12));
    // derivative of the inverse is the reciprocal derivative
    Jet rj = map.r_jet(rho);
    CHECK(rj.deriv(1) == doctest::Approx(1.0 / map.drho_dr(r)).epsilon(1e-12));
    // second derivative cross-check by finite differences of r_of_rho
    double h = 1e-3;
    double fd2 = (map.r_of_rho(rho + h) - 2 * r + map.r_of_rho(rho - h)) / (h * h);
    CHECK(rj.deriv(2) == doctest::Approx(fd2).epsilon(1e-5));
  }
}
