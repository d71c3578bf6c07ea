#pragma once

#include <Eigen/Dense>
#include <functional>
#include <string>
#include <vector>

#include "wavetail/grid.hpp"
#include "wavetail/norms.hpp"
#include "wavetail/radial.hpp"

namespace wavetail {

/// Asymptotically flat stationary metric in dual components. The h block is
/// radial (S_rad(r^-kappa)); the f slots hold the l1S parts, restricted here
/// to profiles constant on spheres. V = V_r + V_l is the scalar potential.
struct MetricSpec {
  int kappa = 2;
  std::string name = "custom";

  RadialProfile htt = RadialProfile::zero();
  RadialProfile htr = RadialProfile::zero();
  RadialProfile hrr = RadialProfile::zero();
  RadialProfile hww = RadialProfile::zero();

  RadialProfile ftt = RadialProfile::zero();
  RadialProfile ftr = RadialProfile::zero();
  RadialProfile frr = RadialProfile::zero();

  RadialProfile Vr = RadialProfile::zero();
  RadialProfile Vl = RadialProfile::zero();

  static MetricSpec flat();
  /// h^tt = -2M <r>^-1 chi_{>1}(r/4), kappa = 1.
  static MetricSpec price_k1(double M);
  /// h^tt = -eps <r>^-kappa chi_{>1}(r/4), kappa >= 2.
  static MetricSpec family(int kappa, double eps);
  static MetricSpec by_name(const std::string &preset, double eps_or_M);
};

struct ComponentVerdict {
  std::string component;
  SymbolClass claimed;
  bool consistent = false;
};

struct AssumptionReport {
  bool stationary = true;  // by construction
  bool spacelike = false;
  std::vector<ComponentVerdict> falloff;
  bool pass() const {
    if (!spacelike) return false;
    for (const auto &v : falloff)
      if (!v.consistent) return false;
    return true;
  }
};

AssumptionReport check_assumptions(const MetricSpec &spec, double extent = 4096.0);

/// Full 4x4 dual matrix at a point, spherical coordinates (t, r, theta, phi).
Eigen::Matrix4d dual_components(const MetricSpec &spec, double r, double theta);

/// Strictly increasing radial reparametrization rho(r) with rho(0) = 0,
/// jet-evaluable in both directions.
class MonotoneMap {
public:
  MonotoneMap();  // identity

  /// Builds the map with derivative profile drho/dr given as a jet function.
  /// identity_below marks the radius under which the map is exactly r.
  MonotoneMap(std::function<Jet(const Jet &)> deriv,
              std::function<double(double)> value, double identity_below);

  bool is_identity() const { return identity_; }
  double identity_below() const { return identity_below_; }

  double rho(double r) const;
  double r_of_rho(double rho) const;
  double drho_dr(double r) const;

  Jet rho_jet(double r) const;    // jet of rho(.) at r
  Jet r_jet(double rho) const;    // jet of r(.) at rho

  /// p(r) -> p(r(rho)) as a profile of the new radial coordinate.
  RadialProfile pullback(const RadialProfile &p) const;

private:
  bool identity_ = true;
  double identity_below_ = 0.0;
  std::function<Jet(const Jet &)> deriv_;
  std::function<double(double)> value_;
};

/// Metric in normalized coordinates: h^tr = 0 and h^rr = -h^tt exactly.
struct NormalizedMetric {
  MetricSpec comps;       // components as profiles of the new radial coordinate
  RadialProfile Q;        // time shift T = t + Q(r), in the original coordinate
  MonotoneMap rho_of_r;
  int kappa = 2;
};

/// Lemma-style two-stage normalization. Throws when the well-conditioning
/// radius cannot be chosen below half the extent, or the map degenerates.
NormalizedMetric normalize(const MetricSpec &spec, double extent = 4096.0);

/// Treats normalized components as a plain spec again (for idempotency checks
/// and operator construction on hand-built normalized data).
MetricSpec as_spec(const NormalizedMetric &nm);

}  // namespace wavetail
