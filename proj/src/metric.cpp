#include "wavetail/metric.hpp"

#include <algorithm>
#include <cmath>
#include <memory>
#include <stdexcept>

#include "wavetail/quad.hpp"

namespace wavetail {

namespace {

std::vector<double> scan_points(double extent) {
  std::vector<double> pts;
  for (double r = 0.0; r <= 8.0; r += 0.125) pts.push_back(r);
  double r = 8.0;
  while (r < extent) {
    r *= 1.05;
    pts.push_back(std::min(r, extent));
  }
  return pts;
}

}  // namespace

MetricSpec MetricSpec::flat() {
  MetricSpec m;
  m.name = "flat";
  m.kappa = 2;
  return m;
}

MetricSpec MetricSpec::price_k1(double M) {
  MetricSpec m;
  m.name = "price_k1";
  m.kappa = 1;
  m.htt = RadialProfile(
      [M](const Jet &x) {
        return jet_pow(bracket_jet(x), -1.0) * chi_above_jet(x * 0.25) * (-2.0 * M);
      },
      Jet::kOrder, SymbolClass::srad(-1));
  return m;
}

MetricSpec MetricSpec::family(int kappa, double eps) {
  if (kappa < 1) throw std::invalid_argument("family preset needs kappa >= 1");
  MetricSpec m;
  m.name = "family_k" + std::to_string(kappa);
  m.kappa = kappa;
  double q = -static_cast<double>(kappa);
  m.htt = RadialProfile(
      [eps, q](const Jet &x) {
        return jet_pow(bracket_jet(x), q) * chi_above_jet(x * 0.25) * (-eps);
      },
      Jet::kOrder, SymbolClass::srad(static_cast<int>(q)));
  return m;
}

MetricSpec MetricSpec::by_name(const std::string &preset, double p) {
  if (preset == "flat") return flat();
  if (preset == "price_k1") return price_k1(p);
  if (preset == "family_k2") return family(2, p);
  if (preset == "family_k3") return family(3, p);
  if (preset == "family_k4") return family(4, p);
  throw std::invalid_argument("unknown metric preset: " + preset);
}

Eigen::Matrix4d dual_components(const MetricSpec &spec, double r, double theta) {
  Eigen::Matrix4d g = Eigen::Matrix4d::Zero();
  double s2 = std::sin(theta) * std::sin(theta);
  if (r <= 0.0 || s2 <= 0.0)
    throw std::domain_error("dual components need r > 0, sin(theta) != 0");
  double r2 = r * r;
  g(0, 0) = -1.0 + spec.htt.eval(r) + spec.ftt.eval(r);
  g(0, 1) = g(1, 0) = spec.htr.eval(r) + spec.ftr.eval(r);
  g(1, 1) = 1.0 + spec.hrr.eval(r) + spec.frr.eval(r);
  g(2, 2) = (1.0 + spec.hww.eval(r)) / r2;
  g(3, 3) = (1.0 + spec.hww.eval(r)) / (r2 * s2);
  if (std::abs(g.determinant()) < 1e-14) throw std::runtime_error("degenerate dual metric");
  return g;
}

AssumptionReport check_assumptions(const MetricSpec &spec, double extent) {
  AssumptionReport rep;
  rep.spacelike = true;
  for (double r : scan_points(extent)) {
    if (r < 0.05) continue;
    for (double theta : {0.4, 1.1, M_PI / 2}) {
      Eigen::Matrix4d dual = dual_components(spec, r, theta);
      Eigen::Matrix4d primal = dual.inverse();
      Eigen::Matrix3d spatial = primal.block<3, 3>(1, 1);
      Eigen::SelfAdjointEigenSolver<Eigen::Matrix3d> es(spatial);
      if (es.eigenvalues().minCoeff() <= 0.0) rep.spacelike = false;
    }
  }

  auto add = [&](const char *n, const RadialProfile &p, SymbolClass cls) {
    ComponentVerdict v;
    v.component = n;
    v.claimed = cls;
    v.consistent = p.is_zero() || estimate_seminorms(p, cls, 10, 3).consistent;
    rep.falloff.push_back(v);
  };
  int k = spec.kappa;
  add("htt", spec.htt, SymbolClass::srad(-k));
  add("htr", spec.htr, SymbolClass::srad(-k));
  add("hrr", spec.hrr, SymbolClass::srad(-k));
  add("hww", spec.hww, SymbolClass::srad(-k));
  add("ftt", spec.ftt, SymbolClass::l1(-k));
  add("ftr", spec.ftr, SymbolClass::l1(-k));
  add("frr", spec.frr, SymbolClass::l1(-k));
  add("Vr", spec.Vr, SymbolClass::srad(-k - 2));
  add("Vl", spec.Vl, SymbolClass::l1(-k - 2));
  return rep;
}

// ---------------------------------------------------------------------------
// MonotoneMap
// ---------------------------------------------------------------------------

MonotoneMap::MonotoneMap() = default;

MonotoneMap::MonotoneMap(std::function<Jet(const Jet &)> deriv,
                         std::function<double(double)> value, double identity_below)
    : identity_(false), identity_below_(identity_below), deriv_(std::move(deriv)),
      value_(std::move(value)) {}

double MonotoneMap::rho(double r) const {
  if (identity_ || r < identity_below_) return r;
  return value_(r);
}

double MonotoneMap::drho_dr(double r) const {
  if (identity_ || r < identity_below_) return 1.0;
  return deriv_(Jet::variable(r)).value();
}

Jet MonotoneMap::rho_jet(double r) const {
  if (identity_ || r < identity_below_) return Jet::variable(r);
  Jet d = deriv_(Jet::variable(r));
  Jet out;
  out.coeff(0) = rho(r);
  for (int k = 0; k + 1 < Jet::kLen; ++k) out.coeff(k + 1) = d.coeff(k) / (k + 1);
  return out;
}

double MonotoneMap::r_of_rho(double target) const {
  if (identity_ || target < identity_below_) return target;
  double r = target;
  for (int it = 0; it < 60; ++it) {
    double f = rho(r) - target;
    double d = drho_dr(r);
    double step = f / d;
    r -= step;
    if (r < 0.0) r = 0.0;
    if (std::abs(step) < 1e-14 * (1.0 + std::abs(r))) break;
  }
  return r;
}

Jet MonotoneMap::r_jet(double rho_pt) const {
  if (identity_ || rho_pt < identity_below_) return Jet::variable(rho_pt);
  double r0 = r_of_rho(rho_pt);
  Jet rj;
  rj.coeff(0) = r0;
  rj.coeff(1) = 1.0 / drho_dr(r0);
  for (int k = 1; k + 1 < Jet::kLen; ++k) {
    Jet recip = Jet::constant(1.0) / deriv_(rj);
    rj.coeff(k + 1) = recip.coeff(k) / (k + 1);
  }
  return rj;
}

RadialProfile MonotoneMap::pullback(const RadialProfile &p) const {
  if (identity_) return p;
  if (p.is_zero()) return RadialProfile::zero();
  MonotoneMap self = *this;
  return RadialProfile(
      [self, p](const Jet &x) {
        if (x.value() < self.identity_below_) return p(x);
        return p(self.r_jet(x.value()));
      },
      p.max_order(), p.claimed_class(), p.support_hint());
}

// ---------------------------------------------------------------------------
// normalize
// ---------------------------------------------------------------------------

namespace {

/// chi_{>1}(r/R); R == 0 means the constant 1.
std::function<Jet(const Jet &)> chi_above_scaled(double R) {
  if (R <= 0.0) return [](const Jet &) { return Jet::constant(1.0); };
  return [R](const Jet &x) { return chi_above_jet(x / R); };
}

double select_radius(const std::vector<double> &pts,
                     const std::function<bool(double)> &cond, double extent,
                     const char *what) {
  int first_ok = -1;
  for (int i = static_cast<int>(pts.size()) - 1; i >= 0; --i) {
    if (cond(pts[i])) first_ok = i;
    else break;
  }
  if (first_ok == 0) return 0.0;
  if (first_ok < 0 || pts[first_ok] > extent / 2)
    throw std::runtime_error(std::string("normalization: no admissible radius for ") + what);
  return pts[first_ok];
}

/// Cumulative shift s(r) = int_0^r (D(u) - 1) du on a dense table with exact
/// endpoint slopes, Hermite-interpolated between nodes.
class ShiftTable {
public:
  ShiftTable(const std::function<double(double)> &dval, double r_end) {
    nodes_.push_back(0.0);
    for (double r = 0.0625; r <= 16.0; r += 0.0625) nodes_.push_back(r);
    for (double r = 16.0 * 1.01; r < r_end; r *= 1.01) nodes_.push_back(r);
    nodes_.push_back(r_end);
    vals_.resize(nodes_.size());
    slopes_.resize(nodes_.size());
    vals_[0] = 0.0;
    slopes_[0] = dval(0.0) - 1.0;
    for (std::size_t i = 1; i < nodes_.size(); ++i) {
      vals_[i] = vals_[i - 1] +
                 integrate([&](double u) { return dval(u) - 1.0; }, nodes_[i - 1],
                           nodes_[i], 1e-13);
      slopes_[i] = dval(nodes_[i]) - 1.0;
    }
  }

  double total() const { return vals_.back(); }

  double operator()(double r) const {
    if (r <= 0.0) return 0.0;
    if (r >= nodes_.back())
      return vals_.back() + slopes_.back() * (r - nodes_.back());
    auto it = std::upper_bound(nodes_.begin(), nodes_.end(), r);
    std::size_t i = static_cast<std::size_t>(it - nodes_.begin()) - 1;
    double h = nodes_[i + 1] - nodes_[i];
    double t = (r - nodes_[i]) / h;
    double h00 = (1 + 2 * t) * (1 - t) * (1 - t), h10 = t * (1 - t) * (1 - t);
    double h01 = t * t * (3 - 2 * t), h11 = t * t * (t - 1);
    return h00 * vals_[i] + h10 * h * slopes_[i] + h01 * vals_[i + 1] +
           h11 * h * slopes_[i + 1];
  }

private:
  std::vector<double> nodes_, vals_, slopes_;
};

struct Stage1Out {
  RadialProfile htt, hrr, hww, ftt, ftr, frr, Q;
};

Stage1Out time_shift(const MetricSpec &s, double extent) {
  Stage1Out out;
  out.htt = s.htt;
  out.hrr = s.hrr;
  out.hww = s.hww;
  if (s.htr.is_zero()) {
    out.ftt = s.ftt;
    out.ftr = s.ftr;
    out.frr = s.frr;
    out.Q = RadialProfile::zero();
    return out;
  }
  auto pts = scan_points(extent);
  auto cond = [&](double r) {
    double den = 1.0 + s.hrr.eval(r);
    return den >= 0.5 && std::abs(s.htr.eval(r) / den) <= 0.25;
  };
  double R = select_radius(pts, cond, extent, "time shift (1 + h^rr, h^tr bounds)");
  auto chi = chi_above_scaled(R);

  auto htr = s.htr, hrr = s.hrr, ftt = s.ftt, ftr = s.ftr, frr = s.frr;
  auto W = [chi, htr, hrr](const Jet &x) {
    return chi(x) * htr(x) / (Jet::constant(1.0) + hrr(x));
  };
  out.ftt = RadialProfile(
      [W, ftt, ftr, htr, frr, hrr](const Jet &x) {
        Jet w = W(x);
        return ftt(x) - 2.0 * w * (ftr(x) + htr(x)) + w * w * (1.0 + frr(x) + hrr(x));
      },
      Jet::kOrder, SymbolClass::l1(-1));
  out.ftr = RadialProfile(
      [W, ftr, frr, htr, chi](const Jet &x) {
        return ftr(x) - W(x) * frr(x) + (Jet::constant(1.0) - chi(x)) * htr(x);
      },
      Jet::kOrder, SymbolClass::l1(-1));
  out.frr = s.frr;
  out.Q = RadialProfile(
      [W](const Jet &x) {
        double v = integrate([&](double u) { return -W(Jet::variable(u)).value(); },
                             0.0, x.value(), 1e-11);
        Jet d = -W(x);
        Jet q;
        q.coeff(0) = v;
        for (int k = 0; k + 1 < Jet::kLen; ++k) q.coeff(k + 1) = d.coeff(k) / (k + 1);
        return q;
      },
      Jet::kOrder, SymbolClass::srad(0));
  return out;
}

}  // namespace

NormalizedMetric normalize(const MetricSpec &spec, double extent) {
  Stage1Out s1 = time_shift(spec, extent);

  auto pts = scan_points(extent);
  auto htt = s1.htt, hrr = s1.hrr;
  auto cond = [&](double r) {
    double den = 1.0 + hrr.eval(r);
    if (den < 0.5) return false;
    // square root argument with chi = 1 stays well away from zero
    return (1.0 - htt.eval(r)) / den > 0.25;
  };
  double R = select_radius(pts, cond, extent, "radial reparametrization (1 + h^rr)");
  auto chi = chi_above_scaled(R);

  bool trivial = s1.htt.is_zero() && s1.hrr.is_zero();
  if (!trivial) {
    trivial = true;
    for (double r : pts)
      if (std::abs(s1.htt.eval(r) + s1.hrr.eval(r)) > 1e-15) {
        trivial = false;
        break;
      }
  }

  MonotoneMap map;
  if (!trivial) {
    auto D = [chi, htt, hrr](const Jet &x) {
      Jet num = chi(x) * (-htt(x) - hrr(x));
      return jet_sqrt(Jet::constant(1.0) + num / (Jet::constant(1.0) + hrr(x)));
    };
    auto Dval = [D](double r) { return D(Jet::variable(r)).value(); };

    double onset = 0.0;
    for (double r : pts) {
      if (std::abs(Dval(r) - 1.0) > 1e-15) break;
      onset = r;
    }

    auto table = std::make_shared<ShiftTable>(Dval, std::ldexp(1.0, 21));

    if (spec.kappa >= 2) {
      // Anchor at infinity so the angular component keeps its falloff class;
      // blend back to the identity below Ra. The mismatch on the blend zone is
      // tracked exactly and lands in the f slot.
      double Ra = std::max(8.0, 2.0 * R);
      double S_inf = table->total();
      auto value = [table, Ra, S_inf](double r) {
        return r - chi_above(r / Ra) * (S_inf - (*table)(r));
      };
      auto deriv = [table, D, Ra, S_inf](const Jet &x) {
        // rho(r) = r - chi_a (S_inf - s(r));  s' = D - 1
        Jet chia = chi_above_jet(x / Ra);
        Jet s;
        s.coeff(0) = (*table)(x.value());
        Jet ds = D(x) - 1.0;
        for (int k = 0; k + 1 < Jet::kLen; ++k) s.coeff(k + 1) = ds.coeff(k) / (k + 1);
        Jet rho_full = x - chia * (Jet::constant(S_inf) - s);
        return rho_full.d();
      };
      map = MonotoneMap(deriv, value, Ra);
    } else {
      // kappa = 1: the anchor integral diverges; anchor at the origin.
      auto value = [table](double r) { return r + (*table)(r); };
      map = MonotoneMap(D, value, onset);
    }

    double prev = -1.0;
    for (double r : pts) {
      if (map.drho_dr(r) <= 0.0)
        throw std::runtime_error("normalization: rho map not increasing");
      double v = map.rho(r);
      if (v <= prev) throw std::runtime_error("normalization: rho map not increasing");
      prev = v;
    }
  }

  NormalizedMetric nm;
  nm.kappa = spec.kappa;
  nm.rho_of_r = map;
  nm.Q = s1.Q;
  MetricSpec &o = nm.comps;
  o.kappa = spec.kappa;
  o.name = spec.name;

  o.htt = map.pullback(s1.htt);
  o.htt.set_class(SymbolClass::srad(-spec.kappa));
  if (s1.htt.is_zero()) {
    o.hrr = RadialProfile::zero();
  } else {
    auto htt_n = o.htt;
    o.hrr = RadialProfile([htt_n](const Jet &x) { return -htt_n(x); }, Jet::kOrder,
                          SymbolClass::srad(-spec.kappa));
  }
  o.htr = RadialProfile::zero();

  // 1 + h^ww_new = (rho / r)^2 (1 + h^ww_old)
  if (map.is_identity()) {
    o.hww = s1.hww;
  } else {
    auto hww_old = s1.hww;
    MonotoneMap m2 = map;
    o.hww = RadialProfile(
        [m2, hww_old](const Jet &x) {
          if (x.value() < m2.identity_below()) return hww_old(x);
          Jet rj = m2.r_jet(x.value());
          Jet ratio = x / rj;
          return ratio * ratio * (Jet::constant(1.0) + hww_old(rj)) - 1.0;
        },
        Jet::kOrder, SymbolClass::srad(-spec.kappa));
  }

  // f^rr_new = (drho/dr)^2 (1 + h^rr + f^rr) - 1 + h^tt, all at r(rho);
  // vanishes identically wherever the map realizes the exact reparametrization.
  if (map.is_identity() && s1.frr.is_zero()) {
    o.frr = RadialProfile::zero();
  } else if (map.is_identity()) {
    o.frr = s1.frr;
  } else {
    auto frr_old = s1.frr;
    auto hrr_old = s1.hrr;
    auto htt_old = s1.htt;
    MonotoneMap m2 = map;
    o.frr = RadialProfile(
        [m2, frr_old, hrr_old, htt_old](const Jet &x) {
          if (x.value() < m2.identity_below()) {
            Jet grr = Jet::constant(1.0) + hrr_old(x) + frr_old(x);
            return grr - 1.0 + htt_old(x);
          }
          Jet rj = m2.r_jet(x.value());
          Jet d = Jet::constant(1.0) / rj.d();  // drho/dr at r(rho)
          Jet grr = Jet::constant(1.0) + hrr_old(rj) + frr_old(rj);
          return d * d * grr - 1.0 + htt_old(rj);
        },
        Jet::kOrder, SymbolClass::l1(-spec.kappa));
  }
  if (s1.ftr.is_zero()) {
    o.ftr = RadialProfile::zero();
  } else if (map.is_identity()) {
    o.ftr = s1.ftr;
  } else {
    auto ftr_old = s1.ftr;
    MonotoneMap m2 = map;
    o.ftr = RadialProfile(
        [m2, ftr_old](const Jet &x) {
          if (x.value() < m2.identity_below()) return ftr_old(x);
          Jet rj = m2.r_jet(x.value());
          Jet d = Jet::constant(1.0) / rj.d();
          return d * ftr_old(rj);
        },
        Jet::kOrder, SymbolClass::l1(-spec.kappa));
  }
  o.ftt = map.pullback(s1.ftt);
  o.Vr = map.pullback(spec.Vr);
  o.Vl = map.pullback(spec.Vl);
  if (!o.Vr.is_zero()) o.Vr.set_class(SymbolClass::srad(-spec.kappa - 2));
  if (!o.Vl.is_zero()) o.Vl.set_class(SymbolClass::l1(-spec.kappa - 2));
  return nm;
}

MetricSpec as_spec(const NormalizedMetric &nm) { return nm.comps; }

}  // namespace wavetail
