#pragma once

#include <cmath>
#include <functional>
#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "wavetail/jet.hpp"

namespace wavetail {

/// Symbol classes used to tag radial profiles. The exponent q is the falloff
/// (or growth) rate: S(r^q), l1S(r^q), S_rad(r^q) or S(log r).
enum class SymbolKind { S, L1S, SRad, SLog };

struct SymbolClass {
  SymbolKind kind = SymbolKind::SRad;
  int exponent = 0;  // ignored for SLog

  static SymbolClass s(int q) { return {SymbolKind::S, q}; }
  static SymbolClass l1(int q) { return {SymbolKind::L1S, q}; }
  static SymbolClass srad(int q) { return {SymbolKind::SRad, q}; }
  static SymbolClass slog() { return {SymbolKind::SLog, 0}; }
};

struct Interval {
  double lo = 0.0;
  double hi = 0.0;
};

/// A smooth radial function r >= 0 -> R with evaluable derivatives, carried
/// around as a jet-valued callable plus its claimed symbol class.
class RadialProfile {
public:
  using JetFn = std::function<Jet(const Jet &)>;

  RadialProfile() : fn_(nullptr) {}
  RadialProfile(JetFn fn, int max_order = Jet::kOrder,
                SymbolClass cls = SymbolClass::srad(0),
                std::optional<Interval> support = std::nullopt)
      : fn_(std::move(fn)), max_order_(max_order), class_(cls),
        support_(support) {}

  static RadialProfile zero() {
    RadialProfile p([](const Jet &) { return Jet(); });
    p.support_ = Interval{0.0, 0.0};
    return p;
  }
  static RadialProfile constant(double v) {
    return RadialProfile([v](const Jet &) { return Jet::constant(v); });
  }

  bool is_zero() const {
    return support_ && support_->lo == 0.0 && support_->hi == 0.0;
  }

  Jet jet(double r) const {
    if (r < 0.0) throw std::domain_error("radial profile evaluated at r < 0");
    return fn_(Jet::variable(r));
  }
  Jet operator()(const Jet &x) const { return fn_(x); }
  double eval(double r) const { return jet(r).value(); }
  double deriv(int j, double r) const {
    if (j > max_order_) throw std::domain_error("derivative order exceeds max_order");
    return jet(r).deriv(j);
  }

  int max_order() const { return max_order_; }
  const SymbolClass &claimed_class() const { return class_; }
  void set_class(SymbolClass c) { class_ = c; }
  const std::optional<Interval> &support_hint() const { return support_; }
  void set_support(Interval s) { support_ = s; }

  RadialProfile scaled(double s) const {
    auto f = fn_;
    RadialProfile p([f, s](const Jet &x) { return f(x) * s; }, max_order_, class_, support_);
    if (s == 0.0) p.support_ = Interval{0.0, 0.0};
    return p;
  }

  friend RadialProfile operator+(const RadialProfile &a, const RadialProfile &b) {
    auto fa = a.fn_, fb = b.fn_;
    return RadialProfile([fa, fb](const Jet &x) { return fa(x) + fb(x); },
                         std::min(a.max_order_, b.max_order_), a.class_);
  }
  friend RadialProfile operator*(const RadialProfile &a, const RadialProfile &b) {
    auto fa = a.fn_, fb = b.fn_;
    return RadialProfile([fa, fb](const Jet &x) { return fa(x) * fb(x); },
                         std::min(a.max_order_, b.max_order_), a.class_);
  }

private:
  JetFn fn_;
  int max_order_ = Jet::kOrder;
  SymbolClass class_;
  std::optional<Interval> support_;
};

// ---------------------------------------------------------------------------
// Cutoffs. chi_below(r) is 1 for r <= 1 and 0 for r >= 2, glued with the
// classical exp(-1/x) bump; chi_above = 1 - chi_below exactly.
// ---------------------------------------------------------------------------

inline Jet chi_below_jet(const Jet &r) {
  if (r.value() <= 1.0) return Jet::constant(1.0);
  if (r.value() >= 2.0) return Jet();
  Jet x = 2.0 - r;                    // in (0,1)
  Jet s0 = jet_bump_sigma(x);
  Jet s1 = jet_bump_sigma(1.0 - x);
  return s0 / (s0 + s1);
}

inline Jet chi_above_jet(const Jet &r) { return Jet::constant(1.0) - chi_below_jet(r); }

inline double chi_below(double r, double scale = 1.0) {
  return chi_below_jet(Jet::variable(r / scale)).value();
}
inline double chi_above(double r, double scale = 1.0) {
  return chi_above_jet(Jet::variable(r / scale)).value();
}

/// chi_near: 1 on [1,2], 0 below 1/2 and above 4.
inline Jet chi_near_jet(const Jet &r) {
  return chi_above_jet(r * 2.0) * chi_below_jet(r * 0.5);
}
inline double chi_near(double r, double scale = 1.0) {
  return chi_near_jet(Jet::variable(r / scale)).value();
}

// ---------------------------------------------------------------------------
// Japanese bracket <r>: b(r) r + (1-b(r)) sqrt(1+r^2) with b = chi_above.
// Equals r bit-for-bit for r >= 2 and sqrt(1+r^2) for r <= 1.
// ---------------------------------------------------------------------------

inline Jet bracket_jet(const Jet &r) {
  if (r.value() >= 2.0) return r;
  Jet root = jet_sqrt(1.0 + r * r);
  if (r.value() <= 1.0) return root;
  Jet b = chi_above_jet(r);
  return b * r + (1.0 - b) * root;
}

inline double bracket(double r) {
  if (r < 0.0) throw std::domain_error("bracket of negative radius");
  return bracket_jet(Jet::variable(r)).value();
}

/// Alternative compliant bracket (different blend window), used to check that
/// downstream quantities do not depend on the particular choice.
inline Jet bracket_alt_jet(const Jet &r) {
  if (r.value() >= 2.0) return r;
  Jet root = jet_pow(1.0 + r * r * r * r, 0.25);
  if (r.value() <= 1.0) return root;
  Jet b = chi_above_jet(r);
  return b * r + (1.0 - b) * root;
}

/// <r>^q as a profile.
inline RadialProfile bracket_power(double q) {
  return RadialProfile(
      [q](const Jet &x) { return jet_pow(bracket_jet(x), q); }, Jet::kOrder,
      SymbolClass::srad(static_cast<int>(q)));
}

inline RadialProfile log_bracket_profile() {
  return RadialProfile([](const Jet &x) { return jet_log(bracket_jet(x)); },
                       Jet::kOrder, SymbolClass::slog());
}

// ---------------------------------------------------------------------------
// Smooth minimum: equals min(a,b) exactly when the ratio leaves [1/2, 2],
// symmetric by construction.
// ---------------------------------------------------------------------------

inline Jet smooth_min_jet(const Jet &a, const Jet &b) {
  if (a.value() <= 0.0 || b.value() <= 0.0)
    throw std::domain_error("smooth_min requires positive arguments");
  auto half = [](const Jet &u, const Jet &v) {
    Jet w = chi_below_jet(u / v);
    return w * u + (Jet::constant(1.0) - w) * v;
  };
  return (half(a, b) + half(b, a)) * 0.5;
}

inline double smooth_min(double a, double b) {
  return smooth_min_jet(Jet::constant(a), Jet::constant(b)).value();
}

// ---------------------------------------------------------------------------
// Dyadic annuli A_m = { 2^m <= <r> <= 2^{m+1} } and the subordinate smooth
// partition of unity beta_m, m >= 0, with sum_m beta_m = 1 on <r> >= 1.
// ---------------------------------------------------------------------------

struct DyadicAnnulus {
  int m = 0;
  double lo() const { return std::ldexp(1.0, m); }       // in <r>
  double hi() const { return std::ldexp(1.0, m + 1); }
  /// Radii whose bracket lies in the annulus. For m = 0 this starts at r = 0.
  double r_lo() const { return m == 0 ? 0.0 : lo(); }
  double r_hi() const { return hi(); }
};

inline Jet beta_annulus_jet(int m, const Jet &r) {
  Jet br = bracket_jet(r);
  auto psi = [&](int k) { return chi_below_jet(br / std::ldexp(1.0, k)); };
  if (m == 0) return psi(1);
  return psi(m + 1) - psi(m);
}

inline double beta_annulus(int m, double r) {
  return beta_annulus_jet(m, Jet::variable(r)).value();
}

// ---------------------------------------------------------------------------
// Profiles from sampled tables (CSV-backed). Natural cubic spline on the given
// samples; derivative columns, when present, bump the trusted order.
// ---------------------------------------------------------------------------

class SampledProfile {
public:
  SampledProfile(std::vector<double> r, std::vector<std::vector<double>> cols);
  Jet jet_at(const Jet &x) const;
  int order() const { return order_; }

private:
  std::vector<double> r_;
  std::vector<double> v_;
  std::vector<double> m_;  // spline second derivatives
  std::vector<std::vector<double>> extra_;
  int order_ = 2;
};

RadialProfile profile_from_csv(const std::string &path);

}  // namespace wavetail
