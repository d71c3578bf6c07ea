#pragma once

#include <array>
#include <cmath>
#include <cstddef>
#include <stdexcept>

namespace wavetail {

/// Truncated Taylor series in one variable, used to evaluate radial profiles
/// together with their derivatives. coeff[k] is the k-th Taylor coefficient,
/// so the k-th derivative is k! * coeff[k]. Order is fixed at compile time;
/// everything the norm and operator machinery needs fits well below it.
class Jet {
public:
  static constexpr int kOrder = 10;
  static constexpr int kLen = kOrder + 1;

  Jet() { c_.fill(0.0); }

  static Jet constant(double v) {
    Jet j;
    j.c_[0] = v;
    return j;
  }

  /// Identity jet at the evaluation point r: value r, slope 1.
  static Jet variable(double r) {
    Jet j;
    j.c_[0] = r;
    j.c_[1] = 1.0;
    return j;
  }

  double value() const { return c_[0]; }
  double coeff(int k) const { return c_[k]; }
  double &coeff(int k) { return c_[k]; }

  /// k-th derivative at the expansion point.
  double deriv(int k) const {
    double f = 1.0;
    for (int i = 2; i <= k; ++i) f *= i;
    return c_[k] * f;
  }

  /// Jet of the derivative (order drops by one; top coefficient is lost).
  Jet d() const {
    Jet r;
    for (int k = 0; k + 1 < kLen; ++k) r.c_[k] = (k + 1) * c_[k + 1];
    return r;
  }

  Jet operator-() const {
    Jet r;
    for (int k = 0; k < kLen; ++k) r.c_[k] = -c_[k];
    return r;
  }

  friend Jet operator+(const Jet &a, const Jet &b) {
    Jet r;
    for (int k = 0; k < kLen; ++k) r.c_[k] = a.c_[k] + b.c_[k];
    return r;
  }
  friend Jet operator-(const Jet &a, const Jet &b) {
    Jet r;
    for (int k = 0; k < kLen; ++k) r.c_[k] = a.c_[k] - b.c_[k];
    return r;
  }
  friend Jet operator*(const Jet &a, const Jet &b) {
    Jet r;
    for (int k = 0; k < kLen; ++k) {
      double s = 0.0;
      for (int i = 0; i <= k; ++i) s += a.c_[i] * b.c_[k - i];
      r.c_[k] = s;
    }
    return r;
  }
  friend Jet operator/(const Jet &a, const Jet &b) {
    if (b.c_[0] == 0.0) throw std::domain_error("jet division by zero value");
    Jet r;
    for (int k = 0; k < kLen; ++k) {
      double s = a.c_[k];
      for (int i = 1; i <= k; ++i) s -= b.c_[i] * r.c_[k - i];
      r.c_[k] = s / b.c_[0];
    }
    return r;
  }

  friend Jet operator+(const Jet &a, double s) { return a + constant(s); }
  friend Jet operator+(double s, const Jet &a) { return a + constant(s); }
  friend Jet operator-(const Jet &a, double s) { return a - constant(s); }
  friend Jet operator-(double s, const Jet &a) { return constant(s) - a; }
  friend Jet operator*(const Jet &a, double s) {
    Jet r;
    for (int k = 0; k < kLen; ++k) r.c_[k] = a.c_[k] * s;
    return r;
  }
  friend Jet operator*(double s, const Jet &a) { return a * s; }
  friend Jet operator/(const Jet &a, double s) { return a * (1.0 / s); }
  friend Jet operator/(double s, const Jet &a) { return constant(s) / a; }

private:
  std::array<double, kLen> c_;
};

inline Jet jet_exp(const Jet &f) {
  Jet e;
  e.coeff(0) = std::exp(f.value());
  for (int n = 1; n < Jet::kLen; ++n) {
    double s = 0.0;
    for (int k = 1; k <= n; ++k) s += k * f.coeff(k) * e.coeff(n - k);
    e.coeff(n) = s / n;
  }
  return e;
}

inline Jet jet_log(const Jet &f) {
  if (f.value() <= 0.0) throw std::domain_error("jet_log of nonpositive value");
  Jet l;
  l.coeff(0) = std::log(f.value());
  for (int n = 1; n < Jet::kLen; ++n) {
    double s = n * f.coeff(n);
    for (int k = 1; k < n; ++k) s -= k * l.coeff(k) * f.coeff(n - k);
    l.coeff(n) = s / (n * f.value());
  }
  return l;
}

/// f^a for real exponent; requires f > 0.
inline Jet jet_pow(const Jet &f, double a) {
  if (f.value() <= 0.0) throw std::domain_error("jet_pow of nonpositive value");
  return jet_exp(jet_log(f) * a);
}

inline Jet jet_sqrt(const Jet &f) { return jet_pow(f, 0.5); }

/// exp(-1/x) extended by zero for x <= 0. All derivatives vanish as x -> 0+,
/// so for tiny positive values the zero jet is the accurate answer.
inline Jet jet_bump_sigma(const Jet &x) {
  if (x.value() < 5e-3) return Jet();
  return jet_exp(-(Jet::constant(1.0) / x));
}

}  // namespace wavetail
