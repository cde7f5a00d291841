#pragma once

// Reference computations written independently of the library: adaptive
// Simpson quadrature and a fixed-step classical RK4 on the full state.

#include <array>
#include <cmath>
#include <functional>

namespace oracle {

inline double simpson_step(const std::function<double(double)>& f, double a, double b, double fa, double fm,
                           double fb, double whole, double eps, int depth) {
  const double m = 0.5 * (a + b);
  const double lm = 0.5 * (a + m), rm = 0.5 * (m + b);
  const double flm = f(lm), frm = f(rm);
  const double left = (m - a) / 6.0 * (fa + 4.0 * flm + fm);
  const double right = (b - m) / 6.0 * (fm + 4.0 * frm + fb);
  if (depth <= 0 || std::abs(left + right - whole) <= 15.0 * eps) return left + right + (left + right - whole) / 15.0;
  return simpson_step(f, a, m, fa, flm, fm, left, 0.5 * eps, depth - 1) +
         simpson_step(f, m, b, fm, frm, fb, right, 0.5 * eps, depth - 1);
}

inline double integrate(const std::function<double(double)>& f, double a, double b, double eps = 1e-14) {
  const double fa = f(a), fb = f(b), fm = f(0.5 * (a + b));
  const double whole = (b - a) / 6.0 * (fa + 4.0 * fm + fb);
  return simpson_step(f, a, b, fa, fm, fb, whole, eps, 50);
}

inline double F(double phi, double k) {
  return integrate([k](double t) { return 1.0 / std::sqrt(1.0 - k * k * std::sin(t) * std::sin(t)); }, 0.0, phi);
}

inline double E(double phi, double k) {
  return integrate([k](double t) { return std::sqrt(1.0 - k * k * std::sin(t) * std::sin(t)); }, 0.0, phi);
}

// State (theta, c, x, y, z, w) under theta' = c, c' = -alpha sin theta,
// u1 = -sin theta, u2 = cos theta.
using State = std::array<double, 6>;

inline State rhs(const State& s, double alpha) {
  const double u1 = -std::sin(s[0]), u2 = std::cos(s[0]);
  return {s[1], -alpha * std::sin(s[0]), u1, u2, 0.5 * (u2 * s[2] - u1 * s[3]), 0.5 * u2 * s[2] * s[2]};
}

inline State rk4(double theta, double c, double alpha, double t, int steps = 20000) {
  State s{theta, c, 0, 0, 0, 0};
  const double h = t / steps;
  auto axpy = [](const State& a, double h, const State& b) {
    State r;
    for (int i = 0; i < 6; ++i) r[i] = a[i] + h * b[i];
    return r;
  };
  for (int i = 0; i < steps; ++i) {
    const State k1 = rhs(s, alpha);
    const State k2 = rhs(axpy(s, 0.5 * h, k1), alpha);
    const State k3 = rhs(axpy(s, 0.5 * h, k2), alpha);
    const State k4 = rhs(axpy(s, h, k3), alpha);
    for (int j = 0; j < 6; ++j) s[j] += h / 6.0 * (k1[j] + 2.0 * k2[j] + 2.0 * k3[j] + k4[j]);
  }
  return s;
}

}  // namespace oracle
