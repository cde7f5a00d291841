#include "engel/elliptic.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

namespace engel::elliptic {
namespace {

constexpr double kPi = std::numbers::pi;

void require_modulus(double k, double upper, const char* who) {
  if (!(k >= 0.0 && k <= upper)) {
    throw std::domain_error(std::string(who) + ": modulus k = " + std::to_string(k) +
                            " outside [0, " + std::to_string(upper) + "]");
  }
}

// sqrt(1 - k^2) without cancellation near k = 1.
double complement(double k) { return std::sqrt((1.0 - k) * (1.0 + k)); }

}  // namespace

double carlson_RF(double x, double y, double z) {
  constexpr double kErrTol = 0.0025;
  constexpr double kThird = 1.0 / 3.0;
  constexpr double c1 = 1.0 / 24.0, c2 = 0.1, c3 = 3.0 / 44.0, c4 = 1.0 / 14.0;
  if (std::min({x, y, z}) < 0.0 || std::min({x + y, x + z, y + z}) <= 0.0) {
    throw std::domain_error("carlson_RF: invalid arguments");
  }
  double xt = x, yt = y, zt = z;
  double ave = 0.0, dx = 0.0, dy = 0.0, dz = 0.0;
  for (int it = 0; it < 200; ++it) {
    const double sx = std::sqrt(xt), sy = std::sqrt(yt), sz = std::sqrt(zt);
    const double lambda = sx * (sy + sz) + sy * sz;
    xt = 0.25 * (xt + lambda);
    yt = 0.25 * (yt + lambda);
    zt = 0.25 * (zt + lambda);
    ave = kThird * (xt + yt + zt);
    dx = (ave - xt) / ave;
    dy = (ave - yt) / ave;
    dz = (ave - zt) / ave;
    if (std::max({std::abs(dx), std::abs(dy), std::abs(dz)}) <= kErrTol) break;
  }
  const double e2 = dx * dy - dz * dz;
  const double e3 = dx * dy * dz;
  return (1.0 + (c1 * e2 - c2 - c3 * e3) * e2 + c4 * e3) / std::sqrt(ave);
}

double carlson_RD(double x, double y, double z) {
  constexpr double kErrTol = 0.0015;
  constexpr double c1 = 3.0 / 14.0, c2 = 1.0 / 6.0, c3 = 9.0 / 22.0, c4 = 3.0 / 26.0;
  constexpr double c5 = 0.25 * c3, c6 = 1.5 * c4;
  if (std::min(x, y) < 0.0 || x + y <= 0.0 || z <= 0.0) {
    throw std::domain_error("carlson_RD: invalid arguments");
  }
  double xt = x, yt = y, zt = z;
  double sum = 0.0, fac = 1.0;
  double ave = 0.0, dx = 0.0, dy = 0.0, dz = 0.0;
  for (int it = 0; it < 200; ++it) {
    const double sx = std::sqrt(xt), sy = std::sqrt(yt), sz = std::sqrt(zt);
    const double lambda = sx * (sy + sz) + sy * sz;
    sum += fac / (sz * (zt + lambda));
    fac *= 0.25;
    xt = 0.25 * (xt + lambda);
    yt = 0.25 * (yt + lambda);
    zt = 0.25 * (zt + lambda);
    ave = 0.2 * (xt + yt + 3.0 * zt);
    dx = (ave - xt) / ave;
    dy = (ave - yt) / ave;
    dz = (ave - zt) / ave;
    if (std::max({std::abs(dx), std::abs(dy), std::abs(dz)}) <= kErrTol) break;
  }
  const double ea = dx * dy, eb = dz * dz;
  const double ec = ea - eb, ed = ea - 6.0 * eb, ee = ed + ec + ec;
  return 3.0 * sum +
         fac * (1.0 + ed * (-c1 + c5 * ed - c6 * dz * ee) + dz * (c2 * ee + dz * (-c3 * ec + dz * c4 * ea))) /
             (ave * std::sqrt(ave));
}

double complete_K(double k) {
  require_modulus(k, kModulusCap, "complete_K");
  double a = 1.0, b = complement(k);
  for (int it = 0; it < 64 && std::abs(a - b) > 1e-16 * a; ++it) {
    const double an = 0.5 * (a + b);
    b = std::sqrt(a * b);
    a = an;
  }
  return kPi / (2.0 * a);
}

double complete_E(double k) {
  require_modulus(k, 1.0, "complete_E");
  if (k == 1.0) return 1.0;
  // E = K (1 - sum_n 2^(n-1) c_n^2), c_0 = k.
  double a = 1.0, b = complement(k), c = k;
  double sum = 0.5 * c * c, weight = 0.5;
  for (int it = 0; it < 64 && std::abs(c) > 1e-17 * a; ++it) {
    const double an = 0.5 * (a + b);
    c = 0.5 * (a - b);
    b = std::sqrt(a * b);
    a = an;
    weight *= 2.0;
    sum += weight * c * c;
  }
  return kPi / (2.0 * a) * (1.0 - sum);
}

double incomplete_F(double phi, double k) {
  require_modulus(k, kModulusCap, "incomplete_F");
  if (!std::isfinite(phi)) throw std::domain_error("incomplete_F: non-finite amplitude");
  if (k == 0.0) return phi;
  const double n = std::round(phi / kPi);
  const double r = phi - n * kPi;
  const double s = std::sin(r), c = std::cos(r);
  double f = s * carlson_RF(c * c, (1.0 - k * s) * (1.0 + k * s), 1.0);
  if (n != 0.0) f += 2.0 * n * complete_K(k);
  return f;
}

double incomplete_E(double phi, double k) {
  require_modulus(k, kModulusCap, "incomplete_E");
  if (!std::isfinite(phi)) throw std::domain_error("incomplete_E: non-finite amplitude");
  if (k == 0.0) return phi;
  const double n = std::round(phi / kPi);
  const double r = phi - n * kPi;
  const double s = std::sin(r), c = std::cos(r);
  const double c2 = c * c, delta2 = (1.0 - k * s) * (1.0 + k * s);
  double e = s * carlson_RF(c2, delta2, 1.0) - k * k * s * s * s / 3.0 * carlson_RD(c2, delta2, 1.0);
  if (n != 0.0) e += 2.0 * n * complete_E(k);
  return e;
}

double am(double p, double k) {
  require_modulus(k, kModulusCap, "am");
  if (!std::isfinite(p)) throw std::domain_error("am: non-finite argument");
  if (k == 0.0) return p;

  // Descending AGM.
  std::array<double, 64> a{}, c{};
  a[0] = 1.0;
  c[0] = k;
  double b = complement(k);
  int n = 0;
  while (n + 1 < static_cast<int>(a.size()) && std::abs(c[n]) > 1e-16 * a[n]) {
    a[n + 1] = 0.5 * (a[n] + b);
    c[n + 1] = 0.5 * (a[n] - b);
    b = std::sqrt(a[n] * b);
    ++n;
  }
  double phi = std::ldexp(a[n] * p, n);
  for (int i = n; i > 0; --i) {
    phi = 0.5 * (phi + std::asin(c[i] / a[i] * std::sin(phi)));
  }

  // One Newton step on F(phi) - p; dF/dphi = 1/dn.
  const double s = std::sin(phi);
  phi -= (incomplete_F(phi, k) - p) * std::sqrt((1.0 - k * s) * (1.0 + k * s));
  return phi;
}

Jacobi jacobi(double p, double k) {
  const double phi = am(p, k);
  const double c = std::cos(phi);
  // 1 - k^2 sn^2 = k'^2 + k^2 cn^2, which stays accurate near p = K as k -> 1.
  return {std::sin(phi), c, std::sqrt((1.0 - k) * (1.0 + k) + k * k * c * c)};
}

double jacobi_eps(double p, double k) { return incomplete_E(am(p, k), k); }

}  // namespace engel::elliptic
