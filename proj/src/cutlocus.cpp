#include "engel/cutlocus.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <stdexcept>

#include "engel/elliptic.hpp"
#include "roots.hpp"

namespace engel {

using namespace elliptic;
using detail::bracket_root;

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kInf = std::numeric_limits<double>::infinity();
const double kInvSqrtPi = 1.0 / std::sqrt(kPi);

double iota1_raw(double k) { return 2.0 * complete_E(k) - complete_K(k); }

}  // namespace

double k0_bisection() {
  double lo = 0.5, hi = 0.99;
  while (hi - lo > 1e-16) {
    const double mid = 0.5 * (lo + hi);
    const double f = iota1_raw(mid);
    if (f == 0.0) return mid;
    if (f > 0.0) lo = mid; else hi = mid;
    if (mid == lo && mid == hi) break;
  }
  return std::abs(iota1_raw(lo)) < std::abs(iota1_raw(hi)) ? lo : hi;
}

double k0() {
  static const double value = k0_bisection();
  return value;
}

double y0_1() {
  const double k = k0();
  return (1.0 - 2.0 * k * k) / (2.0 * k * std::sqrt((1.0 - k) * (1.0 + k)));
}

double f_z(double p, double k) {
  const Jacobi j = jacobi(p, k);
  return j.dn * j.sn + (p - 2.0 * jacobi_eps(p, k)) * j.cn;
}

namespace {

// f_z is odd with f_z(h) = h^3/3 + O(h^5); the direct formula cancels for small h.
double f_z_near_zero(double h, double k) {
  if (std::abs(h) >= 0.02) return f_z(h, k);
  const double m = k * k, h2 = h * h;
  const double c5 = -(8.0 * m + 1.0) / 30.0;
  const double c7 = ((256.0 * m + 220.0) * m + 3.0) / 2520.0;
  const double c9 = -(((1024.0 * m + 3120.0) * m + 612.0) * m + 1.0) / 45360.0;
  const double c11 = ((((65536.0 * m + 560960.0) * m + 421200.0) * m + 25816.0) * m + 5.0) / 19958400.0;
  return h * h2 * (1.0 / 3.0 + h2 * (c5 + h2 * (c7 + h2 * (c9 + h2 * c11))));
}

}  // namespace

double p_z1(double k) {
  if (!(k > 0.0 && k <= kModulusCap)) throw std::domain_error("p_z1: k outside (0, 1)");
  // Centered at 2K: f_z(2K + h) = 2 iota1 cn h - f_z(h). At k0 the root h = 0 is
  // triple, so the shifted form is what keeps it resolvable.
  const double K = complete_K(k);
  const double i1 = iota1(k);
  auto g = [k, i1](double h) { return 2.0 * i1 * jacobi(h, k).cn - f_z_near_zero(h, k); };
  return 2.0 * K + bracket_root(g, -K, K, "p_z1");
}

double u1z(double k) { return am(p_z1(k), k); }

double p3() {
  double p = 2.0;
  for (int i = 0; i < 50; ++i) {
    const double th = std::tanh(p);
    const double step = (p - 2.0 * th) / (1.0 - 2.0 * (1.0 - th * th));
    p -= step;
    if (std::abs(step) < 1e-16 * p) break;
  }
  return p;
}

double p0() { return std::log(3.0 + std::sqrt(10.0)); }

double t_cut(const Covector& l, double eps_class) {
  const CovectorClass cls = classify(l, eps_class);
  const double a = std::sqrt(std::abs(l.alpha));
  switch (cls.tag) {
    case CovectorTag::C1: return std::min(2.0 * p_z1(cls.k), 4.0 * complete_K(cls.k)) / a;
    case CovectorTag::C2: return 2.0 * complete_K(cls.k) * cls.k / a;
    case CovectorTag::C6: return 2.0 * kPi / std::abs(l.c);
    default: return kInf;
  }
}

// ------------------------------------------------------- boundary curves

namespace {

// 2 (d1^2 inner - Delta^3 / 2) = sum a[i][j][l] Q^i C^j e^l with Q = cos^2 u2, C = cn^2 p, e = k'^2.
constexpr double kW1Coef[4][4][5] = {{{0, 0, 0, -7, 8}, {0, 0, 3, 5, -8}, {0, 11, -30, 27, -8}, {1, -11, 27, -25, 8}},
                                     {{0, 0, -15, 39, -24}, {0, -6, 27, -45, 24}, {9, -45, 87, -75, 24}, {-9, 51, -99, 81, -24}},
                                     {{0, -9, 42, -57, 24}, {-9, 45, -87, 75, -24}, {-6, 33, -72, 69, -24}, {15, -69, 117, -87, 24}},
                                     {{-1, 11, -27, 25, -8}, {11, -41, 57, -35, 8}, {-3, 1, 15, -21, 8}, {-7, 29, -45, 31, -8}}};

double w1_poly(double Q, double C, double e) {
  double acc_q = 0.0;
  for (int i = 3; i >= 0; --i) {
    double acc_c = 0.0;
    for (int j = 3; j >= 0; --j) {
      double acc_e = 0.0;
      for (int l = 4; l >= 0; --l) acc_e = acc_e * e + kW1Coef[i][j][l];
      acc_c = acc_c * C + acc_e;
    }
    acc_q = acc_q * Q + acc_c;
  }
  return acc_q;
}

YW ci_z(double k) { return yw1_cut(k, 0.5 * kPi); }

}  // namespace

YW yw1_cut(double k, double u2) { return yw1_cut(k, u2, p_z1(k)); }

YW yw1_cut(double k, double u2, double p) {
  if (!(k > 0.0 && k <= kModulusCap)) throw std::domain_error("yw1_cut: k outside (0, 1)");
  const double s2 = std::sin(u2), c2 = std::cos(u2);
  if (s2 == 0.0) throw std::domain_error("yw1_cut: sin u2 = 0");
  // E(u1) is eliminated through f_z(p) = 0: E(u1) cn = (p cn + dn sn) / 2. Every
  // remaining term is a product of C = cn^2, e = k'^2 and Q = cos^2 u2, so the
  // formula keeps full accuracy near the conjugate curve as k -> 1.
  const Jacobi j = jacobi(p, k);
  const double s1 = j.sn, c1 = j.cn;
  const double e = (1.0 - k) * (1.0 + k), k2 = k * k;
  const double C = c1 * c1, Q = c2 * c2;
  const double d1s = k2 * C + e, d1 = std::sqrt(d1s);
  const double d2s = Q + e * (1.0 - Q), d2 = std::sqrt(d2s);
  const double delta = Q + (1.0 - Q) * d1s;
  YW r;
  r.Y = -(d2s - k2 * C * (1.0 - Q)) / (2.0 * k * c1 * s2 * d2);
  const double num = -0.5 * (p * c1 * delta * delta * delta - d1 * s1 * w1_poly(Q, C, e));
  r.W = num / (48.0 * k2 * k * s1 * s1 * s1 * c1 * d1s * d1 * s2 * s2 * s2 * d2s * d2);
  return r;
}

namespace {

struct W1Range {
  double k_lo, y_lo, k_hi, y_hi;
};

const W1Range& w1_range() {
  static const W1Range r = [] {
    W1Range out{};
    out.k_lo = k0() + 1e-10;
    out.y_lo = ci_z(out.k_lo).Y;
    out.k_hi = kModulusCap;
    const YW hi = ci_z(out.k_hi);
    out.y_hi = hi.Y;
    return out;
  }();
  return r;
}

// Y^2 of the two N2 branches as functions of k (squared to keep them smooth).
double y22p_sq(double k) { return iota4(k) / std::sqrt((1.0 - k) * (1.0 + k)); }
double y22m_sq(double k) { return iota4(k); }

template <class F>
std::optional<double> invert_increasing(F g, double target, double lo_guess) {
  const double hi = kModulusCap;
  if (target >= g(hi)) return std::nullopt;
  double lo = lo_guess;
  while (g(lo) >= target && lo > 1e-300) lo *= 0.5;
  return bracket_root([&](double k) { return g(k) - target; }, lo, hi, "curve inversion");
}

}  // namespace

std::optional<double> k_on_w1(double Y) {
  if (!(Y > y0_1())) throw std::domain_error("w1_conj: Y must exceed Y0^1");
  const W1Range& r = w1_range();
  if (Y <= r.y_lo) return r.k_lo;
  if (Y >= r.y_hi) return std::nullopt;
  return bracket_root([Y](double k) { return ci_z(k).Y - Y; }, r.k_lo, r.k_hi, r.y_lo - Y, r.y_hi - Y, "w1_conj");
}

namespace {

// k -> 1 limit of ci_z at fixed g = -cn(p)/k': Y = (1 - g^2) / (2g), p = 2 + sqrt(1 + g^2)/g.
double w1_limit(double Y) {
  const double g = 1.0 / (std::hypot(Y, 1.0) + Y);
  const double g2 = g * g, r = std::sqrt(1.0 + g2);
  const double p = 2.0 + r / g;
  return (7.0 - g2 * (10.0 + g2) - p * g * r * r * r) / (96.0 * g);
}

}  // namespace

double w1_conj(double Y) {
  const auto k = k_on_w1(Y);
  if (k) return ci_z(*k).W;
  return w1_limit(Y);
}

std::optional<double> k_on_w21(double Y) {
  if (!(Y > 0.0)) throw std::domain_error("w21_conj: Y must be positive");
  const double target = Y * Y;
  double lo = std::min(0.5 * k0(), kPi / (2.0 * target));
  while (2.0 * iota1(lo) / lo <= target) lo *= 0.5;
  const double hi = k0();
  return bracket_root([target](double k) { return 2.0 * iota1(k) / k - target; }, lo, hi,
                      2.0 * iota1(lo) / lo - target, -target, "w21_conj");
}

double w21_conj(double Y) { return yw2_1(*k_on_w21(Y), 0.0).W; }

std::optional<double> k_on_w22_plus(double Y) {
  if (!(Y < 0.0)) throw std::domain_error("w22_plus: Y must be negative");
  return invert_increasing(y22p_sq, Y * Y, std::min(0.5, std::pow(16.0 * Y * Y / kPi, 0.25)));
}

std::optional<double> k_on_w22_minus(double Y) {
  if (!(Y < 0.0)) throw std::domain_error("w22_minus: Y must be negative");
  return invert_increasing(y22m_sq, Y * Y, std::min(0.5, std::pow(16.0 * Y * Y / kPi, 0.25)));
}

double w22_plus(double Y) {
  if (const auto k = k_on_w22_plus(Y)) return yw2_2(*k, 0.0).W;
  // k -> 1: Y^2 = L / k', W = |Y|^3 / (6 L^3) with L = K - 2 = ln(4 Y^2 / L) - 2.
  double L = 2.0 * std::log(std::abs(Y));
  for (int i = 0; i < 200; ++i) {
    const double next = std::log(4.0 * Y * Y / L) - 2.0;
    if (std::abs(next - L) <= 1e-15 * L) break;
    L = next;
  }
  return std::pow(std::abs(Y) / L, 3.0) / 6.0;
}

double w22_minus(double Y) {
  if (const auto k = k_on_w22_minus(Y)) return yw2_2(*k, 0.5 * kPi).W;
  // k -> 1 form: K - 2 = Y^2 up to O(k'^2 log k').
  return (2.0 - 6.0 * Y * Y) / (12.0 * std::pow(std::abs(Y), 3.0));
}

double w22_conj(double Y) {
  if (Y < 0.0) return w22_plus(Y);
  if (Y > 0.0) return -w22_minus(-Y);
  return kInvSqrtPi;
}

double G1(double x, double y) {
  if (!(y > y0_1() * std::abs(x))) throw std::domain_error("G1: requires y > Y0^1 |x|");
  if (x == 0.0) return 0.0;
  const double ax = std::abs(x);
  return w1_conj(y / ax) * ax * ax * ax;
}

double G2(double z, double y) {
  if (!(y > 0.0)) throw std::domain_error("G2: requires y > 0");
  if (z == 0.0) return 0.0;
  const double az = std::abs(z);
  return w21_conj(y / std::sqrt(az)) * az * std::sqrt(az);
}

double G3(double z, double y) {
  if (z == 0.0) return 0.0;
  const double az = std::abs(z);
  return w22_conj(y / std::sqrt(az)) * az * std::sqrt(az);
}

std::optional<CurveId> curve_from_string(const std::string& s) {
  if (s == "w1") return CurveId::W1;
  if (s == "w21") return CurveId::W21;
  if (s == "w22") return CurveId::W22;
  if (s == "fix3") return CurveId::Fix3;
  return std::nullopt;
}

std::vector<CurveSample> sample_curve(CurveId which, int n) {
  if (n < 2) throw std::invalid_argument("sample_curve: need at least 2 samples");
  std::vector<CurveSample> out;
  const double frac_den = n + 1.0;
  switch (which) {
    case CurveId::W1: {
      const double a = k0();
      for (int i = 1; i <= n; ++i) {
        const double k = a + (1.0 - a) * i / frac_den;
        const YW yw = ci_z(k);
        out.push_back({k, yw.Y, yw.W});
      }
      break;
    }
    case CurveId::W21: {
      for (int i = 1; i <= n; ++i) {
        const double k = k0() * i / frac_den;
        const YW yw = yw2_1(k, 0.0);
        out.push_back({k, yw.Y, yw.W});
      }
      std::reverse(out.begin(), out.end());
      break;
    }
    case CurveId::W22: {
      for (int i = n; i >= 1; --i) {
        const double k = i / frac_den;
        const YW yw = yw2_2(k, 0.0);
        out.push_back({k, yw.Y, yw.W});
      }
      out.push_back({0.0, 0.0, kInvSqrtPi});
      for (int i = 1; i <= n; ++i) {
        const double k = i / frac_den;
        const YW yw = yw2_2(k, 0.5 * kPi);
        out.push_back({k, -yw.Y, -yw.W});
      }
      break;
    }
    case CurveId::Fix3: {
      for (int i = 1; i <= n; ++i) {
        const double p = 4.0 * i / n;
        const YW yw = yw2_3(p);
        out.push_back({p, yw.Y, yw.W});
      }
      break;
    }
  }
  return out;
}

// -------------------------------------------------------------- strata

std::string to_string(Multiplicity m) {
  switch (m) {
    case Multiplicity::None: return "none";
    case Multiplicity::One: return "1";
    case Multiplicity::Two: return "2";
    case Multiplicity::Family: return "family";
  }
  return "?";
}

namespace {

const char* sign_str(int s) { return s < 0 ? "-" : "+"; }

Multiplicity multiplicity_of(StratumKind k) {
  switch (k) {
    case StratumKind::Origin: return Multiplicity::None;
    case StratumKind::E: return Multiplicity::Family;
    case StratumKind::I0x:
    case StratumKind::I0z:
    case StratumKind::Iz:
    case StratumKind::Ix:
    case StratumKind::Nx: return Multiplicity::Two;
    default: return Multiplicity::One;
  }
}

Stratum make(StratumKind kind, int sign = 0, int sup = 0, LensPiece piece = LensPiece::None) {
  return {kind, sign, sup, piece, multiplicity_of(kind)};
}

}  // namespace

std::string Stratum::label() const {
  const std::string s = sign_str(sign), j = std::string("^") + sign_str(sup);
  switch (kind) {
    case StratumKind::Origin: return "Origin";
    case StratumKind::Generic: return "Generic";
    case StratumKind::A: return "A" + s;
    case StratumKind::E: return "E" + s;
    case StratumKind::I0x: return "I0x" + s;
    case StratumKind::I0z: return "I0z" + s;
    case StratumKind::Iz: return "Iz" + s + j;
    case StratumKind::CIz: return "CIz" + s + j;
    case StratumKind::Ix: return "Ix" + s + j;
    case StratumKind::CIx: return "CIx" + s + j;
    case StratumKind::CNx: return "CNx" + s + j;
    case StratumKind::Nx: {
      const char* p = piece == LensPiece::NPlus ? "N+" : piece == LensPiece::NMinus ? "N-" : "C";
      return "Nx" + j + "[" + p + "]";
    }
  }
  return "?";
}

bool Stratum::is_conjugate() const {
  return kind == StratumKind::CIz || kind == StratumKind::CIx || kind == StratumKind::CNx || kind == StratumKind::E;
}

bool Stratum::is_maxwell() const {
  return kind == StratumKind::Iz || kind == StratumKind::I0x || kind == StratumKind::I0z || kind == StratumKind::Ix ||
         kind == StratumKind::Nx || kind == StratumKind::E;
}

bool Stratum::is_cut() const { return is_conjugate() || is_maxwell(); }

Stratum Stratum::mirror(int i) const {
  const auto [b1, b2, b4] = reflection_bits(i);
  Stratum r = *this;
  const bool on_mx = kind == StratumKind::Ix || kind == StratumKind::CIx || kind == StratumKind::Nx ||
                     kind == StratumKind::CNx;
  const bool on_mz = kind == StratumKind::Iz || kind == StratumKind::CIz;
  if (b1 && on_mx) r.sup = -r.sup;
  if (b2 && on_mz) r.sup = -r.sup;
  if (b4) {
    if (on_mz) r.sup = -r.sup;
    if (kind == StratumKind::Nx) {
      if (piece == LensPiece::NPlus) r.piece = LensPiece::NMinus;
      else if (piece == LensPiece::NMinus) r.piece = LensPiece::NPlus;
    } else if (kind != StratumKind::Origin && kind != StratumKind::Generic) {
      r.sign = -r.sign;
    }
  }
  return r;
}

Stratum classify_point(const Point& q, StrataTolerance tol) {
  const double n = homogeneous_norm(q);
  if (n == 0.0) return make(StratumKind::Origin);
  const double ez = tol.eps_zero, es = tol.eps_strat;
  const bool x0 = std::abs(q.x) <= ez * n;
  const bool z0 = std::abs(q.z) <= ez * n * n;
  if (!x0 && !z0) return make(StratumKind::Generic);

  auto near = [es](double a, double b) { return std::abs(a - b) <= es * std::max(1.0, std::abs(b)); };

  if (x0 && z0) {
    const bool y0 = std::abs(q.y) <= ez * n;
    const bool w0 = std::abs(q.w) <= ez * n * n * n;
    if (w0) return make(StratumKind::A, q.y > 0.0 ? 1 : -1);
    const int sw = q.w > 0.0 ? 1 : -1;
    if (y0) return make(StratumKind::E, sw);
    const int sy = q.y > 0.0 ? 1 : -1;
    return make(sy == sw ? StratumKind::I0x : StratumKind::I0z, sw);
  }

  if (z0) {
    const int j = q.x > 0.0 ? 1 : -1;
    const double ax = std::abs(q.x);
    const double Y = q.y / ax, W = q.w / (ax * ax * ax);
    const double y0 = y0_1();
    if (Y > y0) {
      const double wc = w1_conj(Y);
      if (near(W, wc)) return make(StratumKind::CIz, 1, j);
      if (W < wc) return make(StratumKind::Iz, 1, j);
    }
    if (Y < -y0) {
      const double wc = -w1_conj(-Y);
      if (near(W, wc)) return make(StratumKind::CIz, -1, j);
      if (W > wc) return make(StratumKind::Iz, -1, j);
    }
    return make(StratumKind::Generic);
  }

  const int j = q.z > 0.0 ? 1 : -1;
  const double az = std::abs(q.z);
  const double Y = q.y / std::sqrt(az), W = q.w / (az * std::sqrt(az));
  if (Y > 0.0) {
    const double wc = w21_conj(Y);
    if (near(W, wc)) return make(StratumKind::CIx, 1, j);
    if (W > wc) return make(StratumKind::Ix, 1, j);
  } else if (Y < 0.0) {
    const double wc = -w21_conj(-Y);
    if (near(W, wc)) return make(StratumKind::CIx, -1, j);
    if (W < wc) return make(StratumKind::Ix, -1, j);
  }
  const double upper = w22_conj(Y), lower = -w22_conj(-Y);
  if (near(W, upper)) return make(StratumKind::CNx, 1, j);
  if (near(W, lower)) return make(StratumKind::CNx, -1, j);
  if (lower < W && W < upper) {
    const LensPiece piece = std::abs(Y) <= es ? LensPiece::C : Y < 0.0 ? LensPiece::NPlus : LensPiece::NMinus;
    return make(StratumKind::Nx, 0, j, piece);
  }
  return make(StratumKind::Generic);
}

}  // namespace engel
