#include "engel/expmap.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <limits>
#include <numbers>
#include <stdexcept>

#include <boost/numeric/odeint.hpp>

#include "engel/elliptic.hpp"

namespace engel {

namespace odeint = boost::numeric::odeint;
using namespace elliptic;

namespace {

constexpr double kPi = std::numbers::pi;

using State2 = std::array<double, 2>;
using State6 = std::array<double, 6>;
using State24 = std::array<double, 24>;

double sgn(double v) { return v < 0.0 ? -1.0 : 1.0; }

struct PendulumRhs {
  double alpha;
  void operator()(const State2& v, State2& d, double) const {
    d[0] = v[1];
    d[1] = -alpha * std::sin(v[0]);
  }
};

struct GeodesicRhs {
  double alpha;
  void operator()(const State6& v, State6& d, double) const {
    const double s = std::sin(v[0]), c = std::cos(v[0]);
    d[0] = v[1];
    d[1] = -alpha * s;
    d[2] = -s;
    d[3] = c;
    d[4] = 0.5 * (s * v[3] + c * v[2]);
    d[5] = 0.5 * c * v[2] * v[2];
  }
};

// State plus the 6x3 sensitivity matrix (row-major) with respect to (theta0, c0, alpha).
struct VariationalRhs {
  double alpha;
  void operator()(const State24& v, State24& d, double) const {
    const double s = std::sin(v[0]), c = std::cos(v[0]);
    const double x = v[2], y = v[3];
    d[0] = v[1];
    d[1] = -alpha * s;
    d[2] = -s;
    d[3] = c;
    d[4] = 0.5 * (s * y + c * x);
    d[5] = 0.5 * c * x * x;
    const double* S = v.data() + 6;
    double* dS = d.data() + 6;
    for (int j = 0; j < 3; ++j) {
      const double th = S[j], cc = S[3 + j], sx = S[6 + j], sy = S[9 + j];
      dS[j] = cc;
      dS[3 + j] = -alpha * c * th + (j == 2 ? -s : 0.0);
      dS[6 + j] = -c * th;
      dS[9 + j] = -s * th;
      dS[12 + j] = 0.5 * (c * y - s * x) * th + 0.5 * c * sx + 0.5 * s * sy;
      dS[15 + j] = -0.5 * s * x * x * th + c * x * sx;
    }
  }
};

double initial_step(double t) { return std::min(0.05, std::max(t * 1e-3, 1e-6)); }

template <class State, class Rhs>
void integrate(Rhs rhs, State& v, double t, OdeTolerance tol) {
  if (!(t >= 0.0) || !std::isfinite(t)) throw std::domain_error("integration time must be finite and >= 0");
  if (t == 0.0) return;
  auto stepper = odeint::make_controlled(tol.atol, tol.rtol, odeint::runge_kutta_dopri5<State>());
  try {
    odeint::integrate_adaptive(stepper, rhs, v, 0.0, t, initial_step(t));
  } catch (const std::exception& e) {
    throw std::runtime_error(std::string("ODE integration failed: ") + e.what());
  }
}

void require(bool ok, const char* what) {
  if (!ok) throw std::domain_error(what);
}

}  // namespace

std::string to_string(CovectorTag tag) {
  static const char* names[] = {"C1", "C2", "C3", "C4", "C5", "C6", "C7"};
  return names[static_cast<int>(tag)];
}

double energy(const Covector& l) { return 0.5 * l.c * l.c - l.alpha * std::cos(l.theta); }

double wrap_pi(double a) {
  double r = std::remainder(a, 2.0 * kPi);
  if (r <= -kPi) r += 2.0 * kPi;
  return r;
}

double wrap_2pi(double a) {
  double r = std::fmod(a, 2.0 * kPi);
  if (r < 0.0) r += 2.0 * kPi;
  if (r >= 2.0 * kPi) r = 0.0;
  return r;
}

CovectorClass classify(const Covector& l, double eps) {
  CovectorClass out;
  out.E = energy(l);
  const double a = std::abs(l.alpha);
  const double kinetic = 0.5 * l.c * l.c;
  if (a <= eps * kinetic || (a == 0.0 && l.c == 0.0)) {
    out.tag = l.c == 0.0 ? CovectorTag::C7 : CovectorTag::C6;
    return out;
  }
  const double below = (out.E + a) / a;  // 0 on C4
  const double above = (out.E - a) / a;  // 0 on C3, C5
  if (below <= eps) {
    out.tag = CovectorTag::C4;
  } else if (std::abs(above) <= eps) {
    if (kinetic <= eps * a) {
      out.tag = CovectorTag::C5;
    } else {
      out.tag = CovectorTag::C3;
      out.k = 1.0;
    }
  } else if (above < 0.0) {
    out.tag = CovectorTag::C1;
    out.k = std::sqrt(std::clamp(0.5 * below, 0.0, kModulusCap * kModulusCap));
  } else {
    out.tag = CovectorTag::C2;
    out.k = std::sqrt(std::min(2.0 / (above + 2.0), kModulusCap * kModulusCap));
  }
  return out;
}

Covector pendulum_flow(const Covector& l, double t, OdeTolerance tol) {
  if (!(t >= 0.0)) throw std::domain_error("pendulum_flow: t must be >= 0");
  if (l.alpha == 0.0) return {wrap_pi(l.theta + l.c * t), l.c, 0.0};
  State2 v{l.theta, l.c};
  integrate(PendulumRhs{l.alpha}, v, t, tol);
  // Project back onto the energy level along grad E.
  const double e0 = energy(l);
  for (int it = 0; it < 2; ++it) {
    const double ga = l.alpha * std::sin(v[0]), gc = v[1];
    const double g2 = ga * ga + gc * gc;
    if (g2 == 0.0) break;
    const double d = (energy({v[0], v[1], l.alpha}) - e0) / g2;
    v[0] -= d * ga;
    v[1] -= d * gc;
  }
  return {wrap_pi(v[0]), v[1], l.alpha};
}

namespace {

// C4, C5 and C7 follow the straight line at constant theta.
bool is_straight(const Covector& l) {
  const CovectorTag tag = classify(l).tag;
  return tag == CovectorTag::C4 || tag == CovectorTag::C5 || tag == CovectorTag::C7;
}

Point straight_line(double theta, double t) {
  const double s = std::sin(theta), c = std::cos(theta);
  return {-s * t, c * t, 0.0, c * s * s * t * t * t / 6.0};
}

}  // namespace

Point exp_map(const Covector& l, double t, OdeTolerance tol) {
  if (is_straight(l)) {
    if (!(t >= 0.0) || !std::isfinite(t)) throw std::domain_error("integration time must be finite and >= 0");
    return straight_line(l.theta, t);
  }
  State6 v{l.theta, l.c, 0, 0, 0, 0};
  integrate(GeodesicRhs{l.alpha}, v, t, tol);
  return {v[2], v[3], v[4], v[5]};
}

ExpWithJacobian exp_map_jacobian(const Covector& l, double t, OdeTolerance tol) {
  State24 v{};
  v[0] = l.theta;
  v[1] = l.c;
  v[6 + 0] = 1.0;      // d theta / d theta0
  v[6 + 3 + 1] = 1.0;  // d c / d c0
  integrate(VariationalRhs{l.alpha}, v, t, tol);
  ExpWithJacobian out;
  out.q = {v[2], v[3], v[4], v[5]};
  out.final_state = {v[0], v[1], l.alpha};
  for (int i = 0; i < 4; ++i) {
    for (int j = 0; j < 3; ++j) out.jacobian(i, j) = v[6 + 3 * (2 + i) + j];
  }
  State6 rate{};
  GeodesicRhs{l.alpha}({v[0], v[1], v[2], v[3], v[4], v[5]}, rate, t);
  for (int i = 0; i < 4; ++i) out.jacobian(i, 3) = rate[2 + i];
  return out;
}

std::vector<TrajectorySample> sample_times(const Covector& l, const std::vector<double>& times, OdeTolerance tol) {
  std::vector<TrajectorySample> out;
  out.reserve(times.size());
  if (times.empty()) return out;
  if (!(times.front() >= 0.0)) throw std::domain_error("sample_times: negative time");
  for (std::size_t i = 1; i < times.size(); ++i) {
    if (!(times[i] >= times[i - 1])) throw std::domain_error("sample_times: times must be increasing");
  }
  if (is_straight(l)) {
    for (double t : times) out.push_back({t, straight_line(l.theta, t), wrap_pi(l.theta), l.c});
    return out;
  }
  State6 v{l.theta, l.c, 0, 0, 0, 0};
  auto record = [&](const State6& s, double t) {
    out.push_back({t, {s[2], s[3], s[4], s[5]}, wrap_pi(s[0]), s[1]});
  };
  double t0 = 0.0;
  std::size_t i = 0;
  for (; i < times.size() && times[i] == 0.0; ++i) record(v, 0.0);
  if (i == times.size()) return out;
  auto stepper = odeint::make_dense_output(tol.atol, tol.rtol, odeint::runge_kutta_dopri5<State6>());
  std::vector<double> grid{t0};
  grid.insert(grid.end(), times.begin() + static_cast<long>(i), times.end());
  bool skip_first = true;
  try {
    odeint::integrate_times(stepper, GeodesicRhs{l.alpha}, v, grid.begin(), grid.end(), initial_step(grid.back()),
                            [&](const State6& s, double t) {
                              if (skip_first) {
                                skip_first = false;
                                return;
                              }
                              record(s, t);
                            });
  } catch (const std::exception& e) {
    throw std::runtime_error(std::string("ODE integration failed: ") + e.what());
  }
  return out;
}

std::vector<TrajectorySample> trajectory(const Covector& l, double t, int samples, OdeTolerance tol) {
  if (samples < 2) throw std::invalid_argument("trajectory: need at least 2 samples");
  std::vector<double> times(static_cast<std::size_t>(samples));
  for (int i = 0; i < samples; ++i) times[static_cast<std::size_t>(i)] = t * i / (samples - 1);
  times.back() = t;
  return sample_times(l, times, tol);
}

std::string to_csv_row(const TrajectorySample& s) {
  return format_double(s.t) + "," + to_csv_row(s.q) + "," + format_double(s.theta) + "," + format_double(s.c);
}

// ---------------------------------------------------------------------- charts

std::string chart_name(const ChartPoint& nu) {
  static const char* names[] = {"N1", "N2", "N3", "N6", "N7"};
  return names[nu.index()];
}

std::vector<double> chart_params(const ChartPoint& nu) {
  return std::visit(
      [](const auto& c) -> std::vector<double> {
        using T = std::decay_t<decltype(c)>;
        if constexpr (std::is_same_v<T, ChartN1>) return {c.k, c.u1, c.u2, c.sigma};
        if constexpr (std::is_same_v<T, ChartN2>) return {c.k, c.u1, c.u2, c.sigma, double(c.sign_c)};
        if constexpr (std::is_same_v<T, ChartN3>) return {c.p, c.tau, c.sigma, double(c.sign_c)};
        if constexpr (std::is_same_v<T, ChartN6>) return {c.theta, c.c, c.t};
        if constexpr (std::is_same_v<T, ChartN7>) return {c.theta, c.t};
      },
      nu);
}

namespace {

// Shift the base (sigma > 0) pendulum by eps^4 when sigma < 0.
Covector finish(double theta, double c, double sigma) {
  if (sigma < 0.0) theta += kPi;
  return {wrap_pi(theta), c, sigma * std::abs(sigma)};
}

Geodesic from_n1(const ChartN1& n) {
  require(n.k > 0.0 && n.k <= kModulusCap, "N1: k outside (0, 1)");
  require(n.sigma != 0.0 && std::isfinite(n.sigma), "N1: sigma must be nonzero");
  require(n.u1 >= 0.0, "N1: u1 must be >= 0");
  const double a = std::abs(n.sigma);
  const double p = incomplete_F(n.u1, n.k), tau = incomplete_F(n.u2, n.k);
  const Jacobi j = jacobi(tau - p, n.k);
  return {finish(2.0 * std::asin(n.k * j.sn), 2.0 * n.k * a * j.cn, n.sigma), 2.0 * p / a};
}

Geodesic from_n2(const ChartN2& n) {
  require(n.k > 0.0 && n.k <= kModulusCap, "N2: k outside (0, 1)");
  require(n.sigma != 0.0 && std::isfinite(n.sigma), "N2: sigma must be nonzero");
  require(n.u1 >= 0.0, "N2: u1 must be >= 0");
  require(n.sign_c == 1 || n.sign_c == -1, "N2: sign_c must be +-1");
  const double a = std::abs(n.sigma);
  const double p = incomplete_F(n.u1, n.k), tau = incomplete_F(n.u2, n.k);
  const double psi0 = tau - p;
  const double phi = am(psi0, n.k);
  const double s = std::sin(phi);
  const double dn = std::sqrt((1.0 - n.k * s) * (1.0 + n.k * s));
  return {finish(n.sign_c * 2.0 * phi, n.sign_c * 2.0 * a / n.k * dn, n.sigma), 2.0 * n.k * p / a};
}

Geodesic from_n3(const ChartN3& n) {
  require(n.sigma != 0.0 && std::isfinite(n.sigma), "N3: sigma must be nonzero");
  require(n.p >= 0.0, "N3: p must be >= 0");
  require(n.sign_c == 1 || n.sign_c == -1, "N3: sign_c must be +-1");
  const double a = std::abs(n.sigma);
  const double psi0 = n.tau - n.p;
  return {finish(n.sign_c * 2.0 * std::atan(std::sinh(psi0)), n.sign_c * 2.0 * a / std::cosh(psi0), n.sigma),
          2.0 * n.p / a};
}

}  // namespace

Geodesic from_chart(const ChartPoint& nu) {
  return std::visit(
      [](const auto& n) -> Geodesic {
        using T = std::decay_t<decltype(n)>;
        if constexpr (std::is_same_v<T, ChartN1>) return from_n1(n);
        if constexpr (std::is_same_v<T, ChartN2>) return from_n2(n);
        if constexpr (std::is_same_v<T, ChartN3>) return from_n3(n);
        if constexpr (std::is_same_v<T, ChartN6>) {
          require(n.c != 0.0, "N6: c must be nonzero");
          require(n.t >= 0.0, "N6: t must be >= 0");
          return {{wrap_pi(n.theta), n.c, 0.0}, n.t};
        }
        if constexpr (std::is_same_v<T, ChartN7>) {
          require(n.t >= 0.0, "N7: t must be >= 0");
          return {{wrap_pi(n.theta), 0.0, 0.0}, n.t};
        }
      },
      nu);
}

ChartPoint to_chart(const Covector& l, double t, double eps_class) {
  if (!(t >= 0.0)) throw std::domain_error("to_chart: t must be >= 0");
  const CovectorClass cls = classify(l, eps_class);
  const double sigma = sgn(l.alpha) * std::sqrt(std::abs(l.alpha));
  const double a = std::abs(sigma);
  const double theta_b = wrap_pi(l.alpha > 0.0 ? l.theta : l.theta - kPi);
  switch (cls.tag) {
    case CovectorTag::C1: {
      const double k = cls.k;
      const double phi0 = std::atan2(std::sin(0.5 * theta_b) / k, l.c / (2.0 * k * a));
      const double p = 0.5 * a * t;
      const double tau = incomplete_F(phi0, k) + p;
      return ChartN1{k, am(p, k), wrap_2pi(am(tau, k)), sigma};
    }
    case CovectorTag::C2: {
      const double k = cls.k;
      const int sc = l.c < 0.0 ? -1 : 1;
      const double p = a * t / (2.0 * k);
      const double tau = incomplete_F(0.5 * sc * theta_b, k) + p;
      return ChartN2{k, am(p, k), wrap_2pi(am(tau, k)), sigma, sc};
    }
    case CovectorTag::C3: {
      const int sc = l.c < 0.0 ? -1 : 1;
      const double p = 0.5 * a * t;
      return ChartN3{p, std::asinh(std::tan(0.5 * sc * theta_b)) + p, sigma, sc};
    }
    case CovectorTag::C6:
      return ChartN6{wrap_pi(l.theta), l.c, t};
    default:
      return ChartN7{wrap_pi(l.theta), t};
  }
}

double chart_distance(const ChartPoint& a, const ChartPoint& b) {
  constexpr double inf = std::numeric_limits<double>::infinity();
  if (a.index() != b.index()) return inf;
  const auto pa = chart_params(a), pb = chart_params(b);
  double d = 0.0;
  for (std::size_t i = 0; i < pa.size(); ++i) {
    double diff = pa[i] - pb[i];
    // N2 repeats after u2 -> u2 + pi (theta advances by 2 pi).
    if (a.index() == 1 && i == 2) diff = std::remainder(diff, kPi);
    const bool angular = (a.index() == 0 && i == 2) || ((a.index() == 3 || a.index() == 4) && i == 0);
    if (angular) diff = wrap_pi(diff);
    d = std::max(d, std::abs(diff));
  }
  return d;
}

Geodesic reflect_preimage(int i, const Covector& l, double t) {
  const auto [b1, b2, b4] = reflection_bits(i);
  Covector r = l;
  if (b4) r = {wrap_pi(r.theta + kPi), r.c, -r.alpha};
  if (b2) {
    const Covector f = pendulum_flow(r, t);
    r = {wrap_pi(-f.theta), f.c, r.alpha};
  }
  if (b1) {
    const Covector f = pendulum_flow(r, t);
    r = {f.theta, -f.c, r.alpha};
  }
  return {r, t};
}

// ---------------------------------------------------- restricted closed forms

namespace {

// Maclaurin coefficients in m = k^2 of (2/pi) K(k) and (2/pi) E(k).
constexpr int kTerms = 40;
constexpr double kSeriesBelow = 0.3;
using Poly = std::array<double, kTerms>;

struct Series {
  Poly K{}, E{};
  Series() {
    double g = 1.0;
    for (int n = 0; n < kTerms; ++n) {
      if (n > 0) g *= (2.0 * n - 1.0) / (2.0 * n);
      K[n] = g * g;
      E[n] = g * g / (1.0 - 2.0 * n);
    }
  }
};

const Series& series() {
  static const Series s;
  return s;
}

Poly mul(const Poly& a, const Poly& b) {
  Poly r{};
  for (int i = 0; i < kTerms; ++i) {
    for (int j = 0; i + j < kTerms; ++j) r[i + j] += a[i] * b[j];
  }
  return r;
}

// (c0 + c1 m) * a
Poly lin(double c0, double c1, const Poly& a) {
  Poly r{};
  for (int i = 0; i < kTerms; ++i) r[i] = c0 * a[i] + (i > 0 ? c1 * a[i - 1] : 0.0);
  return r;
}

Poly add(const Poly& a, const Poly& b, double sb = 1.0) {
  Poly r{};
  for (int i = 0; i < kTerms; ++i) r[i] = a[i] + sb * b[i];
  return r;
}

double eval(const Poly& p, double m) {
  double r = 0.0;
  for (int i = kTerms - 1; i >= 0; --i) r = r * m + p[i];
  return r;
}

Poly iota4_poly() {
  const auto& s = series();
  return add(lin(2.0, -1.0, s.K), s.E, -2.0);
}

double m_of(double k) { return k * k; }

void require_open_modulus(double k, const char* who) {
  if (!(k > 0.0 && k <= kModulusCap)) throw std::domain_error(std::string(who) + ": k outside (0, 1)");
}

}  // namespace

double iota1(double k) { return 2.0 * complete_E(k) - complete_K(k); }

double iota2(double k) {
  if (k < kSeriesBelow) {
    const auto& s = series();
    return 0.5 * kPi * eval(add(s.K, s.E, -1.0), m_of(k));
  }
  return complete_K(k) - complete_E(k);
}

double iota3(double k) {
  const double m = m_of(k);
  if (k < kSeriesBelow) {
    const auto& s = series();
    const Poly ee = mul(s.E, s.E), ek = mul(s.E, s.K), kk = mul(s.K, s.K);
    const Poly num = add(add(lin(3.0, 0.0, ee), lin(5.0, -4.0, ek), -1.0), lin(2.0, -2.0, kk));
    return 0.25 * kPi * kPi * eval(num, m) / (1.0 - m);
  }
  const double K = complete_K(k), E = complete_E(k);
  return (3.0 * E * E - (5.0 - 4.0 * m) * E * K + 2.0 * (1.0 - m) * K * K) / (1.0 - m);
}

double iota4(double k) {
  if (k < kSeriesBelow) return 0.5 * kPi * eval(iota4_poly(), m_of(k));
  return (2.0 - m_of(k)) * complete_K(k) - 2.0 * complete_E(k);
}

double iota5(double k) {
  const double m = m_of(k);
  if (k < kSeriesBelow) {
    const auto& s = series();
    const Poly ee = mul(s.E, s.E), ek = mul(s.E, s.K), kk = mul(s.K, s.K);
    const Poly num = add(add(lin(2.0, -1.0, ek), lin(1.0, -1.0, kk)), ee, -3.0);
    return 0.25 * kPi * kPi * eval(num, m);
  }
  const double K = complete_K(k), E = complete_E(k);
  return (2.0 - m) * E * K + (1.0 - m) * K * K - 3.0 * E * E;
}

double iota6(double k) {
  if (k < kSeriesBelow) {
    const auto& s = series();
    return 0.5 * kPi * eval(add(s.E, lin(1.0, -1.0, s.K), -1.0), m_of(k));
  }
  return complete_E(k) - (1.0 - m_of(k)) * complete_K(k);
}

YW yw1(double k, double u1, double u2) {
  require_open_modulus(k, "yw1");
  const double s1 = std::sin(u1), c1 = std::cos(u1), s2 = std::sin(u2);
  const double k2 = k * k;
  const double d1 = std::sqrt((1.0 - k * s1) * (1.0 + k * s1));
  const double d2 = std::sqrt((1.0 - k * s2) * (1.0 + k * s2));
  require(c1 != 0.0 && s2 != 0.0 && s1 != 0.0, "yw1: singular at cos u1 = 0, sin u1 = 0 or sin u2 = 0");
  const double E1 = incomplete_E(u1, k);
  const double s1s = s1 * s1, s2s = s2 * s2;
  const double delta = 1.0 - k2 * s1s * s2s;
  YW r;
  r.Y = -(1.0 + k2 * (s1s - 2.0) * s2s) / (2.0 * k * c1 * s2 * d2);
  const double inner =
      1.0 - k2 * s1s * s2s * (6.0 - 3.0 * k2 * (4.0 - s1s) * s2s + 4.0 * k2 * k2 * (2.0 - s1s) * s2s * s2s);
  const double num = -E1 * c1 * delta * delta * delta + d1 * d1 * d1 * s1 * inner;
  r.W = num / (48.0 * k2 * k * s1s * s1 * c1 * d1 * d1 * d1 * s2s * s2 * d2 * d2 * d2);
  return r;
}

YW yw2_1(double k, double u2) {
  require_open_modulus(k, "yw2_1");
  const double c2 = std::cos(u2);
  const double i1 = iota1(k);
  require(c2 > 0.0, "yw2_1: cos u2 must be positive");
  require(i1 > 0.0, "yw2_1: iota1(k) must be positive (k < k0)");
  YW r;
  r.Y = std::sqrt(2.0 * i1 / (k * c2));
  r.W = (iota2(k) + k * k * i1 * (1.0 + 3.0 * c2 * c2)) / (3.0 * std::pow(2.0 * k * i1 * c2, 1.5));
  return r;
}

YW yw2_2(double k, double u2) {
  require_open_modulus(k, "yw2_2");
  const double s2 = std::sin(u2), s2s = s2 * s2, c2s = std::cos(u2) * std::cos(u2);
  const double m = k * k;
  const double e = (1.0 - k) * (1.0 + k);
  const double kp = std::sqrt(e);
  const double d2 = std::sqrt(e + m * c2s);
  const double i4 = iota4(k);
  require(i4 > 0.0, "yw2_2: iota4(k) must be positive");
  double num;
  if (k < kSeriesBelow) {
    // k^4 K d2^2 and iota4 (8 - 7k^2 - ...) cancel to leading order; expand in m.
    const auto& s = series();
    Poly kterm{};  // m^2 (1 - m s2^2) (2/pi) K
    for (int i = 2; i < kTerms; ++i) kterm[i] = s.K[i - 2] - (i >= 3 ? s2s * s.K[i - 3] : 0.0);
    const Poly i4p = iota4_poly();
    Poly tail{};  // iota4 (8 - (7 + 2 s2^2) m + s2^2 m^2)
    for (int i = 0; i < kTerms; ++i) {
      tail[i] = 8.0 * i4p[i] - (i >= 1 ? (7.0 + 2.0 * s2s) * i4p[i - 1] : 0.0) + (i >= 2 ? s2s * i4p[i - 2] : 0.0);
    }
    num = 0.5 * kPi * eval(add(kterm, tail, -1.0), m);
  } else {
    // 8 - 7m - m (2 - m) sin^2 u2 = 7e + e^2 + (1 - e^2) cos^2 u2, free of cancellation as k -> 1.
    num = m * m * complete_K(k) * d2 * d2 - i4 * (e * (7.0 + e) + (1.0 - e * e) * c2s);
  }
  YW r;
  r.Y = -std::sqrt(i4 * d2 / kp);
  r.W = num / (12.0 * std::sqrt(i4 * i4 * i4 * kp * kp * kp * d2));
  return r;
}

YW yw2_6(double theta) { return {0.0, -std::cos(theta) / std::sqrt(kPi)}; }

YW yw2_3(double p) {
  require(p > 0.0, "yw2_3: p must be positive");
  const double sh = std::sinh(p), ch = std::cosh(p);
  double g = p * ch - sh;
  double num = 9.0 * sh - 12.0 * p * ch + std::sinh(3.0 * p);
  if (p < 1.0) {
    // Both cancel to O(p^3) and O(p^5); sum the odd power series instead.
    g = 0.0;
    num = 0.0;
    double pk = p, fact = 1.0, pow3 = 3.0;  // p^(2n+1), (2n+1)!, 3^(2n+1)
    for (int n = 0; n < 25; ++n) {
      if (n > 0) {
        pk *= p * p;
        fact *= (2.0 * n) * (2.0 * n + 1.0);
        pow3 *= 9.0;
      }
      g += pk * (2.0 * n) / fact;
      num += pk * ((9.0 + pow3) - 12.0 * (2.0 * n + 1.0)) / fact;
    }
  }
  return {(2.0 * sh - p * ch) / std::sqrt(g), num / (24.0 * std::pow(g, 1.5))};
}

Point endpoint_max20(double k, double sigma) {
  require_open_modulus(k, "endpoint_max20");
  require(sigma != 0.0, "endpoint_max20: sigma must be nonzero");
  const double i1 = iota1(k), i2 = iota2(k);
  return {0.0, 4.0 * i1 / sigma, 0.0, 8.0 * (k * k * i1 + i2) / (3.0 * sigma * sigma * sigma)};
}

Point endpoint_max10(double k, double u1, double sigma) {
  require_open_modulus(k, "endpoint_max10");
  require(sigma != 0.0, "endpoint_max10: sigma must be nonzero");
  const double s1 = std::sin(u1), c1 = std::cos(u1);
  const double d1 = std::sqrt((1.0 - k * s1) * (1.0 + k * s1));
  const double E1 = incomplete_E(u1, k), F1 = incomplete_F(u1, k);
  return {0.0, 2.0 * (2.0 * E1 - F1) / sigma, 0.0,
          4.0 * (E1 * c1 - d1 * d1 * d1 * s1) / (3.0 * sigma * sigma * sigma * c1)};
}

}  // namespace engel
