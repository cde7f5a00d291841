#include "engel/synthesis.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>

#include "engel/elliptic.hpp"
#include "roots.hpp"

namespace engel {
namespace {

using detail::bracket_root;
using elliptic::incomplete_E;
using elliptic::incomplete_F;
using elliptic::kModulusCap;

constexpr double kPi = std::numbers::pi;
constexpr double kInf = std::numeric_limits<double>::infinity();

[[noreturn]] void fail(const std::string& what, double residual = kInf) {
  throw ConvergenceError("minimizers: " + what, residual);
}

// A point moved to its canonical stratum: q = eps^bits(qc).
struct Canonical {
  Point qc;
  int bits = 0;
  void apply(int i) {
    qc = reflect(i, qc);
    bits ^= i;
  }
  Geodesic restore(const Geodesic& g) const { return bits ? reflect_preimage(bits, g.lambda, g.t) : g; }
};

// Increase x from a toward b until g(x) changes sign relative to g(a), halving the gap to b.
template <class G>
double approach(G g, double a, double b, bool want_positive) {
  double x = a;
  for (int i = 0; i < 200; ++i) {
    x = b - 0.5 * (b - x);
    if ((g(x) > 0.0) == want_positive) return x;
    if (std::abs(b - x) <= 4.0 * std::numeric_limits<double>::epsilon() * std::abs(b)) break;
  }
  fail("no bracket before the end of the parameter range");
}

// ----------------------------------------------------------------- M_00 strata

// w / y^3 on MAX20 as a function of k in (0, k0).
double r20(double k) {
  const double i1 = iota1(k);
  return (k * k * i1 + iota2(k)) / (24.0 * i1 * i1 * i1);
}

std::vector<ChartPoint> solve_i0x(const Point& q) {
  const double R = q.w / (q.y * q.y * q.y);
  const double k0v = k0();
  auto g = [R](double k) { return r20(k) - R; };
  const double hi = approach(g, 0.5 * k0v, k0v, true);
  double lo = std::min(0.5, 0.5 * hi);
  while (g(lo) > 0.0) {
    lo *= 0.5;
    if (lo < 1e-150) fail("I0x ratio below the reachable range");
  }
  const double k = bracket_root(g, lo, hi, "I0x");
  const double sigma = 4.0 * iota1(k) / q.y;
  return {ChartN1{k, kPi, 0.5 * kPi, sigma}, ChartN1{k, kPi, 1.5 * kPi, sigma}};
}

// MAX10 endpoint ingredients at u1 = u1z(k): y sigma and w sigma^3.
struct Max10 {
  double ys, ws;
};

Max10 max10(double k) {
  const double u1 = u1z(k);
  const double s1 = std::sin(u1), c1 = std::cos(u1);
  const double d1 = std::sqrt((1.0 - k) * (1.0 + k) + k * k * c1 * c1);
  const double E1 = incomplete_E(u1, k), F1 = incomplete_F(u1, k);
  return {2.0 * (2.0 * E1 - F1), 4.0 * (E1 * c1 - d1 * d1 * d1 * s1) / (3.0 * c1)};
}

std::vector<ChartPoint> solve_i0z(const Point& q) {
  const double R = q.w / (q.y * q.y * q.y);
  auto g = [R](double k) {
    const Max10 m = max10(k);
    return m.ws / (m.ys * m.ys * m.ys) - R;
  };
  const double k0v = k0();
  // The ratio runs from -infinity at k0 up toward 0 as k -> 1.
  const double hi = kModulusCap;
  if (g(hi) < 0.0) fail("I0z point beyond the modulus cap");
  const double lo = approach([&](double k) { return -g(k); }, hi, k0v, true);
  const double k = bracket_root(g, lo, hi, "I0z");
  const double sigma = max10(k).ys / q.y;
  const double u1 = u1z(k);
  return {ChartN1{k, u1, 0.0, sigma}, ChartN1{k, u1, kPi, sigma}};
}

// ------------------------------------------------------------ M_z, x > 0

// Modulus and u1 of a closed-form solution; reflections and dilations keep both.
struct Known {
  double k, u1;
};

// Near k = 1 the endpoint x is a small difference of large terms, so the
// closed-form fits integrate at a tighter tolerance than the caller's.
OdeTolerance fine(const OdeTolerance& ode) { return {std::min(ode.rtol, 1e-13), std::min(ode.atol, 1e-15)}; }

// Scale a unit-|sigma| canonical chart so the endpoint matches q in one coordinate.
Geodesic scale_to(const Geodesic& unit, double ratio_of_scales) {
  const double rho = ratio_of_scales;
  return {{unit.lambda.theta, unit.lambda.c / rho, unit.lambda.alpha / (rho * rho)}, unit.t * rho};
}

Geodesic fit_x(const ChartPoint& unit, const Point& qc, const OdeTolerance& ode) {
  const Geodesic g = from_chart(unit);
  const Point e = exp_map(g.lambda, g.t, fine(ode));
  if (!(e.x > 0.0)) fail("canonical endpoint has x <= 0");
  return scale_to(g, qc.x / e.x);
}

Geodesic fit_z(const ChartPoint& unit, const Point& qc, const OdeTolerance& ode) {
  const Geodesic g = from_chart(unit);
  const Point e = exp_map(g.lambda, g.t, fine(ode));
  if (!(e.z > 0.0)) fail("canonical endpoint has z <= 0");
  return scale_to(g, std::sqrt(qc.z / e.z));
}

// u2 in (0, pi/2] with Y^1(k, u2) = Y; Y decreases from +infinity to the conjugate value.
double iz_u2(double k, double p, double Y) {
  auto g = [&](double u2) { return yw1_cut(k, u2, p).Y - Y; };
  const double top = 0.5 * kPi;
  const double gt = g(top);
  if (gt >= 0.0) return top;
  double lo = 1e-3;
  while (g(lo) <= 0.0) {
    lo *= 0.5;
    if (lo < 1e-300) fail("Iz: no u2 for this abscissa");
  }
  return bracket_root(g, lo, top, g(lo), gt, "Iz u2");
}

std::vector<Geodesic> solve_iz(const Point& qc, const OdeTolerance& ode, Known& known) {
  const double Y = qc.y / qc.x, W = qc.w / (qc.x * qc.x * qc.x);
  const auto kc = k_on_w1(Y);
  const double k_hi = kc ? *kc : kModulusCap;
  const double k0v = k0();
  auto wk = [&](double k) {
    const double p = p_z1(k);
    return yw1_cut(k, iz_u2(k, p, Y), p).W - W;
  };
  const double f_hi = wk(k_hi);
  if (f_hi < 0.0) fail("Iz point beyond the modulus cap");
  const double lo = approach([&](double k) { return -wk(k); }, k_hi, k0v, true);
  const double k = f_hi == 0.0 ? k_hi : bracket_root(wk, lo, k_hi, "Iz");
  const double u2 = iz_u2(k, p_z1(k), Y);
  known = {k, u1z(k)};
  const Geodesic g = fit_x(ChartN1{k, u1z(k), u2, -1.0}, qc, ode);
  const Geodesic partner = reflect_preimage(1, g.lambda, g.t);
  return {g, partner};
}

Geodesic solve_ciz(const Point& qc, const OdeTolerance& ode, Known& known) {
  const double Y = qc.y / qc.x;
  const auto k = k_on_w1(Y);
  if (!k) fail("CIz point beyond the modulus cap");
  known = {*k, u1z(*k)};
  return fit_x(ChartN1{*k, u1z(*k), 0.5 * kPi, -1.0}, qc, ode);
}

// ------------------------------------------------------------ M_x, z > 0

std::vector<Geodesic> solve_ix(const Point& qc, const OdeTolerance& ode, Known& known) {
  const double sz = std::sqrt(qc.z);
  const double Y = qc.y / sz, W = qc.w / (qc.z * sz);
  const double k_lo = *k_on_w21(Y);
  const double k0v = k0();
  // cos u2 = 2 iota1 / (k Y^2) keeps Y^2_1 fixed; W then grows from the conjugate value.
  auto wk = [&](double k) {
    const double c2 = std::min(1.0, 2.0 * iota1(k) / (k * Y * Y));
    return yw2_1(k, std::acos(c2)).W - W;
  };
  const double hi = approach(wk, k_lo, k0v, true);
  const double k = bracket_root(wk, k_lo, hi, "Ix");
  const double u2 = std::acos(std::min(1.0, 2.0 * iota1(k) / (k * Y * Y)));
  known = {k, kPi};
  const Geodesic g = fit_z(ChartN1{k, kPi, u2, 1.0}, qc, ode);
  return {g, reflect_preimage(2, g.lambda, g.t)};
}

Geodesic solve_cix(const Point& qc, const OdeTolerance& ode, Known& known) {
  const double Y = qc.y / std::sqrt(qc.z);
  known = {*k_on_w21(Y), kPi};
  return fit_z(ChartN1{known.k, kPi, 0.0, 1.0}, qc, ode);
}

// Lens with Y < 0: N2 charts (k, pi/2, u2, sigma > 0), u2 in (0, pi/2).
std::vector<Geodesic> solve_lens(const Point& qc, const OdeTolerance& ode, Known& known) {
  const double sz = std::sqrt(qc.z);
  const double Y = qc.y / sz, W = qc.w / (qc.z * sz);
  const auto kp = k_on_w22_plus(Y);
  if (!kp) fail("lens point beyond the modulus cap");
  const auto km = k_on_w22_minus(Y);
  const double k_lo = *kp, k_hi = km ? *km : kModulusCap;
  // d2 = k' Y^2 / iota4 keeps Y^2_2 fixed.
  auto u2_of = [Y](double k) {
    const double d2 = std::sqrt((1.0 - k) * (1.0 + k)) * Y * Y / iota4(k);
    const double s2s = std::clamp((1.0 - d2) * (1.0 + d2) / (k * k), 0.0, 1.0);
    return std::asin(std::sqrt(s2s));
  };
  auto wk = [&](double k) { return yw2_2(k, u2_of(k)).W - W; };
  const double f_lo = wk(k_lo), f_hi = wk(k_hi);
  if (f_hi > 0.0) fail("lens point beyond the modulus cap");
  const double k = bracket_root(wk, k_lo, k_hi, f_lo, f_hi, "lens");
  known = {k, 0.5 * kPi};
  const Geodesic g = fit_z(ChartN2{k, 0.5 * kPi, u2_of(k), 1.0, 1}, qc, ode);
  return {g, reflect_preimage(2, g.lambda, g.t)};
}

// Circle arcs through Y = 0, |W| < 1/sqrt(pi): z = pi / c^2.
std::vector<Geodesic> solve_circle(const Point& qc) {
  const double sz = std::sqrt(qc.z);
  const double W = qc.w / (qc.z * sz);
  const double c = std::sqrt(kPi / qc.z);
  const double theta = std::acos(std::clamp(-std::sqrt(kPi) * W, -1.0, 1.0));
  const double t = 2.0 * kPi / c;
  std::vector<Geodesic> out{from_chart(ChartN6{-theta, c, t})};
  if (theta != 0.0 && theta != kPi) out.push_back(from_chart(ChartN6{theta, c, t}));
  return out;
}

// Upper lens boundary, z > 0.
Geodesic solve_cn_upper(Canonical& cq, const OdeTolerance& ode, std::optional<Known>& known) {
  const double sz = std::sqrt(cq.qc.z);
  const double Y = cq.qc.y / sz;
  if (Y == 0.0) return from_chart(ChartN6{kPi, std::sqrt(kPi / cq.qc.z), 2.0 * kPi / std::sqrt(kPi / cq.qc.z)});
  if (Y < 0.0) {
    const auto k = k_on_w22_plus(Y);
    if (!k) fail("CNx point beyond the modulus cap");
    known = Known{*k, 0.5 * kPi};
    return fit_z(ChartN2{*k, 0.5 * kPi, 0.0, 1.0, 1}, cq.qc, ode);
  }
  cq.apply(4);
  const auto k = k_on_w22_minus(-Y);
  if (!k) fail("CNx point beyond the modulus cap");
  known = Known{*k, 0.5 * kPi};
  return fit_z(ChartN2{*k, 0.5 * kPi, 0.5 * kPi, 1.0, 1}, cq.qc, ode);
}

Minimizer finish(const Geodesic& g, const Point& q, const SynthesisOptions& opt,
                 const std::optional<ChartPoint>& exact, const std::optional<Known>& known, bool shot) {
  Minimizer m;
  m.geodesic = g;
  m.time = g.t;
  m.nu = exact ? *exact : to_chart(g.lambda, g.t);
  if (!exact && known) {
    if (auto* n = std::get_if<ChartN1>(&m.nu)) {
      n->k = known->k;
      n->u1 = known->u1;
    } else if (auto* n2 = std::get_if<ChartN2>(&m.nu)) {
      n2->k = known->k;
      n2->u1 = known->u1;
    }
  }
  // Shooting solutions are converged against opt.ode; closed forms are exact up to the integrator.
  m.residual = scaled_residual(exp_map(g.lambda, g.t, shot ? opt.ode : fine(opt.ode)), q);
  return m;
}

}  // namespace

double scaled_residual(const Point& a, const Point& q) {
  const double s = std::max(1.0, homogeneous_norm(q));
  return std::max({std::abs(a.x - q.x) / s, std::abs(a.y - q.y) / s, std::abs(a.z - q.z) / (s * s),
                   std::abs(a.w - q.w) / (s * s * s)});
}

bool is_optimal(const Geodesic& g) {
  const double tc = t_cut(g.lambda);
  return g.t <= tc * (1.0 + 1e-10);
}

// On N1 and N2 the comparison is made in p at the chart's own modulus: near k0
// the cut time is only Hoelder-1/3 in k, so recomputing k from the covector
// would move it by far more than roundoff.
bool is_optimal(const ChartPoint& nu) {
  constexpr double slack = 1.0 + 1e-10;
  if (const auto* n = std::get_if<ChartN1>(&nu)) {
    return incomplete_F(n->u1, n->k) <= std::min(p_z1(n->k), 2.0 * elliptic::complete_K(n->k)) * slack;
  }
  if (const auto* n = std::get_if<ChartN2>(&nu)) {
    return incomplete_F(n->u1, n->k) <= elliptic::complete_K(n->k) * slack;
  }
  if (const auto* n = std::get_if<ChartN6>(&nu)) return n->t <= 2.0 * kPi / std::abs(n->c) * slack;
  return true;
}

SynthesisResult minimizers(const Point& q, const SynthesisOptions& opt) {
  SynthesisResult out;
  out.stratum = classify_point(q, opt.strata);
  const Stratum& st = out.stratum;
  if (st.kind == StratumKind::Origin) throw std::invalid_argument("minimizers: q must differ from the origin");

  std::vector<Geodesic> gs;
  std::vector<ChartPoint> exact;  // charts known exactly, parallel to gs when filled
  Canonical cq{q};
  std::optional<Known> known;
  Known kn{};
  bool shot = false;
  switch (st.kind) {
    case StratumKind::A:
      gs.push_back(from_chart(ChartN7{q.y > 0.0 ? 0.0 : kPi, std::abs(q.y)}));
      break;
    case StratumKind::I0x:
    case StratumKind::I0z:
      exact = st.kind == StratumKind::I0x ? solve_i0x(q) : solve_i0z(q);
      for (const ChartPoint& c : exact) gs.push_back(from_chart(c));
      break;
    case StratumKind::E: {
      const double sigma = std::cbrt(8.0 * iota2(k0()) / (3.0 * q.w));
      out.family = FamilyDescription{k0(), kPi, sigma};
      const int n = std::max(1, opt.family_samples);
      for (int i = 0; i < n; ++i) {
        exact.push_back(ChartN1{k0(), kPi, 2.0 * kPi * i / n, sigma});
        gs.push_back(from_chart(exact.back()));
      }
      break;
    }
    case StratumKind::Iz:
    case StratumKind::CIz:
      if (q.x < 0.0) cq.apply(2);
      if (st.sign < 0) cq.apply(6);
      if (st.kind == StratumKind::Iz) {
        gs = solve_iz(cq.qc, opt.ode, kn);
      } else {
        gs.push_back(solve_ciz(cq.qc, opt.ode, kn));
      }
      known = kn;
      break;
    case StratumKind::Ix:
    case StratumKind::CIx:
    case StratumKind::Nx:
    case StratumKind::CNx:
      if (q.z < 0.0) cq.apply(1);
      if (st.kind == StratumKind::Ix || st.kind == StratumKind::CIx) {
        if (st.sign < 0) cq.apply(4);
        if (st.kind == StratumKind::Ix) {
          gs = solve_ix(cq.qc, opt.ode, kn);
        } else {
          gs.push_back(solve_cix(cq.qc, opt.ode, kn));
        }
        known = kn;
      } else if (st.kind == StratumKind::Nx) {
        if (st.piece == LensPiece::C) {
          gs = solve_circle(cq.qc);
        } else {
          if (st.piece == LensPiece::NMinus) cq.apply(4);
          gs = solve_lens(cq.qc, opt.ode, kn);
          known = kn;
        }
      } else {
        if (st.sign < 0) cq.apply(4);
        gs.push_back(solve_cn_upper(cq, opt.ode, known));
      }
      break;
    default: {
      shot = true;
      const ShootingReport rep = shoot(q, opt);
      if (rep.solutions.empty()) fail("shooting did not converge", rep.best_residual);
      const double t0 = rep.solutions.front().geodesic.t;
      for (const ShootingSolution& s : rep.solutions) {
        if (s.geodesic.t <= t0 * (1.0 + 1e-9)) gs.push_back(s.geodesic);
      }
      break;
    }
  }

  for (std::size_t i = 0; i < gs.size(); ++i) {
    out.minimizers.push_back(
        finish(cq.restore(gs[i]), q, opt, i < exact.size() ? std::optional<ChartPoint>(exact[i]) : std::nullopt, known, shot));
  }
  double worst = 0.0;
  for (const Minimizer& m : out.minimizers) worst = std::max(worst, m.residual);
  if (!(worst <= opt.tol)) fail("endpoint residual above tolerance", worst);
  return out;
}

double distance(const Point& q, const SynthesisOptions& opt) {
  if (homogeneous_norm(q) == 0.0) return 0.0;
  return minimizers(q, opt).minimizers.front().time;
}

std::vector<std::optional<SynthesisResult>> minimizers_batch(const std::vector<Point>& points,
                                                             const SynthesisOptions& opt) {
  std::vector<std::optional<SynthesisResult>> out(points.size());
  shooting_seed_count();
  const long n = static_cast<long>(points.size());
#pragma omp parallel for schedule(dynamic, 1)
  for (long i = 0; i < n; ++i) {
    try {
      out[i] = minimizers(points[i], opt);
    } catch (const std::exception&) {
      out[i] = std::nullopt;
    }
  }
  return out;
}

std::vector<std::optional<SynthesisResult>> minimizers_batch_serial(const std::vector<Point>& points,
                                                                    const SynthesisOptions& opt) {
  std::vector<std::optional<SynthesisResult>> out(points.size());
  for (std::size_t i = 0; i < points.size(); ++i) {
    try {
      out[i] = minimizers(points[i], opt);
    } catch (const std::exception&) {
      out[i] = std::nullopt;
    }
  }
  return out;
}

std::vector<Point> exp_map_batch(const std::vector<Geodesic>& gs, OdeTolerance tol) {
  std::vector<Point> out(gs.size());
  const long n = static_cast<long>(gs.size());
#pragma omp parallel for schedule(dynamic, 4)
  for (long i = 0; i < n; ++i) out[i] = exp_map(gs[i].lambda, gs[i].t, tol);
  return out;
}

std::vector<Point> exp_map_batch_serial(const std::vector<Geodesic>& gs, OdeTolerance tol) {
  std::vector<Point> out(gs.size());
  for (std::size_t i = 0; i < gs.size(); ++i) out[i] = exp_map(gs[i].lambda, gs[i].t, tol);
  return out;
}

}  // namespace engel
