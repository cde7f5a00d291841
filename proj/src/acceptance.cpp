#include "engel/acceptance.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <numbers>
#include <random>
#include <stdexcept>

#include "engel/elliptic.hpp"

namespace engel {
namespace {

using elliptic::complete_E;
using elliptic::complete_K;

constexpr double kPi = std::numbers::pi;
const double kInvSqrtPi = 1.0 / std::sqrt(kPi);

// Criterion-local generator; each criterion reseeds so results do not depend on run order.
class Rng {
 public:
  Rng(std::uint64_t seed, int id) : gen_(seed * 1000003ULL + static_cast<std::uint64_t>(id)) {}
  double uniform(double a, double b) { return a + (b - a) * std::generate_canonical<double, 53>(gen_); }
  bool coin() { return (gen_() & 1U) != 0; }
  int pick(int n) { return static_cast<int>(gen_() % static_cast<std::uint64_t>(n)); }

 private:
  std::mt19937_64 gen_;
};

std::string fmt(const char* f, auto... args) {
  char buf[512];
  std::snprintf(buf, sizeof buf, f, args...);
  return buf;
}

CriterionResult result(int id, std::string title, bool pass, std::string detail, std::string timing = {}) {
  CriterionResult r;
  r.id = id;
  r.title = std::move(title);
  r.pass = pass;
  r.detail = std::move(detail);
  r.timing = std::move(timing);
  return r;
}

// Test points are generated at a tighter tolerance than the library default.
constexpr OdeTolerance kFine{1e-13, 1e-15};

Point endpoint(const ChartPoint& nu) {
  const Geodesic g = from_chart(nu);
  return exp_map(g.lambda, g.t, kFine);
}

double rel_err(const Point& a, const Point& b) {
  const double scale = std::max({std::abs(b.x), std::abs(b.y), std::abs(b.z), std::abs(b.w)});
  return max_abs_diff(a, b) / scale;
}

// --------------------------------------------------------------------------

CriterionResult c1_k0() {
  double best = 1e300, k = 0.0;
  for (int i = 0; i < 5; ++i) {
    const auto t0 = std::chrono::steady_clock::now();
    k = k0_bisection();
    best = std::min(best, std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count());
  }
  const double res = std::abs(2.0 * complete_E(k) - complete_K(k));
  const bool pass = res <= 1e-12 && std::abs(k - 0.909) <= 5e-4 && best < 1e-3;
  return result(1, "k0 bisection", pass, fmt("k0=%.12f residual=%.1e", k, res), fmt("bisection %.3f ms", best * 1e3));
}

CriterionResult c2_pz1() {
  const double k = k0();
  const double d = std::abs(p_z1(k) - 2.0 * complete_K(k));
  int inside = 0;
  for (int i = 1; i <= 50; ++i) {
    const double kk = 0.02 * i - 0.01;
    const double p = p_z1(kk), K = complete_K(kk);
    if (p > K && p < 3.0 * K) ++inside;
  }
  return result(2, "first root of f_z", d <= 1e-9 && inside == 50,
          fmt("|p_z1(k0) - 2K(k0)|=%.1e, %d/50 grid roots in (K, 3K)", d, inside));
}

CriterionResult c3_endpoints() {
  double worst20 = 0.0, worst10 = 0.0;
  for (const double s : {0.5, 1.0, 2.0}) {
    for (const double k : {0.3, 0.5, 0.7, 0.84}) {
      worst20 = std::max(worst20, rel_err(endpoint_max20(k, s), endpoint(ChartN1{k, kPi, 0.5 * kPi, s})));
    }
    for (const double k : {0.92, 0.95, 0.98}) {
      const double u1 = u1z(k);
      const Point ode = endpoint(ChartN1{k, u1, 0.0, s});
      worst10 = std::max(worst10, std::abs(endpoint_max10(k, u1, s).y - ode.y) / std::abs(ode.y));
    }
  }
  return result(3, "closed-form endpoints vs ODE", std::max(worst20, worst10) <= 1e-6,
          fmt("max rel err MAX20 %.1e, MAX10 y %.1e", worst20, worst10));
}

Covector random_covector(Rng& rng) {
  return {rng.uniform(-kPi, kPi), rng.uniform(-2.0, 2.0), rng.uniform(-2.0, 2.0)};
}

CriterionResult c4_symmetry(const AcceptanceOptions& opt) {
  Rng rng(opt.seed, 4);
  double worst = 0.0;
  for (int n = 0; n < 100; ++n) {
    const Covector l = random_covector(rng);
    const double t = rng.uniform(0.1, 6.0);
    const Point q = exp_map(l, t, kFine);
    for (const int i : {1, 2, 4}) {
      const Geodesic r = reflect_preimage(i, l, t);
      worst = std::max(worst, max_abs_diff(exp_map(r.lambda, r.t, kFine), reflect(i, q)));
    }
  }
  return result(4, "reflection commutation", worst <= 1e-6, fmt("max |Exp(eps(l,t)) - eps(Exp(l,t))| = %.1e", worst));
}

CriterionResult c5_dilation(const AcceptanceOptions& opt) {
  Rng rng(opt.seed, 5);
  double worst = 0.0;
  for (int n = 0; n < 100; ++n) {
    const Covector l = random_covector(rng);
    const double t = rng.uniform(0.1, 5.0), rho = rng.uniform(0.3, 3.0);
    const Point a = exp_map({l.theta, l.c / rho, l.alpha / (rho * rho)}, rho * t, kFine);
    const Point b = dilate(rho, exp_map(l, t, kFine));
    worst = std::max(worst, max_abs_diff(a, b) / std::max(1.0, euclidean_norm(b)));
  }
  // One covector per branch of the cut time: C1 (both regimes), C2, C6, and an infinite one.
  const Covector branch[] = {{0.3, 0.2, 1.0}, {2.9, 0.1, 1.0}, {0.4, 2.5, 1.0}, {1.0, 1.3, 0.0}, {0.0, 0.0, 1.0}};
  double worst_cut = 0.0;
  bool finite_ok = true;
  for (const Covector& l : branch) {
    for (const double rho : {0.25, 3.0, 17.0}) {
      const double a = rho * t_cut(l);
      const double b = t_cut({l.theta, l.c / rho, l.alpha / (rho * rho)});
      if (std::isinf(a) || std::isinf(b)) {
        finite_ok = finite_ok && std::isinf(a) && std::isinf(b);
        continue;
      }
      worst_cut = std::max(worst_cut, std::abs(a - b) / a);
    }
  }
  return result(5, "dilation equivariance", worst <= 1e-6 && worst_cut <= 1e-12 && finite_ok,
          fmt("Exp mismatch %.1e, t_cut homogeneity %.1e", worst, worst_cut));
}

CriterionResult c6_curves() {
  std::vector<std::string> bad;
  // w21_conj: decreasing from +inf at 0+ to 0 at +inf.
  double prev = INFINITY;
  bool mono = true;
  for (int i = 0; i <= 200; ++i) {
    const double w = w21_conj(std::pow(10.0, -3.0 + 6.0 * i / 200.0));
    mono = mono && w < prev && w > 0.0;
    prev = w;
  }
  const double w_lo = w21_conj(1e-6), w_hi = w21_conj(1e6);
  if (!mono) bad.push_back("w21 not decreasing");
  if (!(w_lo > 1e3 && w_hi < 1e-3)) bad.push_back("w21 limits");

  const double w0 = std::abs(w22_conj(0.0) - kInvSqrtPi);
  if (w0 > 1e-12) bad.push_back("w22(0)");
  // Least-squares slope of (W -/+ 1/sqrt(pi)) against k^2 on small k.
  double sp = 0.0, sm = 0.0, s2 = 0.0;
  for (int i = 1; i <= 8; ++i) {
    const double k = 0.005 * i, k2 = k * k;
    sp += (yw2_2(k, 0.0).W - kInvSqrtPi) * k2;
    sm += (-yw2_2(k, 0.5 * kPi).W - kInvSqrtPi) * k2;
    s2 += k2 * k2;
  }
  const double slope = 3.0 / (16.0 * std::sqrt(kPi));
  const double ep = std::abs(sp / s2 - slope) / slope, em = std::abs(sm / s2 + slope) / slope;
  if (ep > 1e-2 || em > 1e-2) bad.push_back("w22 Taylor slopes");

  for (const double Y : {0.0, 1.0, 10.0}) {
    if (!(w1_conj(Y) < Y / 6.0)) bad.push_back(fmt("w1_conj(%g)", Y));
  }
  for (const double Y : {0.5, 1.0, 5.0}) {
    if (!(-w22_conj(-Y) < w21_conj(Y))) bad.push_back(fmt("lens order at %g", Y));
  }
  std::string detail = fmt("w21(1e-6)=%.3g w21(1e6)=%.3g |w22(0)-1/sqrt(pi)|=%.1e slope err %.1e/%.1e", w_lo,
                           w_hi, w0, ep, em);
  for (const auto& b : bad) detail += "; FAIL " + b;
  return result(6, "boundary curve properties", bad.empty(), detail);
}

CriterionResult c7_p3() {
  const double p = p3();
  const double res = std::abs(p - 2.0 * std::tanh(p));
  const double W = yw2_3(p).W;
  const bool pass = res <= 1e-12 && W > 1.0 / std::sqrt(3.0) && 1.0 / std::sqrt(3.0) > kInvSqrtPi;
  return result(7, "p3 and the Fix3 crossing", pass, fmt("p3=%.12f residual=%.1e W(p3)=%.9f", p, res, W));
}

// ------------------------------------------------------------ criterion 8

struct Sample {
  Point q;
  StratumKind kind;
  int sign;
};

double interior_u2(Rng& rng, double margin) {
  const double b = rng.uniform(margin, 0.5 * kPi - margin);
  switch (rng.pick(4)) {
    case 0: return b;
    case 1: return kPi - b;
    case 2: return kPi + b;
    default: return 2.0 * kPi - b;
  }
}

Sample gen_i0x(Rng& rng, int sign) {
  const double k = rng.uniform(0.05, k0() - 0.01);
  return {endpoint_max20(k, sign * rng.uniform(0.5, 2.0)), StratumKind::I0x, sign};
}

Sample gen_i0z(Rng& rng, int sign) {
  const double k = rng.uniform(k0() + 0.01, 0.99);
  return {endpoint_max10(k, u1z(k), sign * rng.uniform(0.5, 2.0)), StratumKind::I0z, sign};
}

Sample gen_iz(Rng& rng, int sign) {
  const double k = rng.uniform(k0() + 0.005, 0.999);
  // sigma < 0 lands on the + stratum for u2 in either half turn.
  Point q = endpoint(ChartN1{k, u1z(k), interior_u2(rng, 0.1), -sign * rng.uniform(0.5, 2.0)});
  q.z = 0.0;
  return {q, StratumKind::Iz, sign};
}

Sample gen_ix(Rng& rng, int sign) {
  const double k = rng.uniform(0.05, k0() - 0.005);
  const double b = rng.uniform(0.1, 0.5 * kPi - 0.1);
  Point q = endpoint(ChartN1{k, kPi, rng.coin() ? b : 2.0 * kPi - b, sign * rng.uniform(0.5, 2.0)});
  q.x = 0.0;
  return {q, StratumKind::Ix, sign};
}

Sample gen_lens(Rng& rng, int sign) {
  const double k = rng.uniform(0.05, 0.999);
  const double u2 = rng.coin() ? rng.uniform(0.1, 0.5 * kPi - 0.1) : rng.uniform(0.5 * kPi + 0.1, kPi - 0.1);
  Point q = endpoint(ChartN2{k, 0.5 * kPi, u2, sign * rng.uniform(0.5, 2.0), 1});
  q.x = 0.0;
  return {q, StratumKind::Nx, sign};
}

CriterionResult c8_two_minimizers(const AcceptanceOptions& opt) {
  Rng rng(opt.seed, 8);
  struct Family {
    const char* name;
    Sample (*gen)(Rng&, int);
  };
  const Family fams[] = {{"I0x", gen_i0x}, {"I0z", gen_i0z}, {"Iz", gen_iz}, {"Ix", gen_ix}, {"Nx", gen_lens}};
  int total = 0, ok = 0;
  double worst_res = 0.0, worst_dt = 0.0;
  std::string first_bad;
  for (const Family& f : fams) {
    for (int n = 0; n < 20; ++n) {
      const int sign = n % 2 == 0 ? 1 : -1;
      const Sample s = f.gen(rng, sign);
      ++total;
      try {
        const SynthesisResult r = minimizers(s.q, opt.synthesis);
        bool good = r.stratum.kind == s.kind && r.minimizers.size() == 2;
        if (good) {
          const double t0 = r.minimizers[0].time, t1 = r.minimizers[1].time;
          const double dt = std::abs(t0 - t1) / std::max(1.0, t0);
          const double res = std::max(r.minimizers[0].residual, r.minimizers[1].residual);
          worst_dt = std::max(worst_dt, dt);
          worst_res = std::max(worst_res, res);
          good = dt <= 1e-9 && res <= 1e-6;
        }
        if (good) {
          ++ok;
        } else if (first_bad.empty()) {
          first_bad = fmt("%s #%d -> %s with %zu minimizers", f.name, n, r.stratum.label().c_str(), r.minimizers.size());
        }
      } catch (const std::exception& e) {
        if (first_bad.empty()) first_bad = fmt("%s #%d threw: %s", f.name, n, e.what());
      }
    }
  }
  std::string detail = fmt("%d/%d points, max residual %.1e, max time gap %.1e", ok, total, worst_res, worst_dt);
  if (!first_bad.empty()) detail += "; first failure " + first_bad;
  return result(8, "two-minimizer round trips", ok == total, detail);
}

CriterionResult c9_family(const AcceptanceOptions& opt) {
  SynthesisOptions so = opt.synthesis;
  so.family_samples = 32;
  const SynthesisResult r = minimizers({0.0, 0.0, 0.0, 1.0}, so);
  double worst = 0.0, spread = 0.0;
  for (const Minimizer& m : r.minimizers) {
    worst = std::max(worst, m.residual);
    spread = std::max(spread, std::abs(m.time - r.minimizers.front().time));
  }
  const bool pass = r.stratum.kind == StratumKind::E && r.minimizers.size() == 32 && worst <= 1e-6 && spread <= 1e-9;
  return result(9, "figure-eight family", pass,
          fmt("%s, %zu samples, max residual %.1e, time spread %.1e", r.stratum.label().c_str(), r.minimizers.size(),
              worst, spread));
}

// A chart point in the interior of N1, N2 or N6 with t <= 0.9 t_cut.
ChartPoint random_generic_chart(Rng& rng) {
  const double s = rng.uniform(0.5, 2.0) * (rng.coin() ? 1.0 : -1.0);
  switch (rng.pick(3)) {
    case 0: {
      const double k = rng.uniform(0.05, 0.98);
      const double pmax = std::min(p_z1(k), 2.0 * complete_K(k));
      const double u1 = elliptic::am(rng.uniform(0.1, 0.9) * pmax, k);
      return ChartN1{k, u1, rng.uniform(0.0, 2.0 * kPi), s};
    }
    case 1: {
      const double k = rng.uniform(0.05, 0.98);
      const double u1 = elliptic::am(rng.uniform(0.1, 0.9) * complete_K(k), k);
      return ChartN2{k, u1, rng.uniform(0.0, 2.0 * kPi), std::abs(s), rng.coin() ? 1 : -1};
    }
    default: {
      const double c = s;
      return ChartN6{rng.uniform(-kPi, kPi), c, rng.uniform(0.1, 0.9) * 2.0 * kPi / std::abs(c)};
    }
  }
}

CriterionResult c10_generic(const AcceptanceOptions& opt) {
  Rng rng(opt.seed, 10);
  int ok = 0;
  double worst = 0.0;
  std::string first_bad;
  for (int n = 0; n < 100; ++n) {
    ChartPoint nu;
    Point q;
    do {
      nu = random_generic_chart(rng);
      q = endpoint(nu);
    } while (classify_point(q, opt.synthesis.strata).kind != StratumKind::Generic);
    try {
      const SynthesisResult r = minimizers(q, opt.synthesis);
      const double d = r.minimizers.size() == 1 ? chart_distance(r.minimizers[0].nu, nu) : INFINITY;
      worst = std::max(worst, d);
      if (d <= 1e-5) {
        ++ok;
      } else if (first_bad.empty()) {
        first_bad = fmt("#%d %s: %zu solutions, distance %.1e", n, chart_name(nu).c_str(), r.minimizers.size(), d);
      }
    } catch (const std::exception& e) {
      if (first_bad.empty()) first_bad = fmt("#%d threw: %s", n, e.what());
    }
  }
  std::string detail = fmt("%d/100 recovered, max chart distance %.1e", ok, worst);
  if (!first_bad.empty()) detail += "; first failure " + first_bad;
  return result(10, "generic shooting", ok == 100, detail);
}

CriterionResult c11_past_cut(const AcceptanceOptions& opt) {
  Rng rng(opt.seed, 11);
  int ok = 0;
  double worst_ratio = 0.0;
  std::string first_bad;
  for (int n = 0; n < 20; ++n) {
    ChartPoint nu;
    const double s = rng.uniform(0.5, 2.0) * (rng.coin() ? 1.0 : -1.0);
    switch (n % 3) {
      case 0: {
        const double k = rng.uniform(0.1, 0.97);
        nu = ChartN1{k, 0.0, rng.uniform(0.0, 2.0 * kPi), s};
        break;
      }
      case 1:
        nu = ChartN2{rng.uniform(0.1, 0.97), 0.0, rng.uniform(0.0, 2.0 * kPi), std::abs(s), rng.coin() ? 1 : -1};
        break;
      default:
        nu = ChartN6{rng.uniform(-kPi, kPi), s, 1.0};
        break;
    }
    Geodesic g = from_chart(nu);
    g.t = 1.05 * t_cut(g.lambda);
    const Point q = exp_map(g.lambda, g.t, kFine);
    try {
      const double d = distance(q, opt.synthesis);
      worst_ratio = std::max(worst_ratio, d / g.t);
      if (d < g.t * (1.0 - 1e-9)) {
        ++ok;
      } else if (first_bad.empty()) {
        first_bad = fmt("#%d: distance %.9g vs t %.9g", n, d, g.t);
      }
    } catch (const std::exception& e) {
      if (first_bad.empty()) first_bad = fmt("#%d threw: %s", n, e.what());
    }
  }
  std::string detail = fmt("%d/20 beaten, max distance/t %.4f", ok, worst_ratio);
  if (!first_bad.empty()) detail += "; first failure " + first_bad;
  return result(11, "past-cut competitor", ok == 20, detail);
}

// ----------------------------------------------------------- criterion 12

double dk(const std::function<double(double)>& f, double k) {
  const double h = 1e-6 * std::min(k, 1.0 - k);
  return (f(k + h) - f(k - h)) / (2.0 * h);
}

double du(const std::function<double(double)>& f, double u) {
  const double h = 1e-6;
  return (f(u + h) - f(u - h)) / (2.0 * h);
}

CriterionResult c12_signs() {
  int checks = 0;
  std::vector<std::string> failed;
  auto expect = [&](const char* name, double v, int sign) {
    ++checks;
    if (!(v * sign > 0.0) && (failed.empty() || failed.back() != name)) failed.emplace_back(name);
  };
  const double K0 = k0();
  for (int i = 1; i < 40; ++i) {
    const double k = K0 + (1.0 - K0) * i / 40.0;
    expect("dY/dk on CIz", dk([](double kk) { return yw1(kk, u1z(kk), 0.5 * kPi).Y; }, k), 1);
    expect("dW/dk on CIz", dk([](double kk) { return yw1(kk, u1z(kk), 0.5 * kPi).W; }, k), 1);
    for (int j = 1; j < 20; ++j) {
      const double u2 = 0.5 * kPi * (1.0 + j / 20.0);
      const double yk = dk([u2](double kk) { return yw1(kk, u1z(kk), u2).Y; }, k);
      const double wk = dk([u2](double kk) { return yw1(kk, u1z(kk), u2).W; }, k);
      const double u1 = u1z(k);
      const double yu = du([&](double uu) { return yw1(k, u1, uu).Y; }, u2);
      const double wu = du([&](double uu) { return yw1(k, u1, uu).W; }, u2);
      expect("dY/du2 on N1", yu, 1);
      expect("dY/dk on N1", yk, 1);
      expect("slope order on N1", wk / yk - wu / yu, 1);
    }
  }
  for (int i = 1; i < 40; ++i) {
    const double k = K0 * i / 40.0;
    expect("dY/dk on C2_1 u2=0", dk([](double kk) { return yw2_1(kk, 0.0).Y; }, k), -1);
    expect("dW/dk on C2_1 u2=0", dk([](double kk) { return yw2_1(kk, 0.0).W; }, k), 1);
    expect("iota1", iota1(k), 1);
    expect("iota3", iota3(k), 1);
    for (int j = 1; j < 20; ++j) {
      const double u2 = 0.5 * kPi * j / 20.0;
      expect("dY/du2 on C2_1", du([k](double uu) { return yw2_1(k, uu).Y; }, u2), 1);
      expect("dW/du2 on C2_1", du([k](double uu) { return yw2_1(k, uu).W; }, u2), 1);
    }
  }
  for (int i = 1; i < 40; ++i) {
    const double k = i / 40.0;
    expect("iota2", iota2(k), 1);
    expect("iota4", iota4(k), 1);
    expect("iota5", iota5(k), 1);
    expect("iota6", iota6(k), 1);
    expect("dY/dk on C2_2 u2=0", dk([](double kk) { return yw2_2(kk, 0.0).Y; }, k), -1);
    expect("dW/dk on C2_2 u2=0", dk([](double kk) { return yw2_2(kk, 0.0).W; }, k), 1);
    expect("dY/dk on C2_2 u2=pi/2", dk([](double kk) { return yw2_2(kk, 0.5 * kPi).Y; }, k), -1);
    expect("dW/dk on C2_2 u2=pi/2", dk([](double kk) { return yw2_2(kk, 0.5 * kPi).W; }, k), 1);
    for (int j = 1; j < 20; ++j) {
      const double u2 = 0.5 * kPi * (1.0 + j / 20.0);
      const double yk = dk([u2](double kk) { return yw2_2(kk, u2).Y; }, k);
      const double wk = dk([u2](double kk) { return yw2_2(kk, u2).W; }, k);
      const double yu = du([k](double uu) { return yw2_2(k, uu).Y; }, u2);
      const double wu = du([k](double uu) { return yw2_2(k, uu).W; }, u2);
      expect("dY/du2 on C2_2", -yu, 1);
      expect("dY/dk on C2_2", -yk, 1);
      expect("slope order on C2_2", wk / yk - wu / yu, 1);
    }
  }
  std::string detail = fmt("%d sign checks", checks);
  for (const auto& f : failed) detail += "; FAIL " + f;
  return result(12, "boundary derivative signs", failed.empty(), detail);
}

}  // namespace

CriterionResult run_criterion(int id, const AcceptanceOptions& opt) {
  static const char* const titles[] = {"",
                                       "k0 bisection",
                                       "first root of f_z",
                                       "closed-form endpoints vs ODE",
                                       "reflection commutation",
                                       "dilation equivariance",
                                       "boundary curve properties",
                                       "p3 and the Fix3 crossing",
                                       "two-minimizer round trips",
                                       "figure-eight family",
                                       "generic shooting",
                                       "past-cut competitor",
                                       "boundary derivative signs"};
  if (id < 1 || id > kCriterionCount) throw std::out_of_range("run_criterion: id must be in 1..12");
  const auto t0 = std::chrono::steady_clock::now();
  CriterionResult r;
  try {
    switch (id) {
      case 1: r = c1_k0(); break;
      case 2: r = c2_pz1(); break;
      case 3: r = c3_endpoints(); break;
      case 4: r = c4_symmetry(opt); break;
      case 5: r = c5_dilation(opt); break;
      case 6: r = c6_curves(); break;
      case 7: r = c7_p3(); break;
      case 8: r = c8_two_minimizers(opt); break;
      case 9: r = c9_family(opt); break;
      case 10: r = c10_generic(opt); break;
      case 11: r = c11_past_cut(opt); break;
      default: r = c12_signs(); break;
    }
  } catch (const std::exception& e) {
    r = result(id, titles[id], false, std::string("exception: ") + e.what());
  }
  r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  // Wall-clock budgets from the criteria.
  const double budget = id == 3 ? 5.0 : id == 8 ? 60.0 : id == 10 ? 120.0 : INFINITY;
  if (r.seconds >= budget) {
    r.pass = false;
    r.detail += fmt("; over the %.0f s budget", budget);
  }
  return r;
}

std::vector<CriterionResult> run_acceptance(const AcceptanceOptions& opt,
                                            const std::function<void(const CriterionResult&)>& on_done) {
  std::vector<CriterionResult> out;
  for (int id = 1; id <= kCriterionCount; ++id) {
    out.push_back(run_criterion(id, opt));
    if (on_done) on_done(out.back());
  }
  return out;
}

std::string format_result(const CriterionResult& r, bool with_timing) {
  std::string line = fmt("[%s] %2d  %s: %s", r.pass ? "PASS" : "FAIL", r.id, r.title.c_str(), r.detail.c_str());
  if (with_timing) {
    line += fmt(" (%.2f s", r.seconds);
    if (!r.timing.empty()) line += ", " + r.timing;
    line += ")";
  }
  return line;
}

}  // namespace engel
