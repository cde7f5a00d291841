#include <algorithm>
#include <array>
#include <cmath>
#include <limits>
#include <numbers>
#include <vector>

#include <Eigen/Dense>

#include "engel/cutlocus.hpp"
#include "engel/elliptic.hpp"
#include "engel/synthesis.hpp"

namespace engel {
namespace {

using elliptic::complete_K;
using elliptic::jacobi;
using elliptic::am;

constexpr double kPi = std::numbers::pi;

// Seeds live on the unit sphere N(q) = 1 of the homogeneous norm.
struct Seed {
  Covector lambda;
  double t;
  std::array<double, 4> f;
};

std::array<double, 4> features(const Point& q) {
  return {q.x, q.y, std::copysign(std::sqrt(std::abs(q.z)), q.z), std::cbrt(q.w)};
}

// (lambda, t) -> (lambda scaled by 1/rho, rho t) maps the endpoint q to dilate(rho, q).
Geodesic dilate_geodesic(const Geodesic& g, double rho) {
  return {{g.lambda.theta, g.lambda.c / rho, g.lambda.alpha / (rho * rho)}, g.t * rho};
}

constexpr int kModuli = 24;
constexpr int kPhases = 32;
constexpr int kTimes = 20;
constexpr int kCircle = 48;

double seed_modulus(int i) { return std::sin(0.5 * kPi * (i + 0.5) / kModuli); }

// Initial covectors with |alpha| in {0, 1}, each with its cut time.
std::vector<Geodesic> seed_rays() {
  std::vector<Geodesic> rays;
  for (int i = 0; i < kModuli; ++i) {
    const double k = seed_modulus(i), K = complete_K(k);
    const double tc1 = std::min(2.0 * p_z1(k), 4.0 * K);
    for (int j = 0; j < kPhases; ++j) {
      const elliptic::Jacobi a = jacobi(4.0 * K * j / kPhases, k);
      for (const int s : {1, -1}) {
        const double theta = 2.0 * std::asin(k * a.sn) + (s < 0 ? kPi : 0.0);
        rays.push_back({{wrap_pi(theta), 2.0 * k * a.cn, double(s)}, tc1});
      }
      const double phi = am(2.0 * K * j / kPhases, k);
      const double dn = std::sqrt((1.0 - k) * (1.0 + k) + k * k * std::cos(phi) * std::cos(phi));
      for (const int s : {1, -1}) {
        for (const int sc : {1, -1}) {
          const double theta = sc * 2.0 * phi + (s < 0 ? kPi : 0.0);
          rays.push_back({{wrap_pi(theta), sc * 2.0 / k * dn, double(s)}, 2.0 * K * k});
        }
      }
    }
  }
  for (int j = 0; j < kCircle; ++j) {
    for (const int sc : {1, -1}) rays.push_back({{wrap_pi(2.0 * kPi * j / kCircle), double(sc), 0.0}, 2.0 * kPi});
  }
  return rays;
}

void fill_seeds(const Geodesic& ray, Seed* out) {
  std::vector<double> times(kTimes);
  for (int m = 0; m < kTimes; ++m) times[m] = ray.t * 0.995 * (m + 1) / kTimes;
  const auto samples = sample_times(ray.lambda, times);
  for (int m = 0; m < kTimes; ++m) {
    const double n = homogeneous_norm(samples[m].q);
    const Geodesic g = dilate_geodesic({ray.lambda, times[m]}, 1.0 / n);
    out[m] = {g.lambda, g.t, features(dilate(1.0 / n, samples[m].q))};
  }
}

const std::vector<Seed>& seed_table() {
  static const std::vector<Seed> table = [] {
    const std::vector<Geodesic> rays = seed_rays();
    std::vector<Seed> seeds(rays.size() * kTimes);
    const long n = static_cast<long>(rays.size());
#pragma omp parallel for schedule(dynamic, 8)
    for (long r = 0; r < n; ++r) fill_seeds(rays[r], seeds.data() + r * kTimes);
    return seeds;
  }();
  return table;
}

double norm_diff(const Point& a, const Point& b) { return euclidean_norm(a - b); }

struct NewtonResult {
  Geodesic g;
  double residual;
};

// Levenberg-Marquardt on Exp(theta, c, alpha, t) = target. free_alpha = false
// pins alpha at 0 (the circle class).
NewtonResult solve_from(Geodesic g, const Point& target, bool free_alpha, const OdeTolerance& ode) {
  double mu = 1e-6;
  Point q = exp_map(g.lambda, g.t, ode);
  double res = norm_diff(q, target);
  for (int it = 0; it < 60 && res > 1e-13; ++it) {
    const ExpWithJacobian ej = exp_map_jacobian(g.lambda, g.t, ode);
    Eigen::Matrix4d J = ej.jacobian;
    if (!free_alpha) J.col(2).setZero();
    const Eigen::Vector4d r(ej.q.x - target.x, ej.q.y - target.y, ej.q.z - target.z, ej.q.w - target.w);
    const Eigen::Matrix4d JtJ = J.transpose() * J;
    const Eigen::Vector4d g_vec = J.transpose() * r;
    bool improved = false;
    for (int tries = 0; tries < 12; ++tries) {
      Eigen::Matrix4d A = JtJ;
      for (int d = 0; d < 4; ++d) A(d, d) += mu * (JtJ(d, d) + 1e-12);
      if (!free_alpha) A(2, 2) = 1.0;
      const Eigen::Vector4d step = -A.ldlt().solve(g_vec);
      Geodesic trial = g;
      trial.lambda.theta = wrap_pi(g.lambda.theta + step(0));
      trial.lambda.c += step(1);
      if (free_alpha) trial.lambda.alpha += step(2);
      trial.t += step(3);
      if (!(trial.t > 0.0)) trial.t = 0.5 * g.t;
      if (!std::isfinite(trial.lambda.c) || !std::isfinite(trial.lambda.alpha)) {
        mu *= 10.0;
        continue;
      }
      Point tq;
      try {
        tq = exp_map(trial.lambda, trial.t, ode);
      } catch (const std::exception&) {
        mu *= 10.0;
        continue;
      }
      const double tres = norm_diff(tq, target);
      if (tres < res) {
        const double rel = step.norm() / (1.0 + std::abs(g.t) + std::abs(g.lambda.c) + std::abs(g.lambda.alpha));
        g = trial;
        res = tres;
        mu = std::max(mu / 5.0, 1e-12);
        improved = true;
        if (rel < 1e-15) it = 1000;
        break;
      }
      mu *= 8.0;
    }
    if (!improved) break;
  }
  return {g, res};
}

bool same_geodesic(const Geodesic& a, const Geodesic& b) {
  const double d = std::max({std::abs(wrap_pi(a.lambda.theta - b.lambda.theta)), std::abs(a.lambda.c - b.lambda.c),
                             std::abs(a.lambda.alpha - b.lambda.alpha), std::abs(a.t - b.t)});
  return d <= 1e-6 * (1.0 + a.t);
}

}  // namespace

std::size_t shooting_seed_count() { return seed_table().size(); }

ShootingReport shoot(const Point& q, const SynthesisOptions& opt) {
  const double n = homogeneous_norm(q);
  if (n == 0.0) throw std::invalid_argument("shoot: q must differ from the origin");
  const Point target = dilate(1.0 / n, q);
  const auto f = features(target);

  const std::vector<Seed>& seeds = seed_table();
  std::vector<std::pair<double, std::size_t>> order(seeds.size());
  for (std::size_t i = 0; i < seeds.size(); ++i) {
    double d = 0.0;
    for (int j = 0; j < 4; ++j) d += (seeds[i].f[j] - f[j]) * (seeds[i].f[j] - f[j]);
    order[i] = {d, i};
  }
  const std::size_t pool = std::min<std::size_t>(seeds.size(), std::max(4 * opt.shooting_starts, 32));
  std::partial_sort(order.begin(), order.begin() + pool, order.end());

  struct Found {
    Geodesic g;
    double res;
  };
  std::vector<Found> found;
  int attempts = 0;
  double best = std::numeric_limits<double>::infinity();
  // The normalized target has N = 1, so residuals here are already scale-free.
  const double accept = std::min(opt.tol, 1e-9);
  for (std::size_t s = 0; s < pool; ++s) {
    if (attempts >= opt.shooting_starts && !found.empty()) break;
    const Seed& seed = seeds[order[s].second];
    ++attempts;
    NewtonResult nr = solve_from({seed.lambda, seed.t}, target, true, opt.ode);
    best = std::min(best, nr.residual);
    if (!(nr.residual <= accept)) continue;
    const double c2 = nr.g.lambda.c * nr.g.lambda.c;
    if (std::abs(nr.g.lambda.alpha) <= 1e-8 * std::max(c2, 1e-300)) {
      // Snap onto the circle class when the solution sits on it.
      Geodesic pinned = nr.g;
      pinned.lambda.alpha = 0.0;
      const NewtonResult snapped = solve_from(pinned, target, false, opt.ode);
      if (snapped.residual <= accept) nr = snapped;
    }
    if (!is_optimal(nr.g)) continue;
    bool dup = false;
    for (Found& fd : found) {
      if (same_geodesic(fd.g, nr.g)) {
        if (nr.residual < fd.res) fd = {nr.g, nr.residual};
        dup = true;
        break;
      }
    }
    if (!dup) found.push_back({nr.g, nr.residual});
  }

  ShootingReport out;
  out.starts = attempts;
  out.best_residual = best;
  for (const Found& fd : found) {
    const Geodesic g = dilate_geodesic(fd.g, n);
    out.solutions.push_back({g, scaled_residual(exp_map(g.lambda, g.t, opt.ode), q)});
  }
  std::sort(out.solutions.begin(), out.solutions.end(), [](const ShootingSolution& a, const ShootingSolution& b) {
    if (a.geodesic.t != b.geodesic.t) return a.geodesic.t < b.geodesic.t;
    return a.residual < b.residual;
  });
  return out;
}

}  // namespace engel
