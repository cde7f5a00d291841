#pragma once

// Optimal synthesis: every minimizer from the origin to a terminal point.
//
// Points on the cut strata are inverted through the restricted closed forms,
// after a reflection that moves them to a canonical stratum; the remaining
// points are solved by shooting on Exp.

#include <optional>
#include <stdexcept>
#include <vector>

#include "engel/cutlocus.hpp"
#include "engel/expmap.hpp"
#include "engel/group.hpp"

namespace engel {

struct Minimizer {
  ChartPoint nu;
  Geodesic geodesic;
  double time = 0.0;
  double residual = 0.0;
};

// Figure-eight family (k0, pi, u2, sigma), u2 free.
struct FamilyDescription {
  double k = 0.0;
  double u1 = 0.0;
  double sigma = 0.0;
};

struct SynthesisResult {
  Stratum stratum;
  std::vector<Minimizer> minimizers;
  std::optional<FamilyDescription> family;
};

struct SynthesisOptions {
  double tol = 1e-7;          // acceptance bound on scaled_residual
  int family_samples = 32;
  int shooting_starts = 6;    // nearest seeds tried before giving up on uniqueness checks
  StrataTolerance strata{};
  OdeTolerance ode{};
};

class ConvergenceError : public std::runtime_error {
 public:
  ConvergenceError(const std::string& what, double best_residual)
      : std::runtime_error(what), best_residual_(best_residual) {}
  double best_residual() const { return best_residual_; }

 private:
  double best_residual_;
};

/// Endpoint mismatch in units of the query scale: max_i |a_i - q_i| / s^w_i with
/// s = max(1, N(q)) and weights (1, 1, 2, 3). Plain max-abs error for |q| <= 1.
double scaled_residual(const Point& a, const Point& q);

/// Throws std::invalid_argument for the origin and ConvergenceError when no
/// minimizer reaches q within tol.
SynthesisResult minimizers(const Point& q, const SynthesisOptions& opt = {});

/// t <= t_cut(lambda), with relative slack 1e-10 for roundoff at the cut time.
bool is_optimal(const ChartPoint& nu);
bool is_optimal(const Geodesic& g);

/// Common time of the minimizers; 0 at the origin.
double distance(const Point& q, const SynthesisOptions& opt = {});

// ------------------------------------------------------------------ shooting

struct ShootingSolution {
  Geodesic geodesic;
  double residual = 0.0;
};

struct ShootingReport {
  std::vector<ShootingSolution> solutions;  // distinct optimal solutions, sorted by time
  double best_residual = 0.0;               // smallest scaled residual over all starts
  int starts = 0;
};

/// Solves Exp(lambda, t) = q by damped Newton from the nearest precomputed seeds.
ShootingReport shoot(const Point& q, const SynthesisOptions& opt = {});

/// Number of precomputed shooting seeds (built on first use).
std::size_t shooting_seed_count();

// --------------------------------------------------------------------- batch

/// Parallel over points (OpenMP); each entry equals minimizers(points[i], opt)
/// or holds std::nullopt when that query threw.
std::vector<std::optional<SynthesisResult>> minimizers_batch(const std::vector<Point>& points,
                                                             const SynthesisOptions& opt = {});
/// Serial reference for minimizers_batch.
std::vector<std::optional<SynthesisResult>> minimizers_batch_serial(const std::vector<Point>& points,
                                                                    const SynthesisOptions& opt = {});

/// Parallel and serial endpoint evaluation of many geodesics.
std::vector<Point> exp_map_batch(const std::vector<Geodesic>& gs, OdeTolerance tol = {});
std::vector<Point> exp_map_batch_serial(const std::vector<Geodesic>& gs, OdeTolerance tol = {});

}  // namespace engel
