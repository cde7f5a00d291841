#pragma once

// Exponential map of the Engel sub-Riemannian problem.
//
// Geodesics are arclength-parametrized. The covector (theta, c, alpha) drives
// the pendulum  theta' = c,  c' = -alpha sin(theta)  with controls
// u1 = -sin(theta), u2 = cos(theta). E = c^2/2 - alpha cos(theta) is conserved.

#include <array>
#include <string>
#include <variant>
#include <vector>

#include <Eigen/Core>

#include "engel/group.hpp"

namespace engel {

struct Covector {
  double theta = 0.0;
  double c = 0.0;
  double alpha = 0.0;
};

enum class CovectorTag { C1, C2, C3, C4, C5, C6, C7 };

struct CovectorClass {
  CovectorTag tag = CovectorTag::C7;
  double k = 0.0;  // C1, C2 modulus; 1 on C3; 0 otherwise
  double E = 0.0;
};

inline constexpr double kDefaultEpsClass = 1e-12;

std::string to_string(CovectorTag tag);
double energy(const Covector& lambda);

// Boundary tests E = +-|alpha|, alpha = 0, c = 0 are relative to the scale of
// the covector and use eps_class.
CovectorClass classify(const Covector& lambda, double eps_class = kDefaultEpsClass);

/// Angle reduced to (-pi, pi].
double wrap_pi(double a);
/// Angle reduced to [0, 2 pi).
double wrap_2pi(double a);

// ---------------------------------------------------------------- integration

struct OdeTolerance {
  double rtol = 1e-10;
  double atol = 1e-12;
};

/// (theta_t, c_t); throws std::runtime_error if the integrator fails, std::domain_error for t < 0.
Covector pendulum_flow(const Covector& lambda, double t, OdeTolerance tol = {});

Point exp_map(const Covector& lambda, double t, OdeTolerance tol = {});

struct ExpWithJacobian {
  Point q;
  Covector final_state;           // (theta_t, c_t, alpha)
  Eigen::Matrix4d jacobian;       // columns d/dtheta, d/dc, d/dalpha, d/dt
};

/// Endpoint and its derivative with respect to (theta, c, alpha, t), via the variational equations.
ExpWithJacobian exp_map_jacobian(const Covector& lambda, double t, OdeTolerance tol = {});

struct TrajectorySample {
  double t = 0.0;
  Point q;
  double theta = 0.0;
  double c = 0.0;
};

/// samples >= 2 points uniformly spaced on [0, t].
std::vector<TrajectorySample> trajectory(const Covector& lambda, double t, int samples, OdeTolerance tol = {});

/// Endpoints of one geodesic at the given increasing times.
std::vector<TrajectorySample> sample_times(const Covector& lambda, const std::vector<double>& times,
                                           OdeTolerance tol = {});

inline constexpr const char* kTrajectoryCsvHeader = "t,x,y,z,w,theta,c";
std::string to_csv_row(const TrajectorySample& s);

// ---------------------------------------------------------------------- charts
//
// sigma = sgn(alpha) sqrt|alpha|. Negative sigma is the eps^4 image of the
// positive-sigma geodesic (theta shifted by pi).
//   N1 (C1):  p = |sigma| t / 2,       tau = p + psi0, u1 = am p, u2 = am tau,
//             sin(theta/2) = k sn(psi), c = 2 k |sigma| cn(psi).
//   N2 (C2):  p = |sigma| t / (2k),    tau = p + psi0,
//             theta/2 = am(psi),       c = sign_c (2 |sigma| / k) dn(psi).
//   N3 (C3):  p = |sigma| t / 2,       tau = p + psi0,
//             sin(theta/2) = tanh(psi), c = sign_c 2 |sigma| sech(psi).
// psi runs from psi0 = tau - p at s = 0 to tau + p at s = t.
// N2 and N3 carry the sign of c explicitly since the chart coordinates alone
// cover only the c > 0 rotations and separatrix branch.

struct ChartN1 {
  double k, u1, u2, sigma;
};
struct ChartN2 {
  double k, u1, u2, sigma;
  int sign_c = 1;
};
struct ChartN3 {
  double p, tau, sigma;
  int sign_c = 1;
};
struct ChartN6 {
  double theta, c, t;
};
struct ChartN7 {
  double theta, t;
};

using ChartPoint = std::variant<ChartN1, ChartN2, ChartN3, ChartN6, ChartN7>;

struct Geodesic {
  Covector lambda;
  double t = 0.0;
};

std::string chart_name(const ChartPoint& nu);
/// Flat parameter list in field order (used by serialization and comparisons).
std::vector<double> chart_params(const ChartPoint& nu);

/// Throws std::domain_error on chart-range violations.
Geodesic from_chart(const ChartPoint& nu);

/// Inverse of from_chart; C4 and C5 are reported in the N7 chart.
ChartPoint to_chart(const Covector& lambda, double t, double eps_class = kDefaultEpsClass);

/// Max-abs distance between two chart points of the same kind, comparing
/// theta and the N1 u2 modulo 2 pi and the N2 u2 modulo pi; +infinity for
/// different kinds.
double chart_distance(const ChartPoint& a, const ChartPoint& b);

/// Preimage action of eps^i for i in {1, 2, 4}; composites 3, 5, 6, 7 apply the generators in turn.
Geodesic reflect_preimage(int i, const Covector& lambda, double t);

// ---------------------------------------------------- restricted closed forms

double iota1(double k);  // 2E - K
double iota2(double k);  // K - E
double iota3(double k);
double iota4(double k);  // (2 - k^2) K - 2E
double iota5(double k);
double iota6(double k);  // E - (1 - k^2) K

struct YW {
  double Y = 0.0;
  double W = 0.0;
};

/// (y/x, w/x^3) on the z = 0 cut set of N1 (u1 = u1z(k), negative sigma).
YW yw1(double k, double u1, double u2);
/// (y/sqrt z, w/z^(3/2)) on the u1 = pi cut set of N1, cos u2 > 0.
YW yw2_1(double k, double u2);
/// (y/sqrt z, w/z^(3/2)) on the u1 = pi/2 cut set of N2.
YW yw2_2(double k, double u2);
/// The circle chart N6 at t = 2 pi / c.
YW yw2_6(double theta);
/// Separatrix family parametrized by p > 0.
YW yw2_3(double p);

/// Endpoint of (k, pi, pi/2, sigma), k in (0, k0): (0, 4 iota1/sigma, 0, 8 (k^2 iota1 + iota2)/(3 sigma^3)).
Point endpoint_max20(double k, double sigma);
/// Endpoint of (k, u1, 0, sigma) with u1 = u1z(k), k in (k0, 1).
Point endpoint_max10(double k, double u1, double sigma);

}  // namespace engel
