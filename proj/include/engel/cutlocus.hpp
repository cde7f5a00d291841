#pragma once

#include <optional>
#include <string>
#include <vector>

#include "engel/expmap.hpp"
#include "engel/group.hpp"

namespace engel {

// ------------------------------------------------------------ constants

/// Root of 2E(k) - K(k) on (0.5, 0.99), computed once.
double k0();
/// The bisection behind k0(), rerun on every call.
double k0_bisection();
/// (1 - 2 k0^2) / (2 k0 sqrt(1 - k0^2)) < 0.
double y0_1();

/// dn p sn p + (p - 2 eps(p)) cn p.
double f_z(double p, double k);
/// First positive root of f_z(., k), bracketed in (K, 3K). k in (0, 1).
double p_z1(double k);
double u1z(double k);

/// (y/x, w/x^3) at the endpoint of (k, u1z(k), u2, sigma < 0), k in (k0, 1).
/// Equal to yw1(k, u1z(k), u2) but accurate up to the modulus cap.
YW yw1_cut(double k, double u2);
/// Same, with p = p_z1(k) supplied by the caller.
YW yw1_cut(double k, double u2, double p);

/// Root of p = 2 tanh p, p > 0.
double p3();
/// ln(3 + sqrt(10)).
double p0();

/// Cut time; +infinity on C3, C4, C5, C7.
double t_cut(const Covector& lambda, double eps_class = kDefaultEpsClass);

// ------------------------------------------------------- boundary curves
//
// Each curve is evaluated by inverting its k-parametrization with a bracketed
// root finder. Past the abscissa reachable at the modulus cap the curves are
// continued by their k -> 1 asymptotics.

/// W on CI_{z+}^+, the graph over Y > y0_1().
double w1_conj(double Y);
/// W on CI_{x+}^+, the graph over Y > 0.
double w21_conj(double Y);
/// Upper lens boundary: the u2 = 0 branch for Y < 0, reflected u2 = pi/2 branch for Y > 0.
double w22_conj(double Y);
/// The two branches over Y < 0.
double w22_plus(double Y);
double w22_minus(double Y);

/// Modulus on the curve at the given abscissa; nullopt when it lies beyond the cap.
std::optional<double> k_on_w1(double Y);
std::optional<double> k_on_w21(double Y);
std::optional<double> k_on_w22_plus(double Y);
std::optional<double> k_on_w22_minus(double Y);

double G1(double x, double y);
double G2(double z, double y);
double G3(double z, double y);

enum class CurveId { W1, W21, W22, Fix3 };

struct CurveSample {
  double param = 0.0;  // k, or p for Fix3
  double Y = 0.0;
  double W = 0.0;
};

std::optional<CurveId> curve_from_string(const std::string& name);
std::vector<CurveSample> sample_curve(CurveId which, int n);

// -------------------------------------------------------------- strata

enum class StratumKind { Origin, Generic, A, E, I0x, I0z, Iz, CIz, Ix, CIx, Nx, CNx };
enum class Multiplicity { None, One, Two, Family };
enum class LensPiece { None, NPlus, C, NMinus };

struct Stratum {
  StratumKind kind = StratumKind::Generic;
  int sign = 0;  // subscript +-1
  int sup = 0;   // superscript: sgn x on M_z, sgn z on M_x
  LensPiece piece = LensPiece::None;
  Multiplicity multiplicity = Multiplicity::One;

  std::string label() const;
  bool is_conjugate() const;
  bool is_maxwell() const;
  bool is_cut() const;
  /// Label of the image stratum under eps^i, i in 1..7.
  Stratum mirror(int i) const;

  friend bool operator==(const Stratum&, const Stratum&) = default;
};

std::string to_string(Multiplicity m);

struct StrataTolerance {
  double eps_strat = 1e-9;   // curve membership on (Y, W)
  double eps_zero = 1e-12;   // |x|/N, |z|/N^2 etc. treated as zero
};

Stratum classify_point(const Point& q, StrataTolerance tol = {});

}  // namespace engel
