#pragma once

// Legendre elliptic integrals and Jacobi elliptic functions.
//
// Every function here takes the MODULUS k, not the parameter m = k^2.
// sn(p, k) means the Jacobi sine with k^2 sin^2 under the square root, so
// results agree with e.g. scipy.special.ellipj(p, m=k*k) or
// boost::math::jacobi_sn(k, p).
//
// K(k) diverges as k -> 1, so the first-kind quantities reject any modulus
// above kModulusCap with std::domain_error.

namespace engel::elliptic {

inline constexpr double kModulusCap = 1.0 - 1e-12;

/// Complete integral of the first kind, K(k) = F(pi/2, k). 0 <= k <= cap.
double complete_K(double k);

/// Complete integral of the second kind, E(k) = E(pi/2, k). 0 <= k <= 1.
double complete_E(double k);

/// F(phi, k) = int_0^phi dt / sqrt(1 - k^2 sin^2 t), any real phi.
/// Uses F(phi + n pi) = F(phi) + 2 n K(k).
double incomplete_F(double phi, double k);

/// E(phi, k) = int_0^phi sqrt(1 - k^2 sin^2 t) dt, any real phi.
double incomplete_E(double phi, double k);

/// Amplitude: the inverse of F in its first argument, am(F(phi, k), k) = phi.
double am(double p, double k);

struct Jacobi {
  double sn;
  double cn;
  double dn;
};

Jacobi jacobi(double p, double k);

/// Jacobi epsilon, int_0^p dn^2(t) dt = E(am(p, k), k).
double jacobi_eps(double p, double k);

// Carlson symmetric forms, exposed for the incomplete integrals and tests.
double carlson_RF(double x, double y, double z);
double carlson_RD(double x, double y, double z);

}  // namespace engel::elliptic
