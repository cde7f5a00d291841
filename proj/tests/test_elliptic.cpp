#include <array>
#include <cmath>
#include <numbers>
#include <stdexcept>

#include <gtest/gtest.h>

#include "engel/elliptic.hpp"
#include "oracles.hpp"

using namespace engel::elliptic;
using std::numbers::pi;

TEST(Complete, TrivialValues) {
  EXPECT_NEAR(complete_K(0.0), pi / 2, 1e-15);
  EXPECT_NEAR(complete_E(0.0), pi / 2, 1e-15);
  EXPECT_NEAR(complete_E(1.0), 1.0, 1e-15);
}

TEST(Complete, FrozenValues) {
  // mpmath, 30 digits
  EXPECT_NEAR(complete_K(0.5), 1.6857503548125960429, 1e-14);
  EXPECT_NEAR(complete_E(0.5), 1.4674622093394271555, 1e-14);
  EXPECT_NEAR(complete_K(0.9), 2.2805491384227703005, 1e-14);
  EXPECT_NEAR(complete_E(0.9), 1.1716970527816141138, 1e-14);
}

TEST(Complete, MatchesQuadrature) {
  for (double k : {0.05, 0.3, 0.5, 0.7, 0.9, 0.99}) {
    EXPECT_NEAR(complete_K(k), oracle::F(pi / 2, k), 1e-12 * complete_K(k)) << k;
    EXPECT_NEAR(complete_E(k), oracle::E(pi / 2, k), 1e-12) << k;
  }
}

TEST(Complete, CapEnforced) {
  EXPECT_THROW(complete_K(1.0), std::domain_error);
  EXPECT_THROW(complete_K(-0.1), std::domain_error);
  EXPECT_NO_THROW(complete_K(kModulusCap));
  EXPECT_GT(complete_K(kModulusCap), complete_K(1.0 - 1e-9));
}

TEST(Incomplete, Trivial) {
  for (double k : {0.0, 0.4, 0.95}) {
    EXPECT_EQ(incomplete_F(0.0, k), 0.0);
    EXPECT_EQ(incomplete_E(0.0, k), 0.0);
    EXPECT_NEAR(incomplete_F(pi / 2, k), complete_K(k), 1e-13);
    EXPECT_NEAR(incomplete_E(pi / 2, k), complete_E(k), 1e-13);
  }
  EXPECT_NEAR(incomplete_F(pi, 0.5), 2 * complete_K(0.5), 1e-13);
}

TEST(Incomplete, FrozenValues) {
  EXPECT_NEAR(incomplete_F(1.0, 0.9), 1.1596610707321989781, 1e-14);
  EXPECT_NEAR(incomplete_E(1.0, 0.9), 0.87626221999154854111, 1e-14);
  EXPECT_NEAR(incomplete_F(2.5, 0.3), 2.5708012986351304465, 1e-14);
  EXPECT_NEAR(incomplete_E(2.5, 0.3), 2.4317405177568788227, 1e-14);
  EXPECT_NEAR(incomplete_F(-4.0, 0.99), -7.6980396696466693371, 1e-12);
  EXPECT_NEAR(incomplete_E(-4.0, 0.99), -2.8160535541591894310, 1e-13);
}

TEST(Incomplete, MatchesQuadratureAndIsOdd) {
  for (double k : {0.1, 0.6, 0.93}) {
    for (double phi : {0.3, 1.4, 2.2, 5.0, 9.7}) {
      EXPECT_NEAR(incomplete_F(phi, k), oracle::F(phi, k), 1e-11) << phi << ' ' << k;
      EXPECT_NEAR(incomplete_E(phi, k), oracle::E(phi, k), 1e-11) << phi << ' ' << k;
      EXPECT_DOUBLE_EQ(incomplete_F(-phi, k), -incomplete_F(phi, k));
    }
  }
}

TEST(Amplitude, InvertsF) {
  for (double k : {0.0, 0.25, 0.8, 0.999}) {
    EXPECT_EQ(am(0.0, k), 0.0);
    EXPECT_NEAR(am(complete_K(k), k), pi / 2, 1e-13);
    EXPECT_NEAR(am(2 * complete_K(k), k), pi, 1e-13);
    for (double phi : {-3.0, 0.2, 1.1, 4.4, 12.0}) EXPECT_NEAR(am(incomplete_F(phi, k), k), phi, 1e-12);
  }
}

TEST(Jacobi, Trivial) {
  const Jacobi j0 = jacobi(0.0, 0.6);
  EXPECT_EQ(j0.sn, 0.0);
  EXPECT_EQ(j0.cn, 1.0);
  EXPECT_EQ(j0.dn, 1.0);
  for (double k : {0.3, 0.6, 0.9}) {
    const Jacobi j = jacobi(complete_K(k), k);
    EXPECT_NEAR(j.sn, 1.0, 1e-15);
    EXPECT_NEAR(j.cn, 0.0, 1e-15);
    EXPECT_NEAR(j.dn, std::sqrt(1 - k * k), 1e-15);
  }
}

TEST(Jacobi, FrozenValues) {
  struct Row {
    double p, k, sn, cn, dn;
  };
  const Row rows[] = {
      {1.2, 0.7, 0.88870176780863977327, 0.45848573357717306361, 0.78294475684301081071},
      {3.7, 0.95, 0.91613378198440001331, -0.40087266495354834260, 0.49247411240595308416},
      {-0.4, 0.2, -0.38903781430567532074, 0.92122178602129405283, 0.99696839627021804346},
  };
  for (const Row& r : rows) {
    const Jacobi j = jacobi(r.p, r.k);
    EXPECT_NEAR(j.sn, r.sn, 1e-13);
    EXPECT_NEAR(j.cn, r.cn, 1e-13);
    EXPECT_NEAR(j.dn, r.dn, 1e-13);
  }
}

TEST(Jacobi, Identities) {
  for (double k : {0.1, 0.5, 0.9, 0.9999}) {
    for (double p = -7.0; p < 7.0; p += 0.37) {
      const Jacobi j = jacobi(p, k);
      EXPECT_NEAR(j.sn * j.sn + j.cn * j.cn, 1.0, 1e-14);
      EXPECT_NEAR(k * k * j.sn * j.sn + j.dn * j.dn, 1.0, 1e-14);
      EXPECT_NEAR(j.sn, std::sin(am(p, k)), 1e-13);
    }
  }
}

// Pendulum-phase oracle: (sn, cn, dn) solves sn' = cn dn, cn' = -sn dn,
// dn' = -k^2 sn cn from (0, 1, 1).
TEST(Jacobi, MatchesPhaseOde) {
  const double k = 0.7, p = 1.2;
  const int n = 20000;
  const double h = p / n;
  std::array<double, 3> s{0.0, 1.0, 1.0};
  auto f = [k](const std::array<double, 3>& v) {
    return std::array<double, 3>{v[1] * v[2], -v[0] * v[2], -k * k * v[0] * v[1]};
  };
  auto add = [](std::array<double, 3> a, double h, const std::array<double, 3>& b) {
    for (int i = 0; i < 3; ++i) a[i] += h * b[i];
    return a;
  };
  for (int i = 0; i < n; ++i) {
    const auto k1 = f(s), k2 = f(add(s, h / 2, k1)), k3 = f(add(s, h / 2, k2)), k4 = f(add(s, h, k3));
    for (int j = 0; j < 3; ++j) s[j] += h / 6 * (k1[j] + 2 * k2[j] + 2 * k3[j] + k4[j]);
  }
  const Jacobi j = jacobi(p, k);
  EXPECT_NEAR(j.sn, s[0], 1e-12);
  EXPECT_NEAR(j.cn, s[1], 1e-12);
  EXPECT_NEAR(j.dn, s[2], 1e-12);
}

TEST(JacobiEps, Values) {
  EXPECT_EQ(jacobi_eps(0.0, 0.5), 0.0);
  EXPECT_NEAR(jacobi_eps(1.3, 0.0), 1.3, 1e-15);
  for (double k : {0.2, 0.8}) EXPECT_NEAR(jacobi_eps(complete_K(k), k), complete_E(k), 1e-12);
  EXPECT_NEAR(jacobi_eps(1.2, 0.7), 1.0040528918668708991, 1e-13);
  EXPECT_NEAR(jacobi_eps(5.0, 0.9), 2.7609554899525215049, 1e-13);
  const double k = 0.85, p = 2.7;
  const double q = oracle::integrate(
      [k](double t) {
        const double dn = jacobi(t, k).dn;
        return dn * dn;
      },
      0.0, p, 1e-13);
  EXPECT_NEAR(jacobi_eps(p, k), q, 1e-11);
}

TEST(Carlson, KnownIdentities) {
  EXPECT_NEAR(carlson_RF(1.0, 1.0, 1.0), 1.0, 1e-15);
  EXPECT_NEAR(carlson_RD(1.0, 1.0, 1.0), 1.0, 1e-15);
  EXPECT_NEAR(carlson_RF(0.0, 1.0, 1.0), pi / 2, 1e-14);
  // RF(x, y, y) = arccos(sqrt(x/y)) / sqrt(y - x) for x < y
  EXPECT_NEAR(carlson_RF(0.25, 1.0, 1.0), std::acos(0.5) / std::sqrt(0.75), 1e-14);
  // homogeneity of degree -1/2 and -3/2
  EXPECT_NEAR(carlson_RF(4.0, 8.0, 12.0), carlson_RF(1.0, 2.0, 3.0) / 2.0, 1e-15);
  EXPECT_NEAR(carlson_RD(4.0, 8.0, 12.0), carlson_RD(1.0, 2.0, 3.0) / 8.0, 1e-15);
}
