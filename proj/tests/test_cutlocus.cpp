#include <cmath>
#include <limits>
#include <numbers>
#include <random>
#include <stdexcept>

#include <gtest/gtest.h>

#include "engel/cutlocus.hpp"
#include "engel/elliptic.hpp"
#include "oracles.hpp"

using namespace engel;
using elliptic::complete_E;
using elliptic::complete_K;
using std::numbers::pi;

TEST(Constants, K0) {
  const double k = k0();
  EXPECT_NEAR(2 * complete_E(k) - complete_K(k), 0.0, 1e-12);
  EXPECT_NEAR(k, 0.909, 5e-4);
  EXPECT_NEAR(k, 0.90890855754854147824, 1e-12);  // mpmath
  EXPECT_EQ(k0_bisection(), k);
  // 2E - K by quadrature changes sign across k0
  auto f = [](double kk) { return 2 * oracle::E(pi / 2, kk) - oracle::F(pi / 2, kk); };
  EXPECT_GT(f(k - 1e-9), 0.0);
  EXPECT_LT(f(k + 1e-9), 0.0);
  for (double kk = 0.1; kk < 0.9; kk += 0.1) EXPECT_GT(iota1(kk), 0.0);
}

TEST(Constants, P3AndP0) {
  EXPECT_NEAR(p3() - 2 * std::tanh(p3()), 0.0, 1e-12);
  EXPECT_NEAR(p3(), 1.9150080481545374814, 1e-12);
  EXPECT_NEAR(p0(), std::log(3 + std::sqrt(10.0)), 1e-15);
  EXPECT_LT(p0(), p3());
  EXPECT_GT(yw2_3(p3()).W, 1 / std::sqrt(3.0));
  EXPECT_GT(1 / std::sqrt(3.0), 1 / std::sqrt(pi));
}

TEST(Fz, Values) {
  for (double k : {0.3, 0.8, 0.95}) {
    EXPECT_EQ(f_z(0.0, k), 0.0);
    EXPECT_NEAR(f_z(complete_K(k), k), std::sqrt(1 - k * k), 1e-13);
  }
  const double K = complete_K(0.95);
  EXPECT_LT(f_z(K, 0.95) * f_z(3 * K, 0.95), 0.0);
}

TEST(Fz, FirstRoot) {
  EXPECT_NEAR(p_z1(k0()), 2 * complete_K(k0()), 1e-9);
  const double p = p_z1(0.95);
  EXPECT_GT(p, complete_K(0.95));
  EXPECT_LT(p, 3 * complete_K(0.95));
  EXPECT_NEAR(p, 3.6569367520191485561, 1e-11);  // mpmath
  EXPECT_NEAR(p_z1(0.8), 5.4199011564044485565, 1e-11);
  EXPECT_NEAR(f_z(p_z1(0.8), 0.8), 0.0, 1e-12);
}

TEST(Fz, U1z) {
  EXPECT_NEAR(u1z(k0()), pi, 1e-9);
  const double u = u1z(0.95);
  EXPECT_GT(u, pi / 2);
  EXPECT_LT(u, pi);
  EXPECT_NEAR(u, 1.9623612849519737027, 1e-11);
  EXPECT_NEAR(u1z(0.8), 4.3613391283615818775, 1e-11);
}

TEST(CutTime, Examples) {
  // C6 is 2 pi / |c|: see the decisions ledger
  EXPECT_NEAR(t_cut({0, 4, 0}), pi / 2, 1e-15);
  const Covector c1 = from_chart(ChartN1{0.5, 0.3, 0.2, 1}).lambda;
  EXPECT_NEAR(t_cut(c1), 4 * complete_K(0.5), 1e-10);
  EXPECT_NEAR(t_cut(c1), 6.74300141925, 1e-10);
  EXPECT_TRUE(std::isinf(t_cut({0, 2, 1})));
  EXPECT_TRUE(std::isinf(t_cut({0, 0, 1})));
  EXPECT_TRUE(std::isinf(t_cut({pi, 0, 1})));
  EXPECT_TRUE(std::isinf(t_cut({0.3, 0, 0})));
}

TEST(CutTime, Branches) {
  for (double k : {0.92, 0.97}) {
    const Covector l = from_chart(ChartN1{k, 0.3, 0.2, -2}).lambda;
    EXPECT_NEAR(t_cut(l), 2 * p_z1(k) / 2, 1e-9);
  }
  const Covector l2 = from_chart(ChartN2{0.6, 0.3, 0.2, 1.5, -1}).lambda;
  EXPECT_NEAR(t_cut(l2), 2 * complete_K(0.6) * 0.6 / 1.5, 1e-9);
}

TEST(CutTime, Homogeneity) {
  std::mt19937_64 rng(5);
  std::uniform_real_distribution<double> u(-2, 2);
  for (int i = 0; i < 200; ++i) {
    const Covector l{u(rng), u(rng), u(rng)};
    const double t = t_cut(l);
    for (double r : {0.3, 4.0}) {
      const double s = t_cut({l.theta, l.c / r, l.alpha / (r * r)});
      if (std::isinf(t)) {
        EXPECT_TRUE(std::isinf(s));
      } else {
        EXPECT_NEAR(s, r * t, 1e-12 * r * t);
      }
    }
  }
}

TEST(Curves, W1) {
  for (double Y : {0.0, 1.0, 10.0}) EXPECT_LT(w1_conj(Y), Y / 6);
  EXPECT_THROW(w1_conj(y0_1() - 0.1), std::domain_error);
  EXPECT_LT(w1_conj(y0_1() + 1e-6), w1_conj(y0_1() + 1e-3));
  EXPECT_LT(w1_conj(y0_1() + 1e-6), -10.0);
  const YW at = yw1(0.95, u1z(0.95), pi / 2);
  EXPECT_NEAR(w1_conj(at.Y), at.W, 1e-10);
  EXPECT_NEAR(*k_on_w1(at.Y), 0.95, 1e-9);
  for (double Y : {1e2, 1e4, 1e6}) {
    const double r = w1_conj(Y) / Y;
    EXPECT_GT(r, 0.0);
    EXPECT_LT(r, 1.0);
  }
}

TEST(Curves, W21) {
  double prev = std::numeric_limits<double>::infinity();
  for (double Y = 0.01; Y < 100; Y *= 1.3) {
    const double w = w21_conj(Y);
    EXPECT_LT(w, prev);
    prev = w;
  }
  EXPECT_LT(w21_conj(1e6), 1e-3);
  EXPECT_GT(w21_conj(1e-6), 1e3);
  EXPECT_THROW(w21_conj(0.0), std::domain_error);
  const YW at = yw2_1(0.5, 0.0);
  EXPECT_NEAR(w21_conj(at.Y), at.W, 1e-10);
  EXPECT_NEAR(*k_on_w21(at.Y), 0.5, 1e-9);
}

TEST(Curves, W22) {
  EXPECT_NEAR(w22_conj(0.0), 1 / std::sqrt(pi), 1e-12);
  double prev = std::numeric_limits<double>::infinity();
  for (double Y = -50; Y < 5; Y += 0.37) {
    const double w = w22_conj(Y);
    EXPECT_LT(w, prev) << Y;
    prev = w;
  }
  EXPECT_GT(w22_conj(-1e3), 1e3);
  for (double Y : {0.5, 1.0, 5.0}) EXPECT_LT(-w22_conj(-Y), w21_conj(Y));
  EXPECT_NEAR(w22_conj(-0.7), w22_plus(-0.7), 1e-14);
  EXPECT_NEAR(w22_conj(0.7), -w22_minus(-0.7), 1e-14);
  const YW at = yw2_2(0.6, 0.0);
  EXPECT_NEAR(w22_conj(at.Y), at.W, 1e-10);
}

// Near k = 0 both branches have W = +-1/sqrt(pi) + 3 k^2 / (16 sqrt(pi)) and
// Y = -sqrt(pi) k^2 / 4, so both one-sided slopes are -3 / (4 pi).
TEST(Curves, W22SmoothJoin) {
  const double c = 3.0 / (16.0 * std::sqrt(pi)), k = 1e-3;
  EXPECT_NEAR((yw2_2(k, 0.0).W - 1 / std::sqrt(pi)) / (k * k), c, 1e-4);
  EXPECT_NEAR((yw2_2(k, pi / 2).W + 1 / std::sqrt(pi)) / (k * k), c, 1e-4);
  EXPECT_NEAR(yw2_2(k, 0.0).Y / (k * k), -std::sqrt(pi) / 4, 1e-4);
  const double h = 1e-4, w0 = w22_conj(0.0);
  const double left = (w0 - w22_conj(-h)) / h, right = (w22_conj(h) - w0) / h;
  const double slope = -3.0 / (4.0 * pi);
  EXPECT_NEAR(left / right, 1.0, 1e-2);
  EXPECT_NEAR(left, slope, 1e-2 * std::abs(slope));
  EXPECT_NEAR(right, slope, 1e-2 * std::abs(slope));
}

TEST(Curves, Sampling) {
  const auto names = {"w1", "w21", "w22", "fix3"};
  for (const char* n : names) {
    const auto id = curve_from_string(n);
    ASSERT_TRUE(id.has_value());
    const auto s = sample_curve(*id, 17);
    EXPECT_EQ(s.size(), *id == CurveId::W22 ? 35u : 17u);
    for (const CurveSample& c : s) {
      EXPECT_TRUE(std::isfinite(c.Y));
      EXPECT_TRUE(std::isfinite(c.W));
    }
  }
  EXPECT_FALSE(curve_from_string("w3").has_value());
  EXPECT_THROW(sample_curve(CurveId::W1, 1), std::invalid_argument);
}

TEST(BoundaryFunctions, G) {
  EXPECT_EQ(G1(0, 1), 0.0);
  EXPECT_NEAR(G1(2, 2), 8 * G1(1, 1), 1e-12);
  EXPECT_NEAR(G1(-1, 1), G1(1, 1), 1e-15);
  EXPECT_NEAR(G3(-1, 2), G3(1, 2), 1e-15);
  EXPECT_EQ(G2(0, 1), 0.0);
  EXPECT_NEAR(G2(4, 2), 8 * G2(1, 1), 1e-12);
  EXPECT_NEAR(G2(1, 1), w21_conj(1.0), 1e-15);
}

TEST(Strata, Examples) {
  auto label = [](const Point& q) {
    const Stratum s = classify_point(q);
    return s.label() + " " + to_string(s.multiplicity);
  };
  EXPECT_EQ(label({0, 0, 0, 0}), "Origin none");
  EXPECT_EQ(label({0, 1, 0, 0}), "A+ 1");
  EXPECT_EQ(label({0, -1, 0, 0}), "A- 1");
  EXPECT_EQ(label({0, 1, 0, 1}), "I0x+ 2");
  EXPECT_EQ(label({0, -1, 0, 1}), "I0z+ 2");
  EXPECT_EQ(label({0, 0, 0, 1}), "E+ family");
  EXPECT_EQ(label({1, 1, 1, 1}), "Generic 1");
  EXPECT_EQ(label({0, 0, 1, 0}), "Nx^+[C] 2");
  EXPECT_EQ(label({1, 0, 0, -1}), "Iz+^+ 2");
  EXPECT_EQ(label({0, 1, 1, 3}), "Ix+^+ 2");
}

TEST(Strata, BoundaryCurves) {
  const double Y = 1.5;
  EXPECT_EQ(classify_point({1, Y, 0, w1_conj(Y)}).label(), "CIz+^+");
  EXPECT_EQ(classify_point({0, Y, 1, w21_conj(Y)}).label(), "CIx+^+");
  EXPECT_EQ(classify_point({0, -Y, 1, w22_conj(-Y)}).label(), "CNx+^+");
  EXPECT_EQ(classify_point({0, -Y, 1, 0.5 * (w22_conj(-Y) - w22_conj(Y))}).label(), "Nx^+[N+]");
  EXPECT_EQ(classify_point({1, Y, 0, w1_conj(Y) + 1}).label(), "Generic");
  EXPECT_TRUE(classify_point({1, Y, 0, w1_conj(Y)}).is_conjugate());
  EXPECT_FALSE(classify_point({1, Y, 0, w1_conj(Y)}).is_maxwell());
  EXPECT_TRUE(classify_point({0, 0, 0, 1}).is_conjugate());
  EXPECT_TRUE(classify_point({0, 0, 0, 1}).is_maxwell());
  EXPECT_FALSE(classify_point({1, 1, 1, 1}).is_cut());
}

namespace {

std::vector<Point> stratum_samples() {
  std::vector<Point> qs = {{0, 1, 0, 0},     {0, 1, 0, 1},   {0, -2, 0, 0.3}, {0, 0, 0, -1}, {1, -0.2, 0, -3},
                           {-2, 0.4, 0, 1},  {0, 1, 1, 3},   {0, -1, 2, -4},  {0, 0, 1, 0}, {0, -0.3, -1, 0.2},
                           {0, 0.4, 1, -0.1}, {1.3, 0.7, 0.4, 0.1}};
  const double Y = 0.8;
  qs.push_back({1, Y, 0, w1_conj(Y)});
  qs.push_back({0, Y, 1, w21_conj(Y)});
  qs.push_back({0, -Y, 1, w22_conj(-Y)});
  return qs;
}

}  // namespace

TEST(Strata, ReflectionEquivariance) {
  for (const Point& q : stratum_samples()) {
    const Stratum s = classify_point(q);
    for (int i = 1; i <= 7; ++i) {
      const Stratum r = classify_point(reflect(i, q));
      EXPECT_EQ(r, s.mirror(i)) << s.label() << " eps^" << i << " -> " << r.label();
      EXPECT_EQ(r.multiplicity, s.multiplicity);
    }
  }
}

TEST(Strata, DilationInvariance) {
  for (const Point& q : stratum_samples()) {
    const Stratum s = classify_point(q);
    for (double r : {0.1, 0.5, 3.0, 40.0}) EXPECT_EQ(classify_point(dilate(r, q)), s) << s.label() << ' ' << r;
  }
}

TEST(DerivativeSigns, Curves) {
  auto dk = [](auto f, double k) {
    const double h = 1e-6 * std::min(k, 1 - k);
    return (f(k + h) - f(k - h)) / (2 * h);
  };
  for (double k = k0() + 0.005; k < 0.999; k += 0.01) {
    EXPECT_GT(dk([](double kk) { return yw1(kk, u1z(kk), pi / 2).Y; }, k), 0.0);
    EXPECT_GT(dk([](double kk) { return yw1(kk, u1z(kk), pi / 2).W; }, k), 0.0);
  }
  for (double k = 0.02; k < k0(); k += 0.02) {
    EXPECT_LT(dk([](double kk) { return yw2_1(kk, 0.0).Y; }, k), 0.0);
    EXPECT_GT(dk([](double kk) { return yw2_1(kk, 0.0).W; }, k), 0.0);
  }
  for (double k = 0.02; k < 0.99; k += 0.02) {
    for (double u2 : {0.0, pi / 2}) {
      EXPECT_LT(dk([u2](double kk) { return yw2_2(kk, u2).Y; }, k), 0.0);
      EXPECT_GT(dk([u2](double kk) { return yw2_2(kk, u2).W; }, k), 0.0);
    }
  }
}

TEST(DerivativeSigns, Iotas) {
  for (double k = 0.01; k < 1.0; k += 0.01) {
    EXPECT_GT(iota2(k), 0.0);
    EXPECT_GT(iota4(k), 0.0);
    EXPECT_GT(iota5(k), 0.0);
    EXPECT_GT(iota6(k), 0.0);
    if (k < k0()) {
      EXPECT_GT(iota1(k), 0.0);
    }
  }
}
