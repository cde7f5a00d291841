#include <random>
#include <sstream>
#include <stdexcept>

#include <gtest/gtest.h>

#include "engel/group.hpp"

using namespace engel;

namespace {

std::vector<Point> random_points(int n, unsigned seed) {
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> u(-3.0, 3.0);
  std::vector<Point> out;
  for (int i = 0; i < n; ++i) out.push_back({u(rng), u(rng), u(rng), u(rng)});
  return out;
}

}  // namespace

TEST(Dynamics, Examples) {
  EXPECT_EQ(dynamics({}, {1, 0}), (Point{1, 0, 0, 0}));
  EXPECT_EQ(dynamics({2, 0, 0, 0}, {0, 1}), (Point{0, 1, 1, 2}));
  EXPECT_EQ(dynamics({0, 3, 0, 0}, {1, 0}), (Point{1, 0, -1.5, 0}));
}

TEST(Dilation, Examples) {
  const Point q{1, 1, 1, 1};
  EXPECT_EQ(dilate(1.0, q), q);
  EXPECT_EQ(dilate(2.0, q), (Point{2, 2, 4, 8}));
  EXPECT_THROW(dilate(0.0, q), std::domain_error);
  EXPECT_THROW(dilate(-1.0, q), std::domain_error);
}

TEST(Dilation, GroupLawAndNorm) {
  for (const Point& q : random_points(50, 1)) {
    EXPECT_LT(max_abs_diff(dilate(2.0, dilate(1.5, q)), dilate(3.0, q)), 1e-12);
    for (double r : {0.25, 3.0, 11.0}) {
      EXPECT_NEAR(homogeneous_norm(dilate(r, q)), r * homogeneous_norm(q), 1e-12 * r * homogeneous_norm(q));
    }
  }
  EXPECT_EQ(homogeneous_norm({}), 0.0);
  EXPECT_DOUBLE_EQ(homogeneous_norm({0, 0, -4, 0}), 2.0);
}

// The dilation is a symmetry of the control system: X(dilate q, u) = rho^w X(q, u).
TEST(Dilation, RescalesDynamics) {
  for (const Point& q : random_points(20, 2)) {
    const Control u{0.6, -0.8};
    const double r = 1.7;
    const Point lhs = dynamics(dilate(r, q), u);
    const Point f = dynamics(q, u);
    EXPECT_NEAR(lhs.x, f.x, 1e-14);
    EXPECT_NEAR(lhs.y, f.y, 1e-14);
    EXPECT_NEAR(lhs.z, r * f.z, 1e-12);
    EXPECT_NEAR(lhs.w, r * r * f.w, 1e-12);
  }
}

TEST(Reflections, Example) {
  EXPECT_EQ(reflect(1, {1, 2, 3, 4}), (Point{1, 2, -3, 1}));
}

TEST(Reflections, InvolutionsThatCommute) {
  for (const Point& q : random_points(100, 3)) {
    for (int i = 1; i <= 7; ++i) EXPECT_LT(max_abs_diff(reflect(i, reflect(i, q)), q), 1e-12) << i;
    for (int i = 1; i <= 7; ++i) {
      for (int j = 1; j <= 7; ++j) {
        const Point a = reflect(i, reflect(j, q));
        const Point b = reflect(j, reflect(i, q));
        EXPECT_LT(max_abs_diff(a, b), 1e-12);
        if (i != j) {
          EXPECT_LT(max_abs_diff(a, reflect(i ^ j, q)), 1e-12) << i << " " << j;
        }
      }
    }
  }
}

TEST(Reflections, PreserveNormAndCommuteWithDilation) {
  for (const Point& q : random_points(50, 4)) {
    for (int i = 1; i <= 7; ++i) {
      EXPECT_LT(max_abs_diff(reflect(i, dilate(2.5, q)), dilate(2.5, reflect(i, q))), 1e-11);
      EXPECT_NEAR(std::abs(reflect(i, q).x), std::abs(q.x), 0.0);
      EXPECT_NEAR(std::abs(reflect(i, q).z), std::abs(q.z), 0.0);
    }
  }
}

TEST(Reflections, IndexRange) {
  EXPECT_THROW(reflect(0, {}), std::out_of_range);
  EXPECT_THROW(reflect(8, {}), std::out_of_range);
  EXPECT_THROW(reflection_bits(-1), std::out_of_range);
  EXPECT_EQ(reflection_bits(5), (std::array<bool, 3>{true, false, true}));
}

TEST(Formatting, RoundTrips) {
  const double v = 0.1 + 0.2;
  EXPECT_EQ(std::stod(format_double(v)), v);
  EXPECT_EQ(to_csv_row({1, -2, 0.5, 0}), "1,-2,0.5,0");
  std::ostringstream os;
  os << Point{1, 2, 3, 4};
  EXPECT_EQ(os.str(), "(1, 2, 3, 4)");
}
