#include "engel/group.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <ostream>
#include <stdexcept>

namespace engel {

Point operator+(const Point& a, const Point& b) { return {a.x + b.x, a.y + b.y, a.z + b.z, a.w + b.w}; }
Point operator-(const Point& a, const Point& b) { return {a.x - b.x, a.y - b.y, a.z - b.z, a.w - b.w}; }
Point operator*(double s, const Point& a) { return {s * a.x, s * a.y, s * a.z, s * a.w}; }

double max_abs_diff(const Point& a, const Point& b) {
  return std::max({std::abs(a.x - b.x), std::abs(a.y - b.y), std::abs(a.z - b.z), std::abs(a.w - b.w)});
}

double euclidean_norm(const Point& q) { return std::sqrt(q.x * q.x + q.y * q.y + q.z * q.z + q.w * q.w); }

double homogeneous_norm(const Point& q) {
  const double x2 = q.x * q.x, y2 = q.y * q.y, az = std::abs(q.z);
  return std::pow(x2 * x2 * x2 + y2 * y2 * y2 + az * az * az + q.w * q.w, 1.0 / 6.0);
}

Point dynamics(const Point& q, const Control& u) {
  return {u.u1, u.u2, -u.u1 * q.y / 2.0 + u.u2 * q.x / 2.0, u.u2 * q.x * q.x / 2.0};
}

Point dilate(double rho, const Point& q) {
  if (!(rho > 0.0)) throw std::domain_error("dilate: rho must be positive");
  return {rho * q.x, rho * q.y, rho * rho * q.z, rho * rho * rho * q.w};
}

namespace {

Point eps1(const Point& q) { return {q.x, q.y, -q.z, q.w - q.x * q.z}; }
Point eps2(const Point& q) { return {-q.x, q.y, q.z, q.w - q.x * q.z}; }
Point eps4(const Point& q) { return {-q.x, -q.y, q.z, -q.w}; }

}  // namespace

std::array<bool, 3> reflection_bits(int i) {
  switch (i) {
    case 1: return {true, false, false};
    case 2: return {false, true, false};
    case 3: return {true, true, false};
    case 4: return {false, false, true};
    case 5: return {true, false, true};
    case 6: return {false, true, true};
    case 7: return {true, true, true};
    default: throw std::out_of_range("reflection index must be in 1..7, got " + std::to_string(i));
  }
}

Point reflect(int i, const Point& q) {
  const auto [b1, b2, b4] = reflection_bits(i);
  // The generators commute, so the application order is immaterial.
  Point r = q;
  if (b4) r = eps4(r);
  if (b2) r = eps2(r);
  if (b1) r = eps1(r);
  return r;
}

std::string format_double(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

std::string to_csv_row(const Point& q) {
  return format_double(q.x) + "," + format_double(q.y) + "," + format_double(q.z) + "," + format_double(q.w);
}

std::ostream& operator<<(std::ostream& os, const Point& q) {
  return os << "(" << format_double(q.x) << ", " << format_double(q.y) << ", " << format_double(q.z) << ", "
            << format_double(q.w) << ")";
}

}  // namespace engel
