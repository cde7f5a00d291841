#pragma once

#include <array>
#include <iosfwd>
#include <string>

namespace engel {

/// State of the Engel group in exponential coordinates.
struct Point {
  double x = 0.0;
  double y = 0.0;
  double z = 0.0;
  double w = 0.0;

  friend bool operator==(const Point&, const Point&) = default;
};

struct Control {
  double u1 = 0.0;
  double u2 = 0.0;
};

Point operator+(const Point& a, const Point& b);
Point operator-(const Point& a, const Point& b);
Point operator*(double s, const Point& a);

/// Max-norm of the coordinate difference.
double max_abs_diff(const Point& a, const Point& b);
double euclidean_norm(const Point& q);

/// Dilation-homogeneous gauge (x^6 + y^6 + |z|^3 + w^2)^(1/6); N(dilate(r, q)) = r N(q).
double homogeneous_norm(const Point& q);

/// Velocity of the control system at q under control u.
Point dynamics(const Point& q, const Control& u);

/// (r x, r y, r^2 z, r^3 w). Throws std::domain_error for r <= 0.
Point dilate(double rho, const Point& q);

// Reflections. eps^1, eps^2, eps^4 are the generators; the composites are
// labelled eps^3 = eps^1 eps^2, eps^5 = eps^1 eps^4, eps^6 = eps^2 eps^4,
// eps^7 = eps^1 eps^2 eps^4. Index outside 1..7 throws std::out_of_range.
Point reflect(int i, const Point& q);

/// The three generator bits (eps^1, eps^2, eps^4) of a reflection index 1..7.
std::array<bool, 3> reflection_bits(int i);

std::string to_csv_row(const Point& q);
inline constexpr const char* kPointCsvHeader = "x,y,z,w";
std::ostream& operator<<(std::ostream& os, const Point& q);

/// Shortest round-trippable decimal rendering ("%.17g").
std::string format_double(double v);

}  // namespace engel
