#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

#include <boost/math/tools/roots.hpp>
#include <boost/math/tools/toms748_solve.hpp>

namespace engel::detail {

// Root of f on [a, b] given a sign change; returns the midpoint of the final bracket.
template <class F>
double bracket_root(F f, double a, double b, double fa, double fb, const char* who) {
  if (fa == 0.0) return a;
  if (fb == 0.0) return b;
  if ((fa > 0.0) == (fb > 0.0)) throw std::runtime_error(std::string(who) + ": root not bracketed");
  std::uintmax_t iters = 200;
  const auto r = boost::math::tools::toms748_solve(f, a, b, fa, fb, boost::math::tools::eps_tolerance<double>(52),
                                                   iters);
  return 0.5 * (r.first + r.second);
}

template <class F>
double bracket_root(F f, double a, double b, const char* who) {
  return bracket_root(f, a, b, f(a), f(b), who);
}

}  // namespace engel::detail
