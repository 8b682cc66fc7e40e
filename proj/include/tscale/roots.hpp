#pragma once

#include <cmath>
#include <sstream>

#include "tscale/errors.hpp"

namespace tscale {

/// Solves f(x) = target for increasing f on [lo, hi] with f(lo) <= target <=
/// f(hi). Newton steps safeguarded by bisection; stops once
/// |f(x) - target| <= tolerance or the bracket can no longer shrink.
template <class Fn, class Deriv>
double solve_increasing(Fn&& f, Deriv&& df, double target, double lo, double hi,
                        double tolerance = 1e-12, int max_iterations = 400) {
  double flo = f(lo) - target;
  double fhi = f(hi) - target;
  if (flo > 0 || fhi < 0) {
    std::ostringstream os;
    os << "target " << target << " is not bracketed by [" << lo << ", " << hi << "]";
    throw DomainError(os.str());
  }
  if (flo == 0) return lo;
  if (fhi == 0) return hi;
  double x = 0.5 * (lo + hi);
  for (int it = 0; it < max_iterations; ++it) {
    const double r = f(x) - target;
    if (std::abs(r) <= tolerance) return x;
    if (r < 0) lo = x;
    else hi = x;
    const double mid = 0.5 * (lo + hi);
    if (mid <= lo || mid >= hi) return std::abs(f(lo) - target) <= std::abs(f(hi) - target) ? lo : hi;
    const double slope = df(x);
    const double newton = (slope > 0) ? x - r / slope : mid;
    x = (newton > lo && newton < hi) ? newton : mid;
  }
  return x;
}

}  // namespace tscale
