#pragma once

#include <vector>

#include "tscale/grid_function.hpp"
#include "tscale/scalar_function.hpp"
#include "tscale/time_scale.hpp"

namespace tscale {

struct Jump {
  double sigma;
  double rho;
  double mu;
};

/// Forward/backward jump and graininess at a member t of the time scale.
Jump jump_operators(const TimeScale& ts, double t);

/// Delta integral of f over [lo, hi]; lo and hi must be evaluation points.
/// Right-scattered points contribute mu(t) * f(t); runs of right-dense
/// interval nodes use composite Simpson (3/8 rule on an odd panel tail).
double delta_integral(const GridFunction& f, double lo, double hi);
double delta_integral(const GridFunction& f);

/// t -> integral of f over [a, t], at every evaluation point.
GridFunction cumulative_delta_integral(const GridFunction& f);

/// Delta derivative at a kappa point: forward quotient where right-scattered,
/// fourth-order finite differences on the interval grid where right-dense.
double delta_derivative(const GridFunction& y, double t);
/// Delta derivative at every kappa point, in grid order.
std::vector<double> delta_derivative(const GridFunction& y);

/// Integral of gprime(y + h*mu*ydelta) over h in [0, 1]. Reduces to
/// gprime(y) when mu = 0.
double averaged_chain_factor(const ScalarFunction& gprime, double y, double mu,
                             double ydelta);

/// Composite Simpson over equally spaced samples; an odd panel count is
/// closed with the 3/8 rule, a single panel with the trapezoid rule.
double simpson(std::span<const double> samples, double h);

}  // namespace tscale
