#pragma once

#include <optional>
#include <string>

#include "tscale/grid_function.hpp"
#include "tscale/scalar_function.hpp"
#include "tscale/time_scale.hpp"

namespace tscale {

/// Tolerance on the boundary conditions of an admissible trajectory.
inline constexpr double kBoundaryTolerance = 1e-9;
/// Strict positivity threshold for the delta derivative.
inline constexpr double kPositivityThreshold = 1e-12;

enum class ProblemKind {
  /// int [ (int_0^1 phi(y + h mu y^Delta) dh) y^Delta ]^alpha, phi a function of y.
  power_weighted,
  /// int phi(t) exp(y^Delta), phi a function of t.
  exp_derivative,
  /// int (phi(t) + y^Delta) ln(phi(t) + y^Delta), phi a function of t.
  xlogx_shifted,
};

const char* to_string(ProblemKind kind) noexcept;

/// Minimise or maximise a functional over trajectories with y(a) = 0 and
/// y(b) = B on the given time scale.
struct VariationalProblem {
  ProblemKind kind;
  TimeScale ts;
  double B;
  ScalarFunction phi;
  double alpha = 2.0;  ///< power_weighted only
};

enum class Extremum { min, max };

const char* to_string(Extremum e) noexcept;

struct Solution {
  GridFunction trajectory;
  double optimal_value;
  Extremum extremum;
  double C;
};

/// G(x) = int_0^x phi(s) ds for a weight phi that is positive on [0, upper].
class CumulativeWeight {
 public:
  /// Throws DomainError when phi is undefined or not positive on [0, upper].
  CumulativeWeight(ScalarFunction phi, double upper);

  double operator()(double x) const { return phi_.antiderivative(x) - base_; }
  /// Unique x in [0, upper] with G(x) = u, for u in [0, G(upper)].
  double inverse(double u) const;
  double upper() const noexcept { return upper_; }

 private:
  ScalarFunction phi_;
  double upper_;
  double base_;
};

Solution solve_power_weighted(const VariationalProblem& p);
Solution solve_exp_derivative(const VariationalProblem& p);
Solution solve_xlogx_shifted(const VariationalProblem& p);
/// Dispatches on p.kind.
Solution solve(const VariationalProblem& p);

struct Violation {
  std::string condition;  ///< boundary_a, boundary_b, increasing, log_argument
  double point;
  std::string message;
};

/// First admissibility condition that y violates for problem p, if any.
std::optional<Violation> admissibility_violation(const VariationalProblem& p,
                                                 const GridFunction& y);

/// Value of the problem's functional at y. Throws AdmissibilityError when y
/// is not admissible.
double evaluate_functional(const VariationalProblem& p, const GridFunction& y);

}  // namespace tscale
