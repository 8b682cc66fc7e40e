#pragma once

#include "tscale/grid_function.hpp"
#include "tscale/scalar_function.hpp"

namespace tscale {

/// Absolute tolerance separating equality from a strict gap.
inline constexpr double kEqualityTolerance = 1e-10;
/// Spread below which a sampled f counts as constant.
inline constexpr double kConstancyTolerance = 1e-8;

enum class Direction {
  convex_ge,  ///< lhs >= rhs
  concave_le  ///< lhs <= rhs
};

/// Both sides of a Jensen-type inequality. `gap` is oriented by `direction`
/// so that gap >= 0 exactly when the inequality holds as stated.
struct InequalityReport {
  double lhs;
  double rhs;
  double gap;
  Direction direction;
  bool holds;
  bool equality;
  bool f_is_constant;
};

/// Weighted form: (int |h| F(f)) / (int |h|) against F((int |h| f) / (int |h|)).
/// h may vanish at some points but must have positive integral of |h|.
InequalityReport weighted_jensen_gap(const GridFunction& f, const GridFunction& h,
                                     const ScalarFunction& F);

/// Unweighted form normalised by b - a.
InequalityReport jensen_gap(const GridFunction& f, const ScalarFunction& F);

struct SpecialCase {
  enum class Kind { power, reciprocal_power, exp, log, xlogx };
  Kind kind;
  double alpha = 0.0;  ///< used by power and reciprocal_power

  static SpecialCase power(double a) { return {Kind::power, a}; }
  static SpecialCase reciprocal_power(double a) { return {Kind::reciprocal_power, a}; }
  static SpecialCase exp() { return {Kind::exp}; }
  static SpecialCase log() { return {Kind::log}; }
  static SpecialCase xlogx() { return {Kind::xlogx}; }
};

/// The closed-form corollaries, with each side written as in its statement:
///   power            int f^a                  vs (b-a)^(1-a) (int f)^a
///   reciprocal_power (int 1/f)^a int f^a      vs (b-a)^(1+a)
///   exp              int e^f                  vs (b-a) exp(int f / (b-a))
///   log              int ln f                 vs (b-a) ln(int f / (b-a))
///   xlogx            int f ln f               vs (int f) ln(int f / (b-a))
InequalityReport special_case_gap(const SpecialCase& which, const GridFunction& f);

/// Quasi-arithmetic means psi^-1(mean psi(f)) against phi^-1(mean phi(f)),
/// oriented by the curvature of psi o phi^-1 on the image of phi.
InequalityReport quasi_arithmetic_gap(const GridFunction& f, const ScalarFunction& phi,
                                      const ScalarFunction& psi);

}  // namespace tscale
