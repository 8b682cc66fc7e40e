#pragma once

#include <limits>
#include <memory>
#include <optional>
#include <string>
#include <variant>
#include <vector>

namespace tscale {

/// Open real interval (lo, hi); infinite ends allowed.
struct OpenInterval {
  double lo = -std::numeric_limits<double>::infinity();
  double hi = std::numeric_limits<double>::infinity();

  bool contains(double x) const noexcept { return x > lo && x < hi; }
  bool contains(double x, double y) const noexcept { return contains(x) && contains(y); }
};

/// Sign regime of the second derivative on a range.
struct Curvature {
  enum class Kind { convex, concave, linear };
  Kind kind;
  /// Second derivative nonzero at every sample.
  bool strict;
};

/// Member of a closed family of elementary real functions with exact value,
/// first and second derivative, and antiderivative.
///
/// Families: constant c, affine m*x + c, power x^p, exp, log, x*log(x),
/// polynomial sum c_k x^k, and the transform
///     outer_scale * g(inner_scale * x + inner_shift) + outer_shift
/// of any member g.
class ScalarFunction {
 public:
  struct Constant { double c; };
  struct Affine { double slope; double intercept; };
  struct Power { double exponent; };
  struct Exp {};
  struct Log {};
  struct XLogX {};
  struct Polynomial { std::vector<double> coefficients; };
  struct Transformed {
    std::shared_ptr<const ScalarFunction> inner;
    double outer_scale, inner_scale, inner_shift, outer_shift;
  };
  using Node = std::variant<Constant, Affine, Power, Exp, Log, XLogX, Polynomial, Transformed>;

  static ScalarFunction constant(double c);
  static ScalarFunction affine(double slope, double intercept);
  static ScalarFunction identity() { return affine(1.0, 0.0); }
  static ScalarFunction power(double exponent);
  static ScalarFunction exp();
  static ScalarFunction log();
  static ScalarFunction xlogx();
  /// coefficients[k] multiplies x^k.
  static ScalarFunction polynomial(std::vector<double> coefficients);
  static ScalarFunction transformed(ScalarFunction inner, double outer_scale,
                                    double inner_scale, double inner_shift,
                                    double outer_shift);

  ScalarFunction negated() const { return transformed(*this, -1.0, 1.0, 0.0, 0.0); }

  const Node& node() const noexcept { return node_; }

  double operator()(double x) const;
  double derivative(double x) const;
  double second_derivative(double x) const;
  /// A fixed primitive; differences give exact definite integrals.
  double antiderivative(double x) const;
  /// Exact integral over [lo, hi].
  double integral(double lo, double hi) const { return antiderivative(hi) - antiderivative(lo); }

  OpenInterval domain() const;
  bool in_domain(double x) const { return domain().contains(x); }

  /// Closed-form inverse, when the family has one and y is in range.
  std::optional<double> inverse(double y) const;

  /// Samples the second derivative at `samples` points of [lo, hi]; throws
  /// ClassificationError when it takes both signs and DomainError when the
  /// range leaves the domain.
  Curvature classify(double lo, double hi, int samples = 257) const;

  std::string describe() const;

 private:
  explicit ScalarFunction(Node node) : node_(std::move(node)) {}
  Node node_;
};

/// Classifies a sampled second-derivative on [lo, hi].
template <class SecondDerivative>
Curvature classify_samples(SecondDerivative&& d2, double lo, double hi, int samples);

}  // namespace tscale

#include "tscale/detail/classify.hpp"
