#include <doctest.h>

#include <cmath>
#include <vector>

#include "tscale/errors.hpp"
#include "tscale/scalar_function.hpp"

using namespace tscale;

namespace {

// Independent references: finite differences and a fine midpoint sum.
double fd1(const ScalarFunction& f, double x, double h = 1e-5) {
  return (f(x + h) - f(x - h)) / (2 * h);
}
double fd2(const ScalarFunction& f, double x, double h = 1e-4) {
  return (f(x + h) - 2 * f(x) + f(x - h)) / (h * h);
}
double midpoint(const ScalarFunction& f, double lo, double hi, int n = 200000) {
  const double h = (hi - lo) / n;
  double s = 0;
  for (int i = 0; i < n; ++i) s += f(lo + (i + 0.5) * h);
  return s * h;
}

struct Sample {
  ScalarFunction f;
  double lo, hi;
};

std::vector<Sample> family() {
  return {
      {ScalarFunction::constant(2.5), -1, 2},
      {ScalarFunction::affine(-3, 1), -1, 2},
      {ScalarFunction::power(2), -1, 2},
      {ScalarFunction::power(3), -1, 2},
      {ScalarFunction::power(0.5), 0.2, 3},
      {ScalarFunction::power(-1), 0.2, 3},
      {ScalarFunction::power(-2.5), 0.5, 3},
      {ScalarFunction::exp(), -1, 2},
      {ScalarFunction::log(), 0.3, 4},
      {ScalarFunction::xlogx(), 0.3, 4},
      {ScalarFunction::polynomial({1, -2, 0.5, 0.25}), -2, 2},
      {ScalarFunction::transformed(ScalarFunction::exp(), 2, -0.5, 1, 3), -1, 2},
      {ScalarFunction::transformed(ScalarFunction::log(), -1, 2, 1, 0), 0.1, 2},
  };
}

}  // namespace

TEST_CASE("derivatives agree with finite differences") {
  for (const auto& s : family()) {
    CAPTURE(s.f.describe());
    for (int k = 1; k < 10; ++k) {
      const double x = s.lo + (s.hi - s.lo) * k / 10;
      CHECK(s.f.derivative(x) == doctest::Approx(fd1(s.f, x)).epsilon(1e-6));
      CHECK(s.f.second_derivative(x) == doctest::Approx(fd2(s.f, x)).epsilon(1e-4));
    }
  }
}

TEST_CASE("antiderivative differences match a fine midpoint sum") {
  for (const auto& s : family()) {
    CAPTURE(s.f.describe());
    CHECK(s.f.integral(s.lo, s.hi) == doctest::Approx(midpoint(s.f, s.lo, s.hi)).epsilon(1e-8));
  }
}

TEST_CASE("closed-form inverses") {
  for (const auto& s : family()) {
    CAPTURE(s.f.describe());
    const double x = 0.5 * (s.lo + s.hi);
    if (auto inv = s.f.inverse(s.f(x))) CHECK(*inv == doctest::Approx(x).epsilon(1e-12));
  }
  CHECK_FALSE(ScalarFunction::constant(1).inverse(1).has_value());
  CHECK_FALSE(ScalarFunction::xlogx().inverse(1).has_value());
  CHECK_FALSE(ScalarFunction::power(2).inverse(4).has_value());
  CHECK(*ScalarFunction::power(3).inverse(-8) == doctest::Approx(-2));
}

TEST_CASE("domains") {
  CHECK(ScalarFunction::power(2).in_domain(-3));
  CHECK_FALSE(ScalarFunction::power(0.5).in_domain(0));
  CHECK_FALSE(ScalarFunction::log().in_domain(0));
  const auto shifted = ScalarFunction::transformed(ScalarFunction::log(), 1, -1, 2, 0);  // log(2 - x)
  CHECK(shifted.in_domain(1.9));
  CHECK_FALSE(shifted.in_domain(2));
  CHECK(shifted.domain().lo == -std::numeric_limits<double>::infinity());
}

TEST_CASE("curvature classification") {
  using K = Curvature::Kind;
  CHECK(ScalarFunction::power(2).classify(1, 2).kind == K::convex);
  CHECK(ScalarFunction::power(2).classify(1, 2).strict);
  CHECK(ScalarFunction::power(0.5).classify(1, 2).kind == K::concave);
  CHECK(ScalarFunction::log().classify(1, 2).kind == K::concave);
  CHECK(ScalarFunction::affine(2, 1).classify(-1, 2).kind == K::linear);
  CHECK(ScalarFunction::power(2).negated().classify(1, 2).kind == K::concave);
  // x^3 is convex on [0, 1] but not strictly at the sample x = 0.
  const auto cubic = ScalarFunction::power(3).classify(0, 1);
  CHECK(cubic.kind == K::convex);
  CHECK_FALSE(cubic.strict);
  CHECK_THROWS_AS(ScalarFunction::power(3).classify(-1, 1), ClassificationError);
  CHECK_THROWS_AS(ScalarFunction::log().classify(-1, 1), DomainError);
}

TEST_CASE("transform requires a nonzero inner scale") {
  CHECK_THROWS_AS(ScalarFunction::transformed(ScalarFunction::exp(), 1, 0, 0, 0), ParameterError);
}
