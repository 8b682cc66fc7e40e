#include <doctest.h>

#include <cmath>

#include "support/generators.hpp"
#include "support/jensen_cases.hpp"
#include "tscale/errors.hpp"
#include "tscale/jensen.hpp"

using namespace tscale;
using testing::Checker;
using testing::FShape;

namespace {
const TimeScale kThree = TimeScale::uniform(0, 2, 2);
}

TEST_CASE("weighted Jensen two-point example") {
  const auto f = GridFunction::from_kappa(kThree, {1, 2});
  const auto h = GridFunction::from_kappa(kThree, {1, 3});
  const auto r = weighted_jensen_gap(f, h, ScalarFunction::power(2));
  CHECK(r.lhs == 13.0 / 4);
  CHECK(r.rhs == 49.0 / 16);
  CHECK(r.gap == 0.1875);
  CHECK(r.direction == Direction::convex_ge);
  CHECK(r.holds);
  CHECK_FALSE(r.equality);
  CHECK_FALSE(r.f_is_constant);
}

TEST_CASE("unweighted Jensen two-point example") {
  const auto f = GridFunction::from_kappa(kThree, {1, 2});
  const auto r = jensen_gap(f, ScalarFunction::power(2));
  CHECK(r.lhs == 2.5);
  CHECK(r.rhs == 2.25);
  CHECK(r.gap == 0.25);
}

TEST_CASE("affine F is both convex and concave: zero gap") {
  testing::Rng rng(5);
  for (int k = 0; k < 50; ++k) {
    const auto ts = testing::random_discrete_scale(rng);
    const auto r = jensen_gap(testing::random_grid(rng, ts, -3, 3),
                              ScalarFunction::affine(rng.uniform(-2, 2), rng.uniform(-2, 2)));
    CHECK(std::abs(r.gap) <= kEqualityTolerance);
    CHECK(r.equality);
  }
}

TEST_CASE("constant f on the q-scale") {
  const auto q = TimeScale::q_scale(2, 0, 2);
  const auto f = GridFunction::from_kappa(q, {1, 1});
  const auto h = GridFunction::from_kappa(q, {0.5, -3});
  const auto r = weighted_jensen_gap(f, h, ScalarFunction::exp());
  CHECK(std::abs(r.gap) <= kEqualityTolerance);
  CHECK(r.equality);
  CHECK(r.f_is_constant);
}

TEST_CASE("q-scale weighted sums agree with the delta integral form") {
  // Weights q^k (q - 1) |h(q^k)|: the (q - 1) factor cancels in both sides.
  const double q = 1.5;
  const auto ts = TimeScale::q_scale(q, 1, 5);
  const std::vector<double> f{0.5, 1.7, 0.9, 2.2}, h{1, -2, 0.5, 3};
  double num = 0, den = 0, mean = 0;
  for (int k = 1; k < 5; ++k) {
    const double w = std::pow(q, k) * std::abs(h[k - 1]);
    num += w * std::exp(f[k - 1]);
    mean += w * f[k - 1];
    den += w;
  }
  const auto r = weighted_jensen_gap(GridFunction::from_kappa(ts, f), GridFunction::from_kappa(ts, h),
                                     ScalarFunction::exp());
  CHECK(r.lhs == doctest::Approx(num / den).epsilon(1e-14));
  CHECK(r.rhs == doctest::Approx(std::exp(mean / den)).epsilon(1e-14));
}

TEST_CASE("weighted Jensen on the real line") {
  const auto ts = TimeScale::real_interval(0, 1);
  const auto f = GridFunction::sample(ts, [](double x) { return x; });
  const auto h = GridFunction::sample(ts, [](double x) { return 2 * x - 1; });  // |h| has a zero
  const auto r = weighted_jensen_gap(f, h, ScalarFunction::power(2));
  // |2x-1|-weighted: int |h| = 1/2, int |h| x = 1/4, int |h| x^2 = 3/16.
  CHECK(r.lhs == doctest::Approx(3.0 / 8).epsilon(1e-4));
  CHECK(r.rhs == doctest::Approx(1.0 / 4).epsilon(1e-4));
  CHECK(r.holds);
}

TEST_CASE("special-case examples") {
  const auto f = GridFunction::from_kappa(kThree, {1, 2});
  const auto p = special_case_gap(SpecialCase::power(2), f);
  CHECK(p.lhs == 5);
  CHECK(p.rhs == 4.5);
  CHECK(p.gap == 0.5);

  const auto e = special_case_gap(SpecialCase::exp(), testing::constant_grid(kThree, 0));
  CHECK(e.lhs == 2);
  CHECK(e.rhs == 2);
  CHECK(e.gap == 0);

  const double c = 1.7;
  const auto rp = special_case_gap(SpecialCase::reciprocal_power(1), testing::constant_grid(kThree, c));
  CHECK(rp.lhs == doctest::Approx(4));
  CHECK(rp.rhs == 4);
  CHECK(std::abs(rp.gap) <= kEqualityTolerance);

  CHECK(special_case_gap(SpecialCase::power(0.5), f).direction == Direction::concave_le);
  CHECK(special_case_gap(SpecialCase::reciprocal_power(-0.5), f).direction == Direction::concave_le);
  CHECK(special_case_gap(SpecialCase::log(), f).direction == Direction::concave_le);
}

TEST_CASE("special-case errors") {
  const auto f = GridFunction::from_kappa(kThree, {1, 2});
  const auto neg = GridFunction::from_kappa(kThree, {-1, 2});
  CHECK_THROWS_AS(special_case_gap(SpecialCase::power(0), f), ParameterError);
  CHECK_THROWS_AS(special_case_gap(SpecialCase::power(1), f), ParameterError);
  CHECK_THROWS_AS(special_case_gap(SpecialCase::reciprocal_power(-1), f), ParameterError);
  CHECK_THROWS_AS(special_case_gap(SpecialCase::reciprocal_power(0), f), ParameterError);
  CHECK_THROWS_AS(special_case_gap(SpecialCase::power(2), neg), DomainError);
  CHECK_THROWS_AS(special_case_gap(SpecialCase::log(), neg), DomainError);
  CHECK_THROWS_AS(special_case_gap(SpecialCase::xlogx(), neg), DomainError);
  CHECK_NOTHROW(special_case_gap(SpecialCase::exp(), neg));
}

TEST_CASE("weighted Jensen errors") {
  const auto f = GridFunction::from_kappa(kThree, {1, 2});
  const auto zero = GridFunction::from_kappa(kThree, {0, 0});
  CHECK_THROWS_AS(weighted_jensen_gap(f, zero, ScalarFunction::exp()), PreconditionError);
  CHECK_THROWS_AS(jensen_gap(GridFunction::from_kappa(kThree, {-1, 2}), ScalarFunction::log()),
                  DomainError);
  CHECK_THROWS_AS(jensen_gap(GridFunction::from_kappa(kThree, {-1, 2}), ScalarFunction::power(3)),
                  ClassificationError);
  const auto other = TimeScale::uniform(0, 3, 3);
  CHECK_THROWS_AS(weighted_jensen_gap(f, testing::constant_grid(other, 1), ScalarFunction::exp()),
                  PreconditionError);
}

TEST_CASE("quasi-arithmetic examples") {
  const auto f = GridFunction::from_kappa(kThree, {0, std::log(4.0)});
  const auto r = quasi_arithmetic_gap(f, ScalarFunction::identity(), ScalarFunction::exp());
  CHECK(r.lhs == doctest::Approx(std::log(2.5)).epsilon(1e-14));
  CHECK(r.rhs == doctest::Approx(std::log(2.0)).epsilon(1e-14));
  CHECK(r.gap == doctest::Approx(std::log(1.25)).epsilon(1e-13));
  CHECK(r.direction == Direction::convex_ge);

  const auto same = quasi_arithmetic_gap(f, ScalarFunction::exp(), ScalarFunction::exp());
  CHECK(same.lhs == same.rhs);
  CHECK(same.equality);

  const auto flat = quasi_arithmetic_gap(testing::constant_grid(kThree, 0.7), ScalarFunction::log(),
                                         ScalarFunction::identity());
  CHECK(std::abs(flat.gap) <= kEqualityTolerance);

  // Numeric inversion path: psi = x log x has no closed-form inverse.
  const auto pos = GridFunction::from_kappa(kThree, {1.5, 2.5});
  const auto num = quasi_arithmetic_gap(pos, ScalarFunction::identity(), ScalarFunction::xlogx());
  const double target = (1.5 * std::log(1.5) + 2.5 * std::log(2.5)) / 2;
  CHECK(num.lhs * std::log(num.lhs) == doctest::Approx(target).epsilon(1e-14));
  CHECK(num.holds);
}

TEST_CASE("quasi-arithmetic preconditions") {
  const auto f = GridFunction::from_kappa(kThree, {-1, 1});
  CHECK_THROWS_AS(quasi_arithmetic_gap(f, ScalarFunction::power(2), ScalarFunction::exp()),
                  PreconditionError);
  CHECK_THROWS_AS(quasi_arithmetic_gap(f, ScalarFunction::identity(), ScalarFunction::exp().negated()),
                  PreconditionError);
}

TEST_CASE("property: every checker holds on random admissible inputs") {
  testing::Rng rng(2024);
  for (Checker c : testing::kAllCheckers) {
    CAPTURE(std::string(testing::name(c)));
    for (int k = 0; k < 200; ++k) {
      const auto r = testing::random_case(c, rng, FShape::any);
      CHECK(r.gap >= -kEqualityTolerance);
      CHECK(r.holds);
    }
  }
}

TEST_CASE("property: equality iff f constant (discrete scales, |h| > 0)") {
  testing::Rng rng(77);
  for (Checker c : testing::kAllCheckers) {
    CAPTURE(std::string(testing::name(c)));
    for (int k = 0; k < 50; ++k) {
      const auto flat = testing::random_case(c, rng, FShape::constant);
      CHECK(std::abs(flat.gap) <= kEqualityTolerance);
      CHECK(flat.equality);
      CHECK(flat.f_is_constant);
      const auto sharp = testing::random_case(c, rng, FShape::spread);
      CHECK(sharp.gap > 1e-8);
      CHECK_FALSE(sharp.equality);
      CHECK_FALSE(sharp.f_is_constant);
    }
  }
}

TEST_CASE("property: negating F flips both sides") {
  testing::Rng rng(9);
  for (int k = 0; k < 200; ++k) {
    const auto ts = testing::random_discrete_scale(rng);
    const auto f = testing::random_grid(rng, ts, 0.2, 3);
    const auto h = testing::random_grid(rng, ts, -2, 2);
    const auto F = testing::random_strict_F(rng);
    const auto a = weighted_jensen_gap(f, h, F);
    const auto b = weighted_jensen_gap(f, h, F.negated());
    CHECK(b.lhs == doctest::Approx(-a.lhs).epsilon(1e-14));
    CHECK(b.rhs == doctest::Approx(-a.rhs).epsilon(1e-14));
    CHECK(b.direction != a.direction);
    CHECK(b.gap == doctest::Approx(a.gap).epsilon(1e-12));
    CHECK(b.holds);
  }
}

TEST_CASE("property: unit weight reproduces the unweighted checker") {
  testing::Rng rng(10);
  for (int k = 0; k < 200; ++k) {
    const auto ts = testing::random_discrete_scale(rng);
    const auto f = testing::random_grid(rng, ts, 0.2, 3);
    const auto F = testing::random_strict_F(rng);
    const auto w = weighted_jensen_gap(f, testing::constant_grid(ts, 1), F);
    const auto u = jensen_gap(f, F);
    CHECK(std::abs(w.lhs - u.lhs) <= 1e-12);
    CHECK(std::abs(w.rhs - u.rhs) <= 1e-12);
    CHECK(std::abs(w.gap - u.gap) <= 1e-12);
  }
}

TEST_CASE("property: power inequality has the sign of the Jensen gap") {
  testing::Rng rng(13);
  for (int k = 0; k < 300; ++k) {
    const auto ts = testing::random_discrete_scale(rng);
    const auto f = testing::random_grid(rng, ts, 0.2, 3);
    const double a = testing::random_alpha(rng, 0, 1);
    const auto s = special_case_gap(SpecialCase::power(a), f);
    const auto j = jensen_gap(f, ScalarFunction::power(a));
    CHECK(s.direction == j.direction);
    if (std::abs(j.gap) > 1e-12) CHECK((s.gap > 0) == (j.gap > 0));
    // Exact rearrangement: special = (b - a) * jensen.
    CHECK(std::abs(s.gap - (ts.b() - ts.a()) * j.gap) <= 1e-9 * std::max(1.0, std::abs(s.gap)));
  }
}

TEST_CASE("property: scaling h leaves the report unchanged") {
  testing::Rng rng(14);
  for (int k = 0; k < 200; ++k) {
    const auto ts = testing::random_discrete_scale(rng);
    const auto f = testing::random_grid(rng, ts, 0.2, 3);
    const auto h = testing::random_values(rng, ts.size(), -2, 2);
    auto scaled = h;
    const double lambda = rng.uniform(0.01, 100);
    for (auto& x : scaled) x *= lambda;
    const auto F = testing::random_strict_F(rng);
    const auto a = weighted_jensen_gap(f, GridFunction(ts, h), F);
    const auto b = weighted_jensen_gap(f, GridFunction(ts, scaled), F);
    CHECK(std::abs(a.lhs - b.lhs) <= 1e-12);
    CHECK(std::abs(a.rhs - b.rhs) <= 1e-12);
    CHECK(std::abs(a.gap - b.gap) <= 1e-12);
  }
}
