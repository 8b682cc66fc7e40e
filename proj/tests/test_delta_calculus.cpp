#include <doctest.h>

#include <cmath>

#include "support/generators.hpp"
#include "tscale/delta_calculus.hpp"
#include "tscale/errors.hpp"

using namespace tscale;

TEST_CASE("delta integral on discrete scales is the mu-weighted sum") {
  const auto ts = TimeScale::uniform(0, 2, 2);
  const auto f = GridFunction::from_kappa(ts, {1, 2});
  CHECK(delta_integral(f) == 3);

  const auto gappy = TimeScale::custom({0, 1, 3}, {});
  CHECK(delta_integral(GridFunction::from_kappa(gappy, {5, 5})) == 15);
}

TEST_CASE("delta integral on a real interval") {
  const auto ts = TimeScale::real_interval(0, 1, 64);
  const auto f = GridFunction::sample(ts, [](double x) { return 1 / (x + 1); });
  CHECK(std::abs(delta_integral(f) - std::log(2.0)) <= 1e-8);
}

TEST_CASE("delta integral on a mixed scale") {
  // [0,1] u {2} u [3,4]: smooth parts plus mu*f at 1 and at 2.
  const auto ts = TimeScale::custom({2}, {{0, 1}, {3, 4}}, 65);
  const auto f = GridFunction::sample(ts, [](double t) { return t * t; });
  const double expected = 1.0 / 3 + 1 * 1 + 1 * 4 + (64.0 - 27.0) / 3;
  CHECK(delta_integral(f) == doctest::Approx(expected).epsilon(1e-12));
}

TEST_CASE("delta integral errors") {
  const auto ts = TimeScale::uniform(0, 3, 3);
  const auto f = GridFunction(ts, {1, 1, 1, 1});
  CHECK_THROWS_AS(delta_integral(f, 2, 1), DomainError);
  CHECK_THROWS_AS(delta_integral(f, 0.5, 2), DomainError);
  CHECK(delta_integral(f, 1, 1) == 0);
}

TEST_CASE("simpson rule with odd panel tails") {
  // Cubic integrand: Simpson and 3/8 are both exact.
  for (int n = 2; n <= 9; ++n) {
    std::vector<double> y(n);
    const double h = 0.25;
    for (int i = 0; i < n; ++i) y[i] = std::pow(i * h, 3);
    const double exact = std::pow((n - 1) * h, 4) / 4;
    if (n == 2) CHECK(simpson(y, h) == doctest::Approx(0.5 * h * y[1]));
    else CHECK(simpson(y, h) == doctest::Approx(exact).epsilon(1e-14));
  }
}

TEST_CASE("property: additivity and single-step rule on discrete scales") {
  testing::Rng rng(11);
  for (int trial = 0; trial < 200; ++trial) {
    const auto ts = testing::random_discrete_scale(rng);
    const auto f = testing::random_grid(rng, ts, -3, 3);
    const double whole = delta_integral(f);
    for (std::size_t c = 0; c < ts.size(); ++c) {
      const double t = ts.point(c);
      CHECK(std::abs(delta_integral(f, ts.a(), t) + delta_integral(f, t, ts.b()) - whole) <= 1e-12);
      if (c + 1 < ts.size())
        CHECK(delta_integral(f, t, ts.sigma(c)) == ts.mu(c) * f[c]);
    }
  }
}

TEST_CASE("property: integrating the derivative telescopes on discrete scales") {
  testing::Rng rng(12);
  for (int trial = 0; trial < 200; ++trial) {
    const auto ts = testing::random_discrete_scale(rng);
    const auto y = testing::random_grid(rng, ts, -10, 10);
    const auto slope = GridFunction::from_kappa(ts, delta_derivative(y));
    const double lhs = delta_integral(slope);
    CHECK(lhs == doctest::Approx(y[ts.size() - 1] - y[0]).epsilon(1e-13));
  }
  // Integer data: exact.
  const auto z = TimeScale::uniform(0, 5, 5);
  const auto sq = GridFunction::sample(z, [](double t) { return t * t; });
  CHECK(delta_integral(GridFunction::from_kappa(z, delta_derivative(sq))) == 25);
}

TEST_CASE("delta derivative") {
  const auto z = TimeScale::uniform(0, 5, 5);
  const auto sq = GridFunction::sample(z, [](double t) { return t * t; });
  CHECK(delta_derivative(sq, 2) == 5);
  for (int t = 0; t < 5; ++t) CHECK(delta_derivative(sq, t) == 2 * t + 1);
  CHECK_THROWS_AS(delta_derivative(sq, 5), DomainError);

  const auto c = testing::constant_grid(z, 7);
  for (double d : delta_derivative(c)) CHECK(d == 0);

  const auto line_ts = TimeScale::real_interval(0, 1);
  const auto line = GridFunction::sample(line_ts, [](double x) { return x; });
  for (double d : delta_derivative(line)) CHECK(std::abs(d - 1) <= 1e-8);
  // Right-dense maximum: b belongs to kappa.
  CHECK(std::abs(delta_derivative(line, 1.0) - 1) <= 1e-8);
}

TEST_CASE("delta derivative of a smooth function on an interval") {
  const auto ts = TimeScale::real_interval(0, 1);
  const auto y = GridFunction::sample(ts, [](double x) { return std::log1p(x); });
  const auto d = delta_derivative(y);
  for (std::size_t i = 0; i < d.size(); ++i)
    CHECK(std::abs(d[i] - 1 / (1 + ts.point(i))) <= 1e-7);
}

TEST_CASE("delta derivative on a mixed scale uses the forward quotient at interval ends") {
  const auto ts = TimeScale::custom({2}, {{0, 1}}, 9);
  const auto y = GridFunction::sample(ts, [](double t) { return t * t; });
  CHECK(delta_derivative(y, 1.0) == doctest::Approx(3.0));  // (4 - 1) / 1
  CHECK(delta_derivative(y, 0.5) == doctest::Approx(1.0).epsilon(1e-12));
}

TEST_CASE("averaged chain factor") {
  CHECK(averaged_chain_factor(ScalarFunction::exp(), 0, 0, 5) == 1);
  const auto twice = ScalarFunction::affine(2, 0);
  for (int t = 0; t < 5; ++t) {
    const double factor = averaged_chain_factor(twice, t, 1, 1);
    CHECK(factor == doctest::Approx(2 * t + 1));
    CHECK(factor * 1 == 2 * t + 1);
  }
  testing::Rng rng(3);
  for (int k = 0; k < 20; ++k)
    CHECK(averaged_chain_factor(ScalarFunction::constant(4.5), rng.uniform(-5, 5),
                                rng.uniform(0, 3), rng.uniform(-2, 2)) == 4.5);
  CHECK_THROWS_AS(averaged_chain_factor(ScalarFunction::log(), 1, 1, -2), DomainError);
}

TEST_CASE("averaged chain factor matches a brute-force average") {
  const ScalarFunction fns[] = {ScalarFunction::exp(), ScalarFunction::power(0.5),
                                ScalarFunction::polynomial({1, 0, 3}), ScalarFunction::log()};
  for (const auto& g : fns) {
    for (double step : {2.0, 0.3, 1e-4, 1e-9}) {
      const double y = 1.5;
      double ref = 0;
      const int n = 100000;
      for (int i = 0; i < n; ++i) ref += g(y + step * (i + 0.5) / n);
      ref /= n;
      CAPTURE(g.describe());
      CAPTURE(step);
      CHECK(averaged_chain_factor(g, y, 1.0, step) == doctest::Approx(ref).epsilon(1e-9));
    }
  }
}

TEST_CASE("cumulative integral") {
  const auto ts = TimeScale::uniform(0, 5, 5);
  const auto phi = GridFunction::sample(ts, [](double t) { return 2 * t + 1; });
  const auto cum = cumulative_delta_integral(phi);
  for (int t = 0; t <= 5; ++t) CHECK(cum[t] == t * t);

  const auto iv = TimeScale::custom({3}, {{0, 2}}, 33);
  const auto g = GridFunction::sample(iv, [](double t) { return std::cos(t); });
  const auto c = cumulative_delta_integral(g);
  for (std::size_t i = 0; i < iv.size(); ++i)
    CHECK(c[i] == doctest::Approx(delta_integral(g, iv.a(), iv.point(i))).epsilon(1e-14));
  CHECK(c[iv.size() - 1] == doctest::Approx(std::sin(2.0) + std::cos(2.0)).epsilon(1e-6));
}
