#include "tscale/jensen.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "tscale/delta_calculus.hpp"
#include "tscale/errors.hpp"
#include "tscale/roots.hpp"

namespace tscale {

namespace {

struct Range {
  double lo, hi;
};

Range kappa_range(const GridFunction& f) {
  const auto v = f.kappa_values();
  const auto [lo, hi] = std::minmax_element(v.begin(), v.end());
  return {*lo, *hi};
}

// Integrand g(f(t)) on kappa points, zero elsewhere.
template <class Fn>
GridFunction map_kappa(const GridFunction& f, Fn&& g) {
  std::vector<double> out(f.size(), 0.0);
  const auto v = f.kappa_values();
  for (std::size_t i = 0; i < v.size(); ++i) out[i] = g(v[i], i);
  return GridFunction(f.timescale(), std::move(out));
}

InequalityReport make_report(double lhs, double rhs, Direction dir, Range r) {
  const double gap = dir == Direction::convex_ge ? lhs - rhs : rhs - lhs;
  return {lhs,
          rhs,
          gap,
          dir,
          gap >= -kEqualityTolerance,
          std::abs(gap) <= kEqualityTolerance,
          r.hi - r.lo <= kConstancyTolerance};
}

Direction direction_of(const Curvature& c) {
  return c.kind == Curvature::Kind::concave ? Direction::concave_le : Direction::convex_ge;
}

void require_positive(const GridFunction& f, const char* what) {
  const auto v = f.kappa_values();
  for (std::size_t i = 0; i < v.size(); ++i)
    if (!(v[i] > 0.0)) {
      std::ostringstream os;
      os << what << " requires positive f; f(" << f.timescale().point(i) << ") = " << v[i];
      throw DomainError(os.str());
    }
}

double length(const GridFunction& f) { return f.timescale().b() - f.timescale().a(); }

// Inverse of a strictly monotone g on [lo, hi] evaluated at target.
double invert_on_range(const ScalarFunction& g, double target, Range r) {
  if (r.lo == r.hi) return r.lo;
  if (auto x = g.inverse(target); x && std::isfinite(*x)) return *x;
  const bool increasing = g.derivative(r.lo) > 0;
  const double at_lo = increasing ? g(r.lo) : -g(r.lo);
  const double at_hi = increasing ? g(r.hi) : -g(r.hi);
  const double t = increasing ? target : -target;
  if (t <= at_lo) return r.lo;
  if (t >= at_hi) return r.hi;
  if (increasing)
    return solve_increasing([&](double x) { return g(x); },
                            [&](double x) { return g.derivative(x); }, target, r.lo, r.hi,
                            0.0);
  return solve_increasing([&](double x) { return -g(x); },
                          [&](double x) { return -g.derivative(x); }, -target, r.lo, r.hi,
                          0.0);
}

}  // namespace

InequalityReport weighted_jensen_gap(const GridFunction& f, const GridFunction& h,
                                     const ScalarFunction& F) {
  if (!f.timescale().same_grid(h.timescale()))
    throw PreconditionError("f and h live on different time scales");
  const Range r = kappa_range(f);
  const Curvature c = F.classify(r.lo, r.hi);
  const auto hv = h.values();
  const double weight = delta_integral(map_kappa(f, [&](double, std::size_t i) {
    return std::abs(hv[i]);
  }));
  if (!(weight > 0.0)) throw PreconditionError("weighted Jensen requires integral of |h| > 0");
  const double weighted_F = delta_integral(map_kappa(f, [&](double x, std::size_t i) {
    return std::abs(hv[i]) * F(x);
  }));
  const double weighted_f = delta_integral(map_kappa(f, [&](double x, std::size_t i) {
    return std::abs(hv[i]) * x;
  }));
  return make_report(weighted_F / weight, F(weighted_f / weight), direction_of(c), r);
}

InequalityReport jensen_gap(const GridFunction& f, const ScalarFunction& F) {
  const Range r = kappa_range(f);
  const Curvature c = F.classify(r.lo, r.hi);
  const double len = length(f);
  const double int_F = delta_integral(map_kappa(f, [&](double x, std::size_t) { return F(x); }));
  const double int_f = delta_integral(map_kappa(f, [](double x, std::size_t) { return x; }));
  return make_report(int_F / len, F(int_f / len), direction_of(c), r);
}

InequalityReport special_case_gap(const SpecialCase& which, const GridFunction& f) {
  const Range r = kappa_range(f);
  const double len = length(f);
  auto integral = [&](auto&& g) {
    return delta_integral(map_kappa(f, [&](double x, std::size_t) { return g(x); }));
  };
  const double a = which.alpha;
  switch (which.kind) {
    case SpecialCase::Kind::power: {
      if (a == 0.0 || a == 1.0) throw ParameterError("power inequality excludes alpha in {0, 1}");
      require_positive(f, "power inequality");
      const double lhs = integral([a](double x) { return std::pow(x, a); });
      const double rhs = std::pow(len, 1.0 - a) * std::pow(integral([](double x) { return x; }), a);
      const auto dir = (a < 0.0 || a > 1.0) ? Direction::convex_ge : Direction::concave_le;
      return make_report(lhs, rhs, dir, r);
    }
    case SpecialCase::Kind::reciprocal_power: {
      if (a == 0.0 || a == -1.0)
        throw ParameterError("reciprocal power inequality excludes alpha in {-1, 0}");
      require_positive(f, "reciprocal power inequality");
      // Both sides are invariant under scaling f; averaging f / f(a) against
      // the same quadrature of 1 makes constant f give exactly rhs.
      const double ref = f[0];
      const double unit = integral([](double) { return 1.0; });
      const double inv = integral([ref](double x) { return ref / x; }) / unit;
      const double pw = integral([a, ref](double x) { return std::pow(x / ref, a); }) / unit;
      const double rhs = std::pow(len, 1.0 + a);
      const double lhs = rhs * (std::pow(inv, a) * pw);
      const auto dir = (a < -1.0 || a > 0.0) ? Direction::convex_ge : Direction::concave_le;
      return make_report(lhs, rhs, dir, r);
    }
    case SpecialCase::Kind::exp: {
      const double lhs = integral([](double x) { return std::exp(x); });
      const double rhs = len * std::exp(integral([](double x) { return x; }) / len);
      return make_report(lhs, rhs, Direction::convex_ge, r);
    }
    case SpecialCase::Kind::log: {
      require_positive(f, "log inequality");
      const double lhs = integral([](double x) { return std::log(x); });
      const double rhs = len * std::log(integral([](double x) { return x; }) / len);
      return make_report(lhs, rhs, Direction::concave_le, r);
    }
    case SpecialCase::Kind::xlogx: {
      require_positive(f, "x log x inequality");
      const double lhs = integral([](double x) { return x * std::log(x); });
      const double mass = integral([](double x) { return x; });
      return make_report(lhs, mass * std::log(mass / len), Direction::convex_ge, r);
    }
  }
  throw ParameterError("unknown special case");
}

InequalityReport quasi_arithmetic_gap(const GridFunction& f, const ScalarFunction& phi,
                                      const ScalarFunction& psi) {
  const Range r = kappa_range(f);
  for (const auto* g : {&phi, &psi})
    if (!g->domain().contains(r.lo, r.hi)) {
      std::ostringstream os;
      os << "range of f [" << r.lo << ", " << r.hi << "] leaves the domain of " << g->describe();
      throw DomainError(os.str());
    }

  constexpr int kSamples = 257;
  bool up = false, down = false;
  for (int k = 0; k < kSamples; ++k) {
    const double x = r.lo + (r.hi - r.lo) * k / (kSamples - 1);
    const double dphi = phi.derivative(x);
    if (dphi > 0) up = true;
    else if (dphi < 0) down = true;
    else up = down = true;
    if (!(psi.derivative(x) > 0))
      throw PreconditionError("psi must be strictly increasing on the range of f");
  }
  if (up && down) throw PreconditionError("phi is not injective on the range of f");

  // Curvature of psi o phi^-1, parametrised by u = phi^-1(x).
  const Curvature c = classify_samples(
      [&](double u) {
        const double d1 = phi.derivative(u);
        return (psi.second_derivative(u) * d1 - psi.derivative(u) * phi.second_derivative(u)) /
               (d1 * d1 * d1);
      },
      r.lo, r.hi, kSamples);

  const double len = length(f);
  const double mean_psi =
      delta_integral(map_kappa(f, [&](double x, std::size_t) { return psi(x); })) / len;
  const double mean_phi =
      delta_integral(map_kappa(f, [&](double x, std::size_t) { return phi(x); })) / len;
  const double lhs = invert_on_range(psi, mean_psi, r);
  const double rhs = invert_on_range(phi, mean_phi, r);
  return make_report(lhs, rhs, direction_of(c), r);
}

}  // namespace tscale
