#include "tscale/solvers.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "tscale/delta_calculus.hpp"
#include "tscale/errors.hpp"
#include "tscale/roots.hpp"

namespace tscale {

const char* to_string(ProblemKind kind) noexcept {
  switch (kind) {
    case ProblemKind::power_weighted: return "power_weighted";
    case ProblemKind::exp_derivative: return "exp_derivative";
    case ProblemKind::xlogx_shifted: return "xlogx_shifted";
  }
  return "unknown";
}

const char* to_string(Extremum e) noexcept { return e == Extremum::min ? "min" : "max"; }

namespace {

void require_kind(const VariationalProblem& p, ProblemKind kind) {
  if (p.kind != kind)
    throw PreconditionError(std::string("expected a ") + to_string(kind) + " problem, got " +
                            to_string(p.kind));
}

double length(const VariationalProblem& p) { return p.ts.b() - p.ts.a(); }

// phi(t) on kappa points; DomainError unless positive there.
GridFunction positive_weight_on_kappa(const VariationalProblem& p) {
  const TimeScale& ts = p.ts;
  std::vector<double> v(ts.size(), 0.0);
  for (std::size_t i = 0; i < ts.kappa_size(); ++i) {
    const double t = ts.point(i);
    const double w = p.phi.in_domain(t) ? p.phi(t) : std::nan("");
    if (!(w > 0.0)) {
      std::ostringstream os;
      os << "phi must be positive on [a,b]^kappa; phi(" << t << ") = " << w;
      throw DomainError(os.str());
    }
    v[i] = w;
  }
  return GridFunction(ts, std::move(v));
}

// int_a^t phi Delta s at every point; exact through the antiderivative on
// interval segments.
std::vector<double> weight_integral(const VariationalProblem& p, const GridFunction& weight) {
  const TimeScale& ts = p.ts;
  std::vector<double> out(ts.size(), 0.0);
  for (std::size_t i = 0; i + 1 < ts.size(); ++i)
    out[i + 1] = out[i] + (ts.right_dense(i) ? p.phi.integral(ts.point(i), ts.point(i + 1))
                                             : ts.mu(i) * weight[i]);
  return out;
}

void require_increasing(const GridFunction& y) {
  const auto d = delta_derivative(y);
  for (std::size_t i = 0; i < d.size(); ++i)
    if (!(d[i] > kPositivityThreshold)) {
      std::ostringstream os;
      os << "trajectory is not strictly increasing at t = " << y.timescale().point(i);
      throw DomainError(os.str());
    }
}

}  // namespace

CumulativeWeight::CumulativeWeight(ScalarFunction phi, double upper)
    : phi_(std::move(phi)), upper_(upper) {
  if (!(upper > 0.0)) throw PreconditionError("cumulative weight needs a positive upper bound");
  const OpenInterval d = phi_.domain();
  if (!d.contains(0.0, upper)) {
    std::ostringstream os;
    os << "phi = " << phi_.describe() << " is not defined on [0, " << upper << "]";
    throw DomainError(os.str());
  }
  constexpr int kSamples = 257;
  for (int k = 0; k < kSamples; ++k) {
    const double x = upper * k / (kSamples - 1);
    if (!(phi_(x) > 0.0)) {
      std::ostringstream os;
      os << "phi must be positive; phi(" << x << ") = " << phi_(x);
      throw DomainError(os.str());
    }
  }
  base_ = phi_.antiderivative(0.0);
}

double CumulativeWeight::inverse(double u) const {
  const double top = (*this)(upper_);
  if (u <= 0.0) return 0.0;
  if (u >= top) return upper_;
  double hi = 1.0;
  while (hi < upper_ && (*this)(hi) < u) hi *= 2.0;
  hi = std::min(hi, upper_);
  return solve_increasing([this](double x) { return (*this)(x); },
                          [this](double x) { return phi_(x); }, u, 0.0, hi, 1e-12);
}

Solution solve_power_weighted(const VariationalProblem& p) {
  require_kind(p, ProblemKind::power_weighted);
  const double len = length(p);
  if (p.alpha == 0.0)
    throw DegenerateProblemError("alpha = 0: the functional equals b - a for every admissible y",
                                 len);
  if (!(p.B > 0.0))
    throw PreconditionError("power-weighted problem requires B > 0 (y(a) = 0 and y^Delta > 0)");
  const CumulativeWeight G(p.phi, p.B);
  const double GB = G(p.B);
  if (p.alpha == 1.0) {
    std::ostringstream os;
    os << "alpha = 1: the functional equals G(B) = " << GB << " for every admissible y";
    throw DegenerateProblemError(os.str(), GB);
  }
  if (!std::isfinite(p.alpha)) throw ParameterError("alpha must be finite");

  const double C = GB / len;
  const TimeScale& ts = p.ts;
  std::vector<double> y(ts.size());
  for (std::size_t i = 0; i < ts.size(); ++i) y[i] = G.inverse(C * (ts.point(i) - ts.a()));
  y.front() = 0.0;
  y.back() = p.B;
  GridFunction trajectory(ts, std::move(y));
  require_increasing(trajectory);

  const Extremum ext = (p.alpha < 0.0 || p.alpha > 1.0) ? Extremum::min : Extremum::max;
  return {std::move(trajectory), len * std::pow(C, p.alpha), ext, C};
}

Solution solve_exp_derivative(const VariationalProblem& p) {
  require_kind(p, ProblemKind::exp_derivative);
  const GridFunction weight = positive_weight_on_kappa(p);
  std::vector<double> log_weight(weight.size(), 0.0);
  for (std::size_t i = 0; i < p.ts.kappa_size(); ++i) log_weight[i] = std::log(weight[i]);
  const GridFunction log_phi(p.ts, std::move(log_weight));

  const double len = length(p);
  const double C = (delta_integral(log_phi) + p.B) / len;
  const GridFunction cumulative = cumulative_delta_integral(log_phi);
  std::vector<double> y(p.ts.size());
  for (std::size_t i = 0; i < y.size(); ++i)
    y[i] = -cumulative[i] + C * (p.ts.point(i) - p.ts.a());
  y.front() = 0.0;
  return {GridFunction(p.ts, std::move(y)), len * std::exp(C), Extremum::min, C};
}

Solution solve_xlogx_shifted(const VariationalProblem& p) {
  require_kind(p, ProblemKind::xlogx_shifted);
  const GridFunction weight = positive_weight_on_kappa(p);
  const double len = length(p);
  const std::vector<double> cumulative = weight_integral(p, weight);
  const double C = (p.B + cumulative.back()) / len;
  for (std::size_t i = 0; i < p.ts.kappa_size(); ++i)
    if (!(C > weight[i])) {
      const double t = p.ts.point(i);
      std::ostringstream os;
      os << "infeasible: C = " << C << " does not exceed phi(" << t << ") = " << weight[i];
      throw FeasibilityError(os.str(), t);
    }
  std::vector<double> y(p.ts.size());
  for (std::size_t i = 0; i < y.size(); ++i)
    y[i] = C * (p.ts.point(i) - p.ts.a()) - cumulative[i];
  y.front() = 0.0;
  GridFunction trajectory(p.ts, std::move(y));
  require_increasing(trajectory);
  return {std::move(trajectory), len * C * std::log(C), Extremum::min, C};
}

Solution solve(const VariationalProblem& p) {
  switch (p.kind) {
    case ProblemKind::power_weighted: return solve_power_weighted(p);
    case ProblemKind::exp_derivative: return solve_exp_derivative(p);
    case ProblemKind::xlogx_shifted: return solve_xlogx_shifted(p);
  }
  throw PreconditionError("unknown problem kind");
}

std::optional<Violation> admissibility_violation(const VariationalProblem& p,
                                                 const GridFunction& y) {
  const TimeScale& ts = p.ts;
  if (!y.timescale().same_grid(ts))
    return Violation{"grid", ts.a(), "candidate lives on a different time scale"};
  auto fail = [](std::string cond, double t, auto&&... parts) {
    std::ostringstream os;
    (os << ... << parts);
    return Violation{std::move(cond), t, os.str()};
  };
  if (std::abs(y[0]) > kBoundaryTolerance)
    return fail("boundary_a", ts.a(), "y(a) = ", y[0], " but must be 0");
  if (std::abs(y[y.size() - 1] - p.B) > kBoundaryTolerance)
    return fail("boundary_b", ts.b(), "y(b) = ", y[y.size() - 1], " but must be ", p.B);
  if (p.kind == ProblemKind::exp_derivative) return std::nullopt;
  const auto d = delta_derivative(y);
  for (std::size_t i = 0; i < d.size(); ++i) {
    const double t = ts.point(i);
    if (!(d[i] > kPositivityThreshold))
      return fail("increasing", t, "y^Delta(", t, ") = ", d[i], " is not positive");
    if (p.kind == ProblemKind::xlogx_shifted && p.phi.in_domain(t) && !(p.phi(t) + d[i] > 0.0))
      return fail("log_argument", t, "phi + y^Delta is not positive at t = ", t);
  }
  return std::nullopt;
}

double evaluate_functional(const VariationalProblem& p, const GridFunction& y) {
  if (auto v = admissibility_violation(p, y))
    throw AdmissibilityError("inadmissible trajectory: " + v->message, v->condition, v->point);
  const TimeScale& ts = p.ts;
  const auto d = delta_derivative(y);
  std::vector<double> integrand(ts.size(), 0.0);
  switch (p.kind) {
    case ProblemKind::power_weighted:
      for (std::size_t i = 0; i < d.size(); ++i)
        integrand[i] = std::pow(averaged_chain_factor(p.phi, y[i], ts.mu(i), d[i]) * d[i], p.alpha);
      break;
    case ProblemKind::exp_derivative: {
      const GridFunction w = positive_weight_on_kappa(p);
      for (std::size_t i = 0; i < d.size(); ++i) integrand[i] = w[i] * std::exp(d[i]);
      break;
    }
    case ProblemKind::xlogx_shifted: {
      const GridFunction w = positive_weight_on_kappa(p);
      for (std::size_t i = 0; i < d.size(); ++i) {
        const double s = w[i] + d[i];
        integrand[i] = s * std::log(s);
      }
      break;
    }
  }
  return delta_integral(GridFunction(ts, std::move(integrand)));
}

}  // namespace tscale
