#include <algorithm>
#include <cmath>
#include <random>
#include <sstream>

#include "oracle_kernels.hpp"
#include "tscale/delta_calculus.hpp"
#include "tscale/errors.hpp"
#include "tscale/validation.hpp"

namespace tscale {

const char* to_string(Verdict v) noexcept {
  return v == Verdict::certified ? "certified" : "refuted";
}

const char* to_string(OracleMode::Kind k) noexcept {
  switch (k) {
    case OracleMode::Kind::exhaustive: return "exhaustive";
    case OracleMode::Kind::random: return "random";
    case OracleMode::Kind::perturbation: return "perturbation";
  }
  return "unknown";
}

Claim claim_from_solver(const VariationalProblem& p) {
  Solution s = solve(p);
  return {std::move(s.trajectory), s.optimal_value, s.extremum};
}

namespace {

Verdict judge(double best, const Claim& claim) {
  const bool ok = claim.extremum == Extremum::min ? best >= claim.value - kCertificationSlack
                                                  : best <= claim.value + kCertificationSlack;
  return ok ? Verdict::certified : Verdict::refuted;
}

OracleReport report_from(const VariationalProblem& p, const Claim& claim,
                         kernels::Partial&& part, OracleMode mode) {
  GridFunction best(p.ts, std::move(part.best_y));
  const Verdict v = judge(part.best_value, claim);
  return {part.evaluated, part.best_value, std::move(best), claim.value,
          claim.extremum, v,  mode,           part.matching};
}

void require_same_grid(const VariationalProblem& p, const Claim& claim) {
  if (!claim.trajectory.timescale().same_grid(p.ts))
    throw PreconditionError("claimed trajectory lives on a different time scale");
}

}  // namespace

std::uint64_t exhaustive_candidate_count(const VariationalProblem& p, double resolution) {
  return kernels::lattice_spec(p, resolution).count;
}

OracleReport exhaustive_verify(const VariationalProblem& p, double resolution, Execution exec) {
  kernels::lattice_spec(p, resolution);  // budget and lattice checks before solving
  return exhaustive_verify(p, resolution, claim_from_solver(p), exec);
}

OracleReport exhaustive_verify(const VariationalProblem& p, double resolution,
                               const Claim& claim, Execution exec) {
  require_same_grid(p, claim);
  const auto spec = kernels::lattice_spec(p, resolution);
  const kernels::Target target{&p, claim.extremum, claim.value};
  auto part = exec == Execution::parallel ? kernels::exhaustive_parallel(target, spec)
                                          : kernels::exhaustive_serial(target, spec);
  OracleMode mode{OracleMode::Kind::exhaustive};
  mode.resolution = resolution;
  return report_from(p, claim, std::move(part), mode);
}

OracleReport random_verify(const VariationalProblem& p, std::uint64_t samples,
                           std::uint64_t seed, Execution exec) {
  return random_verify(p, samples, seed, claim_from_solver(p), exec);
}

OracleReport random_verify(const VariationalProblem& p, std::uint64_t samples,
                           std::uint64_t seed, const Claim& claim, Execution exec) {
  if (!p.ts.is_discrete()) throw PreconditionError("random oracle needs a discrete time scale");
  if (samples < 1) throw PreconditionError("random oracle needs at least one sample");
  if (p.kind != ProblemKind::exp_derivative && !(p.B > 0.0))
    throw PreconditionError("increasing trajectories with y(a) = 0 need B > 0");
  require_same_grid(p, claim);
  const kernels::Target target{&p, claim.extremum, claim.value};
  auto part = exec == Execution::parallel ? kernels::random_parallel(target, samples, seed)
                                          : kernels::random_serial(target, samples, seed);
  OracleMode mode{OracleMode::Kind::random};
  mode.samples = samples;
  mode.seed = seed;
  return report_from(p, claim, std::move(part), mode);
}

OracleReport perturbation_verify(const VariationalProblem& p, double eps) {
  return perturbation_verify(p, eps, claim_from_solver(p));
}

OracleReport perturbation_verify(const VariationalProblem& p, double eps, const Claim& claim) {
  if (!p.ts.is_discrete())
    throw PreconditionError("perturbation oracle needs a discrete time scale");
  if (!(eps > 0.0)) throw PreconditionError("eps must be positive");
  require_same_grid(p, claim);

  const auto base_values = claim.trajectory.values();
  const std::vector<double> base(base_values.begin(), base_values.end());
  const double base_value = evaluate_functional(p, claim.trajectory);

  // Moves as (index, sign) lists: every single point, then pairs.
  const std::size_t n = base.size();
  std::vector<std::vector<std::pair<std::size_t, double>>> moves;
  for (std::size_t i = 1; i + 1 < n; ++i)
    for (double s : {1.0, -1.0}) moves.push_back({{i, s}});
  std::vector<std::pair<std::size_t, std::size_t>> pairs;
  for (std::size_t i = 1; i + 1 < n; ++i)
    for (std::size_t j = i + 1; j + 1 < n; ++j) pairs.emplace_back(i, j);
  constexpr std::size_t kMaxPairs = 64;
  std::mt19937_64 rng(0x5eed);
  std::shuffle(pairs.begin(), pairs.end(), rng);
  if (pairs.size() > kMaxPairs) pairs.resize(kMaxPairs);
  for (auto [i, j] : pairs)
    for (double si : {1.0, -1.0})
      for (double sj : {1.0, -1.0}) moves.push_back({{i, si}, {j, sj}});

  auto apply = [&](const auto& move, double step) {
    std::vector<double> y = base;
    for (auto [i, s] : move) y[i] += s * step;
    return GridFunction(p.ts, std::move(y));
  };

  int halvings = 0;
  for (;; ++halvings) {
    const bool admissible = std::all_of(moves.begin(), moves.end(), [&](const auto& m) {
      return !admissibility_violation(p, apply(m, eps));
    });
    if (admissible) break;
    if (halvings == 40) {
      std::ostringstream os;
      os << "no admissible perturbation size found after 40 halvings (eps = " << eps << ")";
      throw PreconditionError(os.str());
    }
    eps *= 0.5;
  }

  kernels::Partial part;
  // Judge against the claim's own evaluated value with the tighter slack.
  const kernels::Target target{&p, claim.extremum, base_value};
  for (std::size_t k = 0; k < moves.size(); ++k) {
    const GridFunction y = apply(moves[k], eps);
    kernels::consider(part, target, k, evaluate_functional(p, y), y.values());
  }

  OracleMode mode{OracleMode::Kind::perturbation};
  mode.eps = eps;
  if (part.evaluated == 0) {
    return {0, base_value, claim.trajectory, claim.value, claim.extremum, Verdict::certified,
            mode, 0};
  }
  const bool improved = claim.extremum == Extremum::min
                            ? part.best_value < base_value - kPerturbationSlack
                            : part.best_value > base_value + kPerturbationSlack;
  GridFunction best(p.ts, std::move(part.best_y));
  return {part.evaluated, part.best_value, std::move(best), claim.value, claim.extremum,
          improved ? Verdict::refuted : Verdict::certified, mode, part.matching};
}

CounterexampleReport wsc_counterexample(int quadrature_nodes) {
  const TimeScale ts = TimeScale::real_interval(0.0, 1.0, quadrature_nodes);
  const auto phi = ScalarFunction::affine(1.0, 1.0);
  const GridFunction y = GridFunction::sample(ts, [](double x) { return x; });
  const auto slope = delta_derivative(y);

  std::vector<double> log_integrand(ts.size()), reciprocal(ts.size());
  for (std::size_t i = 0; i < ts.size(); ++i) {
    const double x = ts.point(i);
    log_integrand[i] = std::log(phi(x) * slope[i]);
    reciprocal[i] = 1.0 / phi(x);
  }
  constexpr double kA = 1.0;
  CounterexampleReport r{};
  r.I_tilde = delta_integral(GridFunction(ts, std::move(log_integrand)));
  r.C = delta_integral(GridFunction(ts, std::move(reciprocal))) / kA;
  r.I_max_claimed = -std::log(r.C);
  r.margin = r.I_tilde - r.I_max_claimed;
  r.contradiction = r.I_tilde > r.I_max_claimed;
  return r;
}

}  // namespace tscale
