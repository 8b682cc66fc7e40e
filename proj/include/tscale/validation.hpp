#pragma once

#include <cstdint>

#include "tscale/grid_function.hpp"
#include "tscale/solvers.hpp"

namespace tscale {

/// Slack allowed between an oracle's best value and the claimed optimum.
inline constexpr double kCertificationSlack = 1e-9;
/// Improvement a local perturbation must beat to refute a claim.
inline constexpr double kPerturbationSlack = 1e-12;
inline constexpr std::uint64_t kEnumerationBudget = 10'000'000;
inline constexpr std::size_t kMaxEnumerationAtoms = 8;

/// A trajectory put forward as the extremizer, with its functional value.
struct Claim {
  GridFunction trajectory;
  double value;
  Extremum extremum;
};

/// The closed-form solution of p as a claim.
Claim claim_from_solver(const VariationalProblem& p);

struct OracleMode {
  enum class Kind { exhaustive, random, perturbation };
  Kind kind;
  double resolution = 0.0;    ///< exhaustive
  std::uint64_t samples = 0;  ///< random
  std::uint64_t seed = 0;     ///< random
  double eps = 0.0;           ///< perturbation, after any halving
};

enum class Verdict { certified, refuted };

struct OracleReport {
  std::uint64_t candidates_evaluated;
  double best_value_found;
  /// The best candidate; when refuted, this is the refuting candidate.
  GridFunction best_candidate;
  double closed_form_value;
  Extremum extremum;
  Verdict verdict;
  OracleMode mode;
  /// Candidates that match or beat the claim within the slack.
  std::uint64_t matching_claim;
};

const char* to_string(Verdict v) noexcept;
const char* to_string(OracleMode::Kind k) noexcept;

enum class Execution { parallel, serial };

/// Enumerates every trajectory with y(a) = 0, y(b) = B whose increments are
/// positive multiples of `resolution` (the last increment absorbs any
/// remainder of B). Discrete scales with at most 8 points only.
OracleReport exhaustive_verify(const VariationalProblem& p, double resolution,
                               Execution exec = Execution::parallel);
OracleReport exhaustive_verify(const VariationalProblem& p, double resolution,
                               const Claim& claim, Execution exec = Execution::parallel);

/// Number of lattice candidates exhaustive_verify would evaluate.
std::uint64_t exhaustive_candidate_count(const VariationalProblem& p, double resolution);

/// Draws `samples` trajectories with positive increments summing to B from a
/// normalised uniform(0,1] weight vector. Candidate i depends only on
/// (seed, i), so results do not depend on the thread count.
OracleReport random_verify(const VariationalProblem& p, std::uint64_t samples,
                           std::uint64_t seed, Execution exec = Execution::parallel);
OracleReport random_verify(const VariationalProblem& p, std::uint64_t samples,
                           std::uint64_t seed, const Claim& claim,
                           Execution exec = Execution::parallel);

/// Moves each interior value of the claimed trajectory by +-eps, alone and in
/// pairs, and checks that none improves on it by more than
/// kPerturbationSlack. eps is halved (at most 40 times) until every
/// perturbation stays admissible.
OracleReport perturbation_verify(const VariationalProblem& p, double eps);
OracleReport perturbation_verify(const VariationalProblem& p, double eps, const Claim& claim);

/// Evaluates a functional bound claimed in the literature on a concrete
/// instance: phi(x) = x + 1, y(x) = x on [0, 1], A = 1.
struct CounterexampleReport {
  double I_tilde;        ///< int_0^1 ln(phi(x) y'(x)) dx
  double C;              ///< int_0^1 1/phi(x) dx
  double I_max_claimed;  ///< -ln(C)
  double margin;         ///< I_tilde - I_max_claimed
  bool contradiction;
};

CounterexampleReport wsc_counterexample(int quadrature_nodes = TimeScale::kDefaultQuadratureNodes);

}  // namespace tscale
