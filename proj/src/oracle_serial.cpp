#include <optional>

#include "oracle_kernels.hpp"

namespace tscale::kernels {

namespace {

// Depth-first walk over increments in lexicographic order; no ranking.
struct Walker {
  const Target& target;
  const LatticeSpec& spec;
  std::vector<std::uint64_t> parts;
  std::vector<double> y;
  std::uint64_t index = 0;
  Partial result;

  void run(std::size_t depth, std::uint64_t used) {
    if (depth == parts.size()) {
      lattice_trajectory(spec, parts, y);
      const VariationalProblem& p = *target.problem;
      consider(result, target, index++, evaluate_functional(p, GridFunction(p.ts, y)), y);
      return;
    }
    const std::uint64_t still_needed = parts.size() - depth - 1;
    for (std::uint64_t m = 1; used + m + still_needed <= spec.budget; ++m) {
      parts[depth] = m;
      run(depth + 1, used + m);
    }
  }
};

}  // namespace

Partial exhaustive_serial(const Target& target, const LatticeSpec& spec) {
  Walker w{target, spec, std::vector<std::uint64_t>(spec.increments - 1),
           std::vector<double>(spec.increments + 1), 0, Partial{}};
  w.run(0, 0);
  return std::move(w.result);
}

Partial random_serial(const Target& target, std::uint64_t samples, std::uint64_t seed) {
  const VariationalProblem& p = *target.problem;
  Partial result;
  std::vector<double> y(p.ts.size());
  std::optional<SampleStream> stream;
  for (std::uint64_t idx = 0; idx < samples; ++idx) {
    if (idx % kBlock == 0) stream.emplace(seed, idx / kBlock);
    stream->next(p.B, y);
    consider(result, target, idx, evaluate_functional(p, GridFunction(p.ts, y)), y);
  }
  return result;
}

}  // namespace tscale::kernels
