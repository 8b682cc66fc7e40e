#include <exception>

#include <omp.h>

#include "lattice.hpp"
#include "oracle_kernels.hpp"

namespace tscale::kernels {

namespace {

constexpr std::uint64_t kChunk = kBlock;

// Runs body(chunk_begin, chunk_end, partial) over fixed chunks and merges the
// partials in chunk order.
template <class Body>
Partial chunked(const Target& target, std::uint64_t n, Body&& body) {
  const std::uint64_t chunks = (n + kChunk - 1) / kChunk;
  std::vector<Partial> parts(chunks);
  std::vector<std::exception_ptr> errors(chunks);
#pragma omp parallel for schedule(dynamic, 1)
  for (std::int64_t c = 0; c < static_cast<std::int64_t>(chunks); ++c) {
    const std::uint64_t begin = static_cast<std::uint64_t>(c) * kChunk;
    const std::uint64_t end = std::min(n, begin + kChunk);
    try {
      body(begin, end, parts[c]);
    } catch (...) {
      errors[c] = std::current_exception();
    }
  }
  for (auto& e : errors)
    if (e) std::rethrow_exception(e);
  Partial total;
  for (auto& part : parts) merge(total, std::move(part), target.extremum);
  return total;
}

}  // namespace

Partial exhaustive_parallel(const Target& target, const LatticeSpec& spec) {
  const VariationalProblem& p = *target.problem;
  return chunked(target, spec.count, [&](std::uint64_t begin, std::uint64_t end, Partial& part) {
    std::vector<std::uint64_t> parts(spec.increments - 1);
    std::vector<double> y(spec.increments + 1);
    lattice::unrank(begin, spec.budget, parts);
    for (std::uint64_t idx = begin; idx < end; ++idx) {
      if (idx != begin) lattice::next(parts, spec.budget);
      lattice_trajectory(spec, parts, y);
      consider(part, target, idx, evaluate_functional(p, GridFunction(p.ts, y)), y);
    }
  });
}

Partial random_parallel(const Target& target, std::uint64_t samples, std::uint64_t seed) {
  const VariationalProblem& p = *target.problem;
  return chunked(target, samples, [&](std::uint64_t begin, std::uint64_t end, Partial& part) {
    std::vector<double> y(p.ts.size());
    SampleStream stream(seed, begin / kBlock);
    for (std::uint64_t idx = begin; idx < end; ++idx) {
      stream.next(p.B, y);
      consider(part, target, idx, evaluate_functional(p, GridFunction(p.ts, y)), y);
    }
  });
}

}  // namespace tscale::kernels
