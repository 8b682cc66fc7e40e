#pragma once

// Candidate scans behind the enumeration and sampling oracles. The OpenMP
// kernels split the candidate index range into fixed chunks and merge the
// per-chunk results in chunk order, so the outcome is independent of the
// thread count. The serial references walk candidates one by one and are
// kept as the cross-check for the parallel paths.

#include <cstdint>
#include <limits>
#include <random>
#include <span>
#include <vector>

#include "tscale/validation.hpp"

namespace tscale::kernels {

struct Partial {
  std::uint64_t evaluated = 0;
  double best_value = std::numeric_limits<double>::quiet_NaN();
  std::uint64_t best_index = std::numeric_limits<std::uint64_t>::max();
  std::vector<double> best_y;
  std::uint64_t matching = 0;
};

/// What a scan compares against.
struct Target {
  const VariationalProblem* problem;
  Extremum extremum;
  double claim;
};

void consider(Partial& part, const Target& target, std::uint64_t index, double value,
              std::span<const double> y);
/// Folds `later` (covering higher indices) into `into`.
void merge(Partial& into, Partial&& later, Extremum extremum);

/// Lattice layout shared by both exhaustive paths.
struct LatticeSpec {
  std::size_t increments;  ///< k = points - 1
  std::uint64_t budget;    ///< bound on m_1 + ... + m_(k-1)
  double resolution;
  double B;
  std::uint64_t count;
};

LatticeSpec lattice_spec(const VariationalProblem& p, double resolution);

/// y from the free parts (m_1, ..., m_(k-1)); the final value is B.
void lattice_trajectory(const LatticeSpec& spec, std::span<const std::uint64_t> parts,
                        std::span<double> y);

/// Candidates are grouped in blocks; parallel chunks coincide with blocks.
inline constexpr std::uint64_t kBlock = 2048;

/// Random-oracle samples of one block. The engine is seeded from
/// (seed, block) and sample i is the (i mod kBlock)-th draw, so every sample
/// depends only on (seed, i).
class SampleStream {
 public:
  SampleStream(std::uint64_t seed, std::uint64_t block);
  /// Next trajectory with positive increments summing to B.
  void next(double B, std::span<double> y);

 private:
  std::mt19937_64 rng_;
};

Partial exhaustive_parallel(const Target& target, const LatticeSpec& spec);
Partial exhaustive_serial(const Target& target, const LatticeSpec& spec);

Partial random_parallel(const Target& target, std::uint64_t samples, std::uint64_t seed);
Partial random_serial(const Target& target, std::uint64_t samples, std::uint64_t seed);

}  // namespace tscale::kernels
