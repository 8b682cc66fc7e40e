#include <array>
#include <cmath>
#include <random>
#include <sstream>

#include "lattice.hpp"
#include "oracle_kernels.hpp"
#include "tscale/errors.hpp"

namespace tscale::kernels {

namespace {
bool strictly_better(double a, double b, Extremum e) { return e == Extremum::min ? a < b : a > b; }
}  // namespace

void consider(Partial& part, const Target& target, std::uint64_t index, double value,
              std::span<const double> y) {
  ++part.evaluated;
  const bool matches = target.extremum == Extremum::min
                           ? value <= target.claim + kCertificationSlack
                           : value >= target.claim - kCertificationSlack;
  if (matches) ++part.matching;
  if (part.evaluated == 1 || strictly_better(value, part.best_value, target.extremum)) {
    part.best_value = value;
    part.best_index = index;
    part.best_y.assign(y.begin(), y.end());
  }
}

void merge(Partial& into, Partial&& later, Extremum extremum) {
  if (later.evaluated == 0) return;
  if (into.evaluated == 0 || strictly_better(later.best_value, into.best_value, extremum)) {
    into.best_value = later.best_value;
    into.best_index = later.best_index;
    into.best_y = std::move(later.best_y);
  }
  into.evaluated += later.evaluated;
  into.matching += later.matching;
}

LatticeSpec lattice_spec(const VariationalProblem& p, double resolution) {
  const TimeScale& ts = p.ts;
  if (!ts.is_discrete() || ts.size() > kMaxEnumerationAtoms) {
    std::ostringstream os;
    os << "exhaustive enumeration needs a discrete time scale with at most "
       << kMaxEnumerationAtoms << " points";
    throw PreconditionError(os.str());
  }
  if (!(resolution > 0.0) || !std::isfinite(resolution))
    throw PreconditionError("resolution must be positive");
  if (!(p.B > 0.0)) throw PreconditionError("enumeration of positive increments needs B > 0");

  const double q = p.B / resolution;
  if (q > 1e15) throw BudgetError("resolution too fine for B; use a coarser resolution");
  const double nearest = std::round(q);
  const bool exact = std::abs(q - nearest) <= 1e-9 * std::max(1.0, q);
  const auto units = static_cast<std::uint64_t>(exact ? nearest : std::floor(q));

  LatticeSpec spec{};
  spec.increments = ts.size() - 1;
  spec.resolution = resolution;
  spec.B = p.B;
  // The last increment takes whatever the free parts leave: at least one
  // unit when B is on the lattice, otherwise the positive remainder.
  if (exact && units == 0) throw PreconditionError("B is smaller than the resolution");
  spec.budget = exact ? units - 1 : units;
  spec.count = lattice::tuple_count(spec.budget, spec.increments - 1);
  if (spec.count == 0) {
    std::ostringstream os;
    os << "no lattice trajectory: B = " << p.B << " cannot be split into " << spec.increments
       << " positive increments of resolution " << resolution;
    throw PreconditionError(os.str());
  }
  if (spec.count > kEnumerationBudget) {
    std::ostringstream os;
    os << "exhaustive enumeration needs " << spec.count << " candidates (budget "
       << kEnumerationBudget << "); use a coarser resolution";
    throw BudgetError(os.str());
  }
  return spec;
}

void lattice_trajectory(const LatticeSpec& spec, std::span<const std::uint64_t> parts,
                        std::span<double> y) {
  std::uint64_t units = 0;
  y[0] = 0.0;
  for (std::size_t j = 0; j < parts.size(); ++j) {
    units += parts[j];
    y[j + 1] = static_cast<double>(units) * spec.resolution;
  }
  y[spec.increments] = spec.B;
}

namespace {
std::mt19937_64 block_engine(std::uint64_t seed, std::uint64_t block) {
  std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                    static_cast<std::uint32_t>(block), static_cast<std::uint32_t>(block >> 32)};
  return std::mt19937_64(seq);
}
}  // namespace

SampleStream::SampleStream(std::uint64_t seed, std::uint64_t block) : rng_(block_engine(seed, block)) {}

void SampleStream::next(double B, std::span<double> y) {
  auto& rng = rng_;
  const std::size_t k = y.size() - 1;
  // Weights in (0, 1]: one minus a 53-bit uniform on [0, 1).
  double total = 0.0;
  for (std::size_t j = 1; j <= k; ++j) {
    y[j] = 1.0 - static_cast<double>(rng() >> 11) * 0x1.0p-53;
    total += y[j];
  }
  y[0] = 0.0;
  double acc = 0.0;
  for (std::size_t j = 1; j < k; ++j) {
    acc += B * y[j] / total;
    y[j] = acc;
  }
  y[k] = B;
}

}  // namespace tscale::kernels
