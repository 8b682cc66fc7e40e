#pragma once

#include <span>
#include <utility>
#include <vector>

#include "tscale/time_scale.hpp"

namespace tscale {

/// Values of a real function at every evaluation point of a time scale.
class GridFunction {
 public:
  /// Throws PreconditionError unless there is one finite value per point.
  GridFunction(TimeScale ts, std::vector<double> values);

  /// Values given on the kappa points only. When b is outside kappa its slot
  /// is filled with the last supplied value; no operation reads it.
  static GridFunction from_kappa(TimeScale ts, std::vector<double> values);

  template <class Fn>
  static GridFunction sample(const TimeScale& ts, Fn&& fn) {
    std::vector<double> v;
    v.reserve(ts.size());
    for (double t : ts.points()) v.push_back(fn(t));
    return GridFunction(ts, std::move(v));
  }

  const TimeScale& timescale() const noexcept { return ts_; }
  std::span<const double> values() const noexcept { return values_; }
  std::span<const double> kappa_values() const noexcept {
    return std::span<const double>(values_).first(ts_.kappa_size());
  }
  std::size_t size() const noexcept { return values_.size(); }
  double operator[](std::size_t i) const { return values_[i]; }
  /// Value at an evaluation point (DomainError otherwise).
  double at(double t) const { return values_[ts_.require_index(t)]; }

 private:
  TimeScale ts_;
  std::vector<double> values_;
};

}  // namespace tscale
