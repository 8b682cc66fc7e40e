#pragma once

#include <cstddef>
#include <memory>
#include <optional>
#include <span>
#include <vector>

namespace tscale {

struct ClosedInterval {
  double lo;
  double hi;
};

/// A time scale made of finitely many isolated points ("atoms") and closed
/// real intervals. Immutable; copies share the same underlying data.
///
/// Every operation works on the *evaluation points*: all atoms plus
/// `quadrature_nodes()` equally spaced nodes on each interval, merged and
/// sorted. Interval endpoints that coincide with atoms are stored once.
class TimeScale {
 public:
  static constexpr int kDefaultQuadratureNodes = 129;
  /// Absolute tolerance used when matching a real number to a point.
  static constexpr double kPointTolerance = 1e-12;

  /// n+1 equally spaced atoms a, a+(b-a)/n, ..., b.
  static TimeScale uniform(double a, double b, int n);
  /// Atoms q^n, q^(n+1), ..., q^m.
  static TimeScale q_scale(double q, int n, int m);
  /// The single closed interval [a, b].
  static TimeScale real_interval(double a, double b,
                                 int nodes = kDefaultQuadratureNodes);
  static TimeScale custom(std::vector<double> atoms,
                          std::vector<ClosedInterval> intervals,
                          int nodes = kDefaultQuadratureNodes);

  double a() const noexcept;
  double b() const noexcept;

  std::span<const double> atoms() const noexcept;
  std::span<const ClosedInterval> intervals() const noexcept;
  /// Node count per interval (always odd, at least 3).
  int quadrature_nodes() const noexcept;
  bool is_discrete() const noexcept;

  /// Evaluation points, strictly increasing.
  std::span<const double> points() const noexcept;
  std::size_t size() const noexcept;
  double point(std::size_t i) const { return points()[i]; }

  /// True when t belongs to the point set (not only the evaluation grid).
  bool contains(double t) const noexcept;
  std::optional<std::size_t> index_of(double t) const noexcept;
  /// Like index_of but throws DomainError when t is not an evaluation point.
  std::size_t require_index(double t) const;

  /// Index of the interval that owns evaluation point i, if any.
  std::optional<std::size_t> segment_of(std::size_t i) const noexcept;

  double sigma(std::size_t i) const noexcept;
  double rho(std::size_t i) const noexcept;
  double mu(std::size_t i) const noexcept { return sigma(i) - point(i); }
  bool right_dense(std::size_t i) const noexcept { return sigma(i) == point(i); }

  /// Jump operators at an arbitrary member of the point set.
  double sigma_at(double t) const;
  double rho_at(double t) const;

  /// Number of evaluation points in [a,b]^kappa. The kappa set drops b when
  /// b is left-scattered; otherwise it is the whole grid.
  std::size_t kappa_size() const noexcept;
  bool in_kappa(std::size_t i) const noexcept { return i < kappa_size(); }

  /// Same evaluation grid (shared data or pointwise equal).
  bool same_grid(const TimeScale& other) const noexcept;

 private:
  struct Data;
  explicit TimeScale(std::shared_ptr<const Data> data) : data_(std::move(data)) {}
  static TimeScale build(std::vector<double> atoms,
                         std::vector<ClosedInterval> intervals, int nodes);

  std::shared_ptr<const Data> data_;
};

}  // namespace tscale
