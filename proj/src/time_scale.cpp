#include "tscale/time_scale.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "tscale/errors.hpp"

namespace tscale {

namespace {
constexpr std::size_t kNoSegment = static_cast<std::size_t>(-1);

bool near(double x, double y) { return std::abs(x - y) <= TimeScale::kPointTolerance; }
}  // namespace

struct TimeScale::Data {
  std::vector<double> atoms;
  std::vector<ClosedInterval> intervals;
  int nodes = kDefaultQuadratureNodes;
  std::vector<double> points;
  std::vector<std::size_t> segment;
  std::vector<double> sigma;
  std::vector<double> rho;
  std::size_t kappa = 0;
};

TimeScale TimeScale::uniform(double a, double b, int n) {
  if (!(a < b)) throw ConstructionError("uniform: require a < b");
  if (n < 1) throw ConstructionError("uniform: require n >= 1");
  std::vector<double> atoms(static_cast<std::size_t>(n) + 1);
  for (int k = 0; k <= n; ++k) atoms[k] = a + (b - a) * k / n;
  atoms.back() = b;
  return build(std::move(atoms), {}, kDefaultQuadratureNodes);
}

TimeScale TimeScale::q_scale(double q, int n, int m) {
  if (!(q > 1.0)) throw ConstructionError("q_scale: require q > 1");
  if (n < 0 || !(n < m)) throw ConstructionError("q_scale: require 0 <= n < m");
  std::vector<double> atoms;
  atoms.reserve(static_cast<std::size_t>(m - n) + 1);
  for (int k = n; k <= m; ++k) atoms.push_back(std::pow(q, k));
  return build(std::move(atoms), {}, kDefaultQuadratureNodes);
}

TimeScale TimeScale::real_interval(double a, double b, int nodes) {
  if (!(a < b)) throw ConstructionError("real_interval: require a < b");
  return build({}, {{a, b}}, nodes);
}

TimeScale TimeScale::custom(std::vector<double> atoms,
                            std::vector<ClosedInterval> intervals, int nodes) {
  return build(std::move(atoms), std::move(intervals), nodes);
}

TimeScale TimeScale::build(std::vector<double> atoms,
                           std::vector<ClosedInterval> intervals, int nodes) {
  if (nodes < 1) throw ConstructionError("quadrature node count must be positive");
  if (atoms.empty() && intervals.empty()) throw ConstructionError("empty time scale");
  for (double t : atoms)
    if (!std::isfinite(t)) throw ConstructionError("non-finite atom");
  for (std::size_t i = 1; i < atoms.size(); ++i)
    if (!(atoms[i - 1] < atoms[i]))
      throw ConstructionError("atoms must be strictly increasing");
  for (std::size_t i = 0; i < intervals.size(); ++i) {
    const auto& iv = intervals[i];
    if (!std::isfinite(iv.lo) || !std::isfinite(iv.hi) || !(iv.lo < iv.hi))
      throw ConstructionError("interval requires finite lo < hi");
    if (i > 0 && !(intervals[i - 1].hi < iv.lo))
      throw ConstructionError("intervals must be sorted and pairwise disjoint");
  }
  for (double t : atoms)
    for (const auto& iv : intervals)
      if (t > iv.lo + kPointTolerance && t < iv.hi - kPointTolerance) {
        std::ostringstream os;
        os << "atom " << t << " lies inside interval [" << iv.lo << ", " << iv.hi << "]";
        throw ConstructionError(os.str());
      }

  auto d = std::make_shared<Data>();
  d->nodes = std::max(nodes, 3);
  if (d->nodes % 2 == 0) ++d->nodes;

  // Collect (point, segment) pairs, interval nodes first so that merged
  // endpoints keep their segment tag.
  std::vector<std::pair<double, std::size_t>> pts;
  for (std::size_t s = 0; s < intervals.size(); ++s) {
    const auto& iv = intervals[s];
    const int n = d->nodes;
    for (int j = 0; j < n; ++j) {
      double t = (j == n - 1) ? iv.hi : iv.lo + (iv.hi - iv.lo) * j / (n - 1);
      pts.emplace_back(t, s);
    }
  }
  for (double t : atoms) {
    bool merged = false;
    for (const auto& iv : intervals)
      if (near(t, iv.lo) || near(t, iv.hi)) merged = true;
    if (!merged) pts.emplace_back(t, kNoSegment);
  }
  std::sort(pts.begin(), pts.end());
  if (pts.size() < 2 || !(pts.front().first < pts.back().first))
    throw ConstructionError("degenerate time scale: need a < b");

  const std::size_t n = pts.size();
  d->points.resize(n);
  d->segment.resize(n);
  for (std::size_t i = 0; i < n; ++i) {
    d->points[i] = pts[i].first;
    d->segment[i] = pts[i].second;
  }
  d->sigma.resize(n);
  d->rho.resize(n);
  for (std::size_t i = 0; i < n; ++i) {
    const double t = d->points[i];
    const std::size_t s = d->segment[i];
    const bool dense_right = s != kNoSegment && t < intervals[s].hi;
    const bool dense_left = s != kNoSegment && t > intervals[s].lo;
    d->sigma[i] = dense_right || i + 1 == n ? t : d->points[i + 1];
    d->rho[i] = dense_left || i == 0 ? t : d->points[i - 1];
  }
  d->kappa = d->rho[n - 1] < d->points[n - 1] ? n - 1 : n;
  d->atoms = std::move(atoms);
  d->intervals = std::move(intervals);
  return TimeScale(std::move(d));
}

double TimeScale::a() const noexcept { return data_->points.front(); }
double TimeScale::b() const noexcept { return data_->points.back(); }
std::span<const double> TimeScale::atoms() const noexcept { return data_->atoms; }
std::span<const ClosedInterval> TimeScale::intervals() const noexcept {
  return data_->intervals;
}
int TimeScale::quadrature_nodes() const noexcept { return data_->nodes; }
bool TimeScale::is_discrete() const noexcept { return data_->intervals.empty(); }
std::span<const double> TimeScale::points() const noexcept { return data_->points; }
std::size_t TimeScale::size() const noexcept { return data_->points.size(); }
std::size_t TimeScale::kappa_size() const noexcept { return data_->kappa; }

bool TimeScale::contains(double t) const noexcept {
  for (const auto& iv : data_->intervals)
    if (t >= iv.lo - kPointTolerance && t <= iv.hi + kPointTolerance) return true;
  for (double x : data_->atoms)
    if (near(x, t)) return true;
  return false;
}

std::optional<std::size_t> TimeScale::index_of(double t) const noexcept {
  const auto& p = data_->points;
  auto it = std::lower_bound(p.begin(), p.end(), t - kPointTolerance);
  if (it != p.end() && near(*it, t)) return static_cast<std::size_t>(it - p.begin());
  return std::nullopt;
}

std::size_t TimeScale::require_index(double t) const {
  if (auto i = index_of(t)) return *i;
  std::ostringstream os;
  os << "point " << t << " is not an evaluation point of the time scale";
  throw DomainError(os.str());
}

std::optional<std::size_t> TimeScale::segment_of(std::size_t i) const noexcept {
  const std::size_t s = data_->segment[i];
  if (s == kNoSegment) return std::nullopt;
  return s;
}

double TimeScale::sigma(std::size_t i) const noexcept { return data_->sigma[i]; }
double TimeScale::rho(std::size_t i) const noexcept { return data_->rho[i]; }

double TimeScale::sigma_at(double t) const {
  if (auto i = index_of(t)) return sigma(*i);
  for (const auto& iv : data_->intervals)
    if (t > iv.lo && t < iv.hi) return t;
  std::ostringstream os;
  os << "point " << t << " does not belong to the time scale";
  throw DomainError(os.str());
}

double TimeScale::rho_at(double t) const {
  if (auto i = index_of(t)) return rho(*i);
  for (const auto& iv : data_->intervals)
    if (t > iv.lo && t < iv.hi) return t;
  std::ostringstream os;
  os << "point " << t << " does not belong to the time scale";
  throw DomainError(os.str());
}

bool TimeScale::same_grid(const TimeScale& other) const noexcept {
  return data_ == other.data_ ||
         (data_->points == other.data_->points && data_->segment == other.data_->segment);
}

}  // namespace tscale
