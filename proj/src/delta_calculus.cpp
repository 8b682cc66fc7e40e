#include "tscale/delta_calculus.hpp"

#include <array>
#include <cmath>
#include <sstream>

#include "tscale/errors.hpp"

namespace tscale {

namespace {

// Index range [first, last] of the grid nodes that belong to interval s.
std::pair<std::size_t, std::size_t> segment_range(const TimeScale& ts, std::size_t s) {
  const auto& iv = ts.intervals()[s];
  return {*ts.index_of(iv.lo), *ts.index_of(iv.hi)};
}

double simpson_even(std::span<const double> y, double h) {
  const std::size_t panels = y.size() - 1;
  double odd = 0.0, even = 0.0;
  for (std::size_t j = 1; j < panels; ++j) (j % 2 ? odd : even) += y[j];
  return h / 3.0 * (y.front() + 4.0 * odd + 2.0 * even + y.back());
}

// Integral over panel k of a segment's nodes from the local interpolating
// cubic (quadratic on 3-node segments).
double single_panel(std::span<const double> v, std::size_t k, double h) {
  if (v.size() == 2) return 0.5 * h * (v[0] + v[1]);
  if (v.size() == 3)
    return k == 0 ? h * (5 * v[0] + 8 * v[1] - v[2]) / 12 : h * (-v[0] + 8 * v[1] + 5 * v[2]) / 12;
  if (k == 0) return h * (9 * v[0] + 19 * v[1] - 5 * v[2] + v[3]) / 24;
  if (k + 2 == v.size()) return h * (v[k - 2] - 5 * v[k - 1] + 19 * v[k] + 9 * v[k + 1]) / 24;
  return h * (-v[k - 1] + 13 * v[k] + 13 * v[k + 1] - v[k + 2]) / 24;
}

// Fornberg weights for the first derivative at node z of the stencil 0..p-1.
std::vector<double> stencil_weights(std::size_t p, double z) {
  std::vector<std::array<double, 2>> c(p, {0.0, 0.0});
  double c1 = 1.0, c4 = -z;
  c[0][0] = 1.0;
  for (std::size_t i = 1; i < p; ++i) {
    const std::size_t mn = std::min<std::size_t>(i, 1);
    double c2 = 1.0;
    const double c5 = c4;
    c4 = static_cast<double>(i) - z;
    for (std::size_t j = 0; j < i; ++j) {
      const double c3 = static_cast<double>(i) - static_cast<double>(j);
      c2 *= c3;
      if (j == i - 1) {
        for (std::size_t k = mn; k >= 1; --k)
          c[i][k] = c1 * (static_cast<double>(k) * c[i - 1][k - 1] - c5 * c[i - 1][k]) / c2;
        c[i][0] = -c1 * c5 * c[i - 1][0] / c2;
      }
      for (std::size_t k = mn; k >= 1; --k)
        c[j][k] = (c4 * c[j][k] - static_cast<double>(k) * c[j][k - 1]) / c3;
      c[j][0] = c4 * c[j][0] / c3;
    }
    c1 = c2;
  }
  std::vector<double> w(p);
  for (std::size_t i = 0; i < p; ++i) w[i] = c[i][1];
  return w;
}

constexpr std::size_t kMaxStencil = 7;

// weights(p, offset) for p in {3, 5, 7}, built once.
const std::vector<double>& cached_weights(std::size_t p, std::size_t offset) {
  static const auto table = [] {
    std::array<std::array<std::vector<double>, kMaxStencil>, kMaxStencil + 1> t;
    for (std::size_t p = 3; p <= kMaxStencil; p += 2)
      for (std::size_t o = 0; o < p; ++o) t[p][o] = stencil_weights(p, static_cast<double>(o));
    return t;
  }();
  return table[p][offset];
}

// Sixth-order differences on the nodes nearest j (lower order on short
// intervals); one-sided near the ends.
double derivative_on_segment(std::span<const double> y, std::size_t j, double h) {
  const std::size_t n = y.size();
  const std::size_t p = std::min(n, kMaxStencil);
  const std::size_t start = std::min(j > p / 2 ? j - p / 2 : 0, n - p);
  const auto& w = cached_weights(p, j - start);
  double sum = 0.0;
  for (std::size_t k = 0; k < p; ++k) sum += w[k] * y[start + k];
  return sum / h;
}

double derivative_at_index(const GridFunction& y, std::size_t i) {
  const TimeScale& ts = y.timescale();
  if (!ts.in_kappa(i)) {
    std::ostringstream os;
    os << "delta derivative undefined at " << ts.point(i) << ": outside [a,b]^kappa";
    throw DomainError(os.str());
  }
  if (!ts.right_dense(i)) return (y[i + 1] - y[i]) / ts.mu(i);
  const auto seg = ts.segment_of(i);
  if (!seg) throw DomainError("right-dense point without a surrounding interval");
  const auto [first, last] = segment_range(ts, *seg);
  const auto& iv = ts.intervals()[*seg];
  const double h = (iv.hi - iv.lo) / static_cast<double>(last - first);
  return derivative_on_segment(y.values().subspan(first, last - first + 1), i - first, h);
}

}  // namespace

double simpson(std::span<const double> y, double h) {
  const std::size_t panels = y.empty() ? 0 : y.size() - 1;
  if (panels == 0) return 0.0;
  if (panels == 1) return 0.5 * h * (y[0] + y[1]);
  if (panels % 2 == 0) return simpson_even(y, h);
  const std::size_t head = panels - 3;
  const double tail = 3.0 * h / 8.0 *
                      (y[head] + 3.0 * y[head + 1] + 3.0 * y[head + 2] + y[head + 3]);
  return (head ? simpson_even(y.first(head + 1), h) : 0.0) + tail;
}

Jump jump_operators(const TimeScale& ts, double t) {
  const double s = ts.sigma_at(t);
  const double r = ts.rho_at(t);
  return {s, r, s - t};
}

double delta_integral(const GridFunction& f, double lo, double hi) {
  if (lo > hi) throw DomainError("delta integral requires lo <= hi");
  const TimeScale& ts = f.timescale();
  const std::size_t ilo = ts.require_index(lo);
  const std::size_t ihi = ts.require_index(hi);
  double sum = 0.0;
  std::size_t i = ilo;
  while (i < ihi) {
    if (!ts.right_dense(i)) {
      sum += ts.mu(i) * f[i];
      ++i;
      continue;
    }
    const auto seg = ts.segment_of(i);
    const auto [first, last] = segment_range(ts, *seg);
    const std::size_t end = std::min(last, ihi);
    const auto& iv = ts.intervals()[*seg];
    const double h = (iv.hi - iv.lo) / static_cast<double>(last - first);
    const auto v = f.values().subspan(first, last - first + 1);
    sum += end - i == 1 ? single_panel(v, i - first, h) : simpson(v.subspan(i - first, end - i + 1), h);
    i = end;
  }
  return sum;
}

double delta_integral(const GridFunction& f) {
  const TimeScale& ts = f.timescale();
  return delta_integral(f, ts.a(), ts.b());
}

GridFunction cumulative_delta_integral(const GridFunction& f) {
  const TimeScale& ts = f.timescale();
  std::vector<double> out(ts.size(), 0.0);
  std::size_t i = 0;
  while (i + 1 < ts.size()) {
    if (!ts.right_dense(i)) {
      out[i + 1] = out[i] + ts.mu(i) * f[i];
      ++i;
      continue;
    }
    const auto [first, last] = segment_range(ts, *ts.segment_of(i));
    const auto& iv = ts.intervals()[*ts.segment_of(i)];
    const double h = (iv.hi - iv.lo) / static_cast<double>(last - first);
    const auto v = f.values();
    out[first + 1] = out[first] + single_panel(v.subspan(first, last - first + 1), 0, h);
    for (std::size_t j = first + 2; j <= last; ++j)
      out[j] = out[first] + simpson(v.subspan(first, j - first + 1), h);
    i = last;
  }
  return GridFunction(ts, std::move(out));
}

double delta_derivative(const GridFunction& y, double t) {
  return derivative_at_index(y, y.timescale().require_index(t));
}

std::vector<double> delta_derivative(const GridFunction& y) {
  std::vector<double> out(y.timescale().kappa_size());
  for (std::size_t i = 0; i < out.size(); ++i) out[i] = derivative_at_index(y, i);
  return out;
}

double averaged_chain_factor(const ScalarFunction& gprime, double y, double mu,
                             double ydelta) {
  const double step = mu * ydelta;
  if (!gprime.domain().contains(y, y + step)) {
    std::ostringstream os;
    os << "segment [" << y << ", " << y + step << "] leaves the domain of "
       << gprime.describe();
    throw DomainError(os.str());
  }
  if (mu == 0.0 || step == 0.0) return gprime(y);
  if (const auto* c = std::get_if<ScalarFunction::Constant>(&gprime.node())) return c->c;
  if (std::holds_alternative<ScalarFunction::Affine>(gprime.node())) return gprime(y + 0.5 * step);
  // Closed form through the antiderivative unless cancellation would dominate.
  if (std::abs(step) > 1e-3 * std::max(1.0, std::abs(y)))
    return (gprime.antiderivative(y + step) - gprime.antiderivative(y)) / step;
  constexpr int kNodes = 33;
  double samples[kNodes];
  for (int k = 0; k < kNodes; ++k) samples[k] = gprime(y + step * k / (kNodes - 1));
  return simpson(samples, 1.0 / (kNodes - 1));
}

}  // namespace tscale
