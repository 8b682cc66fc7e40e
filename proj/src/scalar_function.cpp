#include "tscale/scalar_function.hpp"

#include <cmath>
#include <sstream>

#include "tscale/errors.hpp"

namespace tscale {

namespace {

template <class... Ts>
struct overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
overloaded(Ts...) -> overloaded<Ts...>;

constexpr double kInf = std::numeric_limits<double>::infinity();

bool is_nonnegative_integer(double p) { return p >= 0 && std::floor(p) == p; }

bool is_odd_integer(double p) {
  return std::floor(p) == p && std::fmod(std::abs(p), 2.0) == 1.0;
}

double horner(const std::vector<double>& c, double x) {
  double acc = 0.0;
  for (auto it = c.rbegin(); it != c.rend(); ++it) acc = acc * x + *it;
  return acc;
}

}  // namespace

ScalarFunction ScalarFunction::constant(double c) { return ScalarFunction(Constant{c}); }
ScalarFunction ScalarFunction::affine(double slope, double intercept) {
  return ScalarFunction(Affine{slope, intercept});
}
ScalarFunction ScalarFunction::power(double exponent) {
  if (!std::isfinite(exponent)) throw ParameterError("power exponent must be finite");
  return ScalarFunction(Power{exponent});
}
ScalarFunction ScalarFunction::exp() { return ScalarFunction(Exp{}); }
ScalarFunction ScalarFunction::log() { return ScalarFunction(Log{}); }
ScalarFunction ScalarFunction::xlogx() { return ScalarFunction(XLogX{}); }
ScalarFunction ScalarFunction::polynomial(std::vector<double> coefficients) {
  if (coefficients.empty()) coefficients.push_back(0.0);
  return ScalarFunction(Polynomial{std::move(coefficients)});
}
ScalarFunction ScalarFunction::transformed(ScalarFunction inner, double outer_scale,
                                           double inner_scale, double inner_shift,
                                           double outer_shift) {
  if (inner_scale == 0.0) throw ParameterError("transform requires a nonzero inner scale");
  return ScalarFunction(Transformed{std::make_shared<const ScalarFunction>(std::move(inner)),
                                    outer_scale, inner_scale, inner_shift, outer_shift});
}

double ScalarFunction::operator()(double x) const {
  return std::visit(
      overloaded{
          [](const Constant& f) { return f.c; },
          [x](const Affine& f) { return f.slope * x + f.intercept; },
          [x](const Power& f) { return std::pow(x, f.exponent); },
          [x](const Exp&) { return std::exp(x); },
          [x](const Log&) { return std::log(x); },
          [x](const XLogX&) { return x * std::log(x); },
          [x](const Polynomial& f) { return horner(f.coefficients, x); },
          [x](const Transformed& f) {
            return f.outer_scale * (*f.inner)(f.inner_scale * x + f.inner_shift) +
                   f.outer_shift;
          },
      },
      node_);
}

double ScalarFunction::derivative(double x) const {
  return std::visit(
      overloaded{
          [](const Constant&) { return 0.0; },
          [](const Affine& f) { return f.slope; },
          [x](const Power& f) {
            if (f.exponent == 0.0) return 0.0;
            if (f.exponent == 1.0) return 1.0;
            return f.exponent * std::pow(x, f.exponent - 1.0);
          },
          [x](const Exp&) { return std::exp(x); },
          [x](const Log&) { return 1.0 / x; },
          [x](const XLogX&) { return std::log(x) + 1.0; },
          [x](const Polynomial& f) {
            double acc = 0.0;
            for (std::size_t k = f.coefficients.size(); k-- > 1;)
              acc = acc * x + static_cast<double>(k) * f.coefficients[k];
            return acc;
          },
          [x](const Transformed& f) {
            return f.outer_scale * f.inner_scale *
                   f.inner->derivative(f.inner_scale * x + f.inner_shift);
          },
      },
      node_);
}

double ScalarFunction::second_derivative(double x) const {
  return std::visit(
      overloaded{
          [](const Constant&) { return 0.0; },
          [](const Affine&) { return 0.0; },
          [x](const Power& f) {
            const double p = f.exponent;
            if (p == 0.0 || p == 1.0) return 0.0;
            if (p == 2.0) return 2.0;
            return p * (p - 1.0) * std::pow(x, p - 2.0);
          },
          [x](const Exp&) { return std::exp(x); },
          [x](const Log&) { return -1.0 / (x * x); },
          [x](const XLogX&) { return 1.0 / x; },
          [x](const Polynomial& f) {
            double acc = 0.0;
            for (std::size_t k = f.coefficients.size(); k-- > 2;)
              acc = acc * x + static_cast<double>(k * (k - 1)) * f.coefficients[k];
            return acc;
          },
          [x](const Transformed& f) {
            return f.outer_scale * f.inner_scale * f.inner_scale *
                   f.inner->second_derivative(f.inner_scale * x + f.inner_shift);
          },
      },
      node_);
}

double ScalarFunction::antiderivative(double x) const {
  return std::visit(
      overloaded{
          [x](const Constant& f) { return f.c * x; },
          [x](const Affine& f) { return 0.5 * f.slope * x * x + f.intercept * x; },
          [x](const Power& f) {
            if (f.exponent == -1.0) return std::log(x);
            return std::pow(x, f.exponent + 1.0) / (f.exponent + 1.0);
          },
          [x](const Exp&) { return std::exp(x); },
          [x](const Log&) { return x * std::log(x) - x; },
          [x](const XLogX&) { return 0.5 * x * x * std::log(x) - 0.25 * x * x; },
          [x](const Polynomial& f) {
            double acc = 0.0;
            for (std::size_t k = f.coefficients.size(); k-- > 0;)
              acc = acc * x + f.coefficients[k] / static_cast<double>(k + 1);
            return acc * x;
          },
          [x](const Transformed& f) {
            return f.outer_scale / f.inner_scale *
                       f.inner->antiderivative(f.inner_scale * x + f.inner_shift) +
                   f.outer_shift * x;
          },
      },
      node_);
}

OpenInterval ScalarFunction::domain() const {
  return std::visit(
      overloaded{
          [](const Power& f) {
            return is_nonnegative_integer(f.exponent) ? OpenInterval{}
                                                      : OpenInterval{0.0, kInf};
          },
          [](const Log&) { return OpenInterval{0.0, kInf}; },
          [](const XLogX&) { return OpenInterval{0.0, kInf}; },
          [](const Transformed& f) {
            const OpenInterval d = f.inner->domain();
            double lo = (d.lo - f.inner_shift) / f.inner_scale;
            double hi = (d.hi - f.inner_shift) / f.inner_scale;
            if (f.inner_scale < 0) std::swap(lo, hi);
            return OpenInterval{lo, hi};
          },
          [](const auto&) { return OpenInterval{}; },
      },
      node_);
}

std::optional<double> ScalarFunction::inverse(double y) const {
  return std::visit(
      overloaded{
          [](const Constant&) -> std::optional<double> { return std::nullopt; },
          [y](const Affine& f) -> std::optional<double> {
            if (f.slope == 0.0) return std::nullopt;
            return (y - f.intercept) / f.slope;
          },
          [y](const Power& f) -> std::optional<double> {
            const double p = f.exponent;
            if (p == 0.0) return std::nullopt;
            if (is_nonnegative_integer(p)) {
              if (!is_odd_integer(p)) return std::nullopt;
              return std::copysign(std::pow(std::abs(y), 1.0 / p), y);
            }
            if (!(y > 0.0)) return std::nullopt;
            return std::pow(y, 1.0 / p);
          },
          [y](const Exp&) -> std::optional<double> {
            if (!(y > 0.0)) return std::nullopt;
            return std::log(y);
          },
          [y](const Log&) -> std::optional<double> { return std::exp(y); },
          [](const XLogX&) -> std::optional<double> { return std::nullopt; },
          [y](const Polynomial& f) -> std::optional<double> {
            std::size_t deg = f.coefficients.size();
            while (deg > 1 && f.coefficients[deg - 1] == 0.0) --deg;
            if (deg != 2) return std::nullopt;
            return (y - f.coefficients[0]) / f.coefficients[1];
          },
          [y](const Transformed& f) -> std::optional<double> {
            if (f.outer_scale == 0.0) return std::nullopt;
            auto u = f.inner->inverse((y - f.outer_shift) / f.outer_scale);
            if (!u) return std::nullopt;
            return (*u - f.inner_shift) / f.inner_scale;
          },
      },
      node_);
}

Curvature ScalarFunction::classify(double lo, double hi, int samples) const {
  const OpenInterval d = domain();
  if (!(lo <= hi) || !d.contains(lo, hi)) {
    std::ostringstream os;
    os << "range [" << lo << ", " << hi << "] leaves the domain of " << describe();
    throw DomainError(os.str());
  }
  return classify_samples([this](double x) { return second_derivative(x); }, lo, hi,
                          samples);
}

std::string ScalarFunction::describe() const {
  std::ostringstream os;
  std::visit(overloaded{
                 [&](const Constant& f) { os << "constant(" << f.c << ")"; },
                 [&](const Affine& f) { os << "affine(" << f.slope << ", " << f.intercept << ")"; },
                 [&](const Power& f) { os << "power(" << f.exponent << ")"; },
                 [&](const Exp&) { os << "exp"; },
                 [&](const Log&) { os << "log"; },
                 [&](const XLogX&) { os << "xlogx"; },
                 [&](const Polynomial& f) {
                   os << "polynomial(";
                   for (std::size_t k = 0; k < f.coefficients.size(); ++k)
                     os << (k ? ", " : "") << f.coefficients[k];
                   os << ")";
                 },
                 [&](const Transformed& f) {
                   os << f.outer_scale << "*" << f.inner->describe() << "(" << f.inner_scale
                      << "*x+" << f.inner_shift << ")+" << f.outer_shift;
                 },
             },
             node_);
  return os.str();
}

}  // namespace tscale
