#include "tscale/grid_function.hpp"

#include <cmath>
#include <string>

#include "tscale/errors.hpp"

namespace tscale {

GridFunction::GridFunction(TimeScale ts, std::vector<double> values)
    : ts_(std::move(ts)), values_(std::move(values)) {
  if (values_.size() != ts_.size())
    throw PreconditionError("grid function has " + std::to_string(values_.size()) +
                            " values for " + std::to_string(ts_.size()) +
                            " evaluation points");
  for (double v : values_)
    if (!std::isfinite(v)) throw PreconditionError("grid function value is not finite");
}

GridFunction GridFunction::from_kappa(TimeScale ts, std::vector<double> values) {
  if (values.size() == ts.kappa_size() && ts.kappa_size() + 1 == ts.size() &&
      !values.empty())
    values.push_back(values.back());
  return GridFunction(std::move(ts), std::move(values));
}

}  // namespace tscale
