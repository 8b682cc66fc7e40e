#pragma once

#include <algorithm>
#include <cmath>
#include <sstream>

#include "tscale/errors.hpp"

namespace tscale {

template <class SecondDerivative>
Curvature classify_samples(SecondDerivative&& d2, double lo, double hi, int samples) {
  const int n = (hi > lo) ? std::max(samples, 2) : 1;
  bool pos = false, neg = false, zero = false;
  for (int i = 0; i < n; ++i) {
    const double x = (n == 1) ? lo : (i == n - 1 ? hi : lo + (hi - lo) * i / (n - 1));
    const double v = d2(x);
    if (std::isnan(v)) throw DomainError("second derivative is not a number on the range");
    if (v > 0) pos = true;
    else if (v < 0) neg = true;
    else zero = true;
  }
  if (pos && neg) {
    std::ostringstream os;
    os << "second derivative changes sign on [" << lo << ", " << hi << "]";
    throw ClassificationError(os.str());
  }
  if (pos) return {Curvature::Kind::convex, !zero};
  if (neg) return {Curvature::Kind::concave, !zero};
  return {Curvature::Kind::linear, false};
}

}  // namespace tscale
