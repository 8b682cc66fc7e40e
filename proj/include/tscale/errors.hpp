#pragma once

#include <stdexcept>
#include <string>

namespace tscale {

/// Base class of every error raised by the library. `category()` is a short
/// stable tag used by the command-line front end in diagnostics.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
  virtual const char* category() const noexcept { return "error"; }
};

/// Invalid or degenerate time scale description.
class ConstructionError : public Error {
 public:
  using Error::Error;
  const char* category() const noexcept override { return "construction"; }
};

/// A point or argument lies outside the set where an operation is defined.
class DomainError : public Error {
 public:
  using Error::Error;
  const char* category() const noexcept override { return "domain"; }
};

/// A hypothesis of the requested computation does not hold.
class PreconditionError : public Error {
 public:
  using Error::Error;
  const char* category() const noexcept override { return "precondition"; }
};

/// Excluded parameter value (e.g. an exponent outside its admissible regime).
class ParameterError : public Error {
 public:
  using Error::Error;
  const char* category() const noexcept override { return "parameter"; }
};

/// The second derivative changes sign on the queried range.
class ClassificationError : public Error {
 public:
  using Error::Error;
  const char* category() const noexcept override { return "classification"; }
};

/// Power-weighted problem with alpha in {0, 1}: the functional is constant on
/// the admissible set, so there is no extremizer. Carries that constant.
class DegenerateProblemError : public Error {
 public:
  DegenerateProblemError(const std::string& what, double constant_value)
      : Error(what), constant_value_(constant_value) {}
  const char* category() const noexcept override { return "degenerate"; }
  double constant_value() const noexcept { return constant_value_; }

 private:
  double constant_value_;
};

/// The shifted x*ln(x) problem requires C > phi(t) on the kappa set.
class FeasibilityError : public Error {
 public:
  FeasibilityError(const std::string& what, double point)
      : Error(what), point_(point) {}
  const char* category() const noexcept override { return "feasibility"; }
  double point() const noexcept { return point_; }

 private:
  double point_;
};

/// A candidate trajectory violates a boundary or monotonicity condition.
class AdmissibilityError : public Error {
 public:
  AdmissibilityError(const std::string& what, std::string condition, double point)
      : Error(what), condition_(std::move(condition)), point_(point) {}
  const char* category() const noexcept override { return "admissibility"; }
  const std::string& condition() const noexcept { return condition_; }
  double point() const noexcept { return point_; }

 private:
  std::string condition_;
  double point_;
};

/// Enumeration would exceed the candidate budget.
class BudgetError : public Error {
 public:
  using Error::Error;
  const char* category() const noexcept override { return "budget"; }
};

}  // namespace tscale
