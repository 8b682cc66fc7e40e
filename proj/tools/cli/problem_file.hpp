#pragma once

#include <optional>
#include <stdexcept>
#include <string>

#include <json.hpp>

#include "tscale/grid_function.hpp"
#include "tscale/jensen.hpp"
#include "tscale/scalar_function.hpp"
#include "tscale/solvers.hpp"
#include "tscale/validation.hpp"

namespace tscale::cli {

inline constexpr const char* kSchemaVersion = "1.0";
inline constexpr const char* kQuadratureNodesEnv = "TSCALE_QUAD_NODES";

/// Malformed file: bad JSON, unknown or missing keys, wrong types.
class ParseError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct OracleSpec {
  OracleMode mode;
};

struct ProblemFile {
  nlohmann::json timescale_block;
  nlohmann::json problem_block;
  VariationalProblem problem;
  std::optional<OracleSpec> oracle;
};

struct CheckFile {
  enum class Kind { weighted_jensen, jensen, special, quasi_arithmetic };
  Kind kind;
  GridFunction f;
  std::optional<GridFunction> h;
  std::optional<ScalarFunction> F;
  std::optional<SpecialCase> special;
  std::optional<ScalarFunction> phi;
  std::optional<ScalarFunction> psi;
};

/// Default node count per interval: $TSCALE_QUAD_NODES or 129.
int default_quadrature_nodes();

nlohmann::json read_json(const std::string& path);

TimeScale parse_timescale(const nlohmann::json& j);
ScalarFunction parse_function(const nlohmann::json& j);
ProblemFile parse_problem(const nlohmann::json& j);
CheckFile parse_check(const nlohmann::json& j);

}  // namespace tscale::cli
