#include "problem_file.hpp"

#include <cstdlib>
#include <fstream>
#include <initializer_list>
#include <set>

namespace tscale::cli {

using nlohmann::json;

namespace {

void require_object(const json& j, const std::string& where) {
  if (!j.is_object()) throw ParseError(where + ": expected an object");
}

void allow_keys(const json& j, const std::string& where, std::initializer_list<const char*> keys) {
  const std::set<std::string> allowed(keys.begin(), keys.end());
  for (const auto& [k, v] : j.items())
    if (!allowed.count(k)) throw ParseError(where + ": unknown key '" + k + "'");
}

const json& member(const json& j, const std::string& where, const char* key) {
  auto it = j.find(key);
  if (it == j.end()) throw ParseError(where + ": missing key '" + key + "'");
  return *it;
}

double number(const json& j, const std::string& where, const char* key) {
  const json& v = member(j, where, key);
  if (!v.is_number()) throw ParseError(where + "." + key + ": expected a number");
  return v.get<double>();
}

double number_or(const json& j, const std::string& where, const char* key, double fallback) {
  return j.contains(key) ? number(j, where, key) : fallback;
}

std::int64_t integer(const json& j, const std::string& where, const char* key) {
  const json& v = member(j, where, key);
  if (!v.is_number_integer()) throw ParseError(where + "." + key + ": expected an integer");
  return v.get<std::int64_t>();
}

std::string text(const json& j, const std::string& where, const char* key) {
  const json& v = member(j, where, key);
  if (!v.is_string()) throw ParseError(where + "." + key + ": expected a string");
  return v.get<std::string>();
}

std::vector<double> numbers(const json& v, const std::string& where) {
  if (!v.is_array()) throw ParseError(where + ": expected an array of numbers");
  std::vector<double> out;
  for (const auto& x : v) {
    if (!x.is_number()) throw ParseError(where + ": expected an array of numbers");
    out.push_back(x.get<double>());
  }
  return out;
}

void check_schema(const json& j) {
  require_object(j, "file");
  const std::string v = text(j, "file", "schema_version");
  if (v != kSchemaVersion)
    throw ParseError("unsupported schema_version '" + v + "' (expected " + kSchemaVersion + ")");
}

int nodes_from(const json& j, const std::string& where) {
  if (!j.contains("nodes")) return default_quadrature_nodes();
  const auto n = integer(j, where, "nodes");
  if (n < 1 || n > 1'000'000) throw ParseError(where + ".nodes: out of range");
  return static_cast<int>(n);
}

// f or h: an explicit list of values, or a function of t.
GridFunction parse_grid(const json& v, const TimeScale& ts, const std::string& where) {
  if (v.is_array()) {
    auto values = numbers(v, where);
    if (values.size() == ts.kappa_size() && values.size() != ts.size())
      return GridFunction::from_kappa(ts, std::move(values));
    if (values.size() != ts.size())
      throw ParseError(where + ": expected " + std::to_string(ts.kappa_size()) + " or " +
                       std::to_string(ts.size()) + " values");
    return GridFunction(ts, std::move(values));
  }
  const ScalarFunction fn = parse_function(v);
  return GridFunction::sample(ts, [&](double t) { return fn(t); });
}

}  // namespace

int default_quadrature_nodes() {
  if (const char* env = std::getenv(kQuadratureNodesEnv)) {
    char* end = nullptr;
    const long n = std::strtol(env, &end, 10);
    if (end != env && *end == '\0' && n >= 1 && n <= 1'000'000) return static_cast<int>(n);
    throw ParseError(std::string(kQuadratureNodesEnv) + " must be a positive integer");
  }
  return TimeScale::kDefaultQuadratureNodes;
}

json read_json(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open '" + path + "'");
  try {
    return json::parse(in);
  } catch (const json::parse_error& e) {
    throw ParseError("'" + path + "' is not valid JSON: " + e.what());
  }
}

TimeScale parse_timescale(const json& j) {
  const std::string w = "timescale";
  require_object(j, w);
  const std::string kind = text(j, w, "kind");
  if (kind == "uniform") {
    allow_keys(j, w, {"kind", "a", "b", "n"});
    return TimeScale::uniform(number(j, w, "a"), number(j, w, "b"),
                              static_cast<int>(integer(j, w, "n")));
  }
  if (kind == "q_scale") {
    allow_keys(j, w, {"kind", "q", "n", "m"});
    return TimeScale::q_scale(number(j, w, "q"), static_cast<int>(integer(j, w, "n")),
                              static_cast<int>(integer(j, w, "m")));
  }
  if (kind == "real_interval") {
    allow_keys(j, w, {"kind", "a", "b", "nodes"});
    return TimeScale::real_interval(number(j, w, "a"), number(j, w, "b"), nodes_from(j, w));
  }
  if (kind == "custom") {
    allow_keys(j, w, {"kind", "atoms", "intervals", "nodes"});
    std::vector<double> atoms;
    if (j.contains("atoms")) atoms = numbers(j["atoms"], w + ".atoms");
    std::vector<ClosedInterval> intervals;
    if (j.contains("intervals")) {
      const json& list = j["intervals"];
      if (!list.is_array()) throw ParseError(w + ".intervals: expected an array of [lo, hi]");
      for (const auto& iv : list) {
        const auto ends = numbers(iv, w + ".intervals");
        if (ends.size() != 2) throw ParseError(w + ".intervals: expected [lo, hi] pairs");
        intervals.push_back({ends[0], ends[1]});
      }
    }
    return TimeScale::custom(std::move(atoms), std::move(intervals), nodes_from(j, w));
  }
  throw ParseError("timescale.kind: unknown kind '" + kind + "'");
}

ScalarFunction parse_function(const json& j) {
  const std::string w = "function";
  require_object(j, w);
  const std::string family = text(j, w, "family");
  if (family == "constant") {
    allow_keys(j, w, {"family", "c"});
    return ScalarFunction::constant(number(j, w, "c"));
  }
  if (family == "affine") {
    allow_keys(j, w, {"family", "slope", "intercept"});
    return ScalarFunction::affine(number(j, w, "slope"), number(j, w, "intercept"));
  }
  if (family == "identity") {
    allow_keys(j, w, {"family"});
    return ScalarFunction::identity();
  }
  if (family == "power") {
    allow_keys(j, w, {"family", "exponent"});
    return ScalarFunction::power(number(j, w, "exponent"));
  }
  if (family == "exp" || family == "log" || family == "xlogx") {
    allow_keys(j, w, {"family"});
    if (family == "exp") return ScalarFunction::exp();
    if (family == "log") return ScalarFunction::log();
    return ScalarFunction::xlogx();
  }
  if (family == "polynomial") {
    allow_keys(j, w, {"family", "coefficients"});
    return ScalarFunction::polynomial(numbers(member(j, w, "coefficients"), w + ".coefficients"));
  }
  if (family == "transformed") {
    allow_keys(j, w, {"family", "inner", "outer_scale", "inner_scale", "inner_shift",
                      "outer_shift"});
    return ScalarFunction::transformed(
        parse_function(member(j, w, "inner")), number_or(j, w, "outer_scale", 1.0),
        number_or(j, w, "inner_scale", 1.0), number_or(j, w, "inner_shift", 0.0),
        number_or(j, w, "outer_shift", 0.0));
  }
  throw ParseError("function.family: unknown family '" + family + "'");
}

ProblemFile parse_problem(const json& j) {
  check_schema(j);
  allow_keys(j, "file", {"schema_version", "timescale", "problem", "oracle"});
  const json& tsb = member(j, "file", "timescale");
  const json& pb = member(j, "file", "problem");
  const std::string w = "problem";
  require_object(pb, w);
  const std::string kind = text(pb, w, "kind");

  ProblemKind pk;
  if (kind == "power_weighted") {
    pk = ProblemKind::power_weighted;
    allow_keys(pb, w, {"kind", "B", "alpha", "phi"});
  } else if (kind == "exp_derivative" || kind == "xlogx_shifted") {
    pk = kind == "exp_derivative" ? ProblemKind::exp_derivative : ProblemKind::xlogx_shifted;
    allow_keys(pb, w, {"kind", "B", "phi"});
  } else {
    throw ParseError("problem.kind: unknown kind '" + kind + "'");
  }
  const double B = number(pb, w, "B");
  const double alpha = pk == ProblemKind::power_weighted ? number(pb, w, "alpha") : 2.0;
  ScalarFunction phi = parse_function(member(pb, w, "phi"));

  ProblemFile out{tsb, pb, VariationalProblem{pk, parse_timescale(tsb), B, std::move(phi), alpha},
                  std::nullopt};

  if (j.contains("oracle")) {
    const json& ob = j["oracle"];
    const std::string ow = "oracle";
    require_object(ob, ow);
    const std::string mode = text(ob, ow, "mode");
    OracleSpec spec{};
    if (mode == "exhaustive") {
      allow_keys(ob, ow, {"mode", "resolution"});
      spec.mode.kind = OracleMode::Kind::exhaustive;
      spec.mode.resolution = number(ob, ow, "resolution");
    } else if (mode == "random") {
      allow_keys(ob, ow, {"mode", "samples", "seed"});
      spec.mode.kind = OracleMode::Kind::random;
      const auto samples = integer(ob, ow, "samples");
      const auto seed = ob.contains("seed") ? integer(ob, ow, "seed") : 0;
      if (samples < 1 || seed < 0) throw ParseError("oracle: samples >= 1 and seed >= 0 required");
      spec.mode.samples = static_cast<std::uint64_t>(samples);
      spec.mode.seed = static_cast<std::uint64_t>(seed);
    } else if (mode == "perturbation") {
      allow_keys(ob, ow, {"mode", "eps"});
      spec.mode.kind = OracleMode::Kind::perturbation;
      spec.mode.eps = number(ob, ow, "eps");
    } else {
      throw ParseError("oracle.mode: unknown mode '" + mode + "'");
    }
    out.oracle = spec;
  }
  return out;
}

CheckFile parse_check(const json& j) {
  check_schema(j);
  allow_keys(j, "file", {"schema_version", "timescale", "check"});
  const TimeScale ts = parse_timescale(member(j, "file", "timescale"));
  const json& cb = member(j, "file", "check");
  const std::string w = "check";
  require_object(cb, w);
  const std::string kind = text(cb, w, "kind");
  auto grid = [&](const char* key) { return parse_grid(member(cb, w, key), ts, w + "." + key); };

  if (kind == "weighted_jensen") {
    allow_keys(cb, w, {"kind", "f", "h", "F"});
    return {CheckFile::Kind::weighted_jensen, grid("f"), grid("h"),
            parse_function(member(cb, w, "F")), std::nullopt, std::nullopt, std::nullopt};
  }
  if (kind == "jensen") {
    allow_keys(cb, w, {"kind", "f", "F"});
    return {CheckFile::Kind::jensen, grid("f"), std::nullopt, parse_function(member(cb, w, "F")),
            std::nullopt, std::nullopt, std::nullopt};
  }
  if (kind == "power" || kind == "reciprocal_power") {
    allow_keys(cb, w, {"kind", "f", "alpha"});
    const double a = number(cb, w, "alpha");
    const SpecialCase sc = kind == "power" ? SpecialCase::power(a) : SpecialCase::reciprocal_power(a);
    return {CheckFile::Kind::special, grid("f"), std::nullopt, std::nullopt, sc, std::nullopt,
            std::nullopt};
  }
  if (kind == "exp" || kind == "log" || kind == "xlogx") {
    allow_keys(cb, w, {"kind", "f"});
    const SpecialCase sc = kind == "exp"   ? SpecialCase::exp()
                           : kind == "log" ? SpecialCase::log()
                                           : SpecialCase::xlogx();
    return {CheckFile::Kind::special, grid("f"), std::nullopt, std::nullopt, sc, std::nullopt,
            std::nullopt};
  }
  if (kind == "quasi_arithmetic") {
    allow_keys(cb, w, {"kind", "f", "phi", "psi"});
    return {CheckFile::Kind::quasi_arithmetic, grid("f"), std::nullopt, std::nullopt,
            std::nullopt, parse_function(member(cb, w, "phi")),
            parse_function(member(cb, w, "psi"))};
  }
  throw ParseError("check.kind: unknown kind '" + kind + "'");
}

}  // namespace tscale::cli
