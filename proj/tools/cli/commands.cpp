#include "commands.hpp"

#include <charconv>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "problem_file.hpp"
#include "tscale/delta_calculus.hpp"
#include "tscale/errors.hpp"

namespace tscale::cli {

using nlohmann::json;

namespace {

std::string full_precision(double x) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

const char* to_string(Direction d) { return d == Direction::convex_ge ? "convex_ge" : "concave_le"; }

json report_json(const InequalityReport& r) {
  return {{"lhs", r.lhs},       {"rhs", r.rhs},           {"gap", r.gap},
          {"direction", to_string(r.direction)},           {"holds", r.holds},
          {"equality", r.equality}, {"f_is_constant", r.f_is_constant}};
}

json report_json(const OracleReport& r) {
  json mode = {{"kind", to_string(r.mode.kind)}};
  switch (r.mode.kind) {
    case OracleMode::Kind::exhaustive: mode["resolution"] = r.mode.resolution; break;
    case OracleMode::Kind::random:
      mode["samples"] = r.mode.samples;
      mode["seed"] = r.mode.seed;
      break;
    case OracleMode::Kind::perturbation: mode["eps"] = r.mode.eps; break;
  }
  const auto y = r.best_candidate.values();
  return {{"verdict", to_string(r.verdict)},
          {"mode", mode},
          {"candidates_evaluated", r.candidates_evaluated},
          {"best_value_found", r.best_value_found},
          {"closed_form_value", r.closed_form_value},
          {"extremum", to_string(r.extremum)},
          {"matching_claim", r.matching_claim},
          {"best_candidate", std::vector<double>(y.begin(), y.end())}};
}

void write_trajectory_csv(const std::filesystem::path& path, const GridFunction& y) {
  const auto slope = delta_derivative(y);
  std::ofstream csv(path);
  if (!csv) throw std::runtime_error("cannot write '" + path.string() + "'");
  csv << "t,y,y_delta\n";
  const TimeScale& ts = y.timescale();
  for (std::size_t i = 0; i < ts.size(); ++i) {
    csv << full_precision(ts.point(i)) << ',' << full_precision(y[i]) << ',';
    if (i < slope.size()) csv << full_precision(slope[i]);
    csv << '\n';
  }
}

// Candidate y values from solution.json ("trajectory.y") or a trajectory CSV.
std::vector<double> read_candidate(const std::string& path) {
  if (std::filesystem::path(path).extension() == ".json") {
    const json j = read_json(path);
    if (!j.contains("trajectory") || !j["trajectory"].contains("y"))
      throw ParseError("'" + path + "' has no trajectory.y");
    return j["trajectory"]["y"].get<std::vector<double>>();
  }
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open '" + path + "'");
  std::string line;
  std::getline(in, line);
  if (line.rfind("t,y", 0) != 0) throw ParseError("'" + path + "': expected header t,y,y_delta");
  std::vector<double> y;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    std::istringstream row(line);
    std::string t, v;
    if (!std::getline(row, t, ',') || !std::getline(row, v, ','))
      throw ParseError("'" + path + "': malformed row '" + line + "'");
    double value = 0.0;
    const auto [end, ec] = std::from_chars(v.data(), v.data() + v.size(), value);
    if (ec != std::errc() || end != v.data() + v.size())
      throw ParseError("'" + path + "': bad y value '" + v + "'");
    y.push_back(value);
  }
  return y;
}

std::string one_line(std::string s) {
  for (char& c : s)
    if (c == '\n' || c == '\r') c = ' ';
  return s;
}

}  // namespace

int cmd_solve(const std::string& path, const std::string& out_dir, std::ostream& out) {
  const ProblemFile pf = parse_problem(read_json(path));
  const Solution s = solve(pf.problem);

  std::filesystem::create_directories(out_dir);
  const auto y = s.trajectory.values();
  const auto t = pf.problem.ts.points();
  json summary = {{"schema_version", kSchemaVersion},
                  {"kind", to_string(pf.problem.kind)},
                  {"C", s.C},
                  {"optimal_value", s.optimal_value},
                  {"extremum", to_string(s.extremum)},
                  {"problem", pf.problem_block},
                  {"timescale", pf.timescale_block}};
  json file = summary;
  file["trajectory"] = {{"t", std::vector<double>(t.begin(), t.end())},
                        {"y", std::vector<double>(y.begin(), y.end())}};
  {
    std::ofstream js(std::filesystem::path(out_dir) / "solution.json");
    if (!js) throw std::runtime_error("cannot write solution.json in '" + out_dir + "'");
    js << file.dump(2) << '\n';
  }
  write_trajectory_csv(std::filesystem::path(out_dir) / "trajectory.csv", s.trajectory);
  out << summary.dump() << '\n';
  return kOk;
}

int cmd_check(const std::string& path, std::ostream& out) {
  const CheckFile cf = parse_check(read_json(path));
  InequalityReport r{};
  switch (cf.kind) {
    case CheckFile::Kind::weighted_jensen: r = weighted_jensen_gap(cf.f, *cf.h, *cf.F); break;
    case CheckFile::Kind::jensen: r = jensen_gap(cf.f, *cf.F); break;
    case CheckFile::Kind::special: r = special_case_gap(*cf.special, cf.f); break;
    case CheckFile::Kind::quasi_arithmetic: r = quasi_arithmetic_gap(cf.f, *cf.phi, *cf.psi); break;
  }
  out << report_json(r).dump() << '\n';
  return r.holds ? kOk : kViolated;
}

int cmd_verify(const std::string& path, long corrupt_index, std::ostream& out) {
  const ProblemFile pf = parse_problem(read_json(path));
  if (!pf.oracle) throw ParseError("verify needs an 'oracle' block");
  const VariationalProblem& p = pf.problem;
  Claim claim = claim_from_solver(p);
  if (corrupt_index >= 0) {
    const auto n = static_cast<long>(claim.trajectory.size());
    if (corrupt_index < 1 || corrupt_index >= n - 1)
      throw PreconditionError("corrupt index must name an interior point");
    const auto v = claim.trajectory.values();
    std::vector<double> y(v.begin(), v.end());
    y[static_cast<std::size_t>(corrupt_index)] += 1.0;
    GridFunction bad(p.ts, std::move(y));
    const double value = evaluate_functional(p, bad);
    claim = Claim{std::move(bad), value, claim.extremum};
  }
  const OracleMode& m = pf.oracle->mode;
  OracleReport r = [&] {
    switch (m.kind) {
      case OracleMode::Kind::exhaustive: return exhaustive_verify(p, m.resolution, claim);
      case OracleMode::Kind::random: return random_verify(p, m.samples, m.seed, claim);
      case OracleMode::Kind::perturbation: break;
    }
    return perturbation_verify(p, m.eps, claim);
  }();
  out << report_json(r).dump() << '\n';
  return r.verdict == Verdict::certified ? kOk : kRefuted;
}

int cmd_verify_wsc(std::ostream& out) {
  const CounterexampleReport r = wsc_counterexample(default_quadrature_nodes());
  out << json{{"I_tilde", r.I_tilde},
              {"C", r.C},
              {"I_max_claimed", r.I_max_claimed},
              {"margin", r.margin},
              {"contradiction", r.contradiction}}
             .dump()
      << '\n';
  return r.contradiction ? kOk : kRefuted;
}

int cmd_evaluate(const std::string& path, const std::string& candidate, std::ostream& out) {
  const ProblemFile pf = parse_problem(read_json(path));
  const GridFunction y(pf.problem.ts, read_candidate(candidate));
  out << json{{"value", evaluate_functional(pf.problem, y)}}.dump() << '\n';
  return kOk;
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Delta calculus on time scales: Jensen-type inequality checks and "
               "closed-form variational solvers",
               "tscale"};
  app.require_subcommand(1);

  std::string solve_file, out_dir = ".";
  auto* solve_cmd = app.add_subcommand("solve", "Solve a variational problem file");
  solve_cmd->add_option("file", solve_file, "Problem file (JSON)")->required();
  solve_cmd->add_option("-o,--out", out_dir, "Output directory for solution.json and trajectory.csv");

  std::string check_file;
  auto* check_cmd = app.add_subcommand("check", "Evaluate a Jensen-type inequality");
  check_cmd->add_option("file", check_file, "Check file (JSON)")->required();

  std::string verify_file;
  bool wsc = false;
  long corrupt = -1;
  auto* verify_cmd = app.add_subcommand("verify", "Certify a closed-form extremum with an oracle");
  verify_cmd->add_option("file", verify_file, "Problem file with an oracle block");
  verify_cmd->add_flag("--wsc", wsc, "Evaluate the literature counterexample instead");
  verify_cmd->add_option("--debug-corrupt", corrupt,
                         "Shift the claimed trajectory at this interior index by 1");

  std::string eval_file, candidate;
  auto* eval_cmd = app.add_subcommand("evaluate", "Evaluate the functional at a candidate");
  eval_cmd->add_option("file", eval_file, "Problem file (JSON)")->required();
  eval_cmd->add_option("--candidate", candidate, "solution.json or trajectory.csv")->required();

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "error[usage]: " << one_line(e.what()) << '\n';
    return kUsage;
  }

  try {
    if (*solve_cmd) return cmd_solve(solve_file, out_dir, out);
    if (*check_cmd) return cmd_check(check_file, out);
    if (*eval_cmd) return cmd_evaluate(eval_file, candidate, out);
    if (wsc) return cmd_verify_wsc(out);
    if (verify_file.empty()) {
      err << "error[usage]: verify needs a problem file or --wsc\n";
      return kUsage;
    }
    return cmd_verify(verify_file, corrupt, out);
  } catch (const ParseError& e) {
    err << "error[parse]: " << one_line(e.what()) << '\n';
    return kParse;
  } catch (const json::exception& e) {
    err << "error[parse]: " << one_line(e.what()) << '\n';
    return kParse;
  } catch (const Error& e) {
    err << "error[" << e.category() << "]: " << one_line(e.what()) << '\n';
    return kRejected;
  } catch (const std::exception& e) {
    err << "error[io]: " << one_line(e.what()) << '\n';
    return kRejected;
  }
}

}  // namespace tscale::cli
