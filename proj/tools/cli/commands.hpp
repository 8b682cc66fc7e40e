#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace tscale::cli {

enum ExitCode : int {
  kOk = 0,
  kUsage = 1,
  kParse = 2,
  kRejected = 3,   ///< precondition, domain, feasibility, degenerate or budget error
  kViolated = 4,   ///< an inequality check failed
  kRefuted = 5,    ///< an oracle refuted the claimed extremum
};

/// Entry point shared by the executable and the tests. `args` excludes the
/// program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

int cmd_solve(const std::string& path, const std::string& out_dir, std::ostream& out);
int cmd_check(const std::string& path, std::ostream& out);
/// corrupt_index >= 0 replaces the claim by the solver trajectory with that
/// interior point shifted up by 1.
int cmd_verify(const std::string& path, long corrupt_index, std::ostream& out);
int cmd_verify_wsc(std::ostream& out);
/// Re-evaluates a candidate trajectory (solution.json or trajectory.csv).
int cmd_evaluate(const std::string& path, const std::string& candidate, std::ostream& out);

}  // namespace tscale::cli
