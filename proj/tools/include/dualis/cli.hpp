#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace dualis::cli {

enum ExitCode : int { ok = 0, domain_failure = 1, usage_failure = 2 };

// Runs one command line (without the program name). Results go to `out`; usage diagnostics to
// `err`. Domain errors print a JSON error object to `out`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

struct SelftestCheck {
  std::string name;
  bool passed = false;
};

std::vector<SelftestCheck> run_selftest();

}  // namespace dualis::cli
