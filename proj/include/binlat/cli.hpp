#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace binlat::cli {

enum ExitCode : int { ok = 0, validation_error = 1, numerical_failure = 2 };

// Runs one subcommand. `args` excludes the program name. Data goes to `out`
// unless --out is given; diagnostics go to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace binlat::cli
