#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace hjps::cli {

// Runs one subcommand. Exit codes: 0 success, 1 a checker ran and reported
// failure, 2 usage or input error (no payload emitted).
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace hjps::cli
