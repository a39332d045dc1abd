#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace cig::cli {

// Runs the `cig` command line. Exit codes: 0 success, 1 check failures
// (report still written), 2 usage or IO errors.
int run(std::vector<std::string> args, std::ostream& out, std::ostream& err);

}  // namespace cig::cli
