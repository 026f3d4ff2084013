#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace ontomap::cli {

/// Exit codes: 0 ok, 1 inconsistency or differences found, 2 usage or
/// parse error. `args` excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace ontomap::cli
