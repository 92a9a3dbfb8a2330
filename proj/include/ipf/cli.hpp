#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace ipf::cli {

// Version tag carried by every JSON document the CLI emits.
inline constexpr char const *kJsonSchema = "ipf-cli/1";

// Runs the command line `args` (without the program name). Returns 0 on
// success, 1 when `check` finds a failing property and 2 on usage, parse or
// evaluation errors (reported on err).
int run(std::vector<std::string> const &args, std::ostream &out, std::ostream &err);

}  // namespace ipf::cli
