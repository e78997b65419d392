#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace corecount {

// Run one CLI command (arguments without the program name). Returns the
// process exit code: 0 success, 1 verification mismatch, 2 usage or parse
// error, 3 computational guard tripped.
int run_command(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace corecount
