#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace coeffbounds {

// Command-line front end. args excludes the program name. Returns the
// process exit status: 0 success, 1 failed verification, 2 usage or
// hypothesis errors. Identical invocations (including seeds) produce
// byte-identical output.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace coeffbounds
