#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace gridhom {

// Command-line front end, callable in process for tests.  `args` holds
// everything after the program name.  Payload goes to `out` unless --out
// redirects it to a file; diagnostics go to `err`.  Returns 0 when every
// requested check passes, 1 when a check fails, 2 on usage or capacity
// errors.
int run_cli(const std::vector<std::string>& args, std::ostream& out,
            std::ostream& err);

}  // namespace gridhom
