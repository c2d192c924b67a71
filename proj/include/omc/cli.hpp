#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace omc {

// Runs one CLI invocation. Exit codes: 0 success, 1 usage error, 2
// validation/axiom failure, 3 precondition unmet, 4 resource cap hit.
int run_cli(const std::vector<std::string>& args, std::istream& in, std::ostream& out,
            std::ostream& err);

} // namespace omc
