#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace severi {

// Command-line entry point. args excludes the program name. Results go to
// out, diagnostics to err. Exit codes: 0 success, 1 invalid parameters,
// 2 verification or crosscheck failure, 3 cache corruption or integrity
// failure.
int run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err);

}  // namespace severi
