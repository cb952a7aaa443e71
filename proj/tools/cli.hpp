#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace cbal::cli {

/// Runs one cbal command.  args excludes the program name.  Exit codes:
/// 0 success, 1 negative verdict (not realizable, class absent, not equal,
/// unbalanced, ...), 2 usage or parse error.
int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out,
        std::ostream& err);

}  // namespace cbal::cli
