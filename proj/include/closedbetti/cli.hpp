#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace closedbetti::cli {

/// Entry point shared by the executable and the tests. `args` excludes the
/// program name. Returns 0 on success, 1 when a verification check fails and
/// 2 on malformed input.
int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out,
        std::ostream& err);

}  // namespace closedbetti::cli
