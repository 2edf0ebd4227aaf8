#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace k3mirror::cli {

/// Exit codes: 0 success, 1 domain error (JSON error object on stdout),
/// 2 usage error (message naming the flag on stderr).
int run(std::vector<std::string> args, std::ostream& out, std::ostream& err);

} // namespace k3mirror::cli
