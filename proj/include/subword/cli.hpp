#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace subword::cli {

/// Exit codes: 0 success, 1 validation error, 2 usage error, 3 failed check or selftest.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace subword::cli
