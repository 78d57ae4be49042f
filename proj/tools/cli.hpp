#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace locdom::cli {

/// Exit codes: 0 success or property holds, 1 property false or theorem
/// failure, 2 usage error or rejected input.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace locdom::cli
