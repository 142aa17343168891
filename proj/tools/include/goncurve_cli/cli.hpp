#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace goncurve::cli {

enum ExitCode : int { kOk = 0, kInputError = 2, kBudgetExceeded = 3 };

/// Entry point shared by the executable and the tests. args excludes the
/// program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace goncurve::cli
