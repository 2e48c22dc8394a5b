#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace cayley::cli {

/// Dispatches a full command line (without argv[0]).
/// Exit codes: 0 success / all checks pass, 1 verification failure found,
/// 2 usage or input error (message on err).
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace cayley::cli
