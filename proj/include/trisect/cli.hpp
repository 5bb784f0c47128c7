#pragma once

#include <ostream>

namespace trisect::cli {

/// Exit codes: 0 success, 1 construction or claim failure, 2 usage or range.
enum Exit : int { ok = 0, failure = 1, usage = 2 };

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace trisect::cli
