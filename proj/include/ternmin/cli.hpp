#pragma once

#include <iosfwd>

namespace ternmin::cli {

/// 4 only signals a failed internal identity, i.e. a bug.
enum ExitCode : int { ok = 0, verdict_negative = 1, usage = 2, capacity = 3, internal = 4 };

/// Parses argv and runs one subcommand, writing artifacts to `out` and
/// diagnostics to `err`.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

} // namespace ternmin::cli
