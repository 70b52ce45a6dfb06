#pragma once

#include <iosfwd>

namespace mso::cli {

/// Parses argv and runs one verb. Results go to `out`, diagnostics to `err`.
/// Returns the process exit status.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace mso::cli
