#pragma once

#include <iosfwd>

namespace conicring::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitMalformedInput = 1;
inline constexpr int kExitResourceBound = 2;
inline constexpr int kExitInternal = 3;

/// Runs one `conicring` invocation. Reports go to `out`, diagnostics to `err`.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace conicring::cli
