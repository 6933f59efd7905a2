#pragma once

#include <iosfwd>

namespace hgm::tools {

// Exit codes.
inline constexpr int kExitOk = 0;
inline constexpr int kExitPrecondition = 2;
inline constexpr int kExitVerification = 3;

// Runs one `hgm` invocation. Records go to `out` (or the --out file),
// usage text and parse diagnostics to `err`.
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace hgm::tools
