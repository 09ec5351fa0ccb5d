#pragma once

#include <iosfwd>

namespace bctkit {

inline constexpr int kExitOk = 0;
inline constexpr int kExitClaimFailure = 1;
inline constexpr int kExitUsage = 2;

/// Entry point of the bctkit tool. Reports go to `out` (or --out), errors
/// to `err`.
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace bctkit
