#pragma once

#include <ostream>

namespace padicvoa::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitViolation = 1;
inline constexpr int kExitUsage = 2;

/// Entry point of the padic-voa tool. JSON goes to `out`, diagnostics to
/// `err`. Returns 0 on success, 1 when a checked identity fails, 2 on usage
/// or parse errors.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace padicvoa::cli
