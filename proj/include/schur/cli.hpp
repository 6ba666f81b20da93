#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace schur::cli {

/// Exit codes: 0 success, 2 verification failure, 3 invalid parameters,
/// 4 resource cap exceeded.
inline constexpr int kExitOk = 0;
inline constexpr int kExitVerificationFailure = 2;
inline constexpr int kExitInvalidParameters = 3;
inline constexpr int kExitCapExceeded = 4;

/// Runs one CLI invocation. Data goes to `out`; diagnostics to `err`.
/// Output is byte-identical for identical argument vectors.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace schur::cli
