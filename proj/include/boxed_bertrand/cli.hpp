#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace boxed_bertrand::cli {

// Exit codes.
inline constexpr int kOk = 0;
inline constexpr int kUsage = 1;      // usage or precondition violation
inline constexpr int kInternal = 2;   // internal invariant failure

// Naive census refuses n above this without --force.
inline constexpr long kNaiveLimit = 512;

// Runs one command line (args excludes the program name). Data goes to `out`
// unless --output names a file; summaries and diagnostics go to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace boxed_bertrand::cli
