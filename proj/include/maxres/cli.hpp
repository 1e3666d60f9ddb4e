#pragma once

#include <iosfwd>

namespace maxres {

// Exit status contract: 0 success or valid, 1 invalid proof / not entailed /
// failed probe, 2 usage or input format error.
inline constexpr int kExitOk = 0;
inline constexpr int kExitNegative = 1;
inline constexpr int kExitUsage = 2;

// Version tag of the --json output.
inline constexpr const char* kJsonSchema = "maxres/1";

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace maxres
