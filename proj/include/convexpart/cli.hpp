#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace convexpart {

// Exit codes.
inline constexpr int kExitOk = 0;
inline constexpr int kExitIo = 1;
inline constexpr int kExitAllCollinear = 2;
inline constexpr int kExitGuard = 3;
inline constexpr int kExitInvalid = 4;  // verify found violations

inline constexpr const char* kSolveHeader = "instance,n,branch,ell,s,f,lower_bound,ratio_bound,wall_ms";

/// Runs the command line (without the program name) and returns the exit
/// code. Subcommands: solve, verify, gen, exact, bench.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace convexpart
