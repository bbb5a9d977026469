#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace lvhp::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitCheckFailed = 1;
inline constexpr int kExitInvalidInput = 2;

/// Runs the command line. args[0] is the program name. Reports go to --out
/// when given, otherwise to out; diagnostics go to err.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

/// %.17g, the CSV number format.
std::string format_number(double v);

}  // namespace lvhp::cli
