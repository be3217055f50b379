#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace cornerjet::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitUsage = 1;    ///< bad flags, unparsable expressions, insufficient order
inline constexpr int kExitRejected = 2; ///< rejected / pole / fail

/// Runs one command; `args` excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace cornerjet::cli
