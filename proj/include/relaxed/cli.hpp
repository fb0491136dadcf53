#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace relaxed::cli {

// Exit codes: 0 success, 1 domain error (witness on `err`), 2 usage error.
inline constexpr int kExitOk = 0;
inline constexpr int kExitDomain = 1;
inline constexpr int kExitUsage = 2;

// `args` excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace relaxed::cli
