#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace poncelet::cli {

// Exit codes: 0 success, 1 check failure or runtime error, 2 usage error.
inline constexpr int kOk = 0;
inline constexpr int kCheckFailed = 1;
inline constexpr int kUsage = 2;

// args excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace poncelet::cli
