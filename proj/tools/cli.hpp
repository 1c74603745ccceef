#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace biunary::cli {

inline constexpr int kHolds = 0;
inline constexpr int kFails = 1;
inline constexpr int kUsage = 2;

// args excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err);

}  // namespace biunary::cli
