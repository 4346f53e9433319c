#pragma once

#include <cstdint>
#include <ostream>
#include <string>
#include <string_view>
#include <vector>

namespace homonym::cli {

enum ExitCode : int { kOk = 0, kInternal = 1, kUsage = 2 };

/// Group-size grid. Either "start:stop:points" (log-spaced, rounded to
/// integers, duplicates dropped) or an explicit comma list "10,100,1000".
std::vector<std::uint64_t> parse_grid(std::string_view spec);

// Entry point shared by the executable and the tests. args[0] is the
// program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace homonym::cli
