#pragma once

/// @file cli.hpp
/// @brief Command-line front end. Exit codes: 0 success, 1 domain error or
/// failed self-check, 2 usage error.

#include <iosfwd>
#include <string>
#include <vector>

namespace cyclo {

inline constexpr int kExitOk = 0;
inline constexpr int kExitDomain = 1;
inline constexpr int kExitUsage = 2;

/// `args` excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace cyclo
