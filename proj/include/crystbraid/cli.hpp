#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace cryst::cli {

/// Fixed seed used by sampling commands when --seed is absent.
inline constexpr unsigned long long kDefaultSeed = 20240601;

/// Runs one command line (without the program name). Returns 0 on success,
/// 1 on a domain error and 2 on a usage error.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace cryst::cli
