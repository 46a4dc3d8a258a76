#pragma once

#include <cstdint>
#include <ostream>
#include <string>
#include <vector>

namespace coneham {

inline constexpr std::uint64_t kDefaultSeed = 20240611;

/// Seed from CONEHAM_SEED when set and numeric, otherwise kDefaultSeed.
std::uint64_t env_seed();

/// Runs one command; `args` excludes the program name.
/// Exit codes: 0 success/holds, 1 not-established/fail, 2 usage error.
int run_command(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace coneham
