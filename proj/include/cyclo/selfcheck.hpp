#pragma once

/**
 * @file selfcheck.hpp
 * @brief Runs every module's property suite and reports per-suite counts.
 *
 * Bounds on n (periods, cyclotomic indices, circulant sizes) are capped by
 * max_n; sample counts per n are fixed. Random inputs come from a seeded
 * generator so a run is reproducible. A suite stops at its first failing
 * case and records that input.
 */

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace cyclo {

enum class InjectedFault {
    none,
    projector_sign,  ///< negates the projector of the largest divisor
};

struct SelfcheckOptions {
    std::uint64_t max_n = 24;
    std::uint64_t seed = 0x5eed;
    InjectedFault fault = InjectedFault::none;
};

struct SuiteResult {
    std::string name;
    std::size_t cases = 0;
    std::optional<std::string> failure;  ///< reproducing input of the first failing case
    [[nodiscard]] bool passed() const { return !failure.has_value(); }
};

std::vector<SuiteResult> run_selfcheck(const SelfcheckOptions& options);

}  // namespace cyclo
