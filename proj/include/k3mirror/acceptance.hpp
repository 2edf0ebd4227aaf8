#pragma once

// The end-to-end acceptance suite: eleven exact checks, each timed.

#include <cstdint>
#include <string>
#include <vector>

namespace k3mirror {

struct CriterionResult {
    int id = 0;
    std::string name;
    bool passed = false;
    std::string detail;
    double seconds = 0;
};

inline constexpr double kCriterionTimeLimit = 5.0;
inline constexpr std::uint64_t kAcceptanceSeed = 0x6b336d6972726f72ULL;

/// Runs criterion `id` (1..11). Exceeding the time limit counts as failure.
CriterionResult run_criterion(int id, std::uint64_t seed = kAcceptanceSeed);

std::vector<CriterionResult> run_acceptance(std::uint64_t seed = kAcceptanceSeed);

int criterion_count();

} // namespace k3mirror
