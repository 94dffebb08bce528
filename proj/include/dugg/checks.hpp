#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "dugg/report.hpp"

namespace dugg {

/// Names accepted by run_check.
const std::vector<std::string>& check_suites();

/// Runs `trials` seeded random instances of a property suite. Trial k draws
/// from its own generator seeded by (seed, k), so results do not depend on
/// the trial count. Throws BadParameter for an unknown suite.
CheckReport run_check(std::string_view suite, int trials, std::uint64_t seed, double tol);

/// Default tolerance used by the CLI for each suite.
double default_check_tol(std::string_view suite);

Rng trial_rng(std::uint64_t seed, int trial);

}  // namespace dugg
