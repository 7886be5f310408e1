#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "qot/random_stream.hpp"

namespace qot {

struct CheckResult {
    std::string name;
    bool passed = false;
    std::string detail;
};

struct VerifyOptions {
    std::uint64_t trials = 250000; // Monte-Carlo sample size per check
    std::uint64_t seed = kDefaultSeed;
};

// The invariant battery behind `verify`:
//   oracle-vs-analytic   enumeration equals the closed form on a 32x32
//                        grid over [0, 2pi)^2, both bit values, 1e-12
//   cheating-ceiling     grid max is 3/4 exactly on alpha = beta, grid
//                        min 1/4 exactly at a pi offset
//   mc-diagonal          FixedAngles(0,0) Monte Carlo within 5 standard
//                        errors of 3/4
//   mc-orthogonal        FixedAngles(0,pi/2) within 5 standard errors of 1/2
//   storage-attack       delayed measurement succeeds always (8-case
//                        exhaustive plus random sessions)
//   ck-comparison        single-particle protocol at pi/4 beats the
//                        two-particle ceiling: enumeration equals
//                        cos^2(pi/8) to 1e-12, Monte Carlo agrees
std::vector<CheckResult> run_verification(const VerifyOptions& options);

bool all_passed(const std::vector<CheckResult>& results) noexcept;

// One line per check: "PASS <name>  <detail>".
void print_check_table(std::ostream& out,
                       const std::vector<CheckResult>& results);

} // namespace qot
