#pragma once

#include <cstdint>
#include <functional>
#include <string>

namespace ssp {

/// Outcome of one acceptance criterion.
struct CriterionResult {
    int number = 0;
    std::string name;
    bool passed = false;
    std::string detail;  // first failure, or short statistics on success
    double seconds = 0.0;

    std::string line() const;
};

/// Runs one of the eight in-process acceptance criteria:
///   1 catalog solution-preservation sweep
///   2 composed-chain verification
///   3 formula-gadget games
///   4 lifted-variant agreement
///   5 cost-form adaptations
///   6 canonical-scenario maximality
///   7 lifted reductions stay solution-preserving
///   8 oracle cross-checks
CriterionResult run_criterion(int number, std::uint64_t seed);

/// Runs criteria 1..8 in order, emitting one result line each through sink.
/// Returns true iff every criterion passed.
bool run_acceptance(std::uint64_t seed,
                    const std::function<void(const std::string&)>& sink);

}  // namespace ssp
