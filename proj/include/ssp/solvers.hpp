#pragma once

#include <optional>

#include "ssp/family.hpp"
#include "ssp/variants.hpp"

namespace ssp {

/// Outcome of an exhaustive game solve. value is the min blocker cost or
/// cardinality (interdiction), the min-max regret, or the optimal two-stage
/// cost; it is absent when no admissible play exists or the form is a pure
/// decision. witness is the lexicographically least optimal blocker,
/// solution, or first-stage set.
struct GameValue {
    bool yes = false;
    std::optional<Int> value;
    std::optional<Subset> witness;
};

/// Exhaustive optimal-play solvers. Every nested loop draws from the one
/// budget passed in; when it runs dry the solver throws BudgetExceeded rather
/// than return a guess. The overloads without a budget use a fresh allowance
/// of Budget::kNestingCap nodes.

GameValue solve_interdiction(const InterdictionInstance& v, Budget& budget);
GameValue solve_interdiction(const CombInterdictionInstance& v, Budget& budget);
GameValue solve_interdiction(const InterdictionInstance& v);
GameValue solve_interdiction(const CombInterdictionInstance& v);

/// Throws UndefinedRegret when the base has no solutions (restricted form) or
/// no feasible sets (cost form).
GameValue solve_min_max_regret(const RegretInstance& v, Budget& budget);
GameValue solve_min_max_regret(const RestrictedRegretInstance& v, Budget& budget);
GameValue solve_min_max_regret(const RegretInstance& v);
GameValue solve_min_max_regret(const RestrictedRegretInstance& v);

GameValue solve_two_stage(const TwoStageInstance& v, Budget& budget);
GameValue solve_two_stage(const CombTwoStageInstance& v, Budget& budget);
GameValue solve_two_stage(const TwoStageInstance& v);
GameValue solve_two_stage(const CombTwoStageInstance& v);

}  // namespace ssp
