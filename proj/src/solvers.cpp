#include "ssp/solvers.hpp"

#include <algorithm>
#include <map>

#include "ssp/errors.hpp"
#include "ssp/instance.hpp"

namespace ssp {

namespace {

std::vector<Subset> solved_members(const SspInstance& base, Budget& budget) {
    SolutionFamily fam = enumerate_solutions(base, budget);
    if (!fam.complete())
        throw BudgetExceeded("base solution enumeration exceeded the node budget");
    return fam.members();
}

std::vector<Subset> feasible_members(const SspInstance& base, Budget& budget) {
    SolutionFamily fam = enumerate_feasible(base, budget);
    if (!fam.complete())
        throw BudgetExceeded("feasible-set enumeration exceeded the node budget");
    return fam.members();
}

void spend(Budget& budget) {
    if (!budget.tick())
        throw BudgetExceeded("game solve exceeded the node budget");
}

bool hits_all(const Subset& blocker, const std::vector<Subset>& solutions,
              Budget& budget) {
    for (const auto& sol : solutions) {
        spend(budget);
        if (!intersects(blocker, sol)) return false;
    }
    return true;
}

struct Best {
    std::optional<Int> value;
    std::optional<Subset> witness;

    void offer(Int value_in, const Subset& witness_in) {
        if (!value || value_in < *value ||
            (value_in == *value && witness_in < *witness)) {
            value = value_in;
            witness = witness_in;
        }
    }
};

// --- interdiction -----------------------------------------------------------

// All subsets of pool (cardinality capped when cap >= 0), scored by score;
// keeps the cheapest admissible hitting blocker.
template <class ScoreFn>
void scan_blockers(const Subset& pool, Int cap, ScoreFn score,
                   Int admissible_limit, const std::vector<Subset>& solutions,
                   Budget& budget, Best& best, std::size_t pos, Subset& chosen) {
    spend(budget);
    Int value = score(chosen);
    if (value <= admissible_limit && hits_all(chosen, solutions, budget))
        best.offer(value, chosen);
    if (cap >= 0 && static_cast<Int>(chosen.size()) == cap) return;
    for (std::size_t i = pos; i < pool.size(); ++i) {
        chosen.push_back(pool[i]);
        scan_blockers(pool, cap, score, admissible_limit, solutions, budget,
                      best, i + 1, chosen);
        chosen.pop_back();
    }
}

void recheck_blocker(const GameValue& result, const std::vector<Subset>& solutions,
                     Budget& budget) {
    if (!result.yes) return;
    if (!result.witness || !hits_all(*result.witness, solutions, budget))
        throw Error("internal: interdiction witness failed revalidation");
}

// --- regret -----------------------------------------------------------------

GameValue regret_over(const CostMap& lower, const CostMap& upper,
                      const std::vector<Subset>& family, Int bound,
                      Budget& budget) {
    if (family.empty())
        throw UndefinedRegret("max regret is undefined on an empty family");
    Best best;
    for (const auto& s : family) {
        CostMap scenario = canonical_scenario(lower, upper, s);
        Int mine = cost_under(scenario, s);
        Int cheapest = mine;
        for (const auto& rival : family) {
            spend(budget);
            cheapest = std::min(cheapest, cost_under(scenario, rival));
        }
        best.offer(checked_sub(mine, cheapest), s);
    }
    GameValue result{*best.value <= bound, best.value, best.witness};
    if (max_regret(lower, upper, *result.witness, family) != *result.value)
        throw Error("internal: regret witness failed revalidation");
    return result;
}

// --- two stage --------------------------------------------------------------

// Cheapest second stage disjoint from s1: scan feasible supersets of s1 and
// pay for their part outside s1 at the given prices.
std::optional<Int> completion_cost(const Subset& s1,
                                   const std::vector<Subset>& feasible,
                                   const CostMap& scenario, Budget& budget) {
    std::optional<Int> best;
    for (const auto& s : feasible) {
        spend(budget);
        if (!std::includes(s.begin(), s.end(), s1.begin(), s1.end())) continue;
        Int cost = 0;
        for (const auto& e : s)
            if (!std::binary_search(s1.begin(), s1.end(), e))
                cost = checked_add(cost, scenario.at(e));
        if (!best || cost < *best) best = cost;
    }
    return best;
}

// Adversary raises at most gamma coordinates to their upper bounds. Assumes s1
// has at least one feasible superset, so every scenario admits a completion.
Int worst_scenario_cost(const Subset& s1, const std::vector<Subset>& feasible,
                        const TwoStageInstance& v, Int gamma, const Universe& u,
                        Budget& budget, std::size_t pos, Subset& raised) {
    spend(budget);
    CostMap scenario = canonical_scenario(v.second_lower, v.second_upper, raised);
    Int worst = *completion_cost(s1, feasible, scenario, budget);
    if (static_cast<Int>(raised.size()) < gamma) {
        for (std::size_t i = pos; i < u.size(); ++i) {
            raised.push_back(u.elements()[i]);
            worst = std::max(worst, worst_scenario_cost(s1, feasible, v, gamma,
                                                        u, budget, i + 1, raised));
            raised.pop_back();
        }
    }
    return worst;
}

void scan_first_stage(const TwoStageInstance& v,
                      const std::vector<Subset>& feasible, const Universe& u,
                      Int gamma, Budget& budget, Best& best, std::size_t pos,
                      Subset& chosen) {
    spend(budget);
    bool extendable = false;
    for (const auto& s : feasible) {
        spend(budget);
        if (std::includes(s.begin(), s.end(), chosen.begin(), chosen.end())) {
            extendable = true;
            break;
        }
    }
    if (extendable) {
        Subset raised;
        Int worst =
            worst_scenario_cost(chosen, feasible, v, gamma, u, budget, 0, raised);
        best.offer(checked_add(cost_under(v.first_cost, chosen), worst), chosen);
    }
    for (std::size_t i = pos; i < u.size(); ++i) {
        chosen.push_back(u.elements()[i]);
        scan_first_stage(v, feasible, u, gamma, budget, best, i + 1, chosen);
        chosen.pop_back();
    }
}

// Whether s1 admits a completion disjoint from every blocker of size at most
// gamma.
bool comb_blockers_defeat(const std::vector<Subset>& completions,
                          const CombTwoStageInstance& v, Int gamma,
                          Budget& budget, std::size_t pos, Subset& blocker) {
    spend(budget);
    bool some = false;
    for (const auto& s2 : completions) {
        spend(budget);
        if (!intersects(blocker, s2)) {
            some = true;
            break;
        }
    }
    if (!some) return true;
    if (static_cast<Int>(blocker.size()) == gamma) return false;
    for (std::size_t i = pos; i < v.blockable.size(); ++i) {
        blocker.push_back(v.blockable[i]);
        bool defeated =
            comb_blockers_defeat(completions, v, gamma, budget, i + 1, blocker);
        blocker.pop_back();
        if (defeated) return true;
    }
    return false;
}

bool comb_survives(const Subset& s1, const CombTwoStageInstance& v,
                   const std::map<Subset, std::vector<Subset>>& groups,
                   Int gamma, Budget& budget) {
    auto it = groups.find(s1);
    if (it == groups.end()) return false;
    Subset blocker;
    return !comb_blockers_defeat(it->second, v, gamma, budget, 0, blocker);
}

void comb_first_stage(const CombTwoStageInstance& v,
                      const std::map<Subset, std::vector<Subset>>& groups,
                      Int gamma, Budget& budget, std::optional<Subset>& witness,
                      std::size_t pos, Subset& chosen) {
    if (witness) return;
    spend(budget);
    if (comb_survives(chosen, v, groups, gamma, budget)) {
        witness = chosen;
        return;
    }
    for (std::size_t i = pos; i < v.first_stage.size() && !witness; ++i) {
        chosen.push_back(v.first_stage[i]);
        comb_first_stage(v, groups, gamma, budget, witness, i + 1, chosen);
        chosen.pop_back();
    }
}

}  // namespace

GameValue solve_interdiction(const InterdictionInstance& v, Budget& budget) {
    require_valid(v);
    auto solutions = solved_members(v.base, budget);
    Universe u = universe_of(v.base);
    Best best;
    Subset chosen;
    scan_blockers(
        u.elements(), -1,
        [&](const Subset& s) { return cost_under(v.cost, s); }, v.threshold,
        solutions, budget, best, 0, chosen);
    GameValue result{best.value.has_value(), best.value, best.witness};
    recheck_blocker(result, solutions, budget);
    return result;
}

GameValue solve_interdiction(const CombInterdictionInstance& v, Budget& budget) {
    require_valid(v);
    auto solutions = solved_members(v.base, budget);
    Best best;
    if (v.threshold >= 0) {
        Subset chosen;
        scan_blockers(
            v.blockable, v.threshold,
            [](const Subset& s) { return static_cast<Int>(s.size()); },
            v.threshold, solutions, budget, best, 0, chosen);
    }
    GameValue result{best.value.has_value(), best.value, best.witness};
    recheck_blocker(result, solutions, budget);
    return result;
}

GameValue solve_min_max_regret(const RegretInstance& v, Budget& budget) {
    require_valid(v);
    return regret_over(v.lower, v.upper, feasible_members(v.base, budget),
                       v.threshold, budget);
}

GameValue solve_min_max_regret(const RestrictedRegretInstance& v, Budget& budget) {
    require_valid(v);
    return regret_over(v.lower, v.upper, solved_members(v.base, budget),
                       v.quota, budget);
}

GameValue solve_two_stage(const TwoStageInstance& v, Budget& budget) {
    require_valid(v);
    auto feasible = feasible_members(v.base, budget);
    Universe u = universe_of(v.base);
    Int gamma = effective_gamma(v);
    Best best;
    Subset chosen;
    scan_first_stage(v, feasible, u, gamma, budget, best, 0, chosen);
    GameValue result{best.value && *best.value <= v.threshold, best.value,
                     best.witness};
    if (result.witness) {
        Subset raised;
        Int worst = worst_scenario_cost(*result.witness, feasible, v, gamma, u,
                                        budget, 0, raised);
        if (checked_add(cost_under(v.first_cost, *result.witness), worst) !=
            *result.value)
            throw Error("internal: two-stage witness failed revalidation");
    }
    return result;
}

GameValue solve_two_stage(const CombTwoStageInstance& v, Budget& budget) {
    require_valid(v);
    auto solutions = solved_members(v.base, budget);
    std::map<Subset, std::vector<Subset>> groups;
    for (const auto& s : solutions) {
        Subset part1, part2;
        for (const auto& e : s) {
            if (std::binary_search(v.first_stage.begin(), v.first_stage.end(), e))
                part1.push_back(e);
            else
                part2.push_back(e);
        }
        groups[std::move(part1)].push_back(std::move(part2));
    }
    Int gamma = effective_gamma(v);
    std::optional<Subset> witness;
    Subset chosen;
    comb_first_stage(v, groups, gamma, budget, witness, 0, chosen);
    if (witness && !comb_survives(*witness, v, groups, gamma, budget))
        throw Error("internal: two-stage witness failed revalidation");
    return GameValue{witness.has_value(), std::nullopt, witness};
}

GameValue solve_interdiction(const InterdictionInstance& v) {
    Budget budget(Budget::kNestingCap);
    return solve_interdiction(v, budget);
}

GameValue solve_interdiction(const CombInterdictionInstance& v) {
    Budget budget(Budget::kNestingCap);
    return solve_interdiction(v, budget);
}

GameValue solve_min_max_regret(const RegretInstance& v) {
    Budget budget(Budget::kNestingCap);
    return solve_min_max_regret(v, budget);
}

GameValue solve_min_max_regret(const RestrictedRegretInstance& v) {
    Budget budget(Budget::kNestingCap);
    return solve_min_max_regret(v, budget);
}

GameValue solve_two_stage(const TwoStageInstance& v) {
    Budget budget(Budget::kNestingCap);
    return solve_two_stage(v, budget);
}

GameValue solve_two_stage(const CombTwoStageInstance& v) {
    Budget budget(Budget::kNestingCap);
    return solve_two_stage(v, budget);
}

}  // namespace ssp
