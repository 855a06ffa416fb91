#pragma once

#include <map>
#include <memory>
#include <string>
#include <vector>

#include "ssp/family.hpp"
#include "ssp/instance.hpp"
#include "ssp/ints.hpp"

namespace ssp {

/// Total cost assignment on a universe.
using CostMap = std::map<ElementId, Int>;

/// Min-max robust variant families.
enum class VariantFamily { Interdiction, RestrictedRegret, TwoStage };

std::string family_id(VariantFamily family);
VariantFamily family_from_id(const std::string& id);

// --- variant instances ------------------------------------------------------

/// Cost-form interdiction: a blocker is any subset of the universe with total
/// interdiction cost at most the threshold; it wins by meeting every solution.
struct InterdictionInstance {
    SspInstance base;
    CostMap cost;
    Int threshold = 0;
};

/// Combinatorial interdiction: blockers are subsets of the blockable set of
/// cardinality at most the threshold.
struct CombInterdictionInstance {
    SspInstance base;
    Subset blockable;
    Int threshold = 0;
};

/// Interval min-max regret over the cost structure of a cost-structured base:
/// each element carries a cost interval, the question is whether some feasible
/// set has maximum regret at most the threshold.
struct RegretInstance {
    SspInstance base;
    CostMap lower;
    CostMap upper;
    Int threshold = 0;
};

/// Restricted regret over the solution set of any base problem: bounds take
/// values in {0,1} and regret is measured against other solutions only.
struct RestrictedRegretInstance {
    SspInstance base;
    CostMap lower;
    CostMap upper;
    Int quota = 0;
};

/// Two-stage adjustable form over a cost-structured base: first-stage cost,
/// second-stage interval costs of which the adversary may raise at most gamma
/// coordinates to their upper bound.
struct TwoStageInstance {
    SspInstance base;
    CostMap first_cost;
    CostMap second_lower;
    CostMap second_upper;
    Int threshold = 0;
    Int gamma = 0;
};

/// Combinatorial two-stage: commit to a first-stage subset of the designated
/// first-stage elements; the adversary forbids up to gamma blockable
/// second-stage elements; a completion avoiding them must form a solution.
struct CombTwoStageInstance {
    SspInstance base;
    Subset first_stage;
    Subset blockable;
    Int gamma = 0;
};

std::vector<std::string> validate(const InterdictionInstance& v);
std::vector<std::string> validate(const CombInterdictionInstance& v);
std::vector<std::string> validate(const RegretInstance& v);
std::vector<std::string> validate(const RestrictedRegretInstance& v);
std::vector<std::string> validate(const TwoStageInstance& v);
std::vector<std::string> validate(const CombTwoStageInstance& v);

void require_valid(const InterdictionInstance& v);
void require_valid(const CombInterdictionInstance& v);
void require_valid(const RegretInstance& v);
void require_valid(const RestrictedRegretInstance& v);
void require_valid(const TwoStageInstance& v);
void require_valid(const CombTwoStageInstance& v);

/// Gamma capped at the relevant set size; larger values grant no extra power.
Int effective_gamma(const TwoStageInstance& v);
Int effective_gamma(const CombTwoStageInstance& v);

// --- regret arithmetic ------------------------------------------------------

/// The worst-case scenario for a fixed subset: upper bounds on its elements,
/// lower bounds elsewhere.
CostMap canonical_scenario(const CostMap& lower, const CostMap& upper,
                           const Subset& s);
CostMap canonical_scenario(const RegretInstance& v, const Subset& s);
CostMap canonical_scenario(const RestrictedRegretInstance& v, const Subset& s);

Int cost_under(const CostMap& cost, const Subset& s);

/// Maximum regret of s against a fully enumerated rival family, attained at
/// the canonical scenario. Throws UndefinedRegret on an empty family.
Int max_regret(const CostMap& lower, const CostMap& upper, const Subset& s,
               const std::vector<Subset>& rivals);

// --- subset-search views ----------------------------------------------------

/// Each combinatorial variant is itself a subset-search problem over the base
/// universe; these views realize the induced solution sets:
///   interdiction: admissible blockers meeting every base solution;
///   restricted regret: base solutions with maximum regret at most the quota;
///   two-stage: first-stage sets completable against every admissible blocker.
/// Membership tests run the base enumeration under a private node allowance
/// and throw BudgetExceeded rather than guess.
std::unique_ptr<SspView> wrap_as_ssp(CombInterdictionInstance v,
                                     long long contains_nodes = Budget::kDefault);
std::unique_ptr<SspView> wrap_as_ssp(RestrictedRegretInstance v,
                                     long long contains_nodes = Budget::kDefault);
std::unique_ptr<SspView> wrap_as_ssp(CombTwoStageInstance v,
                                     long long contains_nodes = Budget::kDefault);

}  // namespace ssp
