#include "ssp/lift.hpp"

#include <algorithm>
#include <utility>

#include "ssp/errors.hpp"

namespace ssp {

LiftedReduction::LiftedReduction(SspReduction reduction, VariantFamily family)
    : reduction_(std::move(reduction)), family_(family) {}

LiftedReduction lift(SspReduction reduction, VariantFamily family) {
    return LiftedReduction(std::move(reduction), family);
}

namespace {

void require_family(VariantFamily have, VariantFamily need) {
    if (have != need)
        throw FamilyMismatch("lifted reduction carries family " +
                             family_id(have) + ", instance needs " +
                             family_id(need));
}

}  // namespace

LiftedInterdiction LiftedReduction::apply(const CombInterdictionInstance& v) const {
    require_family(family_, VariantFamily::Interdiction);
    require_valid(v);
    ReductionOutput out = reduction_(v.base);
    LiftedInterdiction lifted;
    lifted.instance.base = std::move(out.instance);
    lifted.instance.blockable = out.embedding.map_subset(v.blockable);
    lifted.instance.threshold = v.threshold;
    lifted.embedding = std::move(out.embedding);
    require_valid(lifted.instance);
    return lifted;
}

LiftedRegret LiftedReduction::apply(const RestrictedRegretInstance& v) const {
    require_family(family_, VariantFamily::RestrictedRegret);
    require_valid(v);
    ReductionOutput out = reduction_(v.base);
    LiftedRegret lifted;
    Universe target = universe_of(out.instance);
    for (const auto& e : target.elements()) {
        lifted.instance.lower.emplace(e, 0);
        lifted.instance.upper.emplace(e, 0);
    }
    for (const auto& [src, dst] : out.embedding.pairs()) {
        lifted.instance.lower[dst] = v.lower.at(src);
        lifted.instance.upper[dst] = v.upper.at(src);
    }
    lifted.instance.base = std::move(out.instance);
    lifted.instance.quota = v.quota;
    lifted.embedding = std::move(out.embedding);
    require_valid(lifted.instance);
    return lifted;
}

LiftedTwoStage LiftedReduction::apply(const CombTwoStageInstance& v) const {
    require_family(family_, VariantFamily::TwoStage);
    require_valid(v);
    ReductionOutput out = reduction_(v.base);
    LiftedTwoStage lifted;
    lifted.instance.base = std::move(out.instance);
    lifted.instance.first_stage = out.embedding.map_subset(v.first_stage);
    lifted.instance.blockable = out.embedding.map_subset(v.blockable);
    lifted.instance.gamma = v.gamma;
    lifted.embedding = std::move(out.embedding);
    require_valid(lifted.instance);
    return lifted;
}

InterdictionInstance adapt_interdiction_cost(const CombInterdictionInstance& v) {
    require_valid(v);
    InterdictionInstance out;
    Int fence = checked_add(v.threshold, 1);
    Universe u = universe_of(v.base);
    for (const auto& e : u.elements()) {
        bool blockable =
            std::binary_search(v.blockable.begin(), v.blockable.end(), e);
        out.cost.emplace(e, blockable ? 1 : fence);
    }
    out.base = v.base;
    out.threshold = v.threshold;
    require_valid(out);
    return out;
}

RegretInstance adapt_regret_cost(const RestrictedRegretInstance& v) {
    require_valid(v);
    RegretInstance out;
    Universe u = universe_of(v.base);
    Int n = static_cast<Int>(u.size());
    Int scale = checked_mul(2, checked_add(n, 1));
    for (const auto& e : u.elements()) {
        Int weighted = checked_mul(scale, lop_cost(v.base, e));
        out.lower.emplace(e, checked_add(weighted, v.lower.at(e)));
        out.upper.emplace(e, checked_add(weighted, v.upper.at(e)));
    }
    out.base = v.base;
    out.threshold = v.quota;
    require_valid(out);
    return out;
}

TwoStageInstance adapt_two_stage_cost(const CombTwoStageInstance& v) {
    require_valid(v);
    TwoStageInstance out;
    Int base_threshold = lop_threshold(v.base);
    Int fence = checked_add(base_threshold, 1);
    Universe u = universe_of(v.base);
    for (const auto& e : u.elements()) {
        bool first = std::binary_search(v.first_stage.begin(),
                                        v.first_stage.end(), e);
        bool blockable =
            std::binary_search(v.blockable.begin(), v.blockable.end(), e);
        Int d = lop_cost(v.base, e);
        out.first_cost.emplace(e, first ? d : fence);
        out.second_lower.emplace(e, first ? fence : d);
        out.second_upper.emplace(e, first || blockable ? fence : d);
    }
    out.base = v.base;
    out.threshold = base_threshold;
    out.gamma = v.gamma;
    require_valid(out);
    return out;
}

}  // namespace ssp
