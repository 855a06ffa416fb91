#pragma once

#include "ssp/reduction.hpp"
#include "ssp/variants.hpp"

namespace ssp {

struct LiftedInterdiction {
    CombInterdictionInstance instance;
    Embedding embedding;
};

struct LiftedRegret {
    RestrictedRegretInstance instance;
    Embedding embedding;
};

struct LiftedTwoStage {
    CombTwoStageInstance instance;
    Embedding embedding;
};

/// A solution-preserving reduction promoted to one robust-variant family. The
/// base instance goes through the underlying reduction; the variant data rides
/// its embedding: blockable / first-stage sets map elementwise, bounds are
/// copied onto the image and zero elsewhere, and thresholds, quotas and gamma
/// are unchanged. The same embedding also witnesses the lifted reduction
/// (solution sets of the wrapped variants correspond through it).
///
/// For the regret family the exchanged values agree only on Yes-instance
/// bases, which the caller is expected to supply.
class LiftedReduction {
  public:
    LiftedReduction(SspReduction reduction, VariantFamily family);

    const SspReduction& underlying() const { return reduction_; }
    VariantFamily family() const { return family_; }

    /// Each overload demands the matching family (FamilyMismatch otherwise)
    /// and a base of the underlying source kind (KindMismatch).
    LiftedInterdiction apply(const CombInterdictionInstance& v) const;
    LiftedRegret apply(const RestrictedRegretInstance& v) const;
    LiftedTwoStage apply(const CombTwoStageInstance& v) const;

  private:
    SspReduction reduction_;
    VariantFamily family_;
};

LiftedReduction lift(SspReduction reduction, VariantFamily family);

/// Combinatorial interdiction → cost interdiction: unit cost on blockable
/// elements, threshold+1 elsewhere, same threshold. Decisions agree.
InterdictionInstance adapt_interdiction_cost(const CombInterdictionInstance& v);

/// Restricted regret → interval regret over the base's cost structure:
/// c = 2(n+1)·d + h with n the universe size, threshold = quota. Values agree
/// whenever every base solution attains the minimum feasible cost. Throws
/// NotAnLop when the base has no cost structure.
RegretInstance adapt_regret_cost(const RestrictedRegretInstance& v);

/// Combinatorial two-stage → cost two-stage over the base's cost structure:
/// stage costs are d where the stage may act and threshold+1 where it must
/// not (second-stage upper bounds also fence the blockable set), with the
/// base threshold and unchanged gamma. Decisions agree. Throws NotAnLop when
/// the base has no cost structure.
TwoStageInstance adapt_two_stage_cost(const CombTwoStageInstance& v);

}  // namespace ssp
