#pragma once

#include <functional>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "ssp/instance.hpp"

namespace ssp {

// Injective element map from a source universe into a target universe.
class Embedding {
public:
    void add(ElementId from, ElementId to);

    bool maps(const ElementId& from) const;
    const ElementId& map(const ElementId& from) const;
    Subset map_subset(const Subset& s) const;

    // Intersects a target-side subset with the image of the map.
    Subset restrict_to_image(const Subset& target) const;
    // Preimage of a target-side subset that lies inside the image.
    Subset pull_back(const Subset& target) const;

    Subset domain() const;
    Subset image() const;
    std::size_t size() const { return pairs_.size(); }
    const std::vector<std::pair<ElementId, ElementId>>& pairs() const { return pairs_; }

private:
    std::vector<std::pair<ElementId, ElementId>> pairs_;  // sorted by source element
};

struct ReductionOutput {
    SspInstance instance;
    Embedding embedding;
};

// A solution-preserving reduction: instance transformer plus the per-instance
// element embedding produced alongside the target instance.
class SspReduction {
public:
    using ApplyFn = std::function<ReductionOutput(const SspInstance&)>;

    SspReduction(std::string id, ProblemKind from, ProblemKind to, ApplyFn apply);

    const std::string& id() const { return id_; }
    ProblemKind from() const { return from_; }
    ProblemKind to() const { return to_; }

    // Validates the input, runs the transformer, then checks that the output
    // instance is valid and the embedding maps the whole source universe
    // injectively into the target universe.
    ReductionOutput operator()(const SspInstance& x) const;

private:
    std::string id_;
    ProblemKind from_;
    ProblemKind to_;
    ApplyFn apply_;
};

const std::vector<SspReduction>& catalog();
const SspReduction& reduction_by_id(const std::string& id);
const SspReduction* find_reduction(ProblemKind from, ProblemKind to);

// Chains reductions left to right; embeddings compose stage by stage.
SspReduction compose(std::vector<SspReduction> steps, std::string id = "");

struct VerificationReport {
    bool yes_left = false;
    bool yes_right = false;
    bool equal = false;
    bool conclusive = false;  // both enumerations ran to completion
    std::size_t left_count = 0;
    std::size_t right_count = 0;
    // Witnesses for a failed equality, capped at a handful each: mapped
    // source solutions with no matching restriction, and restrictions with no
    // source preimage.
    std::vector<Subset> only_left;
    std::vector<Subset> only_right;

    bool ok() const { return conclusive && equal && yes_left == yes_right; }
    std::string summary() const;
};

// Checks the defining solution-preservation equation by exhaustive
// enumeration of both sides: {f(S) : S in S(x)} must equal
// {S' ∩ image(f) : S' in S'(x')}.
VerificationReport verify_embedding(const SspView& left, const SspView& right,
                                    const Embedding& f, Budget& budget);

VerificationReport verify_ssp(const SspReduction& r, const SspInstance& x, Budget& budget);

}  // namespace ssp
