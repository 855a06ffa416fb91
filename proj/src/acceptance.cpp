#include "ssp/acceptance.hpp"

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <map>
#include <memory>
#include <string>
#include <utility>
#include <vector>

#include "ssp/errors.hpp"
#include "ssp/gadgets.hpp"
#include "ssp/generators.hpp"
#include "ssp/instance.hpp"
#include "ssp/lift.hpp"
#include "ssp/qbf.hpp"
#include "ssp/reduction.hpp"
#include "ssp/solvers.hpp"
#include "ssp/variants.hpp"

namespace ssp {

namespace {

// Shared pass/fail accumulator; keeps only the first failure message.
struct Check {
    bool ok = true;
    std::string detail;
    long long cases = 0;

    void count() { ++cases; }
    void fail(std::string msg) {
        if (ok) {
            ok = false;
            detail = std::move(msg);
        }
    }
};

std::string fixture_tag(const std::string& label, std::uint64_t index) {
    return label + " fixture " + std::to_string(index);
}

// --- criterion 1: every catalog reduction preserves solutions on a sweep ---

void sweep_catalog(std::uint64_t seed, Check& c) {
    for (const auto& r : catalog()) {
        for (std::uint64_t i = 0; i < 50 && c.ok; ++i) {
            SspInstance x = random_source(r.id(), seed, i);
            Budget budget(Budget::kNestingCap);
            VerificationReport rep = verify_ssp(r, x, budget);
            if (!rep.ok()) {
                c.fail(fixture_tag(r.id(), i) + ": " + rep.summary());
                return;
            }
            c.count();
        }
    }
}

// --- criterion 2: compositions of catalog steps stay solution-preserving ---

void sweep_chains(std::uint64_t seed, Check& c) {
    SspReduction cover_chain = compose(
        {reduction_by_id("sat_to_3sat"), reduction_by_id("3sat_to_vertex_cover"),
         reduction_by_id("vertex_cover_to_dominating_set")},
        "sat_to_dominating_set");
    for (std::uint64_t i = 0; i < 10 && c.ok; ++i) {
        SspInstance x = random_chain_sat(seed, i);
        Budget budget(Budget::kNestingCap);
        VerificationReport rep = verify_ssp(cover_chain, x, budget);
        if (!rep.ok()) {
            c.fail(fixture_tag(cover_chain.id(), i) + ": " + rep.summary());
            return;
        }
        c.count();
    }

    SspReduction tour_chain = compose(
        {reduction_by_id("3sat_to_dham_path"), reduction_by_id("dham_path_to_dham_cycle"),
         reduction_by_id("dham_cycle_to_uham_cycle"), reduction_by_id("uham_cycle_to_tsp")},
        "3sat_to_tsp");
    for (std::uint64_t i = 0; i < 10 && c.ok; ++i) {
        SspInstance x = random_chain_3sat(seed, i);
        Budget budget(Budget::kNestingCap);
        VerificationReport rep = verify_ssp(tour_chain, x, budget);
        if (!rep.ok()) {
            c.fail(fixture_tag(tour_chain.id(), i) + ": " + rep.summary());
            return;
        }
        c.count();
    }
}

// --- criterion 3: gadget games decide exactly their source formulas ---

void sweep_gadgets(std::uint64_t seed, Check& c) {
    for (std::uint64_t i = 0; i < 50 && c.ok; ++i) {
        QuantifiedFormula f = random_qbf(QbfShape::ExistsForallDnf, 3, 3, 0, 4, seed, i);
        bool truth = eval_qbf(f);
        GameValue blocked = solve_interdiction(gadget_interdiction(f));
        if (blocked.yes != truth) {
            c.fail(fixture_tag("interdiction gadget", i) + ": game and formula disagree");
            return;
        }
        c.count();
        GameValue hedged = solve_min_max_regret(gadget_regret(f));
        if (hedged.yes != truth) {
            c.fail(fixture_tag("regret gadget", i) + ": game and formula disagree");
            return;
        }
        c.count();
    }
    for (std::uint64_t i = 0; i < 50 && c.ok; ++i) {
        QuantifiedFormula f =
            random_qbf(QbfShape::ExistsForallExistsCnf, 2, 2, 2, 4, seed, 100 + i);
        bool truth = eval_qbf(f);
        GameValue staged = solve_two_stage(gadget_two_stage(f));
        if (staged.yes != truth) {
            c.fail(fixture_tag("two-stage gadget", 100 + i) + ": game and formula disagree");
            return;
        }
        c.count();
    }
}

// --- criterion 4: lifted variants agree with their sources ---

void sweep_lifts(std::uint64_t seed, Check& c) {
    for (const char* rid : {"3sat_to_vertex_cover", "3sat_to_subset_sum"}) {
        const SspReduction& r = reduction_by_id(rid);

        LiftedReduction blocked = lift(r, VariantFamily::Interdiction);
        for (std::uint64_t i = 0; i < 20 && c.ok; ++i) {
            auto v = random_comb_interdiction(ProblemKind::ThreeSatisfiability, seed, i);
            GameValue source = solve_interdiction(v);
            GameValue target = solve_interdiction(blocked.apply(v).instance);
            if (source.yes != target.yes) {
                c.fail(fixture_tag(std::string(rid) + " interdiction lift", i) +
                       ": decisions differ");
                return;
            }
            c.count();
        }

        LiftedReduction hedged = lift(r, VariantFamily::RestrictedRegret);
        for (std::uint64_t i = 0; i < 20 && c.ok; ++i) {
            auto v = random_restricted_regret(ProblemKind::ThreeSatisfiability, seed, i);
            GameValue source = solve_min_max_regret(v);
            GameValue target = solve_min_max_regret(hedged.apply(v).instance);
            if (source.yes != target.yes) {
                c.fail(fixture_tag(std::string(rid) + " regret lift", i) + ": decisions differ");
                return;
            }
            if (source.value != target.value) {
                c.fail(fixture_tag(std::string(rid) + " regret lift", i) + ": values differ");
                return;
            }
            c.count();
        }

        LiftedReduction staged = lift(r, VariantFamily::TwoStage);
        for (std::uint64_t i = 0; i < 20 && c.ok; ++i) {
            auto v = random_comb_two_stage(ProblemKind::ThreeSatisfiability, seed, i);
            GameValue source = solve_two_stage(v);
            GameValue target = solve_two_stage(staged.apply(v).instance);
            if (source.yes != target.yes) {
                c.fail(fixture_tag(std::string(rid) + " two-stage lift", i) +
                       ": decisions differ");
                return;
            }
            c.count();
        }
    }
}

// --- criterion 5: cost forms decide like their combinatorial sources ---

void sweep_adaptations(std::uint64_t seed, Check& c) {
    for (std::uint64_t i = 0; i < 20 && c.ok; ++i) {
        ProblemKind kind =
            (i % 2 == 0) ? ProblemKind::ThreeSatisfiability : ProblemKind::VertexCover;
        auto v = random_comb_interdiction(kind, seed, 1000 + i);
        GameValue comb = solve_interdiction(v);
        GameValue cost = solve_interdiction(adapt_interdiction_cost(v));
        if (comb.yes != cost.yes) {
            c.fail(fixture_tag("interdiction adaptation", 1000 + i) + ": decisions differ");
            return;
        }
        c.count();
    }
    for (std::uint64_t i = 0; i < 20 && c.ok; ++i) {
        auto v = random_tight_regret(seed, i);
        GameValue restricted = solve_min_max_regret(v);
        GameValue interval = solve_min_max_regret(adapt_regret_cost(v));
        if (restricted.yes != interval.yes) {
            c.fail(fixture_tag("regret adaptation", i) + ": decisions differ");
            return;
        }
        if (restricted.value != interval.value) {
            c.fail(fixture_tag("regret adaptation", i) + ": values differ");
            return;
        }
        c.count();
    }
    for (std::uint64_t i = 0; i < 20 && c.ok; ++i) {
        auto v = random_comb_two_stage(ProblemKind::VertexCover, seed, 1000 + i);
        GameValue comb = solve_two_stage(v);
        GameValue staged = solve_two_stage(adapt_two_stage_cost(v));
        if (comb.yes != staged.yes) {
            c.fail(fixture_tag("two-stage adaptation", 1000 + i) + ": decisions differ");
            return;
        }
        c.count();
    }
}

// --- criterion 6: the canonical scenario attains the maximum regret ---

Int regret_under(const CostMap& scenario, const Subset& s, const std::vector<Subset>& rivals) {
    Int own = cost_under(scenario, s);
    Int best = cost_under(scenario, rivals.front());
    for (const Subset& r : rivals) best = std::min(best, cost_under(scenario, r));
    return checked_sub(own, best);
}

void check_scenario_peak(const CostMap& lower, const CostMap& upper, const Universe& u,
                         const std::vector<Subset>& rivals, const std::string& tag, Check& c) {
    if (rivals.empty()) {
        c.fail(tag + ": empty rival family");
        return;
    }
    const auto& elems = u.elements();
    for (const Subset& s : rivals) {
        Int claimed = max_regret(lower, upper, s, rivals);
        Int brute = regret_under(canonical_scenario(lower, upper, {}), s, rivals);
        for (std::size_t mask = 0; mask < (std::size_t{1} << elems.size()); ++mask) {
            Subset raised;
            for (std::size_t j = 0; j < elems.size(); ++j)
                if (mask & (std::size_t{1} << j)) raised.push_back(elems[j]);
            brute = std::max(brute, regret_under(canonical_scenario(lower, upper, raised), s,
                                                 rivals));
        }
        if (claimed != brute) {
            c.fail(tag + ": canonical scenario misses the peak regret for " +
                   to_string(s));
            return;
        }
        c.count();
    }
}

void sweep_scenarios(std::uint64_t seed, Check& c) {
    std::vector<std::pair<std::string, RestrictedRegretInstance>> fixtures;
    for (std::uint64_t i = 0; i < 8; ++i)
        fixtures.emplace_back(
            fixture_tag("scenario 3sat", 2000 + i),
            random_restricted_regret(ProblemKind::ThreeSatisfiability, seed, 2000 + i));
    for (std::uint64_t i = 0; i < 8; ++i)
        fixtures.emplace_back(fixture_tag("scenario cover", 2000 + i),
                              random_restricted_regret(ProblemKind::VertexCover, seed, 2000 + i));
    for (std::uint64_t i = 0; i < 8; ++i)
        fixtures.emplace_back(fixture_tag("scenario tight", i), random_tight_regret(seed, i));

    for (const auto& [tag, v] : fixtures) {
        if (!c.ok) return;
        Budget budget(Budget::kNestingCap);
        SolutionFamily family = enumerate_solutions(v.base, budget);
        if (!family.complete()) {
            c.fail(tag + ": base enumeration ran out of budget");
            return;
        }
        check_scenario_peak(v.lower, v.upper, universe_of(v.base), family.members(), tag, c);

        // the quota-to-cost adaptation only exists for cost-structured bases
        if (!is_lop_kind(v.base.kind)) continue;
        RegretInstance interval = adapt_regret_cost(v);
        Budget feasible_budget(Budget::kNestingCap);
        SolutionFamily feasible = enumerate_feasible(interval.base, feasible_budget);
        if (!feasible.complete()) {
            c.fail(tag + ": feasible enumeration ran out of budget");
            return;
        }
        check_scenario_peak(interval.lower, interval.upper, universe_of(interval.base),
                            feasible.members(), tag + " interval form", c);
    }
}

// --- criterion 7: lifting keeps the reduction solution-preserving ---

void sweep_lifted_embeddings(std::uint64_t seed, Check& c) {
    const SspReduction& r = reduction_by_id("3sat_to_vertex_cover");

    LiftedReduction blocked = lift(r, VariantFamily::Interdiction);
    for (std::uint64_t i = 0; i < 10 && c.ok; ++i) {
        auto v = random_comb_interdiction(ProblemKind::ThreeSatisfiability, seed, 3000 + i);
        LiftedInterdiction out = blocked.apply(v);
        auto left = wrap_as_ssp(v);
        auto right = wrap_as_ssp(out.instance);
        Budget budget(Budget::kNestingCap);
        VerificationReport rep = verify_embedding(*left, *right, out.embedding, budget);
        if (!rep.ok()) {
            c.fail(fixture_tag("lifted interdiction", 3000 + i) + ": " + rep.summary());
            return;
        }
        c.count();
    }

    LiftedReduction hedged = lift(r, VariantFamily::RestrictedRegret);
    for (std::uint64_t i = 0; i < 10 && c.ok; ++i) {
        auto v = random_restricted_regret(ProblemKind::ThreeSatisfiability, seed, 3000 + i);
        LiftedRegret out = hedged.apply(v);
        auto left = wrap_as_ssp(v);
        auto right = wrap_as_ssp(out.instance);
        Budget budget(Budget::kNestingCap);
        VerificationReport rep = verify_embedding(*left, *right, out.embedding, budget);
        if (!rep.ok()) {
            c.fail(fixture_tag("lifted regret", 3000 + i) + ": " + rep.summary());
            return;
        }
        c.count();
    }

    LiftedReduction staged = lift(r, VariantFamily::TwoStage);
    for (std::uint64_t i = 0; i < 10 && c.ok; ++i) {
        auto v = random_comb_two_stage(ProblemKind::ThreeSatisfiability, seed, 3000 + i);
        LiftedTwoStage out = staged.apply(v);
        auto left = wrap_as_ssp(v);
        auto right = wrap_as_ssp(out.instance);
        Budget budget(Budget::kNestingCap);
        VerificationReport rep = verify_embedding(*left, *right, out.embedding, budget);
        if (!rep.ok()) {
            c.fail(fixture_tag("lifted two-stage", 3000 + i) + ": " + rep.summary());
            return;
        }
        c.count();
    }
}

// --- criterion 8: independent oracles agree with the library primitives ---

// Reference evaluator written against the grain of eval_qbf: explicit
// assignment vector and branch recursion instead of packed bit masks.
bool row_holds(const std::vector<Int>& row, const std::vector<char>& value, bool conjunctive) {
    for (Int lit : row) {
        Int var = lit > 0 ? lit : -lit;
        bool truth = value[static_cast<std::size_t>(var)] != 0;
        if (lit < 0) truth = !truth;
        if (conjunctive && !truth) return false;
        if (!conjunctive && truth) return true;
    }
    return conjunctive;
}

bool matrix_holds(const QuantifiedFormula& f, const std::vector<char>& value) {
    if (f.shape == QbfShape::ExistsForallDnf) {
        for (const auto& row : f.rows)
            if (row_holds(row, value, true)) return true;
        return false;
    }
    for (const auto& row : f.rows)
        if (!row_holds(row, value, false)) return false;
    return true;
}

bool prefix_holds(const QuantifiedFormula& f, std::vector<char>& value, Int var) {
    if (var > f.num_vars()) return matrix_holds(f, value);
    bool existential =
        var <= f.num_x ||
        (f.shape == QbfShape::ExistsForallExistsCnf && var > f.num_x + f.num_y);
    auto idx = static_cast<std::size_t>(var);
    value[idx] = 0;
    bool low = prefix_holds(f, value, var + 1);
    if (existential && low) return true;
    if (!existential && !low) return false;
    value[idx] = 1;
    return prefix_holds(f, value, var + 1);
}

bool reference_eval(const QuantifiedFormula& f) {
    std::vector<char> value(static_cast<std::size_t>(f.num_vars()) + 1, 0);
    return prefix_holds(f, value, 1);
}

void check_cost_view(const SspInstance& x, const std::string& tag,
                     std::map<ProblemKind, long long>& covered, Check& c) {
    Universe u = universe_of(x);
    if (u.size() > 16) return;
    const auto& elems = u.elements();

    std::vector<Subset> by_filter;
    for (std::size_t mask = 0; mask < (std::size_t{1} << elems.size()); ++mask) {
        Subset t;
        for (std::size_t j = 0; j < elems.size(); ++j)
            if (mask & (std::size_t{1} << j)) t.push_back(elems[j]);
        bool boxed = is_solution(x, t);
        bool derived = is_feasible(x, t) && lop_cost(x, t) <= lop_threshold(x);
        if (boxed != derived) {
            c.fail(tag + ": boxed and cost-derived membership disagree on " + to_string(t));
            return;
        }
        if (boxed) by_filter.push_back(std::move(t));
        c.count();
    }

    Budget budget(Budget::kNestingCap);
    SolutionFamily family = enumerate_solutions(x, budget);
    if (!family.complete()) {
        c.fail(tag + ": enumeration ran out of budget");
        return;
    }
    SolutionFamily filtered(std::move(by_filter), EnumerationStatus::Complete);
    if (family.members() != filtered.members()) {
        c.fail(tag + ": enumerated family differs from the subset filter");
        return;
    }
    ++covered[x.kind];
}

std::vector<std::pair<std::string, SspInstance>> cost_view_fixtures(std::uint64_t seed) {
    std::vector<std::pair<std::string, SspInstance>> out;
    auto reduce = [](const char* id, const SspInstance& x) {
        return reduction_by_id(id)(x).instance;
    };

    SspInstance triangle{ProblemKind::VertexCover,
                         GraphKPayload{3, {{1, 2}, {1, 3}, {2, 3}}, 2}};
    SspInstance edge{ProblemKind::VertexCover, GraphKPayload{2, {{1, 2}}, 1}};
    SspInstance path{ProblemKind::IndependentSet, GraphKPayload{3, {{1, 2}, {2, 3}}, 1}};
    out.emplace_back("cover triangle", triangle);
    out.emplace_back("packing path", path);
    out.emplace_back("clique from path", reduce("independent_set_to_clique", path));
    out.emplace_back("set cover from triangle", reduce("vertex_cover_to_set_cover", triangle));
    out.emplace_back("hitting set from triangle",
                     reduce("vertex_cover_to_hitting_set", triangle));
    out.emplace_back("vertex feedback from triangle",
                     reduce("vertex_cover_to_feedback_vertex_set", triangle));
    out.emplace_back("arc feedback from edge", reduce("vertex_cover_to_feedback_arc_set", edge));

    SspInstance numbers{ProblemKind::SubsetSum, SubsetSumPayload{{1, 2, 3}, 3}};
    out.emplace_back("knapsack from numbers", reduce("subset_sum_to_knapsack", numbers));

    SspInstance square{ProblemKind::UndirectedHamiltonianCycle,
                       GraphPayload{4, {{1, 2}, {1, 3}, {1, 4}, {2, 3}, {2, 4}, {3, 4}}}};
    out.emplace_back("tour from square", reduce("uham_cycle_to_tsp", square));

    SspInstance bridge{ProblemKind::SteinerTree,
                       SteinerPayload{4,
                                      {1, 4},
                                      {{1, 2, 1}, {2, 4, 1}, {1, 3, 2}, {3, 4, 0}, {1, 4, 5}},
                                      3}};
    out.emplace_back("steiner bridge", bridge);
    SspInstance tight_bridge = bridge;
    tight_bridge.as<SteinerPayload>().k = 2;
    out.emplace_back("steiner bridge tight", tight_bridge);

    for (std::uint64_t i = 0; i < 5; ++i) {
        out.emplace_back(fixture_tag("random cover", 8000 + i),
                         random_source("vertex_cover_to_set_cover", seed, 8000 + i));
        out.emplace_back(fixture_tag("random packing", 8000 + i),
                         random_source("independent_set_to_clique", seed, 8000 + i));
        out.emplace_back(
            fixture_tag("random knapsack", 8000 + i),
            reduction_by_id("subset_sum_to_knapsack")(
                random_source("subset_sum_to_knapsack", seed, 8000 + i))
                .instance);
    }
    return out;
}

void sweep_oracles(std::uint64_t seed, Check& c) {
    for (std::uint64_t i = 0; i < 100 && c.ok; ++i) {
        QuantifiedFormula f = random_qbf(QbfShape::ExistsForallDnf, 3, 3, 0, 4, seed, 5000 + i);
        if (eval_qbf(f) != reference_eval(f)) {
            c.fail(fixture_tag("formula oracle", 5000 + i) + ": evaluators disagree");
            return;
        }
        c.count();
    }
    for (std::uint64_t i = 0; i < 100 && c.ok; ++i) {
        QuantifiedFormula f =
            random_qbf(QbfShape::ExistsForallExistsCnf, 2, 2, 2, 4, seed, 5000 + i);
        if (eval_qbf(f) != reference_eval(f)) {
            c.fail(fixture_tag("nested formula oracle", 5000 + i) + ": evaluators disagree");
            return;
        }
        c.count();
    }

    std::map<ProblemKind, long long> covered;
    for (const auto& [tag, x] : cost_view_fixtures(seed)) {
        if (!c.ok) return;
        check_cost_view(x, tag, covered, c);
    }
    if (!c.ok) return;
    for (ProblemKind kind :
         {ProblemKind::VertexCover, ProblemKind::IndependentSet, ProblemKind::Clique,
          ProblemKind::SetCover, ProblemKind::HittingSet, ProblemKind::FeedbackVertexSet,
          ProblemKind::FeedbackArcSet, ProblemKind::Knapsack, ProblemKind::TravelingSalesman,
          ProblemKind::SteinerTree}) {
        if (covered[kind] == 0) {
            c.fail("no cost-view fixture small enough for " + kind_id(kind));
            return;
        }
    }
}

struct CriterionSpec {
    const char* name;
    void (*run)(std::uint64_t, Check&);
};

constexpr CriterionSpec kCriteria[] = {
    {"catalog solution-preservation sweep", sweep_catalog},
    {"composed-chain verification", sweep_chains},
    {"formula-gadget games", sweep_gadgets},
    {"lifted-variant agreement", sweep_lifts},
    {"cost-form adaptations", sweep_adaptations},
    {"canonical-scenario maximality", sweep_scenarios},
    {"lifted reductions stay solution-preserving", sweep_lifted_embeddings},
    {"oracle cross-checks", sweep_oracles},
};

}  // namespace

std::string CriterionResult::line() const {
    char secs[32];
    std::snprintf(secs, sizeof secs, "%.1f", seconds);
    std::string out = "criterion " + std::to_string(number) + ": " +
                      (passed ? "PASS " : "FAIL ") + name + " (" + secs + "s)";
    if (!passed && !detail.empty()) out += ": " + detail;
    return out;
}

CriterionResult run_criterion(int number, std::uint64_t seed) {
    CriterionResult result;
    result.number = number;
    if (number < 1 || number > static_cast<int>(std::size(kCriteria))) {
        result.name = "unknown criterion";
        result.passed = false;
        result.detail = "no such criterion";
        return result;
    }
    const CriterionSpec& spec = kCriteria[number - 1];
    result.name = spec.name;
    Check check;
    auto start = std::chrono::steady_clock::now();
    try {
        spec.run(seed, check);
    } catch (const Error& e) {
        check.fail(std::string("unexpected error: ") + e.what());
    } catch (const std::exception& e) {
        check.fail(std::string("unexpected exception: ") + e.what());
    }
    auto stop = std::chrono::steady_clock::now();
    result.seconds = std::chrono::duration<double>(stop - start).count();
    result.passed = check.ok;
    result.detail = check.detail;
    return result;
}

bool run_acceptance(std::uint64_t seed, const std::function<void(const std::string&)>& sink) {
    bool all = true;
    for (int number = 1; number <= static_cast<int>(std::size(kCriteria)); ++number) {
        CriterionResult result = run_criterion(number, seed);
        sink(result.line());
        all = all && result.passed;
    }
    return all;
}

}  // namespace ssp
