#include "doctest.h"
#include "ssp/instance.hpp"
#include "ssp/lift.hpp"
#include "ssp/reduction.hpp"
#include "ssp/solvers.hpp"
#include "ssp/variants.hpp"

using namespace ssp;

namespace {

SspInstance one_clause() {
    return {ProblemKind::ThreeSatisfiability, make_cnf(3, {{1, 2, -3}})};
}

}  // namespace

TEST_CASE("lifting maps the blockable pool through the embedding") {
    CombInterdictionInstance v{one_clause(), {lit_elem(1, true)}, 1};
    LiftedReduction step = lift(reduction_by_id("3sat_to_vertex_cover"),
                                VariantFamily::Interdiction);
    LiftedInterdiction out = step.apply(v);
    CHECK(out.instance.base.kind == ProblemKind::VertexCover);
    CHECK(out.instance.blockable == Subset{vertex_elem(2)});
    CHECK(out.instance.threshold == 1);
    CHECK(out.embedding.map(lit_elem(1, true)) == vertex_elem(2));

    CHECK(solve_interdiction(v).yes == solve_interdiction(out.instance).yes);
}

TEST_CASE("lifting copies bounds onto the image and pads with zero width") {
    SspInstance base = one_clause();
    Universe base_u = universe_of(base);
    CostMap lower, upper;
    for (const auto& e : base_u.elements()) {
        lower[e] = 0;
        upper[e] = 0;
    }
    upper[lit_elem(1, false)] = 1;
    RestrictedRegretInstance v{base, lower, upper, 1};
    LiftedReduction step = lift(reduction_by_id("3sat_to_vertex_cover"),
                                VariantFamily::RestrictedRegret);
    LiftedRegret out = step.apply(v);
    CHECK(out.instance.quota == 1);
    Universe target = universe_of(out.instance.base);
    CHECK(out.instance.lower.size() == target.size());
    CHECK(out.instance.upper.at(vertex_elem(1)) == 1);
    for (const auto& e : target.elements()) {
        CHECK(out.instance.lower.at(e) == 0);
        if (e != vertex_elem(1)) CHECK(out.instance.upper.at(e) == 0);
    }

    GameValue source = solve_min_max_regret(v);
    GameValue lifted = solve_min_max_regret(out.instance);
    CHECK(source.yes == lifted.yes);
    CHECK(source.value == lifted.value);
}

TEST_CASE("lifting keeps the stage split and the blocking allowance") {
    SspInstance base = one_clause();
    CombTwoStageInstance v{base,
                           {lit_elem(1, false), lit_elem(1, true)},
                           {lit_elem(2, false)},
                           1};
    LiftedReduction step =
        lift(reduction_by_id("3sat_to_vertex_cover"), VariantFamily::TwoStage);
    LiftedTwoStage out = step.apply(v);
    CHECK(out.instance.first_stage == Subset{vertex_elem(1), vertex_elem(2)});
    CHECK(out.instance.blockable == Subset{vertex_elem(3)});
    CHECK(out.instance.gamma == 1);
    CHECK(solve_two_stage(v).yes == solve_two_stage(out.instance).yes);
}

TEST_CASE("a lift only accepts its own variant family") {
    LiftedReduction step = lift(reduction_by_id("3sat_to_vertex_cover"),
                                VariantFamily::Interdiction);
    SspInstance base = one_clause();
    Universe source = universe_of(base);
    CostMap zero;
    for (const auto& e : source.elements()) zero[e] = 0;
    RestrictedRegretInstance v{base, zero, zero, 0};
    CHECK_THROWS_AS(step.apply(v), FamilyMismatch);
    CombTwoStageInstance w{base, {}, {}, 0};
    CHECK_THROWS_AS(step.apply(w), FamilyMismatch);
}

TEST_CASE("interdiction costs become a unit-versus-fence split") {
    SspInstance base{ProblemKind::Satisfiability, make_cnf(2, {{1, 2}})};
    CombInterdictionInstance v{base, {lit_elem(1, false)}, 1};
    InterdictionInstance priced = adapt_interdiction_cost(v);
    CHECK(priced.threshold == 1);
    CHECK(priced.cost.at(lit_elem(1, false)) == 1);
    CHECK(priced.cost.at(lit_elem(1, true)) == 2);
    CHECK(priced.cost.at(lit_elem(2, false)) == 2);
    CHECK(solve_interdiction(v).yes == solve_interdiction(priced).yes);
}

TEST_CASE("regret quotas become scaled interval costs") {
    SspInstance base{ProblemKind::VertexCover, GraphKPayload{3, {{1, 2}, {1, 3}, {2, 3}}, 2}};
    Universe u = universe_of(base);
    CostMap lower, upper;
    for (const auto& e : u.elements()) {
        lower[e] = 0;
        upper[e] = 1;
    }
    RestrictedRegretInstance v{base, lower, upper, 1};
    RegretInstance priced = adapt_regret_cost(v);
    CHECK(priced.threshold == 1);
    for (const auto& e : u.elements()) {
        CHECK(priced.lower.at(e) == 8);
        CHECK(priced.upper.at(e) == 9);
    }
    GameValue restricted = solve_min_max_regret(v);
    GameValue interval = solve_min_max_regret(priced);
    CHECK(restricted.yes == interval.yes);
    CHECK(restricted.value == interval.value);
}

TEST_CASE("two-stage pools become stage fences") {
    SspInstance base{ProblemKind::VertexCover, GraphKPayload{3, {{1, 2}, {1, 3}, {2, 3}}, 2}};
    CombTwoStageInstance v{base, {vertex_elem(1)}, {vertex_elem(2)}, 1};
    TwoStageInstance priced = adapt_two_stage_cost(v);
    CHECK(priced.threshold == 2);
    CHECK(priced.gamma == 1);
    CHECK(priced.first_cost.at(vertex_elem(1)) == 1);
    CHECK(priced.first_cost.at(vertex_elem(2)) == 3);
    CHECK(priced.first_cost.at(vertex_elem(3)) == 3);
    CHECK(priced.second_lower.at(vertex_elem(1)) == 3);
    CHECK(priced.second_lower.at(vertex_elem(2)) == 1);
    CHECK(priced.second_lower.at(vertex_elem(3)) == 1);
    CHECK(priced.second_upper.at(vertex_elem(1)) == 3);
    CHECK(priced.second_upper.at(vertex_elem(2)) == 3);
    CHECK(priced.second_upper.at(vertex_elem(3)) == 1);
    CHECK(solve_two_stage(v).yes == solve_two_stage(priced).yes);
}

TEST_CASE("cost adaptation needs a cost-structured base") {
    SspInstance numbers{ProblemKind::SubsetSum, SubsetSumPayload{{1, 2}, 3}};
    CostMap zero = {{num_elem(1), 0}, {num_elem(2), 0}};
    RestrictedRegretInstance v{numbers, zero, zero, 0};
    CHECK_THROWS_AS(adapt_regret_cost(v), NotAnLop);
}
