#include <optional>

#include "doctest.h"
#include "ssp/instance.hpp"
#include "ssp/solvers.hpp"
#include "ssp/variants.hpp"

using namespace ssp;

namespace {

SspInstance triangle_cover() {
    return {ProblemKind::VertexCover, GraphKPayload{3, {{1, 2}, {1, 3}, {2, 3}}, 2}};
}

CostMap per_element(const SspInstance& x, Int value) {
    CostMap m;
    Universe u = universe_of(x);
    for (const auto& e : u.elements()) m[e] = value;
    return m;
}

}  // namespace

TEST_CASE("interdiction reports the cheapest admissible blocker") {
    SspInstance base = triangle_cover();
    InterdictionInstance low{base, per_element(base, 1), 1};
    GameValue v = solve_interdiction(low);
    CHECK_FALSE(v.yes);
    // no blocker within budget hits every cover, so there is nothing to report
    CHECK_FALSE(v.value.has_value());
    CHECK_FALSE(v.witness.has_value());

    InterdictionInstance high{base, per_element(base, 1), 2};
    GameValue w = solve_interdiction(high);
    CHECK(w.yes);
    REQUIRE(w.value.has_value());
    CHECK(*w.value == 2);
    REQUIRE(w.witness.has_value());
    CHECK(*w.witness == Subset{vertex_elem(1), vertex_elem(2)});
}

TEST_CASE("an empty solution set is already interdicted for free") {
    SspInstance unsat{ProblemKind::Satisfiability, make_cnf(1, {{1}, {-1}})};
    InterdictionInstance v{unsat, per_element(unsat, 5), 0};
    GameValue g = solve_interdiction(v);
    CHECK(g.yes);
    REQUIRE(g.value.has_value());
    CHECK(*g.value == 0);
    REQUIRE(g.witness.has_value());
    CHECK(g.witness->empty());

    InterdictionInstance negative{unsat, per_element(unsat, 5), -1};
    CHECK_FALSE(solve_interdiction(negative).yes);
}

TEST_CASE("restricted regret picks the hedged cover") {
    SspInstance base = triangle_cover();
    CostMap lower = per_element(base, 0);
    CostMap upper = per_element(base, 0);
    upper[vertex_elem(1)] = 1;
    RestrictedRegretInstance v{base, lower, upper, 0};
    GameValue g = solve_min_max_regret(v);
    CHECK(g.yes);
    REQUIRE(g.value.has_value());
    CHECK(*g.value == 0);
    REQUIRE(g.witness.has_value());
    CHECK(*g.witness == Subset{vertex_elem(2), vertex_elem(3)});
}

TEST_CASE("interval regret over the feasible sets of a cost-structured base") {
    SspInstance base{ProblemKind::VertexCover, GraphKPayload{2, {{1, 2}}, 1}};
    CostMap lower = per_element(base, 0);
    CostMap upper = per_element(base, 0);
    upper[vertex_elem(1)] = 1;
    RegretInstance v{base, lower, upper, 0};
    GameValue g = solve_min_max_regret(v);
    CHECK(g.yes);
    REQUIRE(g.value.has_value());
    CHECK(*g.value == 0);
    REQUIRE(g.witness.has_value());
    CHECK(*g.witness == Subset{vertex_elem(2)});

    RegretInstance strict{base, lower, upper, -1};
    CHECK_FALSE(solve_min_max_regret(strict).yes);
}

TEST_CASE("regret is undefined when the base has no solutions") {
    SspInstance unsat{ProblemKind::Satisfiability, make_cnf(1, {{1}, {-1}})};
    RestrictedRegretInstance v{unsat, per_element(unsat, 0), per_element(unsat, 0), 3};
    CHECK_THROWS_AS(solve_min_max_regret(v), UndefinedRegret);
}

TEST_CASE("two-stage commitment survives single blocks but not a full block") {
    SspInstance base{ProblemKind::Satisfiability, make_cnf(2, {{1, 2}})};
    Subset first = {lit_elem(1, false), lit_elem(1, true)};

    CombTwoStageInstance single{base, first, {lit_elem(2, false)}, 1};
    GameValue g = solve_two_stage(single);
    CHECK(g.yes);
    REQUIRE(g.witness.has_value());
    CHECK(*g.witness == Subset{lit_elem(1, false)});

    CombTwoStageInstance full{
        base, first, {lit_elem(2, false), lit_elem(2, true)}, 2};
    GameValue h = solve_two_stage(full);
    CHECK_FALSE(h.yes);
    CHECK_FALSE(h.witness.has_value());
}

TEST_CASE("two-stage interval costs split spending across the stages") {
    SspInstance base{ProblemKind::VertexCover, GraphKPayload{2, {{1, 2}}, 1}};
    TwoStageInstance v{base,
                       per_element(base, 1),
                       per_element(base, 1),
                       per_element(base, 1),
                       1,
                       0};
    CHECK(solve_two_stage(v).yes);
    TwoStageInstance tight{base,
                           per_element(base, 1),
                           per_element(base, 1),
                           per_element(base, 1),
                           0,
                           0};
    CHECK_FALSE(solve_two_stage(tight).yes);
}

TEST_CASE("solvers refuse to guess when the node budget is gone") {
    SspInstance base = triangle_cover();
    InterdictionInstance v{base, per_element(base, 1), 1};
    Budget tiny(1);
    CHECK_THROWS_AS(solve_interdiction(v, tiny), BudgetExceeded);
}
