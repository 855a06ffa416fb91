#include <vector>

#include "doctest.h"
#include "ssp/instance.hpp"
#include "ssp/variants.hpp"

using namespace ssp;

namespace {

SspInstance triangle_cover() {
    return {ProblemKind::VertexCover, GraphKPayload{3, {{1, 2}, {1, 3}, {2, 3}}, 2}};
}

CostMap flat(const SspInstance& x, Int lo) {
    CostMap m;
    Universe u = universe_of(x);
    for (const auto& e : u.elements()) m[e] = lo;
    return m;
}

}  // namespace

TEST_CASE("variant validators reject malformed data") {
    SspInstance base = triangle_cover();
    CHECK_THROWS_AS(require_valid(CombInterdictionInstance{base, {vertex_elem(9)}, 1}),
                    ValidationError);
    CHECK_THROWS_AS(
        require_valid(InterdictionInstance{base, {{vertex_elem(1), 1}}, 1}),
        ValidationError);

    CostMap zero = flat(base, 0);
    CostMap ones = flat(base, 1);
    CostMap twos = flat(base, 2);
    CHECK_THROWS_AS(require_valid(RestrictedRegretInstance{base, zero, twos, 1}),
                    ValidationError);
    CHECK_THROWS_AS(require_valid(RestrictedRegretInstance{base, ones, zero, 1}),
                    ValidationError);
    CHECK_NOTHROW(require_valid(RestrictedRegretInstance{base, zero, ones, 1}));

    CHECK_THROWS_AS(
        require_valid(CombTwoStageInstance{base, {vertex_elem(1)}, {vertex_elem(2)}, -1}),
        ValidationError);
    CHECK_THROWS_AS(
        require_valid(CombTwoStageInstance{base, {vertex_elem(1)}, {vertex_elem(1)}, 1}),
        ValidationError);
    CHECK_NOTHROW(
        require_valid(CombTwoStageInstance{base, {vertex_elem(1)}, {vertex_elem(2)}, 1}));

    SspInstance numbers{ProblemKind::SubsetSum, SubsetSumPayload{{1, 2}, 3}};
    CHECK_THROWS_AS(require_valid(RegretInstance{numbers, {}, {}, 0}), ValidationError);
}

TEST_CASE("gamma is clamped by the blockable pool") {
    SspInstance base = triangle_cover();
    CombTwoStageInstance v{base, {vertex_elem(1)}, {vertex_elem(2), vertex_elem(3)}, 100};
    CHECK(effective_gamma(v) == 2);
    CombTwoStageInstance tight{base, {vertex_elem(1)}, {vertex_elem(2)}, 0};
    CHECK(effective_gamma(tight) == 0);
}

TEST_CASE("blocker view: admissible interdictions that meet every solution") {
    SspInstance base{ProblemKind::Satisfiability, make_cnf(1, {{1}})};
    auto view = wrap_as_ssp(CombInterdictionInstance{base, {lit_elem(1, false)}, 1});
    CHECK(view->universe() == universe_of(base));
    Budget budget;
    SolutionFamily f = view->enumerate(budget);
    REQUIRE(f.size() == 1);
    CHECK(f.members()[0] == Subset{lit_elem(1, false)});
    CHECK(view->contains({lit_elem(1, false)}));
    CHECK_FALSE(view->contains({}));
}

TEST_CASE("regret view with zero width keeps exactly the base solutions") {
    SspInstance base = triangle_cover();
    RestrictedRegretInstance v{base, flat(base, 0), flat(base, 0), 0};
    auto view = wrap_as_ssp(v);
    Budget budget;
    SolutionFamily got = view->enumerate(budget);
    Budget direct;
    CHECK(got == enumerate_solutions(base, direct));
}

TEST_CASE("two-stage view without blocking is plain completability") {
    SspInstance base{ProblemKind::Satisfiability, make_cnf(2, {{1, 2}})};
    Subset first = {lit_elem(1, false), lit_elem(1, true)};
    CombTwoStageInstance v{base, first, {}, 0};
    auto view = wrap_as_ssp(v);
    CHECK(view->contains({lit_elem(1, false)}));
    CHECK_FALSE(view->contains({lit_elem(1, false), lit_elem(1, true)}));
    Budget budget;
    SolutionFamily f = view->enumerate(budget);
    CHECK_FALSE(f.contains({}));
    CHECK(f.contains({lit_elem(1, true)}));
    CHECK(f.size() == 2);
}

TEST_CASE("canonical scenario raises exactly the chosen coordinates") {
    CostMap lower, upper;
    std::vector<ElementId> elems;
    for (Int i = 1; i <= 5; ++i) {
        elems.push_back(num_elem(i));
        lower[num_elem(i)] = i;
        upper[num_elem(i)] = i + 10;
    }
    Subset raised = {num_elem(2), num_elem(5)};
    CostMap scenario = canonical_scenario(lower, upper, raised);
    for (Int i = 1; i <= 5; ++i) {
        Int expect = (i == 2 || i == 5) ? i + 10 : i;
        CHECK(scenario.at(num_elem(i)) == expect);
    }
    CHECK(cost_under(scenario, {num_elem(1), num_elem(2)}) == 13);
    CHECK_THROWS_AS(cost_under(scenario, {num_elem(9)}), ForeignElement);
}

TEST_CASE("max regret is computed at the canonical scenario") {
    CostMap lower = {{num_elem(1), 0}, {num_elem(2), 0}};
    CostMap upper = {{num_elem(1), 1}, {num_elem(2), 0}};
    std::vector<Subset> rivals = {{num_elem(1)}, {num_elem(2)}};
    CHECK(max_regret(lower, upper, {num_elem(1)}, rivals) == 1);
    CHECK(max_regret(lower, upper, {num_elem(2)}, rivals) == 0);
    CHECK_THROWS_AS(max_regret(lower, upper, {num_elem(1)}, {}), UndefinedRegret);
}
