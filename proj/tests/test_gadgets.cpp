#include <vector>

#include "doctest.h"
#include "ssp/gadgets.hpp"
#include "ssp/instance.hpp"
#include "ssp/qbf.hpp"
#include "ssp/solvers.hpp"

using namespace ssp;

TEST_CASE("formula evaluation respects the quantifier blocks") {
    QuantifiedFormula f =
        make_qbf(QbfShape::ExistsForallDnf, 1, 1, 0, {{1, 2}, {1, -2}});
    CHECK(eval_qbf(f));
    QuantifiedFormula g = make_qbf(QbfShape::ExistsForallDnf, 1, 1, 0, {{1, 2}});
    CHECK_FALSE(eval_qbf(g));
    QuantifiedFormula empty_dnf = make_qbf(QbfShape::ExistsForallDnf, 1, 1, 0, {});
    CHECK_FALSE(eval_qbf(empty_dnf));
    QuantifiedFormula empty_cnf = make_qbf(QbfShape::ExistsForallExistsCnf, 1, 1, 1, {});
    CHECK(eval_qbf(empty_cnf));
    QuantifiedFormula wide = make_qbf(QbfShape::ExistsForallDnf, 11, 10, 0, {{1}});
    CHECK_THROWS_AS(eval_qbf(wide), CapExceeded);
}

TEST_CASE("interdiction gadget: pair literals, guard variable, cheat clauses") {
    QuantifiedFormula f =
        make_qbf(QbfShape::ExistsForallDnf, 1, 1, 0, {{1, 2}, {1, -2}});
    CombInterdictionInstance v = gadget_interdiction(f);
    const auto& p = v.base.as<CnfPayload>();
    CHECK(v.base.kind == ProblemKind::Satisfiability);
    CHECK(p.num_vars == 5);
    CHECK(p.clauses.size() == 5);
    CHECK(v.threshold == 1);
    CHECK(v.blockable == Subset{lit_elem(2, false), lit_elem(3, false)});

    CHECK(solve_interdiction(v).yes == eval_qbf(f));
    QuantifiedFormula g = make_qbf(QbfShape::ExistsForallDnf, 1, 1, 0, {{1, 2}});
    CHECK(solve_interdiction(gadget_interdiction(g)).yes == eval_qbf(g));
}

TEST_CASE("regret gadget keeps the formula variables and adds one escape") {
    QuantifiedFormula f =
        make_qbf(QbfShape::ExistsForallDnf, 1, 1, 0, {{1, 2}, {1, -2}});
    RestrictedRegretInstance v = gadget_regret(f);
    const auto& p = v.base.as<CnfPayload>();
    CHECK(p.num_vars == 3);
    CHECK(p.clauses.size() == 2);
    CHECK(v.quota == 1);
    CHECK(v.upper.at(lit_elem(1, false)) == 1);
    CHECK(v.upper.at(lit_elem(3, true)) == 1);
    CHECK(v.upper.at(lit_elem(2, false)) == 0);
    CHECK(v.lower.at(lit_elem(1, false)) == 0);

    CHECK(solve_min_max_regret(v).yes == eval_qbf(f));
    QuantifiedFormula g = make_qbf(QbfShape::ExistsForallDnf, 1, 1, 0, {{1, 2}});
    CHECK(solve_min_max_regret(gadget_regret(g)).yes == eval_qbf(g));
}

TEST_CASE("two-stage gadget reserves the opening block and pairs the middle") {
    QuantifiedFormula f =
        make_qbf(QbfShape::ExistsForallExistsCnf, 1, 1, 1, {{1, 2, 3}});
    CombTwoStageInstance v = gadget_two_stage(f);
    const auto& p = v.base.as<CnfPayload>();
    CHECK(p.num_vars == 6);
    CHECK(v.gamma == 1);
    CHECK(v.first_stage == Subset{lit_elem(1, false), lit_elem(1, true)});
    CHECK(v.blockable == Subset{lit_elem(3, false), lit_elem(4, false)});

    CHECK(solve_two_stage(v).yes == eval_qbf(f));
    CHECK(eval_qbf(f));

    QuantifiedFormula g =
        make_qbf(QbfShape::ExistsForallExistsCnf, 1, 1, 1, {{2}, {-2}});
    CHECK(solve_two_stage(gadget_two_stage(g)).yes == eval_qbf(g));
    CHECK_FALSE(eval_qbf(g));
}

TEST_CASE("gadgets reject formulas with the wrong quantifier shape") {
    QuantifiedFormula cnf =
        make_qbf(QbfShape::ExistsForallExistsCnf, 1, 1, 1, {{1, 2, 3}});
    CHECK_THROWS_AS(gadget_interdiction(cnf), PrefixMismatch);
    CHECK_THROWS_AS(gadget_regret(cnf), PrefixMismatch);
    QuantifiedFormula dnf = make_qbf(QbfShape::ExistsForallDnf, 1, 1, 0, {{1, 2}});
    CHECK_THROWS_AS(gadget_two_stage(dnf), PrefixMismatch);
}

TEST_CASE("interdiction gadget truth table over two openers") {
    std::vector<std::pair<std::vector<std::vector<Int>>, bool>> cases = {
        {{{1}}, true},
        {{{2}}, false},
        {{{2}, {-2}}, true},
        {{{-1, 2}, {-1, -2}}, true},
        {{{1, 2}, {-1, -2}}, false},
    };
    for (const auto& [rows, want] : cases) {
        QuantifiedFormula f = make_qbf(QbfShape::ExistsForallDnf, 1, 1, 0, rows);
        CAPTURE(rows.size());
        CHECK(eval_qbf(f) == want);
        CHECK(solve_interdiction(gadget_interdiction(f)).yes == want);
        CHECK(solve_min_max_regret(gadget_regret(f)).yes == want);
    }
}
