#include <string>
#include <vector>

#include "doctest.h"
#include "ssp/generators.hpp"
#include "ssp/instance.hpp"
#include "ssp/reduction.hpp"

using namespace ssp;

namespace {

VerificationReport verified(const SspReduction& r, const SspInstance& x) {
    Budget budget(Budget::kNestingCap);
    return verify_ssp(r, x, budget);
}

}  // namespace

TEST_CASE("clause gadget graph: pair edges, clause triangles, tight bound") {
    SspInstance x{ProblemKind::ThreeSatisfiability, make_cnf(3, {{1, 2, -3}})};
    const SspReduction& r = reduction_by_id("3sat_to_vertex_cover");
    ReductionOutput out = r(x);
    const auto& p = out.instance.as<GraphKPayload>();
    CHECK(p.n == 9);
    CHECK(p.edges.size() == 9);
    CHECK(p.k == 5);
    CHECK(out.embedding.map(lit_elem(1, false)) == vertex_elem(1));
    CHECK(out.embedding.map(lit_elem(1, true)) == vertex_elem(2));
    CHECK(out.embedding.map(lit_elem(3, true)) == vertex_elem(6));
    CHECK(out.embedding.size() == 6);

    VerificationReport rep = verified(r, x);
    CHECK(rep.ok());
    CHECK(rep.left_count == 7);
}

TEST_CASE("wide clauses split with fresh chaining variables") {
    SspInstance x{ProblemKind::Satisfiability, make_cnf(4, {{1, 2, 3, 4}})};
    ReductionOutput out = reduction_by_id("sat_to_3sat")(x);
    const auto& p = out.instance.as<CnfPayload>();
    CHECK(p.num_vars == 5);
    CHECK(p.clauses == make_cnf(5, {{1, 2, 5}, {-5, 3, 4}}).clauses);
    CHECK(verified(reduction_by_id("sat_to_3sat"), x).ok());
}

TEST_CASE("numeric clause encoding pins digits per clause and variable") {
    SspInstance x{ProblemKind::ThreeSatisfiability, make_cnf(3, {{1, 2, -3}})};
    ReductionOutput out = reduction_by_id("3sat_to_subset_sum")(x);
    const auto& p = out.instance.as<SubsetSumPayload>();
    CHECK(p.values == std::vector<Int>{1001, 1000, 101, 100, 10, 11, 1, 2});
    CHECK(p.target == 1114);
    CHECK(out.embedding.map(lit_elem(1, false)) == num_elem(1));
    CHECK(out.embedding.map(lit_elem(3, true)) == num_elem(6));
    CHECK(verified(reduction_by_id("3sat_to_subset_sum"), x).ok());
}

TEST_CASE("formula with no variables maps to one forced arc") {
    SspInstance x{ProblemKind::ThreeSatisfiability, make_cnf(0, {})};
    ReductionOutput out = reduction_by_id("3sat_to_dham_path")(x);
    const auto& p = out.instance.as<DhamPathPayload>();
    CHECK(p.s == 1);
    CHECK(p.t == 2);
    CHECK(p.arcs == std::vector<std::pair<Int, Int>>{{1, 2}});
    CHECK(out.embedding.size() == 0);
    CHECK(verified(reduction_by_id("3sat_to_dham_path"), x).ok());
}

TEST_CASE("cover to domination adds an apex block per edge") {
    SspInstance x{ProblemKind::VertexCover, GraphKPayload{3, {{1, 2}, {1, 3}, {2, 3}}, 2}};
    ReductionOutput out = reduction_by_id("vertex_cover_to_dominating_set")(x);
    const auto& p = out.instance.as<GraphKPayload>();
    CHECK(p.n == 15);
    CHECK(p.k == 2);
    CHECK(verified(reduction_by_id("vertex_cover_to_dominating_set"), x).ok());
}

TEST_CASE("tiny cycle sources become a canonical no-instance tour") {
    SspInstance x{ProblemKind::UndirectedHamiltonianCycle, GraphPayload{2, {{1, 2}}}};
    ReductionOutput out = reduction_by_id("uham_cycle_to_tsp")(x);
    const auto& p = out.instance.as<TspPayload>();
    CHECK(p.n == 3);
    CHECK(p.k == 0);
    Budget no_budget;
    CHECK_FALSE(has_solution(out.instance, no_budget));
    CHECK(verified(reduction_by_id("uham_cycle_to_tsp"), x).ok());

    SspInstance triangle{ProblemKind::UndirectedHamiltonianCycle,
                         GraphPayload{3, {{1, 2}, {1, 3}, {2, 3}}}};
    ReductionOutput tour = reduction_by_id("uham_cycle_to_tsp")(triangle);
    CHECK(tour.instance.as<TspPayload>().k == 0);
    Budget yes_budget;
    CHECK(has_solution(tour.instance, yes_budget));
}

TEST_CASE("a corrupted target is caught by dual enumeration") {
    SspInstance x{ProblemKind::ThreeSatisfiability, make_cnf(3, {{1, 2, -3}})};
    ReductionOutput out = reduction_by_id("3sat_to_vertex_cover")(x);
    SspInstance corrupted = out.instance;
    corrupted.as<GraphKPayload>().k -= 1;

    InstanceView left(x);
    InstanceView right(corrupted);
    Budget budget(Budget::kNestingCap);
    VerificationReport rep = verify_embedding(left, right, out.embedding, budget);
    CHECK(rep.conclusive);
    CHECK_FALSE(rep.equal);
    CHECK_FALSE(rep.ok());
    CHECK(!rep.only_left.empty());
}

TEST_CASE("every catalog reduction passes spot verification") {
    for (const auto& r : catalog()) {
        for (std::uint64_t i = 0; i < 2; ++i) {
            SspInstance x = random_source(r.id(), kDefaultSeed, i);
            CAPTURE(r.id());
            CAPTURE(i);
            VerificationReport rep = verified(r, x);
            CHECK(rep.ok());
        }
    }
}
