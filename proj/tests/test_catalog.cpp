#include <string>
#include <vector>

#include "doctest.h"
#include "ssp/instance.hpp"
#include "ssp/io.hpp"
#include "ssp/reduction.hpp"

using namespace ssp;

TEST_CASE("the catalog carries the full reduction web") {
    using PK = ProblemKind;
    struct Entry {
        const char* id;
        PK from;
        PK to;
    };
    std::vector<Entry> expected = {
        {"sat_to_3sat", PK::Satisfiability, PK::ThreeSatisfiability},
        {"3sat_to_vertex_cover", PK::ThreeSatisfiability, PK::VertexCover},
        {"3sat_to_independent_set", PK::ThreeSatisfiability, PK::IndependentSet},
        {"independent_set_to_clique", PK::IndependentSet, PK::Clique},
        {"vertex_cover_to_dominating_set", PK::VertexCover, PK::DominatingSet},
        {"vertex_cover_to_set_cover", PK::VertexCover, PK::SetCover},
        {"vertex_cover_to_hitting_set", PK::VertexCover, PK::HittingSet},
        {"vertex_cover_to_feedback_vertex_set", PK::VertexCover, PK::FeedbackVertexSet},
        {"vertex_cover_to_feedback_arc_set", PK::VertexCover, PK::FeedbackArcSet},
        {"vertex_cover_to_ufl", PK::VertexCover, PK::UncapacitatedFacilityLocation},
        {"vertex_cover_to_p_center", PK::VertexCover, PK::PCenter},
        {"vertex_cover_to_p_median", PK::VertexCover, PK::PMedian},
        {"3sat_to_subset_sum", PK::ThreeSatisfiability, PK::SubsetSum},
        {"subset_sum_to_knapsack", PK::SubsetSum, PK::Knapsack},
        {"subset_sum_to_partition", PK::SubsetSum, PK::Partition},
        {"partition_to_two_machine_scheduling", PK::Partition, PK::TwoMachineScheduling},
        {"3sat_to_dham_path", PK::ThreeSatisfiability, PK::DirectedHamiltonianPath},
        {"dham_path_to_dham_cycle", PK::DirectedHamiltonianPath, PK::DirectedHamiltonianCycle},
        {"dham_cycle_to_uham_cycle", PK::DirectedHamiltonianCycle,
         PK::UndirectedHamiltonianCycle},
        {"uham_cycle_to_tsp", PK::UndirectedHamiltonianCycle, PK::TravelingSalesman},
        {"3sat_to_2ddp", PK::ThreeSatisfiability, PK::DirectedTwoDisjointPath},
        {"2ddp_to_kddp", PK::DirectedTwoDisjointPath, PK::DirectedKDisjointPath},
        {"3sat_to_steiner_tree", PK::ThreeSatisfiability, PK::SteinerTree},
    };
    REQUIRE(catalog().size() == expected.size());
    for (const auto& want : expected) {
        CAPTURE(want.id);
        const SspReduction& r = reduction_by_id(want.id);
        CHECK(r.from() == want.from);
        CHECK(r.to() == want.to);
    }
    CHECK_THROWS_AS(reduction_by_id("sat_to_clique"), Error);
    const SspReduction* found =
        find_reduction(PK::Satisfiability, PK::ThreeSatisfiability);
    REQUIRE(found != nullptr);
    CHECK(found->id() == "sat_to_3sat");
    CHECK(find_reduction(PK::Satisfiability, PK::Clique) == nullptr);
}

TEST_CASE("reductions reject sources of the wrong kind") {
    SspInstance cover{ProblemKind::VertexCover, GraphKPayload{2, {{1, 2}}, 1}};
    CHECK_THROWS_AS(reduction_by_id("sat_to_3sat")(cover), KindMismatch);
}

TEST_CASE("composition chains instances and embeddings stage by stage") {
    SspReduction ab = compose({reduction_by_id("sat_to_3sat"),
                               reduction_by_id("3sat_to_vertex_cover")});
    SspReduction abc = compose({ab, reduction_by_id("vertex_cover_to_dominating_set")});
    SspReduction abc_flat = compose({reduction_by_id("sat_to_3sat"),
                                     reduction_by_id("3sat_to_vertex_cover"),
                                     reduction_by_id("vertex_cover_to_dominating_set")},
                                    "sat_to_dominating_set");
    CHECK(abc_flat.id() == "sat_to_dominating_set");
    CHECK(abc_flat.from() == ProblemKind::Satisfiability);
    CHECK(abc_flat.to() == ProblemKind::DominatingSet);

    SspInstance x{ProblemKind::Satisfiability, make_cnf(2, {{1, 2}})};
    ReductionOutput nested = abc(x);
    ReductionOutput flat = abc_flat(x);
    CHECK(serialize_instance(nested.instance) == serialize_instance(flat.instance));
    CHECK(nested.embedding.pairs() == flat.embedding.pairs());

    ReductionOutput staged = reduction_by_id("sat_to_3sat")(x);
    ReductionOutput second = reduction_by_id("3sat_to_vertex_cover")(staged.instance);
    ReductionOutput third = reduction_by_id("vertex_cover_to_dominating_set")(second.instance);
    for (const auto& [src, mid] : staged.embedding.pairs()) {
        CHECK(flat.embedding.map(src) == third.embedding.map(second.embedding.map(mid)));
    }
}
