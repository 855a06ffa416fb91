#include <vector>

#include "doctest.h"
#include "ssp/family.hpp"
#include "ssp/instance.hpp"

using namespace ssp;

namespace {

SolutionFamily solutions(const SspInstance& x) {
    Budget budget;
    SolutionFamily f = enumerate_solutions(x, budget);
    REQUIRE(f.complete());
    return f;
}

}  // namespace

TEST_CASE("satisfiability solutions are exactly the satisfying assignments") {
    SspInstance x{ProblemKind::Satisfiability, make_cnf(2, {{1, 2}})};
    SolutionFamily f = solutions(x);
    CHECK(f.size() == 3);
    CHECK(f.contains({lit_elem(1, false), lit_elem(2, true)}));
    CHECK_FALSE(f.contains({lit_elem(1, true), lit_elem(2, true)}));

    SspInstance free_var{ProblemKind::Satisfiability, make_cnf(1, {})};
    SolutionFamily g = solutions(free_var);
    REQUIRE(g.size() == 2);
    CHECK(g.members()[0] == Subset{lit_elem(1, false)});
    CHECK(g.members()[1] == Subset{lit_elem(1, true)});
}

TEST_CASE("a single ternary clause excludes exactly one assignment") {
    SspInstance x{ProblemKind::ThreeSatisfiability, make_cnf(3, {{-1, -2, 3}})};
    SolutionFamily f = solutions(x);
    CHECK(f.size() == 7);
    CHECK_FALSE(f.contains({lit_elem(1, false), lit_elem(2, false), lit_elem(3, true)}));
}

TEST_CASE("vertex cover members and feasible supersets on a triangle") {
    SspInstance x{ProblemKind::VertexCover, GraphKPayload{3, {{1, 2}, {1, 3}, {2, 3}}, 2}};
    SolutionFamily f = solutions(x);
    CHECK(f.size() == 3);
    CHECK(f.contains({vertex_elem(1), vertex_elem(2)}));
    Budget budget;
    SolutionFamily feasible = enumerate_feasible(x, budget);
    REQUIRE(feasible.complete());
    CHECK(feasible.size() == 4);
    CHECK(feasible.contains({vertex_elem(1), vertex_elem(2), vertex_elem(3)}));
}

TEST_CASE("knapsack with zero capacity keeps only the empty selection") {
    SspInstance x{ProblemKind::Knapsack, KnapsackPayload{{{1, 1}}, 0, 0}};
    SolutionFamily f = solutions(x);
    REQUIRE(f.size() == 1);
    CHECK(f.members()[0].empty());
}

TEST_CASE("triangle tours") {
    SspInstance uham{ProblemKind::UndirectedHamiltonianCycle,
                     GraphPayload{3, {{1, 2}, {1, 3}, {2, 3}}}};
    SolutionFamily f = solutions(uham);
    REQUIRE(f.size() == 1);
    CHECK(f.members()[0] == Subset{edge_elem(1, 2), edge_elem(1, 3), edge_elem(2, 3)});

    SspInstance tsp{ProblemKind::TravelingSalesman,
                    TspPayload{3, {{1, 2, 1}, {1, 3, 1}, {2, 3, 1}}, 3}};
    CHECK(solutions(tsp).size() == 1);
    SspInstance pricey{ProblemKind::TravelingSalesman,
                       TspPayload{3, {{1, 2, 1}, {1, 3, 1}, {2, 3, 1}}, 2}};
    CHECK(solutions(pricey).empty());
}

TEST_CASE("directed hamiltonian path and cycle on a triangle") {
    SspInstance path{ProblemKind::DirectedHamiltonianPath,
                     DhamPathPayload{3, {{1, 3}, {3, 2}}, 1, 2}};
    SolutionFamily f = solutions(path);
    REQUIRE(f.size() == 1);
    CHECK(f.members()[0] == Subset{arc_elem(1, 3), arc_elem(3, 2)});

    SspInstance cycle{ProblemKind::DirectedHamiltonianCycle,
                      DigraphPayload{3, {{1, 2}, {2, 3}, {3, 1}, {2, 1}}}};
    SolutionFamily g = solutions(cycle);
    REQUIRE(g.size() == 1);
    CHECK(g.members()[0] == Subset{arc_elem(1, 2), arc_elem(2, 3), arc_elem(3, 1)});
}

TEST_CASE("steiner trees under a weight cap") {
    SspInstance x{ProblemKind::SteinerTree,
                  SteinerPayload{4,
                                 {1, 4},
                                 {{1, 2, 1}, {2, 4, 1}, {1, 3, 2}, {3, 4, 0}, {1, 4, 5}},
                                 2}};
    SolutionFamily f = solutions(x);
    REQUIRE(f.size() == 3);
    CHECK(f.members()[0] == Subset{edge_elem(1, 2), edge_elem(2, 4)});
    CHECK(f.members()[1] == Subset{edge_elem(1, 2), edge_elem(2, 4), edge_elem(3, 4)});
    CHECK(f.members()[2] == Subset{edge_elem(1, 3), edge_elem(3, 4)});
}

TEST_CASE("disjoint path pairs") {
    SspInstance x{ProblemKind::DirectedTwoDisjointPath,
                  TwoDppPayload{4, {{1, 2}, {3, 4}, {1, 4}, {3, 2}}, 1, 2, 3, 4}};
    SolutionFamily f = solutions(x);
    REQUIRE(f.size() == 1);
    CHECK(f.members()[0] == Subset{arc_elem(1, 2), arc_elem(3, 4)});
}

TEST_CASE("dominating set on a star") {
    SspInstance x{ProblemKind::DominatingSet, GraphKPayload{4, {{1, 2}, {1, 3}, {1, 4}}, 1}};
    SolutionFamily f = solutions(x);
    REQUIRE(f.size() == 1);
    CHECK(f.members()[0] == Subset{vertex_elem(1)});
}

TEST_CASE("partition needs an even split and reports one side of each pair") {
    SspInstance x{ProblemKind::Partition, PartitionPayload{{1, 2, 3}}};
    SolutionFamily f = solutions(x);
    CHECK(f.size() == 1);
    CHECK(f.contains({num_elem(3)}));
    // the mirror half omits the last number, so it is not a solution
    CHECK_FALSE(f.contains({num_elem(1), num_elem(2)}));
    CHECK_FALSE(is_solution(x, {num_elem(1), num_elem(2)}));
    SspInstance odd{ProblemKind::Partition, PartitionPayload{{1, 2, 4}}};
    CHECK(solutions(odd).empty());
}

TEST_CASE("enumeration honors its budget") {
    SspInstance x{ProblemKind::Satisfiability, make_cnf(6, {})};
    Budget small(8);
    SolutionFamily f = enumerate_solutions(x, small);
    CHECK_FALSE(f.complete());
}
