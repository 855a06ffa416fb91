#include <string>
#include <variant>
#include <vector>

#include "doctest.h"
#include "ssp/instance.hpp"
#include "ssp/io.hpp"
#include "ssp/qbf.hpp"
#include "ssp/reduction.hpp"
#include "ssp/variants.hpp"

using namespace ssp;

namespace {

void check_round_trip(const FileContent& content) {
    std::string text = serialize_instance_file(content);
    CAPTURE(text);
    FileContent back = parse_instance_file(text);
    CHECK(serialize_instance_file(back) == text);
    CHECK(kind_id(base_of(back).kind) == kind_id(base_of(content).kind));
}

}  // namespace

TEST_CASE("every problem kind round-trips through its file form") {
    std::vector<SspInstance> samples = {
        {ProblemKind::Satisfiability, make_cnf(2, {{1, -2}})},
        {ProblemKind::ThreeSatisfiability, make_cnf(3, {{1, 2, 3}, {-1, -2, -3}})},
        {ProblemKind::VertexCover, GraphKPayload{3, {{1, 2}, {2, 3}}, 1}},
        {ProblemKind::IndependentSet, GraphKPayload{3, {{1, 2}}, 2}},
        {ProblemKind::Clique, GraphKPayload{3, {{1, 2}, {1, 3}, {2, 3}}, 3}},
        {ProblemKind::DominatingSet, GraphKPayload{4, {{1, 2}, {3, 4}}, 2}},
        {ProblemKind::SetCover, SetSystemPayload{3, {{1, 2}, {2, 3}, {3}}, 2}},
        {ProblemKind::HittingSet, SetSystemPayload{4, {{1, 4}, {2, 3}}, 2}},
        {ProblemKind::FeedbackVertexSet, DigraphKPayload{3, {{1, 2}, {2, 1}}, 1}},
        {ProblemKind::FeedbackArcSet, DigraphKPayload{2, {{1, 2}, {2, 1}}, 1}},
        {ProblemKind::UncapacitatedFacilityLocation,
         UflPayload{2, 2, {3, 4}, {{1, 2}, {2, 1}}, 5}},
        {ProblemKind::PCenter, FacilityPayload{2, 2, {{1, 2}, {2, 1}}, 1, 1}},
        {ProblemKind::PMedian, FacilityPayload{2, 2, {{0, 5}, {5, 0}}, 1, 2}},
        {ProblemKind::SubsetSum, SubsetSumPayload{{3, 5, 8}, 8}},
        {ProblemKind::Knapsack, KnapsackPayload{{{4, 2}, {3, 3}}, 4, 3}},
        {ProblemKind::Partition, PartitionPayload{{2, 2, 4}}},
        {ProblemKind::TwoMachineScheduling, SchedulingPayload{{2, 3, 5}, 5}},
        {ProblemKind::DirectedHamiltonianPath, DhamPathPayload{3, {{1, 3}, {3, 2}}, 1, 2}},
        {ProblemKind::DirectedHamiltonianCycle, DigraphPayload{3, {{1, 2}, {2, 3}, {3, 1}}}},
        {ProblemKind::UndirectedHamiltonianCycle,
         GraphPayload{3, {{1, 2}, {1, 3}, {2, 3}}}},
        {ProblemKind::TravelingSalesman, TspPayload{3, {{1, 2, 4}, {1, 3, 0}, {2, 3, 1}}, 5}},
        {ProblemKind::DirectedTwoDisjointPath,
         TwoDppPayload{4, {{1, 2}, {3, 4}}, 1, 2, 3, 4}},
        {ProblemKind::DirectedKDisjointPath,
         KDppPayload{4, {{1, 2}, {3, 4}}, {{1, 2}, {3, 4}}}},
        {ProblemKind::SteinerTree, SteinerPayload{3, {1, 3}, {{1, 2, 1}, {2, 3, 1}}, 2}},
    };
    for (const auto& x : samples) {
        CAPTURE(kind_id(x.kind));
        require_valid(x);
        check_round_trip(FileContent{x});
        CHECK(serialize_instance(x) == serialize_instance_file(FileContent{x}));
    }
}

TEST_CASE("variant sections round-trip") {
    SspInstance base{ProblemKind::VertexCover, GraphKPayload{2, {{1, 2}}, 1}};
    CostMap unit = {{vertex_elem(1), 1}, {vertex_elem(2), 1}};
    CostMap zero = {{vertex_elem(1), 0}, {vertex_elem(2), 0}};
    CostMap one = {{vertex_elem(1), 1}, {vertex_elem(2), 1}};

    check_round_trip(FileContent{InterdictionInstance{base, unit, 1}});
    check_round_trip(FileContent{CombInterdictionInstance{base, {vertex_elem(1)}, 1}});
    check_round_trip(FileContent{RegretInstance{base, zero, unit, 2}});
    check_round_trip(FileContent{RestrictedRegretInstance{base, zero, one, 1}});
    check_round_trip(
        FileContent{TwoStageInstance{base, unit, zero, one, 2, 1}});
    check_round_trip(
        FileContent{CombTwoStageInstance{base, {vertex_elem(1)}, {vertex_elem(2)}, 1}});
}

TEST_CASE("plain parse refuses variant sections") {
    std::string text = serialize_instance_file(
        FileContent{CombInterdictionInstance{
            SspInstance{ProblemKind::VertexCover, GraphKPayload{2, {{1, 2}}, 1}},
            {vertex_elem(1)},
            1}});
    CHECK_THROWS_AS(parse_instance(text), ParseError);
    CHECK(std::holds_alternative<CombInterdictionInstance>(parse_instance_file(text)));
}

TEST_CASE("formula files round-trip") {
    QuantifiedFormula dnf =
        make_qbf(QbfShape::ExistsForallDnf, 2, 1, 0, {{1, -3}, {2}});
    std::string text = serialize_qbf(dnf);
    QuantifiedFormula back = parse_qbf(text);
    CHECK(serialize_qbf(back) == text);
    CHECK(back.num_x == 2);
    CHECK(back.num_y == 1);
    CHECK(back.rows == dnf.rows);

    QuantifiedFormula cnf =
        make_qbf(QbfShape::ExistsForallExistsCnf, 1, 1, 1, {{1, 2, 3}, {-2}});
    CHECK(serialize_qbf(parse_qbf(serialize_qbf(cnf))) == serialize_qbf(cnf));
}

TEST_CASE("embedding files round-trip") {
    Embedding f;
    f.add(lit_elem(1, false), vertex_elem(1));
    f.add(lit_elem(1, true), vertex_elem(2));
    std::string text = serialize_embedding(f);
    Embedding back = parse_embedding(text);
    CHECK(serialize_embedding(back) == text);
    CHECK(back.map(lit_elem(1, true)) == vertex_elem(2));
}

TEST_CASE("parse errors carry positions and reject malformed input") {
    CHECK_THROWS_AS(parse_instance_file("nonsense v1\n"), ParseError);
    CHECK_THROWS_AS(parse_instance_file("ssp not_a_kind v1\n"), ParseError);
    try {
        parse_instance_file("ssp vertex_cover v1\nvertices x\n");
        FAIL("expected a parse error");
    } catch (const ParseError& e) {
        CHECK(e.line == 2);
        CHECK(e.col > 0);
    }
    CHECK_THROWS_AS(
        parse_instance_file("ssp vertex_cover v1\nvertices 2\nk 1\nedges 1\n1 2\nextra\n"),
        ParseError);
    CHECK_THROWS_AS(parse_instance_file("ssp subset_sum v1\nnumbers 1\n99999999999999999999\n"
                                        "target 0\n"),
                    ParseError);
    CHECK_THROWS_AS(parse_embedding("embedding v1\nmap 1\nv(1) v(1)\nv(2) v(1)\n"), ParseError);
    std::string dup_cost =
        "ssp vertex_cover v1\nvertices 2\nk 1\nedges 1\n1 2\n"
        "variant interdiction\nthreshold 1\ncosts 2\nv(1) 1\nv(1) 2\n";
    CHECK_THROWS_AS(parse_instance_file(dup_cost), ParseError);
}

TEST_CASE("comments and spacing do not change the parse") {
    std::string text =
        "# cover fixture\nssp vertex_cover v1\n\nvertices 2\nk 1\n# the only edge\n"
        "edges 1\n  1   2\n";
    FileContent content = parse_instance_file(text);
    const auto& x = std::get<SspInstance>(content);
    CHECK(x.kind == ProblemKind::VertexCover);
    CHECK(x.as<GraphKPayload>().edges == std::vector<std::pair<Int, Int>>{{1, 2}});
}

TEST_CASE("digest is stable fnv1a text") {
    CHECK(digest("") == "cbf29ce484222325");
    CHECK(digest("abc") == "e71fa2190541574b");
    CHECK(fnv1a("") == 14695981039346656037ULL);
}

TEST_CASE("reports close with a digest over their own text") {
    Report r;
    r.add("command", std::string("solve"));
    r.add("value", Int{7});
    r.add("decision", true);
    std::string text = r.to_text();
    auto mark = text.rfind("digest: ");
    REQUIRE(mark != std::string::npos);
    std::string body = text.substr(0, mark);
    std::string tail = text.substr(mark + 8);
    REQUIRE(tail.size() == 17);
    CHECK(tail.substr(16) == "\n");
    CHECK(tail.substr(0, 16) == digest(body));
    CHECK(text.rfind("report-v1\n", 0) == 0);
    CHECK(text.find("value: 7\n") != std::string::npos);
    CHECK(text.find("decision: true\n") != std::string::npos);
    CHECK(r.to_text() == text);
}
