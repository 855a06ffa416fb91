#include <vector>

#include "doctest.h"
#include "ssp/element.hpp"
#include "ssp/errors.hpp"
#include "ssp/family.hpp"
#include "ssp/ints.hpp"

using namespace ssp;

TEST_CASE("element ordering is lexicographic on tag then indices") {
    CHECK(vertex_elem(1) < vertex_elem(2));
    CHECK(arc_elem(1, 2) < vertex_elem(1));
    CHECK(edge_elem(2, 1) == edge_elem(1, 2));
    CHECK(lit_elem(3, false) < lit_elem(3, true));
    CHECK(lit_elem(-3) == lit_elem(3, true));
    CHECK(lit_elem(3) == lit_elem(3, false));
}

TEST_CASE("element text form round-trips") {
    std::vector<ElementId> samples = {
        elem("s"),          lit_elem(4, true),       vertex_elem(12), arc_elem(3, 9),
        edge_elem(7, 2),    num_elem(1),             item_elem(5),    job_elem(2),
        set_elem(8),        ground_elem(3),          facility_elem(6),
    };
    for (const auto& e : samples) {
        CAPTURE(to_string(e));
        CHECK(parse_element(to_string(e)) == e);
    }
    CHECK(to_string(elem("s")) == "s");
    CHECK(to_string(edge_elem(7, 2)) == "edge(2,7)");
    CHECK_THROWS_AS(parse_element("v(1"), ParseError);
    CHECK_THROWS_AS(parse_element(""), ParseError);
    CHECK_THROWS_AS(parse_element("v(1) trailing"), ParseError);
}

TEST_CASE("universe lookups reject foreign elements") {
    Universe u({vertex_elem(1), vertex_elem(2)});
    CHECK(u.size() == 2);
    CHECK(u.contains(vertex_elem(2)));
    CHECK_FALSE(u.contains(vertex_elem(3)));
    CHECK(u.index_of(vertex_elem(1)) == 0);
    CHECK_THROWS_AS(u.index_of(vertex_elem(3)), ForeignElement);
}

TEST_CASE("subset helpers") {
    Subset s = {vertex_elem(3), vertex_elem(1), vertex_elem(3)};
    canonicalize(s);
    CHECK(s == Subset{vertex_elem(1), vertex_elem(3)});
    CHECK(is_subset_of(s, Universe({vertex_elem(1), vertex_elem(2), vertex_elem(3)})));
    CHECK_FALSE(is_subset_of(s, Universe({vertex_elem(1)})));
    CHECK(intersects(s, Subset{vertex_elem(3)}));
    CHECK_FALSE(intersects(s, Subset{vertex_elem(2)}));
}

TEST_CASE("checked arithmetic rejects values outside the safe window") {
    CHECK(checked_add(2, 3) == 5);
    CHECK(checked_sub(2, 3) == -1);
    CHECK(checked_mul(-4, 5) == -20);
    CHECK_THROWS_AS(checked_add(kIntLimit, 1), OverflowError);
    CHECK_THROWS_AS(checked_mul(kIntLimit / 2, 3), OverflowError);
    CHECK_THROWS_AS(checked_sub(-kIntLimit, 2), OverflowError);
}

TEST_CASE("budget latches once spent") {
    Budget b(2);
    CHECK(b.tick());
    CHECK(b.tick());
    CHECK_FALSE(b.tick());
    CHECK(b.exhausted());
    CHECK(b.remaining() == 0);
    Budget fresh;
    CHECK(fresh.remaining() == Budget::kDefault);
}

TEST_CASE("solution families canonicalize members") {
    std::vector<Subset> raw = {{vertex_elem(2), vertex_elem(1)}, {vertex_elem(1)}};
    SolutionFamily f(raw, EnumerationStatus::Complete);
    REQUIRE(f.size() == 2);
    CHECK(f.members()[0] == Subset{vertex_elem(1)});
    CHECK(f.members()[1] == Subset{vertex_elem(1), vertex_elem(2)});
    CHECK(f.contains({vertex_elem(2), vertex_elem(1)}));
    CHECK_FALSE(f.contains({vertex_elem(2)}));
    CHECK(f.complete());
    SolutionFamily partial({}, EnumerationStatus::BudgetExceeded);
    CHECK_FALSE(partial.complete());
}
