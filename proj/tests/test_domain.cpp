#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "lcfuzz/domain.hpp"
#include "lcfuzz/regulated.hpp"

using namespace lcfuzz;

TEST_CASE("interval grid construction and validation") {
    const CompactDomain g = CompactDomain::uniform_grid(0.0, 1.0, 5);
    CHECK(g.size() == 5);
    CHECK(g.coordinate(0) == 0.0);
    CHECK(g.coordinate(2) == 0.5);
    CHECK(g.coordinate(4) == 1.0);
    CHECK(g.label(3) == "t3");
    CHECK(g.index_of_label("t3") == 3);
    CHECK(g.index_near(0.6) == 2);
    CHECK(!g.is_limit_point(4));

    CHECK_THROWS_AS(CompactDomain(IntervalGrid{0.0, 1.0, {}}), domain_error);
    CHECK_THROWS_AS(CompactDomain(IntervalGrid{0.0, 1.0, {0.5, 0.25, 1.0}}), domain_error);
    CHECK_THROWS_AS(CompactDomain(IntervalGrid{0.0, 1.0, {0.25, 1.0}}), domain_error);
    CHECK_THROWS_AS(CompactDomain::uniform_grid(0.0, 1.0, 1), domain_error);
}

TEST_CASE("reciprocal sequence with its limit point") {
    const CompactDomain s = CompactDomain::reciprocal_sequence(4);
    CHECK(s.size() == 5);
    CHECK(s.coordinate(0) == 1.0);
    CHECK(s.coordinate(3) == 0.25);
    CHECK(s.coordinate(4) == 0.0);
    CHECK(s.label(0) == "a1");
    CHECK(s.label(4) == "p");
    CHECK(s.index_of_label("p") == 4);
    CHECK(s.is_limit_point(4));
    CHECK(!s.is_limit_point(3));
    CHECK_THROWS_AS(s.index_of_label("q7"), domain_error);
    CHECK_THROWS_AS(CompactDomain(ConvergentSequence{}), domain_error);
}

TEST_CASE("sequence neighbourhoods are tails at the limit point") {
    const CompactDomain s = CompactDomain::reciprocal_sequence(4);
    const auto at_term = s.neighbourhoods(1);
    REQUIRE(at_term.size() == 1);
    CHECK(at_term[0] == std::vector<std::size_t>{1});

    const auto at_p = s.neighbourhoods(4);
    REQUIRE(at_p.size() == 4);
    CHECK(at_p.front() == std::vector<std::size_t>{0, 1, 2, 3, 4});
    CHECK(at_p.back() == std::vector<std::size_t>{3, 4});
    // {p} alone is never a neighbourhood
    for (const auto& v : at_p) CHECK(v.size() >= 2);
}

TEST_CASE("grid neighbourhoods shrink to immediate neighbours") {
    const CompactDomain g = CompactDomain::uniform_grid(0.0, 1.0, 5);
    const auto n = g.neighbourhoods(2);
    CHECK(n.front() == std::vector<std::size_t>{0, 1, 2, 3, 4});
    CHECK(n.back() == std::vector<std::size_t>{1, 2, 3});
    const auto edge = g.neighbourhoods(0);
    CHECK(edge.back() == std::vector<std::size_t>{0, 1});
}

TEST_CASE("approach order") {
    const CompactDomain s = CompactDomain::reciprocal_sequence(4);
    CHECK(s.approach_order(4) == std::vector<std::size_t>{0, 1, 2, 3});
    CHECK(s.approach_order(1).empty());

    const CompactDomain g = CompactDomain::uniform_grid(0.0, 1.0, 5);
    const auto a = g.approach_order(0);
    REQUIRE(a.size() == 4);
    CHECK(a.front() == 4);  // farthest first
    CHECK(a.back() == 1);
}

TEST_CASE("domain equality") {
    CHECK(CompactDomain::uniform_grid(0.0, 1.0, 5) == CompactDomain::uniform_grid(0.0, 1.0, 5));
    CHECK(CompactDomain::uniform_grid(0.0, 1.0, 5) != CompactDomain::uniform_grid(0.0, 1.0, 6));
    CHECK(CompactDomain::reciprocal_sequence(3) == CompactDomain::reciprocal_sequence(3));
    CHECK(CompactDomain::reciprocal_sequence(3) != CompactDomain::uniform_grid(0.0, 1.0, 4));
}
