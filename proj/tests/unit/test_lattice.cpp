#include <algorithm>

#include "doctest.h"
#include "mnesor/lattice.hpp"

using namespace mnesor;

TEST_CASE("powerset lattice: structure and bit-level operations") {
    FiniteLattice l = powerset_lattice({"a", "b", "c"});
    CHECK(l.size() == 8);
    CHECK(l.is_powerset());
    CHECK(l.top_id() == 7);
    REQUIRE(l.bottom_id().has_value());
    CHECK(*l.bottom_id() == 0);
    CHECK(l.join(0b011, 0b101) == 0b111);
    CHECK(l.meet(0b011, 0b101) == 0b001);
    CHECK(l.leq(0b001, 0b011));
    CHECK_FALSE(l.leq(0b011, 0b001));
    CHECK(l.label(0) == "{}");
    CHECK(l.label(0b101) == "{a c}");
    CHECK(l.label(7) == "{a b c}");
    CHECK(l.id_of("{a c}") == 0b101);
    CHECK(l.validate().empty());
    CHECK(l.is_distributive());
}

TEST_CASE("chain lattice: total order semantics") {
    FiniteLattice l = chain_lattice(4);
    CHECK(l.size() == 4);
    CHECK(l.top_id() == 3);
    CHECK(*l.bottom_id() == 0);
    CHECK(l.join(1, 2) == 2);
    CHECK(l.meet(1, 2) == 1);
    CHECK(l.validate().empty());
    CHECK(l.is_distributive());
}

TEST_CASE("M3 and N5 fail distributivity at a canonical triple") {
    FiniteLattice m3 = diamond_m3();
    CHECK(m3.validate().empty());
    CHECK_FALSE(m3.is_distributive());
    auto t3 = m3.distributivity_counterexample();
    REQUIRE(t3.has_value());
    CHECK(*t3 == std::array<ElemId, 3>{1, 2, 3});  // p, q, r

    FiniteLattice n5 = pentagon_n5();
    CHECK(n5.validate().empty());
    CHECK_FALSE(n5.is_distributive());
    CHECK(n5.leq(1, 3));        // a <= c is the pentagon's extra relation
    CHECK_FALSE(n5.leq(3, 1));
}

TEST_CASE("product lattice composes componentwise") {
    FiniteLattice l = product_lattice(chain_lattice(2), chain_lattice(3));
    CHECK(l.size() == 6);
    CHECK(l.validate().empty());
    CHECK(l.is_distributive());
    // top = (1,2), bottom = (0,0)
    CHECK(l.label(l.top_id()) == "(1,2)");
    REQUIRE(l.bottom_id().has_value());
    CHECK(l.label(*l.bottom_id()) == "(0,0)");
}

TEST_CASE("from_cover_relation recovers the diamond") {
    FiniteLattice l = from_cover_relation(
        {"bot", "p", "q", "r", "top"},
        {{"bot", "p"}, {"bot", "q"}, {"bot", "r"}, {"p", "top"}, {"q", "top"}, {"r", "top"}});
    CHECK(l.size() == 5);
    CHECK(l.validate().empty());
    CHECK(l.same_as(l));
    FiniteLattice m3 = diamond_m3();
    for (ElemId a = 0; a < 5; ++a)
        for (ElemId b = 0; b < 5; ++b) {
            CHECK(l.label(l.join(a, b)) == m3.label(m3.join(a, b)));
            CHECK(l.label(l.meet(a, b)) == m3.label(m3.meet(a, b)));
        }
}

TEST_CASE("from_cover_relation rejects a poset without unique joins") {
    // Two maximal elements: join of the two atoms does not exist.
    CHECK_THROWS_AS(from_cover_relation({"x", "y"}, {}), std::invalid_argument);
    // Cycle.
    CHECK_THROWS_AS(from_cover_relation({"x", "y"}, {{"x", "y"}, {"y", "x"}}),
                    std::invalid_argument);
}

TEST_CASE("validate reports broken tables") {
    // join table that is not idempotent: join(0,0)=1
    std::vector<ElemId> join = {1, 1, 1, 1};
    std::vector<ElemId> meet = {0, 0, 0, 1};
    FiniteLattice l = FiniteLattice::from_tables("broken", {"x", "y"}, join, meet, 1, ElemId{0});
    auto v = l.validate();
    REQUIRE_FALSE(v.empty());
    CHECK(v.front().law == "join-idempotent");
}

TEST_CASE("granular wrappers enforce matching lattices") {
    FiniteLattice a = chain_lattice(3);
    FiniteLattice b = chain_lattice(4);
    Granular ga(a, 1), gb(b, 1);
    CHECK_FALSE(ga == gb);  // different lattices never compare equal
    CHECK_THROWS_AS(join(ga, gb), std::invalid_argument);
    // Structurally identical lattices interoperate even when built twice.
    FiniteLattice a2 = chain_lattice(3);
    CHECK(a.same_as(a2));
    CHECK(Granular(a, 1) == Granular(a2, 1));
    Granular ga2(a, 2);
    CHECK(join(ga, ga2).id() == 2);
    CHECK(meet(ga, ga2).id() == 1);
    CHECK(leq(ga, ga2));
}

TEST_CASE("two_point_lattice is the 2-chain") {
    FiniteLattice l = two_point_lattice();
    CHECK(l.size() == 2);
    CHECK(l.label(0) == "0");
    CHECK(l.label(1) == "1");
    CHECK(l.validate().empty());
}
