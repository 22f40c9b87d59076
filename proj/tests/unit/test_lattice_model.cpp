#include "doctest.h"
#include "mnesor/checker.hpp"
#include "mnesor/lattice_model.hpp"

using namespace mnesor;

TEST_CASE("self action: add is join, act is meet, zero is bottom") {
    auto s = make_self_action(chain_lattice(4));
    CHECK(s->descriptor() == "self(chain(4))");
    CHECK(s->render(s->zero()) == "0");
    MnesorSpace::Value one{ElemId{1}}, two{ElemId{2}};
    CHECK(s->render(s->add(one, two)) == "2");
    CHECK(s->render(s->act(two, 1)) == "1");
    CHECK(s->entry_count(one) == 0);
    auto [values, total] = s->enumerate(100);
    CHECK(total);
    CHECK(values.size() == 4);
}

TEST_CASE("self action requires a bottom element") {
    // Table lattice with the bottom deliberately left undeclared: the self
    // action has no zero to offer, so construction must refuse.
    std::vector<ElemId> join = {0, 1, 1, 1};
    std::vector<ElemId> meet = {0, 0, 0, 1};
    FiniteLattice l =
        FiniteLattice::from_tables("bottomless", {"x", "y"}, join, meet, 1, std::nullopt);
    CHECK(l.validate().empty());
    CHECK_FALSE(l.bottom_id().has_value());
    CHECK_THROWS_AS(make_self_action(l), std::invalid_argument);
}

TEST_CASE("self action rejects invalid lattices with a named violation") {
    std::vector<ElemId> join = {1, 1, 1, 1};  // join(0,0)=1 breaks idempotence
    std::vector<ElemId> meet = {0, 0, 0, 1};
    FiniteLattice broken =
        FiniteLattice::from_tables("broken", {"x", "y"}, join, meet, 1, ElemId{0});
    CHECK_THROWS_WITH_AS(make_self_action(broken),
                         doctest::Contains("join-idempotent"), std::invalid_argument);
}

TEST_CASE("distributive self actions satisfy the whole catalog") {
    for (auto make : {+[] { return chain_lattice(4); }, +[] { return powerset_lattice({"a", "b"}); },
                      +[] { return product_lattice(chain_lattice(2), chain_lattice(3)); }}) {
        auto s = make_self_action(make());
        ComplianceReport r = check_all(*s);
        CAPTURE(s->descriptor());
        CHECK(r.all_pass());
        for (const LawResult& lr : r.laws) CHECK(lr.status == LawStatus::Pass);
    }
}

TEST_CASE("M3 breaks action distributivity at the canonical assignment") {
    auto s = make_self_action(diamond_m3());
    LawResult r = check_law(*s, catalog()["A-MDIST"]);
    CHECK(r.status == LawStatus::Fail);
    CHECK(r.instances == 39);
    REQUIRE(r.counterexample.has_value());
    // x=p, y=q, lambda=r: (p|q)&r = r but (p&r)|(q&r) = bot
    CHECK(r.rendered ==
          std::vector<std::pair<std::string, std::string>>{
              {"x", "p"}, {"y", "q"}, {"lambda", "r"}});
}

TEST_CASE("N5 breaks action distributivity at the canonical assignment") {
    auto s = make_self_action(pentagon_n5());
    LawResult r = check_law(*s, catalog()["A-MDIST"]);
    CHECK(r.status == LawStatus::Fail);
    CHECK(r.instances == 39);
    CHECK(r.rendered ==
          std::vector<std::pair<std::string, std::string>>{
              {"x", "a"}, {"y", "b"}, {"lambda", "c"}});
}
