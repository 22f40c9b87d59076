#include "doctest.h"
#include "mnesor/dsl.hpp"
#include "mnesor/lattice_model.hpp"
#include "mnesor/seq_model.hpp"

using namespace mnesor;
namespace d = mnesor::dsl;

namespace {
d::Environment abc_env(const SeqSpace& s) {
    d::Environment env;
    env.space = &s;
    env.granulars["AB"] = 0b011;
    env.granulars["C"] = 0b100;
    return env;
}
}  // namespace

TEST_CASE("parse/print round trips with minimal parentheses") {
    auto roundtrip = [](const std::string& src) {
        auto e = d::parse(src);
        return d::print(*e);
    };
    CHECK(roundtrip("[a b] + [c]") == "[a b] + [c]");
    CHECK(roundtrip("([a] + [b]) + [c]") == "[a] + [b] + [c]");  // left assoc is bare
    CHECK(roundtrip("[a] + ([b] + [c])") == "[a] + ([b] + [c])");
    CHECK(roundtrip("([a] + [b]) * {a}") == "([a] + [b])*{a}");
    CHECK(roundtrip("[a] * {a} * {b}") == "[a]*{a}*{b}");
    CHECK(roundtrip("[a] * ({a} | {b})") == "[a]*({a} | {b})");
    CHECK(roundtrip("[a] * {a} + [b]") == "[a]*{a} + [b]");
    CHECK(roundtrip("[a] * ({a} & {b})") == "[a]*({a} & {b})");
    CHECK(roundtrip("[a] * (({a} | {b}) & top)") == "[a]*(({a} | {b}) & top)");
    CHECK(roundtrip("[a] * ({a} & {b} & {c})") == "[a]*({a} & {b} & {c})");
    CHECK(roundtrip("[a] * ({a} & ({b} & {c}))") == "[a]*({a} & ({b} & {c}))");
    CHECK(roundtrip("[a] * ({c} | ({a} & {b}))") == "[a]*({c} | {a} & {b})");
    CHECK(roundtrip("0 + [a]") == "0 + [a]");
    CHECK(roundtrip("[] * bot") == "[]*bot");
    CHECK(roundtrip("x * EU") == "x*EU");
}

TEST_CASE("printed form reparses to a structurally equal tree") {
    for (const char* src :
         {"[a b c] + ([a] + [b]) + 0", "([x] + y)*(EU | NATO & {a b})",
          "z*top*bot + [q r]*({m} | n)", "0*{a}*{b} + (0 + 0)"}) {
        auto e = d::parse(src);
        auto again = d::parse(d::print(*e));
        CHECK(d::structurally_equal(*e, *again));
    }
}

TEST_CASE("parse errors carry offset, expectations, and the found token") {
    using Catch = d::ParseError;
    auto expect_error = [](const std::string& src, std::size_t offset) {
        try {
            d::parse(src);
            FAIL_CHECK("no error for: " << src);
        } catch (const Catch& e) {
            CHECK(e.offset() == offset);
            CHECK_FALSE(e.expected().empty());
        }
    };
    expect_error("[a b", 4);        // unclosed tuple
    expect_error("[a +", 3);        // operator inside tuple
    expect_error("+ [a]", 0);       // expression cannot start with +
    expect_error("[a] + ", 6);      // dangling operator
    expect_error("[a] * ", 6);      // dangling act
    expect_error("[a] [b]", 4);     // trailing input
    expect_error("[a] * ({x}", 10); // unclosed paren

    try {
        d::parse_statement("x = y = z");  // chained assignment
        FAIL_CHECK("unreachable");
    } catch (const Catch& e) {
        CHECK(e.offset() == 6);
    }

    try {
        d::parse("[a b");
        FAIL_CHECK("unreachable");
    } catch (const Catch& e) {
        std::string msg = e.what();
        CHECK(msg.find("offset 4") != std::string::npos);
        CHECK(msg.find("expected") != std::string::npos);
    }
}

TEST_CASE("unknown characters are rejected at their position") {
    try {
        d::parse("[a] ^ [b]");
        FAIL_CHECK("unreachable");
    } catch (const d::ParseError& e) {
        CHECK(e.offset() == 4);
    }
}

TEST_CASE("evaluation over the seq model") {
    SeqSpace s{Universe({"a", "b", "c"})};
    d::Environment env = abc_env(s);
    auto run = [&](const std::string& src) {
        return s.render(d::eval(*d::parse(src), env));
    };
    CHECK(run("[a b] + [b c]") == "[a b c]");
    CHECK(run("[c a b] * AB") == "[a b]");
    CHECK(run("[c a b] * {a c}") == "[c a]");  // order comes from the tuple
    CHECK(run("[a b c] * (AB | C)") == "[a b c]");
    CHECK(run("[a b c] * (AB & {b c})") == "[b]");
    CHECK(run("[a] * top") == "[a]");
    CHECK(run("[a] * bot") == "[]");
    CHECK(run("0 + [b]") == "[b]");
    CHECK(run("([a] + [b]) * {b}") == "[b]");
}

TEST_CASE("assignments bind and rebind names") {
    SeqSpace s{Universe({"a", "b", "c"})};
    d::Environment env = abc_env(s);
    CHECK(d::exec_statement(d::parse_statement("x = [a b]"), env) == "[a b]");
    CHECK(d::exec_statement(d::parse_statement("y = x * {a}"), env) == "[a]");
    CHECK(d::exec_statement(d::parse_statement("x = x + [c]"), env) == "[a b c]");
    CHECK(s.render(env.mnesors.at("x")) == "[a b c]");
    CHECK(s.render(env.mnesors.at("y")) == "[a]");
}

TEST_CASE("evaluation errors name the offending position and sort") {
    SeqSpace s{Universe({"a", "b", "c"})};
    d::Environment env = abc_env(s);
    auto fails = [&](const std::string& src, const std::string& needle) {
        try {
            d::eval(*d::parse(src), env);
            FAIL_CHECK("no error for: " << src);
        } catch (const d::EvalError& e) {
            std::string msg = e.what();
            CHECK_MESSAGE(msg.find(needle) != std::string::npos, msg);
        }
    };
    fails("unbound + [a]", "unbound");
    fails("[a] * MISSING", "MISSING");
    fails("[a] * (AB | MISSING)", "MISSING");
    fails("[d]", "d");           // atom outside the universe
    fails("[a a]", "repeats");   // repeated atom
    fails("AB + [a]", "granular");  // sort mismatch with a hint

    // Granular name used where a mnesor is needed, and vice versa.
    env.mnesors["m"] = s.tuple_literal({"a"});
    fails("[a] * m", "mnesor");
}

TEST_CASE("scripts execute line by line with comments and blanks") {
    SeqSpace s{Universe({"a", "b", "c"})};
    d::Environment env = abc_env(s);
    std::string script =
        "# build a pair\n"
        "x = [a b]\n"
        "\n"
        "y = x * AB   # keep both\n"
        "y + [c]\n";
    std::vector<std::string> out = d::run_script(script, env);
    CHECK(out == std::vector<std::string>{"[a b]", "[a b]", "[a b c]"});

    try {
        d::run_script("x = [a b]\nz + x\n", env);
        FAIL_CHECK("unreachable");
    } catch (const std::runtime_error& e) {
        CHECK(std::string(e.what()).find("line 2") != std::string::npos);
    }
}

TEST_CASE("self-action model evaluates through the same surface") {
    auto s = make_self_action(chain_lattice(4));
    d::Environment env;
    env.space = s.get();
    for (ElemId i = 0; i < 4; ++i) {
        env.mnesors["c" + std::to_string(i)] = MnesorSpace::Value(i);
        env.granulars["c" + std::to_string(i)] = i;
    }
    auto run = [&](const std::string& src) {
        return s->render(d::eval(*d::parse(src), env));
    };
    CHECK(run("c1 + c2") == "2");   // join
    CHECK(run("c2 * c1") == "1");   // meet
    CHECK(run("c3 * bot") == "0");
    CHECK(run("0 + c2") == "2");

    // Set literals need a powerset lattice.
    try {
        d::eval(*d::parse("c1 * {x}"), env);
        FAIL_CHECK("unreachable");
    } catch (const d::EvalError& e) {
        CHECK(std::string(e.what()).find("powerset") != std::string::npos);
    }
}

TEST_CASE("tuple literals round trip through the space hook") {
    SeqSpace s{Universe({"a", "b", "c"})};
    d::Environment env = abc_env(s);
    CHECK(s.render(d::eval(*d::parse("[]"), env)) == "[]");
    CHECK(s.render(d::eval(*d::parse("[c b a]"), env)) == "[c b a]");
}
