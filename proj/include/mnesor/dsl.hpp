#pragma once

#include <map>
#include <memory>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "mnesor/algebra.hpp"

namespace mnesor::dsl {

/// Two-sorted expression tree. The parser decides sorts from position:
/// the left of `*` and the operands of `+` are mnesor-sorted, the right
/// of `*` and the operands of `|`/`&` are granular-sorted.
struct Expr;
using ExprPtr = std::shared_ptr<const Expr>;

struct Expr {
    enum class Kind {
        // mnesor sort
        Tuple,  // [a b c]
        Zero,   // 0
        MName,
        Add,  // a + b
        Act,  // a * g
        // granular sort
        Set,  // {a b}
        Top,
        Bot,
        GName,
        Join,  // g | h
        Meet,  // g & h
    };
    Kind kind;
    std::size_t offset = 0;          // byte offset in the source text
    std::vector<std::string> names;  // Tuple / Set
    std::string name;                // MName / GName
    ExprPtr a, b;                    // operands (b is the granular of Act)
};

/// Structural equality, offsets ignored.
bool structurally_equal(const Expr& x, const Expr& y);

/// Positioned syntax error with the set of tokens that were acceptable.
class ParseError : public std::runtime_error {
  public:
    ParseError(std::size_t offset, std::vector<std::string> expected, const std::string& found);
    std::size_t offset() const { return offset_; }
    const std::vector<std::string>& expected() const { return expected_; }

  private:
    std::size_t offset_;
    std::vector<std::string> expected_;
};

/// Positioned evaluation error (unbound name, sort mismatch, missing bot).
class EvalError : public std::runtime_error {
  public:
    EvalError(std::size_t offset, const std::string& msg);
    std::size_t offset() const { return offset_; }

  private:
    std::size_t offset_;
};

/// Parses a full mnesor-sorted expression; input must be consumed entirely.
ExprPtr parse(std::string_view src);

/// statement := [ name "=" ] expr ; target is empty without assignment.
struct Statement {
    std::string target;
    ExprPtr expr;
};
Statement parse_statement(std::string_view src);

/// Canonical rendering with minimal parentheses: parse(print(e)) is
/// structurally equal to e.
std::string print(const Expr& e);

/// Name bindings over a backing model. The two sorts are disjoint
/// namespaces; granulars usually come from a fixture.
struct Environment {
    const MnesorSpace* space = nullptr;
    std::map<std::string, MnesorSpace::Value> mnesors;
    std::map<std::string, ElemId> granulars;
};

MnesorSpace::Value eval(const Expr& e, const Environment& env);
ElemId eval_granular(const Expr& e, const Environment& env);

/// Evaluates one statement, records an assignment into env, and returns
/// the rendered value.
std::string exec_statement(const Statement& st, Environment& env);

/// One statement per line; '#' starts a comment; blank lines are skipped.
/// Returns one rendered value per executed statement. Errors are rethrown
/// as std::runtime_error prefixed with the 1-based line number.
std::vector<std::string> run_script(const std::string& text, Environment& env);

}  // namespace mnesor::dsl
