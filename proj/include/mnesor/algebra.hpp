#pragma once

#include <any>
#include <cstddef>
#include <memory>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "mnesor/lattice.hpp"

namespace mnesor {

/// A mnesor space: idempotent non-commutative monoid (M, +, 0) acted on
/// by the granulars of a finite bounded lattice.
///
/// Carrier elements are passed as type-erased values; each concrete model
/// owns its representation and its equality. All operations are pure and
/// values are immutable, so spaces are safe to share across threads.
class MnesorSpace {
  public:
    using Value = std::any;

    virtual ~MnesorSpace() = default;

    virtual const std::string& descriptor() const = 0;
    virtual const FiniteLattice& lattice() const = 0;

    virtual Value zero() const = 0;
    virtual Value add(const Value& x, const Value& y) const = 0;
    /// Granular action x·g with g an element id of lattice().
    virtual Value act(const Value& x, ElemId g) const = 0;
    virtual bool equal(const Value& x, const Value& y) const = 0;

    /// Size weight used for counterexample minimality (entries of a tuple;
    /// 0 for models whose elements have no tuple structure).
    virtual std::size_t entry_count(const Value& x) const = 0;
    virtual std::string render(const Value& x) const = 0;

    /// Carrier prefix in the model's documented enumeration order, capped
    /// at max_elements. The flag is true when the whole carrier fit.
    virtual std::pair<std::vector<Value>, bool> enumerate(std::size_t max_elements) const = 0;

    /// Value of a tuple literal [n1 n2 ...]; models without tuple structure
    /// throw std::invalid_argument.
    virtual Value tuple_literal(const std::vector<std::string>& names) const;
};

/// Action by a Granular value; throws std::invalid_argument when g belongs
/// to a different lattice than the space.
MnesorSpace::Value act(const MnesorSpace& s, const MnesorSpace::Value& x, const Granular& g);

/// The prefix order x <= y, defined by x + y = y.
bool prefix_leq(const MnesorSpace& s, const MnesorSpace::Value& x, const MnesorSpace::Value& y);

/// Mutual suffixes: x + y = x and y + x = y.
bool is_anagram(const MnesorSpace& s, const MnesorSpace::Value& x, const MnesorSpace::Value& y);

// ---------------------------------------------------------------------------
// Laws as data. Terms are two-sorted trees over the space and lattice
// signature; the checker interprets them against any model.

struct GTerm;
using GTermPtr = std::shared_ptr<const GTerm>;

/// Granular-sorted term: variable, top, bot, join, meet.
struct GTerm {
    enum class Kind { Var, Top, Bot, Join, Meet };
    Kind kind;
    int var = -1;  // Var: index into the law's granular variables
    GTermPtr a, b;  // Join/Meet operands
};

struct MTerm;
using MTermPtr = std::shared_ptr<const MTerm>;

/// Mnesor-sorted term: variable, zero, sum, granular action.
struct MTerm {
    enum class Kind { Var, Zero, Add, Act };
    Kind kind;
    int var = -1;   // Var: index into the law's mnesor variables
    MTermPtr x, y;  // Add: both; Act: x only
    GTermPtr g;     // Act only
};

/// One equation; exactly one sort is populated.
struct Equation {
    MTermPtr mlhs, mrhs;
    GTermPtr glhs, grhs;
    bool is_granular() const { return static_cast<bool>(glhs); }
};

/// Quantifier wrapping a block of equations. A bound variable's index is
/// one past the law's free variables of its sort.
enum class Quant { None, ExistsMnesor, ExistsGranular, ForallGranular };

struct QuantBlock {
    Quant quant = Quant::None;
    std::string bound_name;  // empty when quant == None
    std::vector<Equation> eqs;
    bool empty() const { return eqs.empty(); }
};

enum class Tier { Axiom, Theorem };

/// One axiom or theorem. An empty hypothesis makes the law a plain
/// (conjunction of) equation(s); otherwise hypothesis ⇒ conclusion.
struct Law {
    std::string name;
    Tier tier;
    std::string summary;  // rendered statement, expression syntax
    std::vector<std::string> mnesor_vars;
    std::vector<std::string> granular_vars;
    bool uses_bottom = false;  // skipped on lattices without a bottom
    QuantBlock hypothesis;
    QuantBlock conclusion;
};

/// The pinned, ordered law list. Immutable process-wide singleton.
class LawCatalog {
  public:
    explicit LawCatalog(std::vector<Law> laws);
    const std::vector<Law>& laws() const { return laws_; }
    std::size_t count() const { return laws_.size(); }
    const Law* find(std::string_view name) const;
    /// Throws std::invalid_argument for unknown names.
    const Law& operator[](std::string_view name) const;

  private:
    std::vector<Law> laws_;
};

const LawCatalog& catalog();

// Renderers (expression syntax: + * | &, literals 0/top/bot).
std::string render(const MTerm& t, const Law& law);
std::string render(const GTerm& t, const Law& law);
std::string render(const Equation& eq, const Law& law);
std::string render_statement(const Law& law);

/// Whole catalog as a JSON document (names, tiers, variables, term trees).
std::string catalog_json();

}  // namespace mnesor
