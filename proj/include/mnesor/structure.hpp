#pragma once

#include <string>
#include <utility>
#include <vector>

#include "mnesor/algebra.hpp"

namespace mnesor {

/// Member set of a parent lattice, ids ascending. Closure under the parent
/// operations is a checkable property, not an assumed invariant.
struct Sublattice {
    FiniteLattice parent;
    std::vector<ElemId> members;

    bool contains(ElemId id) const;
    /// Direct pair scan: members closed under parent join and meet.
    bool closed() const;
};

/// All granulars fixing x: { lambda : act(x, lambda) = x }. Contains top.
Sublattice stabilizers(const MnesorSpace& s, const MnesorSpace::Value& x);

/// All granulars sending x to zero: { lambda : act(x, lambda) = 0 }.
Sublattice annihilators(const MnesorSpace& s, const MnesorSpace::Value& x);

/// All alpha with act(add(x, y), alpha) = x, in lattice id order.
std::vector<Granular> absorption_witnesses(const MnesorSpace& s, const MnesorSpace::Value& x,
                                           const MnesorSpace::Value& y);

/// Covering relation of the prefix order over the enumerated carrier.
/// When the order axioms fail on the carrier (possible in hypothetical
/// models), ok is false and diagnostic names the offending elements.
struct HasseResult {
    bool ok = false;
    std::string diagnostic;
    std::vector<MnesorSpace::Value> elements;  // enumeration order
    std::vector<std::string> rendered;
    std::vector<std::pair<std::size_t, std::size_t>> edges;  // lower -> upper, index pairs
};

HasseResult hasse(const MnesorSpace& s, std::size_t max_elements);

/// Deterministic DOT rendering, one node per element, edges bottom-to-top.
std::string hasse_dot(const HasseResult& h);

}  // namespace mnesor
