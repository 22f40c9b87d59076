#pragma once

#include <array>
#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace mnesor {

using ElemId = std::int32_t;

/// A violated lattice law together with the witnessing elements.
struct LatticeViolation {
    std::string law;
    std::vector<ElemId> elems;
    std::string detail;
};

/// Finite bounded lattice with enumerable carrier 0..size()-1.
///
/// Immutable after construction and cheap to copy (shared representation).
/// Two kinds exist behind the same interface: explicit join/meet tables,
/// and powerset lattices where the element id is the subset bitmask and
/// join/meet are computed as bit operations. Element identity is per
/// lattice; mixing granulars from different lattices is an error.
class FiniteLattice {
  public:
    std::size_t size() const;
    ElemId join(ElemId a, ElemId b) const;
    ElemId meet(ElemId a, ElemId b) const;
    /// Standard lattice order: a <= b iff join(a, b) == b.
    bool leq(ElemId a, ElemId b) const { return join(a, b) == b; }
    ElemId top_id() const;
    std::optional<ElemId> bottom_id() const;
    std::string label(ElemId id) const;
    std::optional<ElemId> id_of(std::string_view label) const;
    const std::string& descriptor() const;

    /// True for the implicit powerset kind (id = subset bitmask).
    bool is_powerset() const;
    const std::vector<std::string>& atoms() const;  // powerset kind only
    /// Bitmask for a set of atom names; nullopt if any name is unknown.
    std::optional<ElemId> mask_of(const std::vector<std::string>& names) const;

    /// Same lattice: shared representation or structurally identical.
    bool same_as(const FiniteLattice& other) const;

    /// Full table scan of the lattice laws; empty means valid.
    std::vector<LatticeViolation> validate() const;
    /// First triple violating a&(b|c) == (a&b)|(a&c) in scan order, if any.
    std::optional<std::array<ElemId, 3>> distributivity_counterexample() const;
    bool is_distributive() const { return !distributivity_counterexample(); }

    static FiniteLattice from_tables(std::string descriptor,
                                     std::vector<std::string> labels,
                                     std::vector<ElemId> join_table,
                                     std::vector<ElemId> meet_table,
                                     ElemId top,
                                     std::optional<ElemId> bottom);

  private:
    struct Rep;
    explicit FiniteLattice(std::shared_ptr<const Rep> rep) : rep_(std::move(rep)) {}
    std::shared_ptr<const Rep> rep_;

    friend FiniteLattice powerset_lattice(std::vector<std::string> atoms);
};

/// One lattice element, tied to its lattice.
class Granular {
  public:
    Granular(FiniteLattice lattice, ElemId id);
    ElemId id() const { return id_; }
    const FiniteLattice& lattice() const { return lattice_; }
    std::string label() const { return lattice_.label(id_); }
    /// Equal iff same lattice and same id; never throws.
    bool operator==(const Granular& other) const;
    bool operator!=(const Granular& other) const { return !(*this == other); }

  private:
    FiniteLattice lattice_;
    ElemId id_;
};

// Cross-lattice operands raise std::invalid_argument.
Granular join(const Granular& a, const Granular& b);
Granular meet(const Granular& a, const Granular& b);
bool leq(const Granular& a, const Granular& b);

// Builders. Every builder yields a lattice whose validate() is empty.
FiniteLattice powerset_lattice(std::vector<std::string> atoms);
FiniteLattice chain_lattice(int n);
FiniteLattice two_point_lattice();
FiniteLattice product_lattice(const FiniteLattice& a, const FiniteLattice& b);
FiniteLattice diamond_m3();
FiniteLattice pentagon_n5();
/// Lattice from a cover/edge relation lower -> upper over named elements.
/// Throws std::invalid_argument if the result is not a lattice (cycle,
/// missing/ambiguous join or meet, no greatest element).
FiniteLattice from_cover_relation(std::vector<std::string> elements,
                                  std::vector<std::pair<std::string, std::string>> edges);

}  // namespace mnesor
