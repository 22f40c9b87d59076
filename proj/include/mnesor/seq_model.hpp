#pragma once

#include <cstddef>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "mnesor/algebra.hpp"

namespace mnesor {

/// Ordered universe of distinct atom names; shared and immutable.
class Universe {
  public:
    explicit Universe(std::vector<std::string> atoms);
    std::size_t size() const;
    const std::vector<std::string>& atoms() const;
    const std::string& atom(int id) const;
    std::optional<int> id_of(std::string_view name) const;
    /// Same universe: shared representation or identical atom list.
    bool same_as(const Universe& other) const;

  private:
    struct Rep;
    std::shared_ptr<const Rep> rep_;
};

/// Duplicate-free ordered tuple of universe atoms. Order carries meaning;
/// no atom appears twice. The empty tuple is the additive zero.
class SeqMnesor {
  public:
    SeqMnesor(Universe universe, std::vector<int> entries);
    static SeqMnesor from_names(const Universe& u, const std::vector<std::string>& names);

    const Universe& universe() const { return universe_; }
    const std::vector<int>& entries() const { return entries_; }
    std::size_t size() const { return entries_.size(); }

    /// Equal iff same universe and entrywise equal.
    bool operator==(const SeqMnesor& other) const;
    bool operator!=(const SeqMnesor& other) const { return !(*this == other); }
    std::string render() const;  // "[a b]", "[]"

  private:
    Universe universe_;
    std::vector<int> entries_;
};

/// Concatenate then keep the first occurrence of each atom (left priority).
SeqMnesor add(const SeqMnesor& x, const SeqMnesor& y);
/// Keep exactly the entries in the subset, preserving order. The granular
/// must come from the powerset lattice over the same universe.
SeqMnesor act(const SeqMnesor& x, const Granular& g);
/// Set of atoms occurring in x, as a subset bitmask.
ElemId support_mask(const SeqMnesor& x);

/// Every duplicate-free tuple of length <= max_len, by length then
/// lexicographic by atom id. Requires max_len <= |universe|.
std::vector<SeqMnesor> enumerate_tuples(const Universe& u, std::size_t max_len);

/// The column-tuple model over a universe; granulars are the powerset.
class SeqSpace final : public MnesorSpace {
  public:
    explicit SeqSpace(Universe universe);

    const Universe& universe() const { return universe_; }
    /// Tuple from atom names; unknown or repeated names are errors.
    SeqMnesor value(const std::vector<std::string>& names) const;
    /// Canonical absorption witness: act(add(x, y), support(x)) == x.
    Granular support(const SeqMnesor& x) const;

    const std::string& descriptor() const override { return descriptor_; }
    const FiniteLattice& lattice() const override { return lattice_; }
    Value zero() const override;
    Value add(const Value& x, const Value& y) const override;
    Value act(const Value& x, ElemId g) const override;
    bool equal(const Value& x, const Value& y) const override;
    std::size_t entry_count(const Value& x) const override;
    std::string render(const Value& x) const override;
    std::pair<std::vector<Value>, bool> enumerate(std::size_t max_elements) const override;
    Value tuple_literal(const std::vector<std::string>& names) const override;

  private:
    Universe universe_;
    FiniteLattice lattice_;
    std::string descriptor_;
};

/// A universe plus named granulars, as loaded from a fixture file:
/// { "universe": [names...], "granulars": { "NAME": [names...], ... } }.
struct SeqFixture {
    Universe universe;
    std::vector<std::pair<std::string, ElemId>> granulars;  // file order

    std::optional<ElemId> granular_named(std::string_view name) const;
};

SeqFixture load_seq_fixture(const std::string& path);

}  // namespace mnesor
