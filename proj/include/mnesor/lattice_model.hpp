#pragma once

#include <memory>

#include "mnesor/algebra.hpp"

namespace mnesor {

/// Reference model: the lattice acting on itself. Carrier = lattice
/// elements, addition = join, action = meet, zero = bottom. Addition is
/// commutative here — a fact of this model, not of the theory.
class SelfActionSpace final : public MnesorSpace {
  public:
    explicit SelfActionSpace(FiniteLattice lattice);

    const std::string& descriptor() const override { return descriptor_; }
    const FiniteLattice& lattice() const override { return lattice_; }
    Value zero() const override;
    Value add(const Value& x, const Value& y) const override;
    Value act(const Value& x, ElemId g) const override;
    bool equal(const Value& x, const Value& y) const override;
    std::size_t entry_count(const Value& x) const override;
    std::string render(const Value& x) const override;
    std::pair<std::vector<Value>, bool> enumerate(std::size_t max_elements) const override;

  private:
    FiniteLattice lattice_;
    std::string descriptor_;
};

/// Validates the lattice and requires a bottom (the additive zero).
/// Throws std::invalid_argument otherwise.
std::unique_ptr<SelfActionSpace> make_self_action(FiniteLattice l);

}  // namespace mnesor
