#include "mnesor/lattice_model.hpp"

#include <algorithm>
#include <stdexcept>

namespace mnesor {

SelfActionSpace::SelfActionSpace(FiniteLattice lattice)
    : lattice_(std::move(lattice)), descriptor_("self(" + lattice_.descriptor() + ")") {
    if (!lattice_.bottom_id())
        throw std::invalid_argument("self-action model needs a bottom element as zero (lattice " +
                                    lattice_.descriptor() + " has none)");
}

MnesorSpace::Value SelfActionSpace::zero() const { return *lattice_.bottom_id(); }

MnesorSpace::Value SelfActionSpace::add(const Value& x, const Value& y) const {
    return lattice_.join(std::any_cast<ElemId>(x), std::any_cast<ElemId>(y));
}

MnesorSpace::Value SelfActionSpace::act(const Value& x, ElemId g) const {
    return lattice_.meet(std::any_cast<ElemId>(x), g);
}

bool SelfActionSpace::equal(const Value& x, const Value& y) const {
    return std::any_cast<ElemId>(x) == std::any_cast<ElemId>(y);
}

std::size_t SelfActionSpace::entry_count(const Value&) const { return 0; }

std::string SelfActionSpace::render(const Value& x) const {
    return lattice_.label(std::any_cast<ElemId>(x));
}

std::pair<std::vector<MnesorSpace::Value>, bool> SelfActionSpace::enumerate(
    std::size_t max_elements) const {
    std::vector<Value> out;
    const std::size_t n = lattice_.size();
    const std::size_t take = std::min(n, max_elements);
    out.reserve(take);
    for (std::size_t i = 0; i < take; ++i) out.emplace_back(static_cast<ElemId>(i));
    return {std::move(out), take == n};
}

std::unique_ptr<SelfActionSpace> make_self_action(FiniteLattice l) {
    auto violations = l.validate();
    if (!violations.empty()) {
        throw std::invalid_argument("self-action model over invalid lattice " + l.descriptor() +
                                    ": " + violations.front().law + " fails (" +
                                    violations.front().detail + ")");
    }
    return std::make_unique<SelfActionSpace>(std::move(l));
}

}  // namespace mnesor
