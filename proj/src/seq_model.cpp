#include "mnesor/seq_model.hpp"

#include <fstream>
#include <map>
#include <stdexcept>

#include "json.hpp"

namespace mnesor {

struct Universe::Rep {
    std::vector<std::string> atoms;
    std::map<std::string, int, std::less<>> index;
};

Universe::Universe(std::vector<std::string> atoms) {
    auto rep = std::make_shared<Rep>();
    for (std::size_t i = 0; i < atoms.size(); ++i) {
        if (atoms[i].empty()) throw std::invalid_argument("universe atom names must be nonempty");
        if (!rep->index.emplace(atoms[i], static_cast<int>(i)).second)
            throw std::invalid_argument("duplicate universe atom: " + atoms[i]);
    }
    rep->atoms = std::move(atoms);
    rep_ = std::move(rep);
}

std::size_t Universe::size() const { return rep_->atoms.size(); }

const std::vector<std::string>& Universe::atoms() const { return rep_->atoms; }

const std::string& Universe::atom(int id) const {
    if (id < 0 || static_cast<std::size_t>(id) >= rep_->atoms.size())
        throw std::invalid_argument("atom id " + std::to_string(id) + " out of universe");
    return rep_->atoms[static_cast<std::size_t>(id)];
}

std::optional<int> Universe::id_of(std::string_view name) const {
    auto it = rep_->index.find(name);
    if (it == rep_->index.end()) return std::nullopt;
    return it->second;
}

bool Universe::same_as(const Universe& other) const {
    return rep_ == other.rep_ || rep_->atoms == other.rep_->atoms;
}

SeqMnesor::SeqMnesor(Universe universe, std::vector<int> entries)
    : universe_(std::move(universe)), entries_(std::move(entries)) {
    std::uint64_t seen = 0;
    if (universe_.size() > 64) throw std::invalid_argument("universe larger than 64 atoms");
    for (int e : entries_) {
        if (e < 0 || static_cast<std::size_t>(e) >= universe_.size())
            throw std::invalid_argument("tuple entry " + std::to_string(e) + " out of universe");
        if (seen >> e & 1)
            throw std::invalid_argument("tuple repeats atom " + universe_.atom(e));
        seen |= std::uint64_t{1} << e;
    }
}

SeqMnesor SeqMnesor::from_names(const Universe& u, const std::vector<std::string>& names) {
    std::vector<int> entries;
    entries.reserve(names.size());
    for (const auto& n : names) {
        auto id = u.id_of(n);
        if (!id) throw std::invalid_argument("unknown atom: " + n);
        entries.push_back(*id);
    }
    return SeqMnesor(u, std::move(entries));
}

bool SeqMnesor::operator==(const SeqMnesor& other) const {
    return entries_ == other.entries_ && universe_.same_as(other.universe_);
}

std::string SeqMnesor::render() const {
    std::string out = "[";
    for (std::size_t i = 0; i < entries_.size(); ++i) {
        if (i) out += ' ';
        out += universe_.atom(entries_[i]);
    }
    out += ']';
    return out;
}

namespace {

void require_same_universe(const char* op, const SeqMnesor& x, const SeqMnesor& y) {
    if (!x.universe().same_as(y.universe()))
        throw std::invalid_argument(std::string(op) + ": operands from different universes");
}

}  // namespace

SeqMnesor add(const SeqMnesor& x, const SeqMnesor& y) {
    require_same_universe("add", x, y);
    std::vector<int> out = x.entries();
    std::uint64_t seen = 0;
    for (int e : out) seen |= std::uint64_t{1} << e;
    for (int e : y.entries()) {
        if (!(seen >> e & 1)) {
            out.push_back(e);
            seen |= std::uint64_t{1} << e;
        }
    }
    return SeqMnesor(x.universe(), std::move(out));
}

SeqMnesor act(const SeqMnesor& x, const Granular& g) {
    const FiniteLattice& l = g.lattice();
    if (!l.is_powerset() || l.atoms() != x.universe().atoms())
        throw std::invalid_argument("act: granular is not a subset of the tuple's universe");
    std::vector<int> out;
    for (int e : x.entries())
        if (g.id() >> e & 1) out.push_back(e);
    return SeqMnesor(x.universe(), std::move(out));
}

ElemId support_mask(const SeqMnesor& x) {
    ElemId mask = 0;
    for (int e : x.entries()) mask |= ElemId{1} << e;
    return mask;
}

namespace {

// Emits duplicate-free tuples of one length in lexicographic order.
// Returns false when the cap was hit before finishing.
bool emit_perms(const Universe& u, std::size_t len, std::vector<int>& prefix,
                std::uint64_t used, std::vector<SeqMnesor>& out, std::size_t cap) {
    if (prefix.size() == len) {
        if (out.size() >= cap) return false;
        out.emplace_back(u, prefix);
        return true;
    }
    for (int a = 0; a < static_cast<int>(u.size()); ++a) {
        if (used >> a & 1) continue;
        prefix.push_back(a);
        bool ok = emit_perms(u, len, prefix, used | (std::uint64_t{1} << a), out, cap);
        prefix.pop_back();
        if (!ok) return false;
    }
    return true;
}

std::pair<std::vector<SeqMnesor>, bool> enumerate_capped(const Universe& u, std::size_t max_len,
                                                         std::size_t cap) {
    std::vector<SeqMnesor> out;
    std::vector<int> prefix;
    for (std::size_t len = 0; len <= max_len; ++len) {
        if (!emit_perms(u, len, prefix, 0, out, cap)) return {std::move(out), false};
    }
    return {std::move(out), true};
}

}  // namespace

std::vector<SeqMnesor> enumerate_tuples(const Universe& u, std::size_t max_len) {
    if (max_len > u.size())
        throw std::invalid_argument("enumeration length exceeds universe size");
    auto [tuples, total] = enumerate_capped(u, max_len, static_cast<std::size_t>(-1));
    (void)total;
    return tuples;
}

SeqSpace::SeqSpace(Universe universe)
    : universe_(std::move(universe)),
      lattice_(powerset_lattice(universe_.atoms())),
      descriptor_("seq(|U|=" + std::to_string(universe_.size()) + ")") {}

SeqMnesor SeqSpace::value(const std::vector<std::string>& names) const {
    return SeqMnesor::from_names(universe_, names);
}

Granular SeqSpace::support(const SeqMnesor& x) const {
    return Granular(lattice_, support_mask(x));
}

MnesorSpace::Value SeqSpace::zero() const { return SeqMnesor(universe_, {}); }

MnesorSpace::Value SeqSpace::add(const Value& x, const Value& y) const {
    return mnesor::add(std::any_cast<const SeqMnesor&>(x), std::any_cast<const SeqMnesor&>(y));
}

MnesorSpace::Value SeqSpace::act(const Value& x, ElemId g) const {
    return mnesor::act(std::any_cast<const SeqMnesor&>(x), Granular(lattice_, g));
}

bool SeqSpace::equal(const Value& x, const Value& y) const {
    return std::any_cast<const SeqMnesor&>(x) == std::any_cast<const SeqMnesor&>(y);
}

std::size_t SeqSpace::entry_count(const Value& x) const {
    return std::any_cast<const SeqMnesor&>(x).size();
}

std::string SeqSpace::render(const Value& x) const {
    return std::any_cast<const SeqMnesor&>(x).render();
}

std::pair<std::vector<MnesorSpace::Value>, bool> SeqSpace::enumerate(
    std::size_t max_elements) const {
    auto [tuples, total] = enumerate_capped(universe_, universe_.size(), max_elements);
    std::vector<Value> out;
    out.reserve(tuples.size());
    for (auto& t : tuples) out.emplace_back(std::move(t));
    return {std::move(out), total};
}

MnesorSpace::Value SeqSpace::tuple_literal(const std::vector<std::string>& names) const {
    return value(names);
}

std::optional<ElemId> SeqFixture::granular_named(std::string_view name) const {
    for (const auto& [n, mask] : granulars)
        if (n == name) return mask;
    return std::nullopt;
}

SeqFixture load_seq_fixture(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("cannot open fixture file: " + path);
    nlohmann::ordered_json doc;  // granulars keep file order
    try {
        in >> doc;
    } catch (const nlohmann::json::exception& e) {
        throw std::invalid_argument("fixture " + path + " is not valid JSON: " + e.what());
    }
    if (!doc.is_object() || !doc.contains("universe") || !doc["universe"].is_array())
        throw std::invalid_argument("fixture " + path + ": expected {\"universe\": [names...]}");
    std::vector<std::string> atoms;
    for (const auto& a : doc["universe"]) {
        if (!a.is_string())
            throw std::invalid_argument("fixture " + path + ": universe entries must be strings");
        atoms.push_back(a.get<std::string>());
    }
    if (atoms.size() > 24)
        throw std::invalid_argument("fixture " + path + ": universe limited to 24 atoms");
    Universe u(std::move(atoms));
    std::vector<std::pair<std::string, ElemId>> granulars;
    if (doc.contains("granulars")) {
        if (!doc["granulars"].is_object())
            throw std::invalid_argument("fixture " + path + ": granulars must be an object");
        for (const auto& [name, members] : doc["granulars"].items()) {
            if (!members.is_array())
                throw std::invalid_argument("fixture " + path + ": granular " + name +
                                            " must be an array of atom names");
            ElemId mask = 0;
            for (const auto& m : members) {
                std::optional<int> id;
                if (m.is_string()) id = u.id_of(m.get<std::string>());
                if (!id)
                    throw std::invalid_argument("fixture " + path + ": granular " + name +
                                                " references an unknown atom");
                mask |= ElemId{1} << *id;
            }
            granulars.emplace_back(name, mask);
        }
    }
    return SeqFixture{std::move(u), std::move(granulars)};
}

}  // namespace mnesor
