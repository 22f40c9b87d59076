#include "mnesor/structure.hpp"

#include <algorithm>
#include <sstream>

namespace mnesor {

bool Sublattice::contains(ElemId id) const {
    return std::binary_search(members.begin(), members.end(), id);
}

bool Sublattice::closed() const {
    for (ElemId a : members) {
        for (ElemId b : members) {
            if (!contains(parent.join(a, b)) || !contains(parent.meet(a, b))) return false;
        }
    }
    return true;
}

namespace {

Sublattice granulars_where(const MnesorSpace& s, const MnesorSpace::Value& x,
                           const MnesorSpace::Value& target) {
    Sublattice out{s.lattice(), {}};
    const auto n = static_cast<ElemId>(s.lattice().size());
    for (ElemId g = 0; g < n; ++g) {
        if (s.equal(s.act(x, g), target)) out.members.push_back(g);
    }
    return out;
}

}  // namespace

Sublattice stabilizers(const MnesorSpace& s, const MnesorSpace::Value& x) {
    return granulars_where(s, x, x);
}

Sublattice annihilators(const MnesorSpace& s, const MnesorSpace::Value& x) {
    return granulars_where(s, x, s.zero());
}

std::vector<Granular> absorption_witnesses(const MnesorSpace& s, const MnesorSpace::Value& x,
                                           const MnesorSpace::Value& y) {
    std::vector<Granular> out;
    const MnesorSpace::Value sum = s.add(x, y);
    const auto n = static_cast<ElemId>(s.lattice().size());
    for (ElemId g = 0; g < n; ++g) {
        if (s.equal(s.act(sum, g), x)) out.emplace_back(s.lattice(), g);
    }
    return out;
}

HasseResult hasse(const MnesorSpace& s, std::size_t max_elements) {
    HasseResult h;
    auto [elems, total] = s.enumerate(max_elements);
    (void)total;
    h.elements = std::move(elems);
    h.rendered.reserve(h.elements.size());
    for (const auto& e : h.elements) h.rendered.push_back(s.render(e));

    const std::size_t n = h.elements.size();
    // leq[i][j] : element i is a prefix of element j.
    std::vector<std::vector<bool>> le(n, std::vector<bool>(n, false));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            le[i][j] = prefix_leq(s, h.elements[i], h.elements[j]);

    // The order axioms are model facts, not assumptions; verify them first.
    for (std::size_t i = 0; i < n; ++i) {
        if (!le[i][i]) {
            h.diagnostic = "prefix order not reflexive at " + h.rendered[i];
            return h;
        }
    }
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            if (i != j && le[i][j] && le[j][i]) {
                h.diagnostic = "prefix order not antisymmetric: " + h.rendered[i] + " and " +
                               h.rendered[j] + " are mutual prefixes";
                return h;
            }
        }
    }
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            if (le[i][j])
                for (std::size_t k = 0; k < n; ++k)
                    if (le[j][k] && !le[i][k]) {
                        h.diagnostic = "prefix order not transitive through " + h.rendered[i] +
                                       " <= " + h.rendered[j] + " <= " + h.rendered[k];
                        return h;
                    }

    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            if (i == j || !le[i][j]) continue;
            bool covering = true;
            for (std::size_t k = 0; k < n; ++k) {
                if (k == i || k == j) continue;
                if (le[i][k] && le[k][j]) {
                    covering = false;
                    break;
                }
            }
            if (covering) h.edges.emplace_back(i, j);
        }
    }
    h.ok = true;
    return h;
}

namespace {

std::string dot_escape(const std::string& s) {
    std::string out;
    for (char c : s) {
        if (c == '"' || c == '\\') out += '\\';
        out += c;
    }
    return out;
}

}  // namespace

std::string hasse_dot(const HasseResult& h) {
    std::ostringstream os;
    os << "digraph hasse {\n  rankdir=BT;\n";
    for (std::size_t i = 0; i < h.rendered.size(); ++i)
        os << "  n" << i << " [label=\"" << dot_escape(h.rendered[i]) << "\"];\n";
    for (const auto& [lo, hi] : h.edges) os << "  n" << lo << " -> n" << hi << ";\n";
    os << "}\n";
    return os.str();
}

}  // namespace mnesor
