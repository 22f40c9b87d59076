#include "mnesor/lattice.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>
#include <stdexcept>

namespace mnesor {

struct FiniteLattice::Rep {
    std::string descriptor;
    bool powerset = false;
    std::vector<std::string> atoms;   // powerset kind
    std::vector<std::string> labels;  // table kind
    std::vector<ElemId> join_tab;     // table kind, row-major n*n
    std::vector<ElemId> meet_tab;
    std::size_t n = 0;
    ElemId top = -1;
    std::optional<ElemId> bottom;
};

namespace {

void require_id(const char* what, ElemId id, std::size_t n) {
    if (id < 0 || static_cast<std::size_t>(id) >= n) {
        std::ostringstream os;
        os << what << " id " << id << " out of range (lattice size " << n << ")";
        throw std::invalid_argument(os.str());
    }
}

std::string mask_label(const std::vector<std::string>& atoms, ElemId mask) {
    std::string out = "{";
    bool first = true;
    for (std::size_t i = 0; i < atoms.size(); ++i) {
        if (mask >> i & 1) {
            if (!first) out += ' ';
            out += atoms[i];
            first = false;
        }
    }
    out += '}';
    return out;
}

}  // namespace

std::size_t FiniteLattice::size() const { return rep_->n; }

ElemId FiniteLattice::join(ElemId a, ElemId b) const {
    require_id("join operand", a, rep_->n);
    require_id("join operand", b, rep_->n);
    if (rep_->powerset) return a | b;
    return rep_->join_tab[static_cast<std::size_t>(a) * rep_->n + b];
}

ElemId FiniteLattice::meet(ElemId a, ElemId b) const {
    require_id("meet operand", a, rep_->n);
    require_id("meet operand", b, rep_->n);
    if (rep_->powerset) return a & b;
    return rep_->meet_tab[static_cast<std::size_t>(a) * rep_->n + b];
}

ElemId FiniteLattice::top_id() const { return rep_->top; }

std::optional<ElemId> FiniteLattice::bottom_id() const { return rep_->bottom; }

std::string FiniteLattice::label(ElemId id) const {
    require_id("label", id, rep_->n);
    if (rep_->powerset) return mask_label(rep_->atoms, id);
    return rep_->labels[static_cast<std::size_t>(id)];
}

std::optional<ElemId> FiniteLattice::id_of(std::string_view label) const {
    for (std::size_t i = 0; i < rep_->n; ++i) {
        if (this->label(static_cast<ElemId>(i)) == label) return static_cast<ElemId>(i);
    }
    return std::nullopt;
}

const std::string& FiniteLattice::descriptor() const { return rep_->descriptor; }

bool FiniteLattice::is_powerset() const { return rep_->powerset; }

const std::vector<std::string>& FiniteLattice::atoms() const {
    if (!rep_->powerset) {
        throw std::invalid_argument("atoms(): lattice " + rep_->descriptor + " is not a powerset");
    }
    return rep_->atoms;
}

std::optional<ElemId> FiniteLattice::mask_of(const std::vector<std::string>& names) const {
    if (!rep_->powerset) return std::nullopt;
    ElemId mask = 0;
    for (const auto& name : names) {
        auto it = std::find(rep_->atoms.begin(), rep_->atoms.end(), name);
        if (it == rep_->atoms.end()) return std::nullopt;
        mask |= ElemId{1} << (it - rep_->atoms.begin());
    }
    return mask;
}

bool FiniteLattice::same_as(const FiniteLattice& other) const {
    if (rep_ == other.rep_) return true;
    const Rep& a = *rep_;
    const Rep& b = *other.rep_;
    if (a.powerset != b.powerset || a.n != b.n || a.top != b.top || a.bottom != b.bottom)
        return false;
    if (a.powerset) return a.atoms == b.atoms;
    return a.labels == b.labels && a.join_tab == b.join_tab && a.meet_tab == b.meet_tab;
}

std::vector<LatticeViolation> FiniteLattice::validate() const {
    std::vector<LatticeViolation> out;
    const auto n = static_cast<ElemId>(rep_->n);
    auto record = [&](std::string law, std::vector<ElemId> elems, std::string detail) {
        out.push_back({std::move(law), std::move(elems), std::move(detail)});
    };
    auto ops = {std::pair{&FiniteLattice::join, "join"}, std::pair{&FiniteLattice::meet, "meet"}};
    for (auto [op, opname] : ops) {
        for (ElemId a = 0; a < n; ++a) {
            if ((this->*op)(a, a) != a)
                record(std::string(opname) + "-idempotent", {a},
                       label(a) + " " + opname + " itself differs from itself");
        }
        for (ElemId a = 0; a < n; ++a) {
            for (ElemId b = 0; b < n; ++b) {
                if ((this->*op)(a, b) != (this->*op)(b, a))
                    record(std::string(opname) + "-commutative", {a, b},
                           opname + ("(" + label(a) + ", " + label(b) + ") != ") + opname +
                               ("(" + label(b) + ", " + label(a) + ")"));
            }
        }
        for (ElemId a = 0; a < n; ++a) {
            for (ElemId b = 0; b < n; ++b) {
                for (ElemId c = 0; c < n; ++c) {
                    ElemId lhs = (this->*op)((this->*op)(a, b), c);
                    ElemId rhs = (this->*op)(a, (this->*op)(b, c));
                    if (lhs != rhs)
                        record(std::string(opname) + "-associative", {a, b, c},
                               "associativity fails at (" + label(a) + ", " + label(b) + ", " +
                                   label(c) + ")");
                }
            }
        }
    }
    for (ElemId a = 0; a < n; ++a) {
        for (ElemId b = 0; b < n; ++b) {
            if (join(a, meet(a, b)) != a)
                record("absorption-join", {a, b},
                       label(a) + " | (" + label(a) + " & " + label(b) + ") != " + label(a));
            if (meet(a, join(a, b)) != a)
                record("absorption-meet", {a, b},
                       label(a) + " & (" + label(a) + " | " + label(b) + ") != " + label(a));
        }
    }
    for (ElemId a = 0; a < n; ++a) {
        if (join(a, rep_->top) != rep_->top)
            record("top-join", {a}, label(a) + " | top != top");
        if (meet(a, rep_->top) != a)
            record("top-meet", {a}, label(a) + " & top != " + label(a));
    }
    if (rep_->bottom) {
        for (ElemId a = 0; a < n; ++a) {
            if (join(a, *rep_->bottom) != a)
                record("bottom-join", {a}, label(a) + " | bot != " + label(a));
            if (meet(a, *rep_->bottom) != *rep_->bottom)
                record("bottom-meet", {a}, label(a) + " & bot != bot");
        }
    }
    return out;
}

std::optional<std::array<ElemId, 3>> FiniteLattice::distributivity_counterexample() const {
    const auto n = static_cast<ElemId>(rep_->n);
    for (ElemId a = 0; a < n; ++a)
        for (ElemId b = 0; b < n; ++b)
            for (ElemId c = 0; c < n; ++c)
                if (meet(a, join(b, c)) != join(meet(a, b), meet(a, c)))
                    return std::array<ElemId, 3>{a, b, c};
    return std::nullopt;
}

FiniteLattice FiniteLattice::from_tables(std::string descriptor,
                                         std::vector<std::string> labels,
                                         std::vector<ElemId> join_table,
                                         std::vector<ElemId> meet_table,
                                         ElemId top,
                                         std::optional<ElemId> bottom) {
    auto rep = std::make_shared<Rep>();
    rep->descriptor = std::move(descriptor);
    rep->n = labels.size();
    if (rep->n == 0) throw std::invalid_argument("lattice needs at least one element");
    if (join_table.size() != rep->n * rep->n || meet_table.size() != rep->n * rep->n)
        throw std::invalid_argument("lattice tables must be n*n over the carrier");
    for (ElemId id : join_table) require_id("join table entry", id, rep->n);
    for (ElemId id : meet_table) require_id("meet table entry", id, rep->n);
    require_id("top", top, rep->n);
    if (bottom) require_id("bottom", *bottom, rep->n);
    {
        std::set<std::string> seen(labels.begin(), labels.end());
        if (seen.size() != labels.size())
            throw std::invalid_argument("lattice element labels must be unique");
    }
    rep->labels = std::move(labels);
    rep->join_tab = std::move(join_table);
    rep->meet_tab = std::move(meet_table);
    rep->top = top;
    rep->bottom = bottom;
    return FiniteLattice(std::move(rep));
}

Granular::Granular(FiniteLattice lattice, ElemId id) : lattice_(std::move(lattice)), id_(id) {
    require_id("granular", id_, lattice_.size());
}

bool Granular::operator==(const Granular& other) const {
    return id_ == other.id_ && lattice_.same_as(other.lattice_);
}

namespace {

const FiniteLattice& common_lattice(const char* op, const Granular& a, const Granular& b) {
    if (!a.lattice().same_as(b.lattice())) {
        throw std::invalid_argument(std::string(op) + ": operands from different lattices (" +
                                    a.lattice().descriptor() + " vs " + b.lattice().descriptor() +
                                    ")");
    }
    return a.lattice();
}

}  // namespace

Granular join(const Granular& a, const Granular& b) {
    const auto& l = common_lattice("join", a, b);
    return Granular(l, l.join(a.id(), b.id()));
}

Granular meet(const Granular& a, const Granular& b) {
    const auto& l = common_lattice("meet", a, b);
    return Granular(l, l.meet(a.id(), b.id()));
}

bool leq(const Granular& a, const Granular& b) {
    const auto& l = common_lattice("leq", a, b);
    return l.leq(a.id(), b.id());
}

FiniteLattice powerset_lattice(std::vector<std::string> atoms) {
    if (atoms.size() > 24)
        throw std::invalid_argument("powerset lattice limited to 24 atoms");
    {
        std::set<std::string> seen(atoms.begin(), atoms.end());
        if (seen.size() != atoms.size())
            throw std::invalid_argument("powerset atoms must be unique");
        for (const auto& a : atoms)
            if (a.empty()) throw std::invalid_argument("powerset atoms must be nonempty names");
    }
    auto rep = std::make_shared<FiniteLattice::Rep>();
    rep->powerset = true;
    rep->n = std::size_t{1} << atoms.size();
    rep->top = static_cast<ElemId>(rep->n - 1);
    rep->bottom = 0;
    rep->descriptor = "powerset(" + std::to_string(atoms.size()) + ")";
    rep->atoms = std::move(atoms);
    return FiniteLattice(std::move(rep));
}

FiniteLattice chain_lattice(int n) {
    if (n < 1 || n > 4096) throw std::invalid_argument("chain length must be in 1..4096");
    std::vector<std::string> labels;
    std::vector<ElemId> jt(static_cast<std::size_t>(n) * n), mt(static_cast<std::size_t>(n) * n);
    for (int i = 0; i < n; ++i) labels.push_back(std::to_string(i));
    for (int a = 0; a < n; ++a) {
        for (int b = 0; b < n; ++b) {
            jt[static_cast<std::size_t>(a) * n + b] = std::max(a, b);
            mt[static_cast<std::size_t>(a) * n + b] = std::min(a, b);
        }
    }
    return FiniteLattice::from_tables("chain(" + std::to_string(n) + ")", std::move(labels),
                                      std::move(jt), std::move(mt), n - 1, 0);
}

FiniteLattice two_point_lattice() {
    return FiniteLattice::from_tables("two", {"0", "1"}, {0, 1, 1, 1}, {0, 0, 0, 1}, 1, 0);
}

FiniteLattice product_lattice(const FiniteLattice& a, const FiniteLattice& b) {
    const std::size_t na = a.size(), nb = b.size(), n = na * nb;
    if (n > 65536) throw std::invalid_argument("product lattice too large");
    std::vector<std::string> labels(n);
    std::vector<ElemId> jt(n * n), mt(n * n);
    auto pack = [nb](ElemId x, ElemId y) { return static_cast<ElemId>(x * static_cast<ElemId>(nb) + y); };
    for (std::size_t i = 0; i < n; ++i) {
        ElemId xa = static_cast<ElemId>(i / nb), xb = static_cast<ElemId>(i % nb);
        labels[i] = "(" + a.label(xa) + "," + b.label(xb) + ")";
    }
    for (std::size_t i = 0; i < n; ++i) {
        ElemId xa = static_cast<ElemId>(i / nb), xb = static_cast<ElemId>(i % nb);
        for (std::size_t j = 0; j < n; ++j) {
            ElemId ya = static_cast<ElemId>(j / nb), yb = static_cast<ElemId>(j % nb);
            jt[i * n + j] = pack(a.join(xa, ya), b.join(xb, yb));
            mt[i * n + j] = pack(a.meet(xa, ya), b.meet(xb, yb));
        }
    }
    std::optional<ElemId> bottom;
    if (a.bottom_id() && b.bottom_id()) bottom = pack(*a.bottom_id(), *b.bottom_id());
    return FiniteLattice::from_tables("product(" + a.descriptor() + "," + b.descriptor() + ")",
                                      std::move(labels), std::move(jt), std::move(mt),
                                      pack(a.top_id(), b.top_id()), bottom);
}

FiniteLattice diamond_m3() {
    // bot, three incomparable atoms p q r, top
    std::vector<std::string> labels{"bot", "p", "q", "r", "top"};
    const int n = 5;
    std::vector<ElemId> jt(n * n), mt(n * n);
    auto lq = [](ElemId x, ElemId y) {  // order facts of M3
        return x == y || x == 0 || y == 4;
    };
    for (ElemId a = 0; a < n; ++a) {
        for (ElemId b = 0; b < n; ++b) {
            jt[a * n + b] = lq(a, b) ? b : (lq(b, a) ? a : 4);
            mt[a * n + b] = lq(a, b) ? a : (lq(b, a) ? b : 0);
        }
    }
    return FiniteLattice::from_tables("M3", std::move(labels), std::move(jt), std::move(mt), 4, 0);
}

FiniteLattice pentagon_n5() {
    // bot, a < c on one side, b on the other, top
    std::vector<std::string> labels{"bot", "a", "b", "c", "top"};
    const int n = 5;
    std::vector<ElemId> jt(n * n), mt(n * n);
    auto lq = [](ElemId x, ElemId y) {
        if (x == y || x == 0 || y == 4) return true;
        return x == 1 && y == 3;  // a <= c
    };
    for (ElemId a = 0; a < n; ++a) {
        for (ElemId b = 0; b < n; ++b) {
            jt[a * n + b] = lq(a, b) ? b : (lq(b, a) ? a : 4);
            mt[a * n + b] = lq(a, b) ? a : (lq(b, a) ? b : 0);
        }
    }
    return FiniteLattice::from_tables("N5", std::move(labels), std::move(jt), std::move(mt), 4, 0);
}

FiniteLattice from_cover_relation(std::vector<std::string> elements,
                                  std::vector<std::pair<std::string, std::string>> edges) {
    const std::size_t n = elements.size();
    if (n == 0) throw std::invalid_argument("cover relation needs at least one element");
    if (n > 4096) throw std::invalid_argument("cover relation limited to 4096 elements");
    std::map<std::string, ElemId> index;
    for (std::size_t i = 0; i < n; ++i) {
        if (!index.emplace(elements[i], static_cast<ElemId>(i)).second)
            throw std::invalid_argument("duplicate element name: " + elements[i]);
    }
    // leq[i][j] == true iff i <= j; seeded from edges, then transitive closure
    std::vector<std::vector<bool>> le(n, std::vector<bool>(n, false));
    for (std::size_t i = 0; i < n; ++i) le[i][i] = true;
    for (const auto& [lo, hi] : edges) {
        auto a = index.find(lo), b = index.find(hi);
        if (a == index.end() || b == index.end())
            throw std::invalid_argument("cover edge names unknown element: " + lo + " -> " + hi);
        le[a->second][b->second] = true;
    }
    for (std::size_t k = 0; k < n; ++k)
        for (std::size_t i = 0; i < n; ++i)
            if (le[i][k])
                for (std::size_t j = 0; j < n; ++j)
                    if (le[k][j]) le[i][j] = true;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            if (i != j && le[i][j] && le[j][i])
                throw std::invalid_argument("cover relation has a cycle through " + elements[i] +
                                            " and " + elements[j]);
    auto bound = [&](ElemId a, ElemId b, bool upper) -> ElemId {
        std::vector<ElemId> cands;
        for (std::size_t c = 0; c < n; ++c) {
            bool ok = upper ? (le[a][c] && le[b][c]) : (le[c][a] && le[c][b]);
            if (ok) cands.push_back(static_cast<ElemId>(c));
        }
        // least (resp. greatest) element of cands, unique or error
        for (ElemId c : cands) {
            bool extremal = true;
            for (ElemId d : cands) {
                bool rel = upper ? le[c][d] : le[d][c];
                if (!rel) { extremal = false; break; }
            }
            if (extremal) return c;
        }
        throw std::invalid_argument(std::string(upper ? "join" : "meet") + " of " + elements[a] +
                                    " and " + elements[b] + " does not exist in cover relation");
    };
    std::vector<ElemId> jt(n * n), mt(n * n);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            jt[i * n + j] = bound(static_cast<ElemId>(i), static_cast<ElemId>(j), true);
            mt[i * n + j] = bound(static_cast<ElemId>(i), static_cast<ElemId>(j), false);
        }
    }
    ElemId top = 0, bot = 0;
    for (std::size_t i = 0; i < n; ++i) {
        top = jt[static_cast<std::size_t>(top) * n + i];
        bot = mt[static_cast<std::size_t>(bot) * n + i];
    }
    return FiniteLattice::from_tables("cover(" + std::to_string(n) + " elements)",
                                      std::move(elements), std::move(jt), std::move(mt), top, bot);
}

}  // namespace mnesor
