#include "mnesor/algebra.hpp"

#include <stdexcept>

#include "json.hpp"

namespace mnesor {

MnesorSpace::Value MnesorSpace::tuple_literal(const std::vector<std::string>&) const {
    throw std::invalid_argument("model " + descriptor() + " has no tuple literals");
}

MnesorSpace::Value act(const MnesorSpace& s, const MnesorSpace::Value& x, const Granular& g) {
    if (!g.lattice().same_as(s.lattice())) {
        throw std::invalid_argument("act: granular from lattice " + g.lattice().descriptor() +
                                    " applied in space over " + s.lattice().descriptor());
    }
    return s.act(x, g.id());
}

bool prefix_leq(const MnesorSpace& s, const MnesorSpace::Value& x, const MnesorSpace::Value& y) {
    return s.equal(s.add(x, y), y);
}

bool is_anagram(const MnesorSpace& s, const MnesorSpace::Value& x, const MnesorSpace::Value& y) {
    return s.equal(s.add(x, y), x) && s.equal(s.add(y, x), y);
}

// ---------------------------------------------------------------------------
// Term construction helpers (used only to spell out the catalog).

namespace {

MTermPtr mv(int i) { return std::make_shared<MTerm>(MTerm{MTerm::Kind::Var, i, {}, {}, {}}); }
MTermPtr mzero() { return std::make_shared<MTerm>(MTerm{MTerm::Kind::Zero, -1, {}, {}, {}}); }
MTermPtr madd(MTermPtr a, MTermPtr b) {
    return std::make_shared<MTerm>(MTerm{MTerm::Kind::Add, -1, std::move(a), std::move(b), {}});
}
MTermPtr mact(MTermPtr x, GTermPtr g) {
    return std::make_shared<MTerm>(MTerm{MTerm::Kind::Act, -1, std::move(x), {}, std::move(g)});
}

GTermPtr gv(int i) { return std::make_shared<GTerm>(GTerm{GTerm::Kind::Var, i, {}, {}}); }
GTermPtr gtop() { return std::make_shared<GTerm>(GTerm{GTerm::Kind::Top, -1, {}, {}}); }
GTermPtr gbot() { return std::make_shared<GTerm>(GTerm{GTerm::Kind::Bot, -1, {}, {}}); }
GTermPtr gjoin(GTermPtr a, GTermPtr b) {
    return std::make_shared<GTerm>(GTerm{GTerm::Kind::Join, -1, std::move(a), std::move(b)});
}
GTermPtr gmeet(GTermPtr a, GTermPtr b) {
    return std::make_shared<GTerm>(GTerm{GTerm::Kind::Meet, -1, std::move(a), std::move(b)});
}

Equation meq(MTermPtr l, MTermPtr r) { return Equation{std::move(l), std::move(r), {}, {}}; }
Equation geq(GTermPtr l, GTermPtr r) { return Equation{{}, {}, std::move(l), std::move(r)}; }

std::string mvar_name(const Law& law, int idx) {
    if (idx >= 0 && static_cast<std::size_t>(idx) < law.mnesor_vars.size())
        return law.mnesor_vars[static_cast<std::size_t>(idx)];
    if (law.hypothesis.quant == Quant::ExistsMnesor) return law.hypothesis.bound_name;
    if (law.conclusion.quant == Quant::ExistsMnesor) return law.conclusion.bound_name;
    throw std::logic_error("law " + law.name + ": unresolved mnesor variable");
}

std::string gvar_name(const Law& law, int idx) {
    if (idx >= 0 && static_cast<std::size_t>(idx) < law.granular_vars.size())
        return law.granular_vars[static_cast<std::size_t>(idx)];
    for (const QuantBlock* b : {&law.hypothesis, &law.conclusion}) {
        if (b->quant == Quant::ExistsGranular || b->quant == Quant::ForallGranular)
            return b->bound_name;
    }
    throw std::logic_error("law " + law.name + ": unresolved granular variable");
}

bool composite(const MTerm& t) {
    return t.kind == MTerm::Kind::Add || t.kind == MTerm::Kind::Act;
}
bool composite(const GTerm& t) {
    return t.kind == GTerm::Kind::Join || t.kind == GTerm::Kind::Meet;
}

// Operands of a composite are parenthesized when they are composite
// themselves, except that an action may sit bare inside a sum (it binds
// tighter). Mirrors how the statements are written in prose.
std::string render_operand(const MTerm& t, const Law& law, bool under_add) {
    std::string s = render(t, law);
    bool parens = composite(t) && !(under_add && t.kind == MTerm::Kind::Act);
    return parens ? "(" + s + ")" : s;
}

std::string render_operand(const GTerm& t, const Law& law) {
    std::string s = render(t, law);
    return composite(t) ? "(" + s + ")" : s;
}

std::string render_block(const QuantBlock& b, const Law& law, bool in_implication) {
    std::string body;
    for (std::size_t i = 0; i < b.eqs.size(); ++i) {
        if (i) body += " and ";
        body += render(b.eqs[i], law);
    }
    switch (b.quant) {
        case Quant::None:
            return body;
        case Quant::ExistsMnesor:
        case Quant::ExistsGranular:
            body = "exists " + b.bound_name + ": " + body;
            break;
        case Quant::ForallGranular:
            body = "for all " + b.bound_name + ": " + body;
            break;
    }
    return in_implication ? "(" + body + ")" : body;
}

}  // namespace

std::string render(const MTerm& t, const Law& law) {
    switch (t.kind) {
        case MTerm::Kind::Var: return mvar_name(law, t.var);
        case MTerm::Kind::Zero: return "0";
        case MTerm::Kind::Add:
            return render_operand(*t.x, law, true) + " + " + render_operand(*t.y, law, true);
        case MTerm::Kind::Act:
            return render_operand(*t.x, law, false) + "*" + render_operand(*t.g, law);
    }
    throw std::logic_error("unreachable mnesor term kind");
}

std::string render(const GTerm& t, const Law& law) {
    switch (t.kind) {
        case GTerm::Kind::Var: return gvar_name(law, t.var);
        case GTerm::Kind::Top: return "top";
        case GTerm::Kind::Bot: return "bot";
        case GTerm::Kind::Join:
            return render_operand(*t.a, law) + " | " + render_operand(*t.b, law);
        case GTerm::Kind::Meet:
            return render_operand(*t.a, law) + " & " + render_operand(*t.b, law);
    }
    throw std::logic_error("unreachable granular term kind");
}

std::string render(const Equation& eq, const Law& law) {
    if (eq.is_granular()) return render(*eq.glhs, law) + " = " + render(*eq.grhs, law);
    return render(*eq.mlhs, law) + " = " + render(*eq.mrhs, law);
}

std::string render_statement(const Law& law) {
    if (law.hypothesis.empty()) return render_block(law.conclusion, law, false);
    return render_block(law.hypothesis, law, true) + " => " +
           render_block(law.conclusion, law, true);
}

// ---------------------------------------------------------------------------

LawCatalog::LawCatalog(std::vector<Law> laws) : laws_(std::move(laws)) {
    for (std::size_t i = 0; i < laws_.size(); ++i) {
        for (std::size_t j = i + 1; j < laws_.size(); ++j) {
            if (laws_[i].name == laws_[j].name)
                throw std::invalid_argument("duplicate law name " + laws_[i].name);
        }
    }
}

const Law* LawCatalog::find(std::string_view name) const {
    for (const Law& l : laws_)
        if (l.name == name) return &l;
    return nullptr;
}

const Law& LawCatalog::operator[](std::string_view name) const {
    if (const Law* l = find(name)) return *l;
    throw std::invalid_argument("unknown law name: " + std::string(name));
}

namespace {

Law make_law(std::string name, Tier tier, std::vector<std::string> mvars,
             std::vector<std::string> gvars, QuantBlock hyp, QuantBlock concl,
             bool uses_bottom = false) {
    Law law;
    law.name = std::move(name);
    law.tier = tier;
    law.mnesor_vars = std::move(mvars);
    law.granular_vars = std::move(gvars);
    law.uses_bottom = uses_bottom;
    law.hypothesis = std::move(hyp);
    law.conclusion = std::move(concl);
    law.summary = render_statement(law);
    return law;
}

QuantBlock plain(std::vector<Equation> eqs) { return QuantBlock{Quant::None, "", std::move(eqs)}; }
QuantBlock quantified(Quant q, std::string name, std::vector<Equation> eqs) {
    return QuantBlock{q, std::move(name), std::move(eqs)};
}

std::vector<Law> build_catalog() {
    std::vector<Law> laws;
    const auto A = Tier::Axiom;
    const auto T = Tier::Theorem;

    // Monoid axioms: identity and associativity of mnesor addition.
    laws.push_back(make_law("A-MON-ID", A, {"x"}, {}, plain({}),
                            plain({meq(madd(mzero(), mv(0)), mv(0)),
                                   meq(madd(mv(0), mzero()), mv(0))})));
    laws.push_back(make_law("A-MON-ASSOC", A, {"x", "y", "z"}, {}, plain({}),
                            plain({meq(madd(madd(mv(0), mv(1)), mv(2)),
                                       madd(mv(0), madd(mv(1), mv(2))))})));
    // Action axioms: unital, the two distributivities, associativity over meet.
    laws.push_back(make_law("A-UNITAL", A, {"x"}, {}, plain({}),
                            plain({meq(mact(mv(0), gtop()), mv(0))})));
    laws.push_back(make_law("A-MDIST", A, {"x", "y"}, {"lambda"}, plain({}),
                            plain({meq(mact(madd(mv(0), mv(1)), gv(0)),
                                       madd(mact(mv(0), gv(0)), mact(mv(1), gv(0))))})));
    laws.push_back(make_law("A-ASSOC-ACT", A, {"x"}, {"lambda", "mu"}, plain({}),
                            plain({meq(mact(mact(mv(0), gv(0)), gv(1)),
                                       mact(mv(0), gmeet(gv(0), gv(1))))})));
    laws.push_back(make_law("A-GDIST", A, {"x"}, {"lambda", "mu"}, plain({}),
                            plain({meq(madd(mact(mv(0), gv(0)), mact(mv(0), gv(1))),
                                       mact(mv(0), gjoin(gv(0), gv(1))))})));
    // Absorption: some granular collapses x + y back to x.
    laws.push_back(make_law("A-ABSORB", A, {"x", "y"}, {}, plain({}),
                            quantified(Quant::ExistsGranular, "alpha",
                                       {meq(mact(madd(mv(0), mv(1)), gv(0)), mv(0))})));

    laws.push_back(make_law("T-IDEM", T, {"x"}, {}, plain({}),
                            plain({meq(madd(mv(0), mv(0)), mv(0))})));
    laws.push_back(make_law("T-PRIORITY", T, {"x", "y"}, {}, plain({}),
                            plain({meq(madd(madd(mv(0), mv(1)), mv(0)),
                                       madd(mv(0), mv(1)))})));
    // The three prefix characterizations, as directed implications.
    laws.push_back(make_law("T-PFX-I-II", T, {"x", "y"}, {},
                            quantified(Quant::ExistsMnesor, "z",
                                       {meq(madd(mv(1), mv(2)), mv(0))}),
                            quantified(Quant::ExistsGranular, "lambda",
                                       {meq(mact(mv(0), gv(0)), mv(1))})));
    laws.push_back(make_law("T-PFX-II-III", T, {"x", "y"}, {},
                            quantified(Quant::ExistsGranular, "lambda",
                                       {meq(mact(mv(0), gv(0)), mv(1))}),
                            plain({meq(madd(mv(1), mv(0)), mv(0))})));
    laws.push_back(make_law("T-PFX-III-I", T, {"x", "y"}, {},
                            plain({meq(madd(mv(1), mv(0)), mv(0))}),
                            quantified(Quant::ExistsMnesor, "z",
                                       {meq(madd(mv(1), mv(2)), mv(0))})));
    // x <= y defined as x + y = y is a partial order.
    laws.push_back(make_law("T-ORD-REFL", T, {"x"}, {}, plain({}),
                            plain({meq(madd(mv(0), mv(0)), mv(0))})));
    laws.push_back(make_law("T-ORD-TRANS", T, {"x", "y", "z"}, {},
                            plain({meq(madd(mv(0), mv(1)), mv(1)),
                                   meq(madd(mv(1), mv(2)), mv(2))}),
                            plain({meq(madd(mv(0), mv(2)), mv(2))})));
    laws.push_back(make_law("T-ORD-ANTISYM", T, {"x", "y"}, {},
                            plain({meq(madd(mv(0), mv(1)), mv(1)),
                                   meq(madd(mv(1), mv(0)), mv(0))}),
                            plain({meq(mv(0), mv(1))})));
    laws.push_back(make_law("T-COMPAT-ADD", T, {"x", "y", "a"}, {},
                            plain({meq(madd(mv(0), mv(1)), mv(1))}),
                            plain({meq(madd(madd(mv(0), mv(2)), madd(mv(1), mv(2))),
                                       madd(mv(1), mv(2)))})));
    laws.push_back(make_law("T-MONO-M", T, {"x", "y"}, {"lambda"},
                            plain({meq(madd(mv(0), mv(1)), mv(1))}),
                            plain({meq(madd(mact(mv(0), gv(0)), mact(mv(1), gv(0))),
                                       mact(mv(1), gv(0)))})));
    laws.push_back(make_law("T-MONO-G", T, {"x"}, {"lambda", "mu"},
                            plain({geq(gjoin(gv(0), gv(1)), gv(1))}),
                            plain({meq(madd(mact(mv(0), gv(0)), mact(mv(0), gv(1))),
                                       mact(mv(0), gv(1)))})));
    laws.push_back(make_law("T-POS", T, {"x"}, {}, plain({}),
                            plain({meq(madd(mzero(), mv(0)), mv(0))})));
    laws.push_back(make_law("T-ZSF", T, {"x", "y"}, {},
                            plain({meq(madd(mv(0), mv(1)), mzero())}),
                            plain({meq(mv(0), mzero()), meq(mv(1), mzero())})));
    // Suffix characterizations.
    laws.push_back(make_law("T-SFX-II-III", T, {"a", "y"}, {"lambda"},
                            plain({meq(madd(mact(mv(0), gv(0)), mv(1)), mv(0))}),
                            plain({meq(madd(mv(0), mv(1)), mv(0))})));
    laws.push_back(make_law("T-SFX-III-II", T, {"a", "y"}, {},
                            plain({meq(madd(mv(0), mv(1)), mv(0))}),
                            quantified(Quant::ExistsGranular, "lambda",
                                       {meq(madd(mact(mv(0), gv(0)), mv(1)), mv(0))})));
    laws.push_back(make_law("T-PFX-IS-SFX", T, {"a", "z"}, {},
                            quantified(Quant::ExistsGranular, "lambda",
                                       {meq(mact(mv(0), gv(0)), mv(1))}),
                            plain({meq(madd(mv(0), mv(1)), mv(0))})));
    laws.push_back(make_law("T-ANAGRAM", T, {"z", "t"}, {}, plain({}),
                            plain({meq(madd(madd(mv(0), mv(1)), madd(mv(1), mv(0))),
                                       madd(mv(0), mv(1))),
                                   meq(madd(madd(mv(1), mv(0)), madd(mv(0), mv(1))),
                                       madd(mv(1), mv(0)))})));
    // Stabilizer / annihilator facts.
    laws.push_back(make_law("T-WIT-STAB", T, {"x", "y"}, {"alpha"},
                            plain({meq(mact(madd(mv(0), mv(1)), gv(0)), mv(0))}),
                            plain({meq(mact(mv(0), gv(0)), mv(0))})));
    laws.push_back(make_law("T-STAB-CLOSE", T, {"x"}, {"lambda", "mu"},
                            plain({meq(mact(mv(0), gv(0)), mv(0)),
                                   meq(mact(mv(0), gv(1)), mv(0))}),
                            plain({meq(mact(mv(0), gjoin(gv(0), gv(1))), mv(0)),
                                   meq(mact(mv(0), gmeet(gv(0), gv(1))), mv(0))})));
    laws.push_back(make_law("T-EMPTY-FWD", T, {}, {"lambda"}, plain({}),
                            plain({meq(mact(mzero(), gv(0)), mzero())})));
    laws.push_back(make_law("T-EMPTY-BWD", T, {"e"}, {},
                            quantified(Quant::ForallGranular, "lambda",
                                       {meq(mact(mv(0), gv(0)), mv(0))}),
                            plain({meq(mv(0), mzero())})));
    laws.push_back(make_law("T-BOT", T, {"x"}, {}, plain({}),
                            plain({meq(mact(mv(0), gbot()), mzero())}),
                            /*uses_bottom=*/true));
    laws.push_back(make_law("T-ANNIH-CLOSE", T, {"x"}, {"lambda", "mu"},
                            plain({meq(mact(mv(0), gv(0)), mzero()),
                                   meq(mact(mv(0), gv(1)), mzero())}),
                            plain({meq(mact(mv(0), gjoin(gv(0), gv(1))), mzero()),
                                   meq(mact(mv(0), gmeet(gv(0), gv(1))), mzero())})));
    return laws;
}

}  // namespace

const LawCatalog& catalog() {
    static const LawCatalog instance(build_catalog());
    return instance;
}

// ---------------------------------------------------------------------------
// JSON export.

namespace {

using nlohmann::ordered_json;

ordered_json tree_json(const GTerm& t, const Law& law);

ordered_json tree_json(const MTerm& t, const Law& law) {
    switch (t.kind) {
        case MTerm::Kind::Var:
            return {{"op", "var"}, {"name", mvar_name(law, t.var)}};
        case MTerm::Kind::Zero:
            return {{"op", "zero"}};
        case MTerm::Kind::Add:
            return {{"op", "add"},
                    {"args", ordered_json::array({tree_json(*t.x, law), tree_json(*t.y, law)})}};
        case MTerm::Kind::Act:
            return {{"op", "act"},
                    {"args", ordered_json::array({tree_json(*t.x, law), tree_json(*t.g, law)})}};
    }
    throw std::logic_error("unreachable mnesor term kind");
}

ordered_json tree_json(const GTerm& t, const Law& law) {
    switch (t.kind) {
        case GTerm::Kind::Var:
            return {{"op", "gvar"}, {"name", gvar_name(law, t.var)}};
        case GTerm::Kind::Top:
            return {{"op", "top"}};
        case GTerm::Kind::Bot:
            return {{"op", "bot"}};
        case GTerm::Kind::Join:
            return {{"op", "join"},
                    {"args", ordered_json::array({tree_json(*t.a, law), tree_json(*t.b, law)})}};
        case GTerm::Kind::Meet:
            return {{"op", "meet"},
                    {"args", ordered_json::array({tree_json(*t.a, law), tree_json(*t.b, law)})}};
    }
    throw std::logic_error("unreachable granular term kind");
}

ordered_json block_json(const QuantBlock& b, const Law& law) {
    ordered_json out;
    switch (b.quant) {
        case Quant::None: out["quant"] = "none"; break;
        case Quant::ExistsMnesor: out["quant"] = "exists_mnesor"; break;
        case Quant::ExistsGranular: out["quant"] = "exists_granular"; break;
        case Quant::ForallGranular: out["quant"] = "forall_granular"; break;
    }
    if (b.quant != Quant::None) out["bound"] = b.bound_name;
    ordered_json eqs = ordered_json::array();
    for (const Equation& eq : b.eqs) {
        ordered_json e;
        e["sort"] = eq.is_granular() ? "granular" : "mnesor";
        if (eq.is_granular()) {
            e["lhs"] = tree_json(*eq.glhs, law);
            e["rhs"] = tree_json(*eq.grhs, law);
        } else {
            e["lhs"] = tree_json(*eq.mlhs, law);
            e["rhs"] = tree_json(*eq.mrhs, law);
        }
        e["text"] = render(eq, law);
        eqs.push_back(std::move(e));
    }
    out["eqs"] = std::move(eqs);
    return out;
}

}  // namespace

std::string catalog_json() {
    ordered_json doc;
    doc["count"] = catalog().count();
    ordered_json laws = ordered_json::array();
    for (const Law& law : catalog().laws()) {
        ordered_json j;
        j["name"] = law.name;
        j["tier"] = law.tier == Tier::Axiom ? "axiom" : "theorem";
        j["summary"] = law.summary;
        j["mnesor_vars"] = law.mnesor_vars;
        j["granular_vars"] = law.granular_vars;
        j["uses_bottom"] = law.uses_bottom;
        j["hypothesis"] = block_json(law.hypothesis, law);
        j["conclusion"] = block_json(law.conclusion, law);
        laws.push_back(std::move(j));
    }
    doc["laws"] = std::move(laws);
    return doc.dump(2) + "\n";
}

}  // namespace mnesor
