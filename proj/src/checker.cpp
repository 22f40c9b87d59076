#include "mnesor/checker.hpp"

#include <algorithm>
#include <atomic>
#include <exception>
#include <sstream>
#include <stdexcept>
#include <thread>

#include "json.hpp"

namespace mnesor {

std::string to_string(LawStatus s) {
    switch (s) {
        case LawStatus::Pass: return "pass";
        case LawStatus::Fail: return "fail";
        case LawStatus::Skipped: return "skipped";
    }
    throw std::logic_error("unreachable law status");
}

bool ComplianceReport::all_pass() const {
    for (const LawResult& r : laws)
        if (r.status == LawStatus::Fail) return false;
    return true;
}

namespace {

using Value = MnesorSpace::Value;

ElemId eval_g(const GTerm& t, const FiniteLattice& l, const std::vector<ElemId>& genv) {
    switch (t.kind) {
        case GTerm::Kind::Var: return genv[static_cast<std::size_t>(t.var)];
        case GTerm::Kind::Top: return l.top_id();
        case GTerm::Kind::Bot: return *l.bottom_id();  // guarded by uses_bottom
        case GTerm::Kind::Join: return l.join(eval_g(*t.a, l, genv), eval_g(*t.b, l, genv));
        case GTerm::Kind::Meet: return l.meet(eval_g(*t.a, l, genv), eval_g(*t.b, l, genv));
    }
    throw std::logic_error("unreachable granular term kind");
}

Value eval_m(const MTerm& t, const MnesorSpace& s, const std::vector<Value>& menv,
             const std::vector<ElemId>& genv) {
    switch (t.kind) {
        case MTerm::Kind::Var: return menv[static_cast<std::size_t>(t.var)];
        case MTerm::Kind::Zero: return s.zero();
        case MTerm::Kind::Add: return s.add(eval_m(*t.x, s, menv, genv), eval_m(*t.y, s, menv, genv));
        case MTerm::Kind::Act: return s.act(eval_m(*t.x, s, menv, genv), eval_g(*t.g, s.lattice(), genv));
    }
    throw std::logic_error("unreachable mnesor term kind");
}

bool eqs_hold(const std::vector<Equation>& eqs, const MnesorSpace& s, const std::vector<Value>& menv,
              const std::vector<ElemId>& genv) {
    for (const Equation& eq : eqs) {
        if (eq.is_granular()) {
            if (eval_g(*eq.glhs, s.lattice(), genv) != eval_g(*eq.grhs, s.lattice(), genv))
                return false;
        } else {
            if (!s.equal(eval_m(*eq.mlhs, s, menv, genv), eval_m(*eq.mrhs, s, menv, genv)))
                return false;
        }
    }
    return true;
}

// Quantified variables live one slot past the free variables of their sort.
bool block_holds(const QuantBlock& b, const MnesorSpace& s, std::vector<Value>& menv,
                 std::vector<ElemId>& genv, const std::vector<Value>& carrier) {
    switch (b.quant) {
        case Quant::None:
            return eqs_hold(b.eqs, s, menv, genv);
        case Quant::ExistsMnesor:
            for (const Value& v : carrier) {
                menv.back() = v;
                if (eqs_hold(b.eqs, s, menv, genv)) return true;
            }
            return false;
        case Quant::ExistsGranular:
            for (ElemId g = 0; g < static_cast<ElemId>(s.lattice().size()); ++g) {
                genv.back() = g;
                if (eqs_hold(b.eqs, s, menv, genv)) return true;
            }
            return false;
        case Quant::ForallGranular:
            for (ElemId g = 0; g < static_cast<ElemId>(s.lattice().size()); ++g) {
                genv.back() = g;
                if (!eqs_hold(b.eqs, s, menv, genv)) return false;
            }
            return true;
    }
    throw std::logic_error("unreachable quantifier kind");
}

bool law_holds_at(const Law& law, const MnesorSpace& s, std::vector<Value>& menv,
                  std::vector<ElemId>& genv, const std::vector<Value>& carrier) {
    if (!block_holds(law.hypothesis, s, menv, genv, carrier)) return true;  // vacuous
    return block_holds(law.conclusion, s, menv, genv, carrier);
}

// Visits index tuples of length k in the canonical order: total weight
// ascending, then lexicographic. Visitor returns false to stop the scan.
template <typename Visit>
bool scan_rec(const std::vector<std::size_t>& weight, std::size_t W, std::size_t pos,
              std::size_t acc, std::size_t minw, std::size_t maxw,
              std::vector<std::size_t>& tuple, Visit&& visit) {
    const std::size_t k = tuple.size();
    if (pos == k) return visit(tuple);
    const std::size_t rem = k - pos - 1;
    for (std::size_t i = 0; i < weight.size(); ++i) {
        const std::size_t w = weight[i];
        if (acc + w + rem * minw > W) continue;
        if (acc + w + rem * maxw < W) continue;
        tuple[pos] = i;
        if (!scan_rec(weight, W, pos + 1, acc + w, minw, maxw, tuple, visit)) return false;
    }
    return true;
}

template <typename Visit>
void scan_mtuples(const std::vector<std::size_t>& weight, std::size_t k, Visit&& visit) {
    std::vector<std::size_t> tuple(k);
    if (k == 0) {
        visit(tuple);
        return;
    }
    if (weight.empty()) return;
    const std::size_t minw = *std::min_element(weight.begin(), weight.end());
    const std::size_t maxw = *std::max_element(weight.begin(), weight.end());
    for (std::size_t W = k * minw; W <= k * maxw; ++W) {
        if (!scan_rec(weight, W, 0, 0, minw, maxw, tuple, visit)) return;
    }
}

// Lexicographic odometer over granular id tuples; false when wrapped.
bool advance_gtuple(std::vector<ElemId>& g, std::size_t lattice_size) {
    for (std::size_t i = g.size(); i-- > 0;) {
        if (static_cast<std::size_t>(++g[i]) < lattice_size) return true;
        g[i] = 0;
    }
    return false;
}

void render_binding(LawResult& out, const MnesorSpace& s, const Law& law, const Binding& bind) {
    for (std::size_t i = 0; i < law.mnesor_vars.size(); ++i)
        out.rendered.emplace_back(law.mnesor_vars[i], s.render(bind.mnesors[i]));
    for (std::size_t i = 0; i < law.granular_vars.size(); ++i)
        out.rendered.emplace_back(law.granular_vars[i], s.lattice().label(bind.granulars[i]));
}

bool violates_impl(const MnesorSpace& s, const Law& law, const Binding& binding,
                   const std::vector<Value>& carrier) {
    std::vector<Value> menv(law.mnesor_vars.size() + 1);
    std::vector<ElemId> genv(law.granular_vars.size() + 1, 0);
    for (std::size_t i = 0; i < law.mnesor_vars.size(); ++i) menv[i] = binding.mnesors[i];
    for (std::size_t i = 0; i < law.granular_vars.size(); ++i) genv[i] = binding.granulars[i];
    return !law_holds_at(law, s, menv, genv, carrier);
}

void require_binding_shape(const MnesorSpace& s, const Law& law, const Binding& binding) {
    if (binding.mnesors.size() != law.mnesor_vars.size() ||
        binding.granulars.size() != law.granular_vars.size())
        throw std::invalid_argument("binding arity does not match law " + law.name);
    for (ElemId g : binding.granulars) {
        if (g < 0 || static_cast<std::size_t>(g) >= s.lattice().size())
            throw std::invalid_argument("binding granular id out of lattice range");
    }
    if (law.uses_bottom && !s.lattice().bottom_id())
        throw std::invalid_argument("law " + law.name + " needs a bottom element; lattice " +
                                    s.lattice().descriptor() + " has none");
}

LawResult check_law_impl(const MnesorSpace& s, const Law& law, const std::vector<Value>& carrier) {
    LawResult res;
    res.law = law.name;
    if (law.uses_bottom && !s.lattice().bottom_id()) {
        res.status = LawStatus::Skipped;
        res.skip_reason = "law mentions bot; lattice " + s.lattice().descriptor() + " has no bottom";
        return res;
    }
    const std::size_t mk = law.mnesor_vars.size();
    const std::size_t gk = law.granular_vars.size();
    const std::size_t L = s.lattice().size();

    std::vector<std::size_t> weight(carrier.size());
    for (std::size_t i = 0; i < carrier.size(); ++i) weight[i] = s.entry_count(carrier[i]);

    std::vector<Value> menv(mk + 1);
    std::vector<ElemId> genv(gk + 1, 0);
    std::optional<Binding> found;

    scan_mtuples(weight, mk, [&](const std::vector<std::size_t>& mtuple) {
        for (std::size_t i = 0; i < mk; ++i) menv[i] = carrier[mtuple[i]];
        std::vector<ElemId> gtuple(gk, 0);
        do {
            for (std::size_t i = 0; i < gk; ++i) genv[i] = gtuple[i];
            ++res.instances;
            if (!law_holds_at(law, s, menv, genv, carrier)) {
                Binding b;
                for (std::size_t i = 0; i < mk; ++i) b.mnesors.push_back(carrier[mtuple[i]]);
                b.granulars = gtuple;
                found = std::move(b);
                return false;
            }
        } while (advance_gtuple(gtuple, L));
        return true;
    });

    if (found) {
        // Soundness: the reported counterexample must re-evaluate to a
        // violation through the public operations.
        if (!violates_impl(s, law, *found, carrier))
            throw std::logic_error("soundness self-check failed for law " + law.name);
        res.status = LawStatus::Fail;
        res.counterexample = std::move(found);
        render_binding(res, s, law, *res.counterexample);
    }
    return res;
}

}  // namespace

bool violates(const MnesorSpace& s, const Law& law, const Binding& binding,
              const CheckBounds& b) {
    require_binding_shape(s, law, binding);
    auto [carrier, total] = s.enumerate(b.max_mnesors);
    (void)total;
    return violates_impl(s, law, binding, carrier);
}

LawResult check_law(const MnesorSpace& s, const Law& law, const CheckBounds& b) {
    auto [carrier, total] = s.enumerate(b.max_mnesors);
    (void)total;
    return check_law_impl(s, law, carrier);
}

Binding minimize(const MnesorSpace& s, const Law& law, const Binding& binding,
                 const CheckBounds& b) {
    require_binding_shape(s, law, binding);
    auto [carrier, total] = s.enumerate(b.max_mnesors);
    (void)total;
    if (!violates_impl(s, law, binding, carrier))
        throw std::invalid_argument("binding does not violate law " + law.name);
    LawResult scan = check_law_impl(s, law, carrier);
    // A violation exists, so the canonical scan finds the minimal one —
    // unless the input lies beyond the enumeration bounds; then the input
    // is the best known binding.
    if (scan.status == LawStatus::Fail) return *scan.counterexample;
    return binding;
}

ComplianceReport check_all(const MnesorSpace& s, const CheckBounds& b, unsigned jobs) {
    ComplianceReport report;
    report.model = s.descriptor();
    report.lattice = s.lattice().descriptor();
    report.bounds = b;
    auto [carrier, total] = s.enumerate(b.max_mnesors);
    report.enumerated = carrier.size();
    report.total = total;

    const auto& laws = catalog().laws();
    report.laws.resize(laws.size());
    if (jobs <= 1) {
        for (std::size_t i = 0; i < laws.size(); ++i)
            report.laws[i] = check_law_impl(s, laws[i], carrier);
        return report;
    }

    std::atomic<std::size_t> next{0};
    std::vector<std::exception_ptr> errors(laws.size());
    auto worker = [&]() {
        for (std::size_t i; (i = next.fetch_add(1)) < laws.size();) {
            try {
                report.laws[i] = check_law_impl(s, laws[i], carrier);
            } catch (...) {
                errors[i] = std::current_exception();
            }
        }
    };
    std::vector<std::thread> pool;
    const unsigned n = std::min<unsigned>(jobs, static_cast<unsigned>(laws.size()));
    pool.reserve(n);
    for (unsigned t = 0; t < n; ++t) pool.emplace_back(worker);
    for (auto& t : pool) t.join();
    for (const auto& e : errors)
        if (e) std::rethrow_exception(e);
    return report;
}

// ---------------------------------------------------------------------------

std::string report_json(const ComplianceReport& r) {
    using nlohmann::ordered_json;
    ordered_json doc;
    doc["model"] = r.model;
    doc["lattice"] = r.lattice;
    doc["bounds"] = {{"max_mnesors", r.bounds.max_mnesors},
                     {"enumerated", r.enumerated},
                     {"total", r.total}};
    ordered_json laws = ordered_json::array();
    for (const LawResult& lr : r.laws) {
        ordered_json j;
        j["name"] = lr.law;
        j["status"] = to_string(lr.status);
        j["instances"] = lr.instances;
        if (lr.status == LawStatus::Skipped) j["reason"] = lr.skip_reason;
        if (lr.status == LawStatus::Fail) {
            ordered_json ce = ordered_json::object();
            for (const auto& [var, val] : lr.rendered) ce[var] = val;
            j["counterexample"] = std::move(ce);
        }
        laws.push_back(std::move(j));
    }
    doc["laws"] = std::move(laws);
    return doc.dump(2) + "\n";
}

std::string report_table(const ComplianceReport& r) {
    std::ostringstream os;
    os << "model:   " << r.model << "\n";
    os << "lattice: " << r.lattice << "\n";
    os << "bounds:  max_mnesors=" << r.bounds.max_mnesors << " enumerated=" << r.enumerated
       << " total=" << (r.total ? "yes" : "no") << "\n\n";
    os << "LAW              STATUS   INSTANCES  DETAIL\n";
    std::size_t pass = 0, fail = 0, skipped = 0;
    for (const LawResult& lr : r.laws) {
        std::string detail;
        if (lr.status == LawStatus::Fail) {
            for (std::size_t i = 0; i < lr.rendered.size(); ++i) {
                if (i) detail += ", ";
                detail += lr.rendered[i].first + "=" + lr.rendered[i].second;
            }
            ++fail;
        } else if (lr.status == LawStatus::Skipped) {
            detail = lr.skip_reason;
            ++skipped;
        } else {
            ++pass;
        }
        os << lr.law;
        for (std::size_t p = lr.law.size(); p < 17; ++p) os << ' ';
        std::string st = to_string(lr.status);
        os << st;
        for (std::size_t p = st.size(); p < 9; ++p) os << ' ';
        std::string inst = std::to_string(lr.instances);
        os << inst;
        for (std::size_t p = inst.size(); p < 11; ++p) os << ' ';
        os << detail << "\n";
    }
    os << "\nresult: " << pass << " pass, " << fail << " fail, " << skipped << " skipped\n";
    return os.str();
}

}  // namespace mnesor
