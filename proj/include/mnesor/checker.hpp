#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "mnesor/algebra.hpp"

namespace mnesor {

/// Enumeration bounds for a check run. At the default cap the |U|<=3
/// column-tuple carriers and every shipped lattice enumerate totally.
struct CheckBounds {
    std::size_t max_mnesors = 100000;
};

/// Assignment of values to a law's free variables, declaration order.
struct Binding {
    std::vector<MnesorSpace::Value> mnesors;
    std::vector<ElemId> granulars;
};

enum class LawStatus { Pass, Fail, Skipped };

std::string to_string(LawStatus s);

struct LawResult {
    std::string law;
    LawStatus status = LawStatus::Pass;
    std::string skip_reason;  // Skipped only
    /// Assignments evaluated, the violating one included; hypothesis-failing
    /// (vacuously true) assignments count.
    std::size_t instances = 0;
    std::optional<Binding> counterexample;  // present iff status == Fail
    /// var name -> rendered value, mnesor vars then granular vars.
    std::vector<std::pair<std::string, std::string>> rendered;
};

struct ComplianceReport {
    std::string model;
    std::string lattice;
    CheckBounds bounds;
    std::size_t enumerated = 0;  // carrier elements visited
    bool total = false;          // carrier fully enumerated within bounds
    std::vector<LawResult> laws;  // catalog order

    bool all_pass() const;  // no Fail rows (Skipped is not a failure)
};

/// True when the binding violates the law (hypothesis holds, conclusion
/// does not). Quantified subformulas range over the bounded enumeration.
bool violates(const MnesorSpace& s, const Law& law, const Binding& binding,
              const CheckBounds& b = {});

/// Exhaustive bounded check of one law. Assignments are visited in the
/// canonical order: total entry count of the bound mnesors, then carrier
/// enumeration index (lexicographic), then granular ids (lexicographic);
/// the first violation is therefore the minimal counterexample. Laws
/// mentioning bot are Skipped on lattices without a bottom.
LawResult check_law(const MnesorSpace& s, const Law& law, const CheckBounds& b = {});

/// One result per catalog law, catalog order. jobs > 1 distributes laws
/// across threads; the report is byte-identical regardless.
ComplianceReport check_all(const MnesorSpace& s, const CheckBounds& b = {}, unsigned jobs = 1);

/// Minimal violating binding in the canonical order above; idempotent.
/// Throws std::invalid_argument when the input binding does not violate.
Binding minimize(const MnesorSpace& s, const Law& law, const Binding& binding,
                 const CheckBounds& b = {});

std::string report_json(const ComplianceReport& r);
std::string report_table(const ComplianceReport& r);

}  // namespace mnesor
