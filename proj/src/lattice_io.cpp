#include "mnesor/lattice_io.hpp"

#include <fstream>
#include <stdexcept>

#include "json.hpp"

namespace mnesor {

namespace {

using nlohmann::json;

[[noreturn]] void bad(const std::string& path, const std::string& why) {
    throw std::invalid_argument("lattice file " + path + ": " + why);
}

std::vector<std::string> string_list(const json& j, const std::string& path,
                                     const std::string& what) {
    if (!j.is_array()) bad(path, what + " must be an array of strings");
    std::vector<std::string> out;
    for (const auto& e : j) {
        if (!e.is_string()) bad(path, what + " must be an array of strings");
        out.push_back(e.get<std::string>());
    }
    return out;
}

FiniteLattice from_json(const json& doc, const std::string& path);

FiniteLattice table_from_json(const json& doc, const std::string& path) {
    auto labels = string_list(doc.at("labels"), path, "labels");
    const std::size_t n = labels.size();
    auto label_id = [&](const json& j, const char* what) -> ElemId {
        if (!j.is_string()) bad(path, std::string(what) + " must be an element label");
        const std::string s = j.get<std::string>();
        for (std::size_t i = 0; i < n; ++i)
            if (labels[i] == s) return static_cast<ElemId>(i);
        bad(path, std::string(what) + " names unknown element '" + s + "'");
    };
    auto table = [&](const json& j, const char* what) {
        std::vector<ElemId> out;
        if (!j.is_array() || j.size() != n) bad(path, std::string(what) + " must be n rows");
        for (const auto& row : j) {
            if (!row.is_array() || row.size() != n)
                bad(path, std::string(what) + " rows must have n entries");
            for (const auto& cell : row) out.push_back(label_id(cell, what));
        }
        return out;
    };
    if (!doc.contains("join") || !doc.contains("meet") || !doc.contains("top"))
        bad(path, "table lattices need labels, join, meet, and top");
    ElemId top = label_id(doc.at("top"), "top");
    std::optional<ElemId> bottom;
    if (doc.contains("bottom")) bottom = label_id(doc.at("bottom"), "bottom");
    FiniteLattice l = FiniteLattice::from_tables("file(" + path + ")", std::move(labels),
                                                 table(doc.at("join"), "join"),
                                                 table(doc.at("meet"), "meet"), top, bottom);
    auto violations = l.validate();
    if (!violations.empty())
        bad(path, "not a lattice: " + violations.front().law + " (" +
                      violations.front().detail + ")");
    return l;
}

FiniteLattice from_json(const json& doc, const std::string& path) {
    if (!doc.is_object() || !doc.contains("kind") || !doc.at("kind").is_string())
        bad(path, "expected an object with a \"kind\" field");
    const std::string kind = doc.at("kind").get<std::string>();
    if (kind == "powerset") return powerset_lattice(string_list(doc.at("atoms"), path, "atoms"));
    if (kind == "chain") {
        if (!doc.contains("n") || !doc.at("n").is_number_integer())
            bad(path, "chain needs an integer \"n\"");
        return chain_lattice(doc.at("n").get<int>());
    }
    if (kind == "two") return two_point_lattice();
    if (kind == "m3") return diamond_m3();
    if (kind == "n5") return pentagon_n5();
    if (kind == "product") {
        if (!doc.contains("factors") || !doc.at("factors").is_array() ||
            doc.at("factors").size() != 2)
            bad(path, "product needs exactly two factors");
        return product_lattice(from_json(doc.at("factors")[0], path),
                               from_json(doc.at("factors")[1], path));
    }
    if (kind == "cover") {
        auto elements = string_list(doc.at("elements"), path, "elements");
        if (!doc.contains("edges") || !doc.at("edges").is_array())
            bad(path, "cover needs an \"edges\" array");
        std::vector<std::pair<std::string, std::string>> edges;
        for (const auto& e : doc.at("edges")) {
            if (!e.is_array() || e.size() != 2 || !e[0].is_string() || !e[1].is_string())
                bad(path, "cover edges must be [lower, upper] name pairs");
            edges.emplace_back(e[0].get<std::string>(), e[1].get<std::string>());
        }
        return from_cover_relation(std::move(elements), std::move(edges));
    }
    if (kind == "table") return table_from_json(doc, path);
    bad(path, "unknown lattice kind '" + kind + "'");
}

}  // namespace

FiniteLattice load_lattice(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("cannot open lattice file: " + path);
    json doc;
    try {
        in >> doc;
    } catch (const json::exception& e) {
        bad(path, std::string("not valid JSON: ") + e.what());
    }
    return from_json(doc, path);
}

FiniteLattice lattice_from_spec(const std::string& spec) {
    auto colon = spec.find(':');
    const std::string head = spec.substr(0, colon);
    const std::string arg = colon == std::string::npos ? "" : spec.substr(colon + 1);
    auto int_arg = [&]() {
        try {
            std::size_t used = 0;
            int v = std::stoi(arg, &used);
            if (used != arg.size()) throw std::invalid_argument(arg);
            return v;
        } catch (const std::exception&) {
            throw std::invalid_argument("lattice spec '" + spec + "' needs an integer argument");
        }
    };
    if (head == "chain") return chain_lattice(int_arg());
    if (head == "powerset") {
        int n = int_arg();
        if (n < 0 || n > 8)
            throw std::invalid_argument("powerset spec supports 0..8 atoms; got " + arg);
        std::vector<std::string> atoms;
        for (int i = 0; i < n; ++i) atoms.push_back(std::string(1, static_cast<char>('a' + i)));
        return powerset_lattice(std::move(atoms));
    }
    if (spec == "two") return two_point_lattice();
    if (spec == "m3") return diamond_m3();
    if (spec == "n5") return pentagon_n5();
    if (head == "file" && !arg.empty()) return load_lattice(arg);
    throw std::invalid_argument("unknown lattice spec '" + spec +
                                "' (use chain:N, powerset:N, two, m3, n5, file:<path>)");
}

}  // namespace mnesor
