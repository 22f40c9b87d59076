#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

#include "CLI11.hpp"
#include "mnesor/checker.hpp"
#include "mnesor/dsl.hpp"
#include "mnesor/lattice_io.hpp"
#include "mnesor/lattice_model.hpp"
#include "mnesor/seq_model.hpp"
#include "mnesor/structure.hpp"

namespace {

using namespace mnesor;

struct ModelOptions {
    std::string model = "seq";
    std::string fixture;
    std::string universe;           // comma-separated atom names
    int universe_limit = -1;        // keep only the first N fixture atoms
    std::string lattice_spec = "chain:4";  // self model
};

struct BuiltModel {
    std::unique_ptr<MnesorSpace> space;
    dsl::Environment env;
    std::vector<std::pair<std::string, ElemId>> named_granulars;
};

std::vector<std::string> split_commas(const std::string& s) {
    std::vector<std::string> out;
    std::string cur;
    for (char c : s) {
        if (c == ',') {
            out.push_back(cur);
            cur.clear();
        } else {
            cur += c;
        }
    }
    out.push_back(cur);
    return out;
}

bool identifier_like(const std::string& s) {
    if (s.empty() || s == "top" || s == "bot") return false;
    if (!(std::isalpha(static_cast<unsigned char>(s[0])) || s[0] == '_')) return false;
    for (char c : s)
        if (!(std::isalnum(static_cast<unsigned char>(c)) || c == '_')) return false;
    return true;
}

BuiltModel build_model(const ModelOptions& opts) {
    BuiltModel built;
    if (opts.model == "seq") {
        std::vector<std::string> atoms;
        std::vector<std::pair<std::string, ElemId>> granulars;
        if (!opts.universe.empty()) {
            atoms = split_commas(opts.universe);
        } else if (!opts.fixture.empty()) {
            SeqFixture fx = load_seq_fixture(opts.fixture);
            atoms = fx.universe.atoms();
            granulars = fx.granulars;
        } else {
            atoms = {"a", "b", "c"};
        }
        if (opts.universe_limit >= 0 && static_cast<std::size_t>(opts.universe_limit) < atoms.size()) {
            atoms.resize(static_cast<std::size_t>(opts.universe_limit));
            const ElemId keep = static_cast<ElemId>((std::uint64_t{1} << atoms.size()) - 1);
            for (auto& [name, mask] : granulars) mask &= keep;
        }
        auto space = std::make_unique<SeqSpace>(Universe(atoms));
        built.env.space = space.get();
        for (const auto& [name, mask] : granulars) built.env.granulars[name] = mask;
        built.named_granulars = std::move(granulars);
        built.space = std::move(space);
    } else if (opts.model == "self") {
        FiniteLattice l = lattice_from_spec(opts.lattice_spec);
        if (l.size() > 256)
            throw std::invalid_argument("self model is capped at 256 lattice elements; " +
                                        l.descriptor() + " has " + std::to_string(l.size()));
        auto space = make_self_action(std::move(l));
        built.env.space = space.get();
        // Element labels double as names in both sorts when they scan as
        // identifiers; top/bot are covered by the keywords.
        const FiniteLattice& lat = space->lattice();
        for (ElemId i = 0; i < static_cast<ElemId>(lat.size()); ++i) {
            std::string label = lat.label(i);
            if (!identifier_like(label)) continue;
            built.env.mnesors[label] = MnesorSpace::Value(i);
            built.env.granulars[label] = i;
        }
        built.space = std::move(space);
    } else {
        throw std::invalid_argument("unknown model '" + opts.model + "' (use seq or self)");
    }
    return built;
}

void add_model_options(CLI::App* cmd, ModelOptions& opts) {
    cmd->add_option("--model", opts.model, "model kind: seq or self")
        ->check(CLI::IsMember({"seq", "self"}));
    cmd->add_option("--fixture", opts.fixture, "seq model: universe+granulars JSON file");
    cmd->add_option("--universe", opts.universe, "seq model: comma-separated atom names");
    cmd->add_option("--universe-limit", opts.universe_limit,
                    "seq model: keep only the first N atoms of the universe");
    cmd->add_option("--lattice", opts.lattice_spec,
                    "self model: chain:N, powerset:N, two, m3, n5, file:<path>");
}

void write_file(const std::string& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::invalid_argument("cannot write file: " + path);
    out << content;
}

// Member listings are printed in full only for small lattices; big ones
// get counts plus the named granulars that belong.
void print_members(const FiniteLattice& l, const std::vector<ElemId>& members,
                   const std::vector<std::pair<std::string, ElemId>>& named) {
    std::cout << "members: " << members.size() << " of " << l.size() << " granulars\n";
    if (l.size() <= 64) {
        std::cout << "list:";
        for (ElemId m : members) std::cout << " " << l.label(m);
        std::cout << "\n";
    }
    std::string named_in;
    for (const auto& [name, mask] : named) {
        if (std::binary_search(members.begin(), members.end(), mask)) named_in += " " + name;
    }
    if (!named.empty())
        std::cout << "named members:" << (named_in.empty() ? " (none)" : named_in) << "\n";
}

bool closed_fast(const FiniteLattice& l, const std::vector<ElemId>& members) {
    std::vector<char> present(l.size(), 0);
    for (ElemId m : members) present[static_cast<std::size_t>(m)] = 1;
    for (ElemId a : members)
        for (ElemId b : members)
            if (!present[static_cast<std::size_t>(l.join(a, b))] ||
                !present[static_cast<std::size_t>(l.meet(a, b))])
                return false;
    return true;
}

int cmd_check(const ModelOptions& mopts, const std::string& out_path, bool json_out,
              unsigned jobs, std::size_t max_mnesors) {
    BuiltModel built = build_model(mopts);
    CheckBounds bounds{max_mnesors};
    ComplianceReport report = check_all(*built.space, bounds, jobs);
    std::string json = report_json(report);
    if (!out_path.empty()) write_file(out_path, json);
    std::cout << (json_out ? json : report_table(report));
    return report.all_pass() ? 0 : 1;
}

int cmd_eval(const ModelOptions& mopts, const std::string& expr, const std::string& script,
             bool repl) {
    BuiltModel built = build_model(mopts);
    if (!expr.empty()) {
        std::cout << dsl::exec_statement(dsl::parse_statement(expr), built.env) << "\n";
        return 0;
    }
    if (!script.empty()) {
        std::ifstream in(script);
        if (!in) throw std::invalid_argument("cannot open script: " + script);
        std::stringstream buf;
        buf << in.rdbuf();
        for (const auto& line : dsl::run_script(buf.str(), built.env)) std::cout << line << "\n";
        return 0;
    }
    if (repl) {
        std::string line;
        std::cout << "mnesor> " << std::flush;
        while (std::getline(std::cin, line)) {
            if (line == "exit" || line == "quit") break;
            if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
            bool blank = true;
            for (char c : line)
                if (!std::isspace(static_cast<unsigned char>(c))) blank = false;
            if (!blank) {
                try {
                    std::cout << dsl::exec_statement(dsl::parse_statement(line), built.env)
                              << "\n";
                } catch (const std::exception& e) {
                    std::cout << "error: " << e.what() << "\n";
                }
            }
            std::cout << "mnesor> " << std::flush;
        }
        return 0;
    }
    // No -e, no --script: read a script from standard input.
    std::stringstream buf;
    buf << std::cin.rdbuf();
    for (const auto& line : dsl::run_script(buf.str(), built.env)) std::cout << line << "\n";
    return 0;
}

int cmd_sublattice(const ModelOptions& mopts, const std::string& expr, bool annihilator) {
    BuiltModel built = build_model(mopts);
    MnesorSpace::Value x = dsl::eval(*dsl::parse(expr), built.env);
    std::cout << "x = " << built.space->render(x) << "\n";
    Sublattice sub = annihilator ? annihilators(*built.space, x) : stabilizers(*built.space, x);
    print_members(sub.parent, sub.members, built.named_granulars);
    std::cout << "closure: " << (closed_fast(sub.parent, sub.members)
                                     ? "closed under join and meet (sublattice)"
                                     : "NOT closed — sublattice property fails")
              << "\n";
    return 0;
}

int cmd_witness(const ModelOptions& mopts, const std::string& xexpr, const std::string& yexpr) {
    BuiltModel built = build_model(mopts);
    MnesorSpace::Value x = dsl::eval(*dsl::parse(xexpr), built.env);
    MnesorSpace::Value y = dsl::eval(*dsl::parse(yexpr), built.env);
    std::cout << "x = " << built.space->render(x) << "\n";
    std::cout << "y = " << built.space->render(y) << "\n";
    std::vector<Granular> wits = absorption_witnesses(*built.space, x, y);
    std::vector<ElemId> ids;
    ids.reserve(wits.size());
    for (const auto& w : wits) ids.push_back(w.id());
    print_members(built.space->lattice(), ids, built.named_granulars);
    bool all_stab = true;
    for (const auto& w : wits)
        if (!built.space->equal(built.space->act(x, w.id()), x)) all_stab = false;
    std::cout << "every witness stabilizes x: " << (all_stab ? "yes" : "NO") << "\n";
    return 0;
}

int cmd_hasse(const ModelOptions& mopts, const std::string& out_path, std::size_t bound) {
    BuiltModel built = build_model(mopts);
    HasseResult h = hasse(*built.space, bound);
    if (!h.ok) {
        std::cerr << "error: " << h.diagnostic << "\n";
        return 1;
    }
    std::string dot = hasse_dot(h);
    if (!out_path.empty()) {
        write_file(out_path, dot);
        std::cout << h.elements.size() << " elements, " << h.edges.size() << " edges -> "
                  << out_path << "\n";
    } else {
        std::cout << dot;
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"mnesor spaces workbench: models, law checking, structure, expressions"};
    app.require_subcommand(0, 1);
    bool show_catalog = false;
    app.add_flag("--catalog", show_catalog, "print the law catalog as JSON and exit");

    ModelOptions check_m, eval_m, stab_m, annih_m, wit_m, hasse_m;
    std::string check_out, eval_expr, eval_script, stab_expr, annih_expr, wit_x, wit_y, hasse_out;
    bool check_json = false, eval_repl = false;
    unsigned check_jobs = 1;
    std::size_t check_max = CheckBounds{}.max_mnesors;
    std::size_t hasse_max = 200;

    CLI::App* check = app.add_subcommand("check", "run every catalog law against a model");
    add_model_options(check, check_m);
    check->add_option("--out", check_out, "write the JSON report to this file");
    check->add_flag("--json", check_json, "print JSON instead of a table");
    check->add_option("--jobs", check_jobs, "worker threads for law evaluation");
    check->add_option("--max-mnesors", check_max, "carrier enumeration cap");

    CLI::App* eval = app.add_subcommand("eval", "evaluate expressions against a model");
    add_model_options(eval, eval_m);
    eval->add_option("-e,--expr", eval_expr, "expression (or assignment) to evaluate");
    eval->add_option("--script", eval_script, "script file, one statement per line");
    eval->add_flag("--repl", eval_repl, "interactive session");

    CLI::App* stab = app.add_subcommand("stab", "stabilizer sublattice of an expression");
    add_model_options(stab, stab_m);
    stab->add_option("-e,--expr", stab_expr, "mnesor expression")->required();

    CLI::App* annih = app.add_subcommand("annih", "annihilator sublattice of an expression");
    add_model_options(annih, annih_m);
    annih->add_option("-e,--expr", annih_expr, "mnesor expression")->required();

    CLI::App* witness = app.add_subcommand("witness", "absorption witnesses for x against y");
    add_model_options(witness, wit_m);
    witness->add_option("-x", wit_x, "mnesor expression for x")->required();
    witness->add_option("-y", wit_y, "mnesor expression for y")->required();

    CLI::App* hasse_cmd = app.add_subcommand("hasse", "prefix-order Hasse diagram as DOT");
    add_model_options(hasse_cmd, hasse_m);
    hasse_cmd->add_option("--out", hasse_out, "write DOT here instead of standard output");
    hasse_cmd->add_option("--max-mnesors", hasse_max, "carrier enumeration cap");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (show_catalog) {
            std::cout << catalog_json();
            return 0;
        }
        if (check->parsed()) return cmd_check(check_m, check_out, check_json, check_jobs, check_max);
        if (eval->parsed()) return cmd_eval(eval_m, eval_expr, eval_script, eval_repl);
        if (stab->parsed()) return cmd_sublattice(stab_m, stab_expr, false);
        if (annih->parsed()) return cmd_sublattice(annih_m, annih_expr, true);
        if (witness->parsed()) return cmd_witness(wit_m, wit_x, wit_y);
        if (hasse_cmd->parsed()) return cmd_hasse(hasse_m, hasse_out, hasse_max);
        std::cout << app.help();
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
}
