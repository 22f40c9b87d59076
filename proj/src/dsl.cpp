#include "mnesor/dsl.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

namespace mnesor::dsl {

namespace {

std::string join_words(const std::vector<std::string>& words, const char* sep) {
    std::string out;
    for (std::size_t i = 0; i < words.size(); ++i) {
        if (i) out += sep;
        out += words[i];
    }
    return out;
}

}  // namespace

ParseError::ParseError(std::size_t offset, std::vector<std::string> expected,
                       const std::string& found)
    : std::runtime_error("parse error at offset " + std::to_string(offset) + ": expected " +
                         join_words(expected, " or ") + ", found " + found),
      offset_(offset),
      expected_(std::move(expected)) {}

EvalError::EvalError(std::size_t offset, const std::string& msg)
    : std::runtime_error("evaluation error at offset " + std::to_string(offset) + ": " + msg),
      offset_(offset) {}

// ---------------------------------------------------------------------------
// Lexer.

namespace {

enum class Tok {
    LBracket, RBracket, LBrace, RBrace, LParen, RParen,
    Plus, Star, Pipe, Amp, Eq,
    Zero, Top, Bot, Name, End,
};

struct Token {
    Tok kind;
    std::size_t offset;
    std::string text;  // Name only
};

std::string describe(const Token& t) {
    switch (t.kind) {
        case Tok::LBracket: return "'['";
        case Tok::RBracket: return "']'";
        case Tok::LBrace: return "'{'";
        case Tok::RBrace: return "'}'";
        case Tok::LParen: return "'('";
        case Tok::RParen: return "')'";
        case Tok::Plus: return "'+'";
        case Tok::Star: return "'*'";
        case Tok::Pipe: return "'|'";
        case Tok::Amp: return "'&'";
        case Tok::Eq: return "'='";
        case Tok::Zero: return "'0'";
        case Tok::Top: return "'top'";
        case Tok::Bot: return "'bot'";
        case Tok::Name: return "name '" + t.text + "'";
        case Tok::End: return "end of input";
    }
    return "?";
}

bool name_start(char c) { return std::isalpha(static_cast<unsigned char>(c)) || c == '_'; }
bool name_char(char c) { return std::isalnum(static_cast<unsigned char>(c)) || c == '_'; }

std::vector<Token> lex(std::string_view src) {
    std::vector<Token> out;
    std::size_t i = 0;
    while (i < src.size()) {
        char c = src[i];
        if (c == ' ' || c == '\t' || c == '\r' || c == '\n') {
            ++i;
            continue;
        }
        std::size_t off = i;
        switch (c) {
            case '[': out.push_back({Tok::LBracket, off, {}}); ++i; continue;
            case ']': out.push_back({Tok::RBracket, off, {}}); ++i; continue;
            case '{': out.push_back({Tok::LBrace, off, {}}); ++i; continue;
            case '}': out.push_back({Tok::RBrace, off, {}}); ++i; continue;
            case '(': out.push_back({Tok::LParen, off, {}}); ++i; continue;
            case ')': out.push_back({Tok::RParen, off, {}}); ++i; continue;
            case '+': out.push_back({Tok::Plus, off, {}}); ++i; continue;
            case '*': out.push_back({Tok::Star, off, {}}); ++i; continue;
            case '|': out.push_back({Tok::Pipe, off, {}}); ++i; continue;
            case '&': out.push_back({Tok::Amp, off, {}}); ++i; continue;
            case '=': out.push_back({Tok::Eq, off, {}}); ++i; continue;
            case '0': out.push_back({Tok::Zero, off, {}}); ++i; continue;
            default: break;
        }
        if (name_start(c)) {
            std::size_t j = i;
            while (j < src.size() && name_char(src[j])) ++j;
            std::string word(src.substr(i, j - i));
            if (word == "top")
                out.push_back({Tok::Top, off, {}});
            else if (word == "bot")
                out.push_back({Tok::Bot, off, {}});
            else
                out.push_back({Tok::Name, off, std::move(word)});
            i = j;
            continue;
        }
        throw ParseError(off, {"a known token"}, "character '" + std::string(1, c) + "'");
    }
    out.push_back({Tok::End, src.size(), {}});
    return out;
}

// ---------------------------------------------------------------------------
// Recursive-descent parser, one function per grammar rule.

class Parser {
  public:
    explicit Parser(std::string_view src) : toks_(lex(src)) {}

    ExprPtr parse_full_expr() {
        ExprPtr e = parse_expr();
        expect_end();
        return e;
    }

    Statement parse_full_statement() {
        Statement st;
        if (peek().kind == Tok::Name && peek(1).kind == Tok::Eq) {
            st.target = peek().text;
            pos_ += 2;
        }
        st.expr = parse_expr();
        expect_end();
        return st;
    }

  private:
    const Token& peek(std::size_t ahead = 0) const {
        std::size_t i = std::min(pos_ + ahead, toks_.size() - 1);
        return toks_[i];
    }
    const Token& take() { return toks_[pos_++]; }
    bool at(Tok k) const { return peek().kind == k; }
    bool accept(Tok k) {
        if (!at(k)) return false;
        ++pos_;
        return true;
    }

    void expect_end() {
        if (!at(Tok::End))
            throw ParseError(peek().offset, {"'+'", "'*'", "end of input"}, describe(peek()));
    }

    static std::shared_ptr<Expr> node(Expr::Kind kind, std::size_t offset) {
        auto e = std::make_shared<Expr>();
        e->kind = kind;
        e->offset = offset;
        return e;
    }

    ExprPtr parse_expr() {
        ExprPtr e = parse_term();
        while (at(Tok::Plus)) {
            std::size_t off = take().offset;
            auto n = std::make_shared<Expr>();
            n->kind = Expr::Kind::Add;
            n->offset = off;
            n->a = std::move(e);
            n->b = parse_term();
            e = std::move(n);
        }
        return e;
    }

    ExprPtr parse_term() {
        ExprPtr e = parse_atom();
        while (at(Tok::Star)) {
            std::size_t off = take().offset;
            auto n = std::make_shared<Expr>();
            n->kind = Expr::Kind::Act;
            n->offset = off;
            n->a = std::move(e);
            n->b = parse_gfactor();
            e = std::move(n);
        }
        return e;
    }

    ExprPtr parse_atom() {
        const Token& t = peek();
        switch (t.kind) {
            case Tok::LBracket: {
                std::size_t off = take().offset;
                auto e = std::make_shared<Expr>();
                e->kind = Expr::Kind::Tuple;
                e->offset = off;
                while (at(Tok::Name)) e->names.push_back(take().text);
                if (!accept(Tok::RBracket))
                    throw ParseError(peek().offset, {"name", "']'"}, describe(peek()));
                return e;
            }
            case Tok::Zero:
                return node(Expr::Kind::Zero, take().offset);
            case Tok::Name: {
                auto e = node(Expr::Kind::MName, t.offset);
                e->name = take().text;
                return e;
            }
            case Tok::LParen: {
                take();
                ExprPtr e = parse_expr();
                if (!accept(Tok::RParen))
                    throw ParseError(peek().offset, {"'+'", "'*'", "')'"}, describe(peek()));
                return e;
            }
            default:
                throw ParseError(t.offset, {"'['", "'0'", "name", "'('"}, describe(t));
        }
    }

    ExprPtr parse_gexpr() {
        ExprPtr g = parse_gfactor();
        while (at(Tok::Pipe)) {
            std::size_t off = take().offset;
            auto n = std::make_shared<Expr>();
            n->kind = Expr::Kind::Join;
            n->offset = off;
            n->a = std::move(g);
            n->b = parse_gfactor();
            g = std::move(n);
        }
        return g;
    }

    ExprPtr parse_gfactor() {
        ExprPtr g = parse_gatom();
        while (at(Tok::Amp)) {
            std::size_t off = take().offset;
            auto n = std::make_shared<Expr>();
            n->kind = Expr::Kind::Meet;
            n->offset = off;
            n->a = std::move(g);
            n->b = parse_gatom();
            g = std::move(n);
        }
        return g;
    }

    ExprPtr parse_gatom() {
        const Token& t = peek();
        switch (t.kind) {
            case Tok::LBrace: {
                std::size_t off = take().offset;
                auto e = std::make_shared<Expr>();
                e->kind = Expr::Kind::Set;
                e->offset = off;
                while (at(Tok::Name)) e->names.push_back(take().text);
                if (!accept(Tok::RBrace))
                    throw ParseError(peek().offset, {"name", "'}'"}, describe(peek()));
                return e;
            }
            case Tok::Top:
                return node(Expr::Kind::Top, take().offset);
            case Tok::Bot:
                return node(Expr::Kind::Bot, take().offset);
            case Tok::Name: {
                auto e = node(Expr::Kind::GName, t.offset);
                e->name = take().text;
                return e;
            }
            case Tok::LParen: {
                take();
                ExprPtr g = parse_gexpr();
                if (!accept(Tok::RParen))
                    throw ParseError(peek().offset, {"'|'", "'&'", "')'"}, describe(peek()));
                return g;
            }
            default:
                throw ParseError(t.offset, {"'{'", "'top'", "'bot'", "name", "'('"}, describe(t));
        }
    }

    std::vector<Token> toks_;
    std::size_t pos_ = 0;
};

}  // namespace

ExprPtr parse(std::string_view src) { return Parser(src).parse_full_expr(); }

Statement parse_statement(std::string_view src) { return Parser(src).parse_full_statement(); }

// ---------------------------------------------------------------------------

bool structurally_equal(const Expr& x, const Expr& y) {
    if (x.kind != y.kind || x.names != y.names || x.name != y.name) return false;
    if (static_cast<bool>(x.a) != static_cast<bool>(y.a)) return false;
    if (static_cast<bool>(x.b) != static_cast<bool>(y.b)) return false;
    if (x.a && !structurally_equal(*x.a, *y.a)) return false;
    if (x.b && !structurally_equal(*x.b, *y.b)) return false;
    return true;
}

namespace {

// Parenthesization is the minimum the grammar requires: a sum as the right
// operand of `+`, a sum on the mnesor side of `*`, a join under `*` or
// `&`, and right-nested `|`/`&` chains.
std::string print_paren(const Expr& e, bool parens) {
    std::string s = print(e);
    return parens ? "(" + s + ")" : s;
}

}  // namespace

std::string print(const Expr& e) {
    using K = Expr::Kind;
    switch (e.kind) {
        case K::Tuple: return "[" + join_words(e.names, " ") + "]";
        case K::Zero: return "0";
        case K::MName: return e.name;
        case K::Add:
            return print(*e.a) + " + " + print_paren(*e.b, e.b->kind == K::Add);
        case K::Act:
            return print_paren(*e.a, e.a->kind == K::Add) + "*" +
                   print_paren(*e.b, e.b->kind == K::Join || e.b->kind == K::Meet);
        case K::Set: return "{" + join_words(e.names, " ") + "}";
        case K::Top: return "top";
        case K::Bot: return "bot";
        case K::GName: return e.name;
        case K::Join:
            return print(*e.a) + " | " + print_paren(*e.b, e.b->kind == K::Join);
        case K::Meet:
            return print_paren(*e.a, e.a->kind == K::Join) + " & " +
                   print_paren(*e.b, e.b->kind == K::Join || e.b->kind == K::Meet);
    }
    throw std::logic_error("unreachable expression kind");
}

// ---------------------------------------------------------------------------
// Evaluation.

namespace {

const MnesorSpace& space_of(const Environment& env) {
    if (!env.space) throw std::logic_error("environment has no backing model");
    return *env.space;
}

bool is_granular_kind(Expr::Kind k) {
    using K = Expr::Kind;
    return k == K::Set || k == K::Top || k == K::Bot || k == K::GName || k == K::Join ||
           k == K::Meet;
}

}  // namespace

ElemId eval_granular(const Expr& e, const Environment& env) {
    const MnesorSpace& s = space_of(env);
    const FiniteLattice& l = s.lattice();
    using K = Expr::Kind;
    switch (e.kind) {
        case K::Set: {
            if (!l.is_powerset())
                throw EvalError(e.offset, "set literals need a powerset granular lattice; this "
                                          "model's lattice is " + l.descriptor());
            auto mask = l.mask_of(e.names);
            if (!mask) {
                for (const auto& n : e.names)
                    if (std::find(l.atoms().begin(), l.atoms().end(), n) == l.atoms().end())
                        throw EvalError(e.offset, "unknown atom '" + n + "' in set literal");
                throw EvalError(e.offset, "malformed set literal");
            }
            return *mask;
        }
        case K::Top:
            return l.top_id();
        case K::Bot: {
            auto b = l.bottom_id();
            if (!b) throw EvalError(e.offset, "lattice " + l.descriptor() + " has no bottom");
            return *b;
        }
        case K::GName: {
            auto it = env.granulars.find(e.name);
            if (it != env.granulars.end()) return it->second;
            if (env.mnesors.count(e.name))
                throw EvalError(e.offset, "name '" + e.name +
                                              "' is bound as a mnesor; a granular is needed here");
            throw EvalError(e.offset, "unbound granular name '" + e.name + "'");
        }
        case K::Join:
            return l.join(eval_granular(*e.a, env), eval_granular(*e.b, env));
        case K::Meet:
            return l.meet(eval_granular(*e.a, env), eval_granular(*e.b, env));
        default:
            throw EvalError(e.offset, "mnesor expression where a granular is needed");
    }
}

MnesorSpace::Value eval(const Expr& e, const Environment& env) {
    const MnesorSpace& s = space_of(env);
    using K = Expr::Kind;
    switch (e.kind) {
        case K::Tuple:
            try {
                return s.tuple_literal(e.names);
            } catch (const std::invalid_argument& ex) {
                throw EvalError(e.offset, ex.what());
            }
        case K::Zero:
            return s.zero();
        case K::MName: {
            auto it = env.mnesors.find(e.name);
            if (it != env.mnesors.end()) return it->second;
            if (env.granulars.count(e.name))
                throw EvalError(e.offset, "name '" + e.name +
                                              "' is bound as a granular; a mnesor is needed here");
            throw EvalError(e.offset, "unbound mnesor name '" + e.name + "'");
        }
        case K::Add:
            return s.add(eval(*e.a, env), eval(*e.b, env));
        case K::Act:
            return s.act(eval(*e.a, env), eval_granular(*e.b, env));
        default:
            if (is_granular_kind(e.kind))
                throw EvalError(e.offset, "granular expression where a mnesor is needed");
            throw std::logic_error("unreachable expression kind");
    }
}

std::string exec_statement(const Statement& st, Environment& env) {
    MnesorSpace::Value v = eval(*st.expr, env);
    std::string rendered = space_of(env).render(v);
    if (!st.target.empty()) env.mnesors[st.target] = std::move(v);
    return rendered;
}

std::vector<std::string> run_script(const std::string& text, Environment& env) {
    std::vector<std::string> out;
    std::istringstream lines(text);
    std::string line;
    for (std::size_t lineno = 1; std::getline(lines, line); ++lineno) {
        if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
        bool blank = std::all_of(line.begin(), line.end(), [](unsigned char c) {
            return std::isspace(c);
        });
        if (blank) continue;
        try {
            out.push_back(exec_statement(parse_statement(line), env));
        } catch (const std::exception& ex) {
            throw std::runtime_error("line " + std::to_string(lineno) + ": " + ex.what());
        }
    }
    return out;
}

}  // namespace mnesor::dsl
