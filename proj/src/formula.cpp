#include "topomodal/formula.hpp"

#include <algorithm>
#include <cstring>
#include <functional>
#include <map>
#include <sstream>

namespace topomodal {

struct FormulaNode {
    Kind kind;
    std::string name;  // Var only
    std::vector<Formula> kids;
    std::size_t hash;
};

const char* kind_name(Kind k) noexcept {
    switch (k) {
        case Kind::Var: return "var";
        case Kind::Bot: return "bot";
        case Kind::Top: return "top";
        case Kind::Not: return "not";
        case Kind::And: return "and";
        case Kind::Or: return "or";
        case Kind::Imp: return "imp";
        case Kind::Iff: return "iff";
        case Kind::Box: return "box";
        case Kind::Dia: return "dia";
        case Kind::DBox: return "dbox";
        case Kind::DDia: return "ddia";
        case Kind::ABox: return "abox";
        case Kind::ADia: return "adia";
    }
    return "?";
}

bool is_unary(Kind k) noexcept {
    switch (k) {
        case Kind::Not:
        case Kind::Box:
        case Kind::Dia:
        case Kind::DBox:
        case Kind::DDia:
        case Kind::ABox:
        case Kind::ADia: return true;
        default: return false;
    }
}

bool is_binary(Kind k) noexcept {
    switch (k) {
        case Kind::And:
        case Kind::Or:
        case Kind::Imp:
        case Kind::Iff: return true;
        default: return false;
    }
}

bool is_modal(Kind k) noexcept {
    switch (k) {
        case Kind::Box:
        case Kind::Dia:
        case Kind::DBox:
        case Kind::DDia:
        case Kind::ABox:
        case Kind::ADia: return true;
        default: return false;
    }
}

Kind Formula::kind() const noexcept { return node_->kind; }

const std::string& Formula::var_name() const {
    if (node_->kind != Kind::Var) throw std::logic_error("var_name on non-variable");
    return node_->name;
}

std::size_t Formula::arity() const noexcept { return node_->kids.size(); }

const Formula& Formula::child(std::size_t i) const { return node_->kids.at(i); }

std::size_t Formula::hash() const noexcept { return node_->hash; }

Formula Formula::make(Kind k, std::vector<Formula> kids, std::string name) {
    std::size_t h = std::hash<int>()(static_cast<int>(k));
    h = h * 1000003u + std::hash<std::string>()(name);
    for (const auto& c : kids) h = h * 1000003u + c.hash();
    auto node = std::make_shared<FormulaNode>(
        FormulaNode{k, std::move(name), std::move(kids), h});
    return Formula(std::move(node));
}

bool Formula::operator==(const Formula& other) const {
    if (node_ == other.node_) return true;
    if (node_->hash != other.node_->hash) return false;
    if (node_->kind != other.node_->kind) return false;
    if (node_->name != other.node_->name) return false;
    if (node_->kids.size() != other.node_->kids.size()) return false;
    for (std::size_t i = 0; i < node_->kids.size(); ++i)
        if (!(node_->kids[i] == other.node_->kids[i])) return false;
    return true;
}

bool Formula::operator<(const Formula& other) const {
    if (node_ == other.node_) return false;
    if (node_->kind != other.node_->kind) return node_->kind < other.node_->kind;
    if (node_->name != other.node_->name) return node_->name < other.node_->name;
    if (node_->kids.size() != other.node_->kids.size())
        return node_->kids.size() < other.node_->kids.size();
    for (std::size_t i = 0; i < node_->kids.size(); ++i) {
        if (node_->kids[i] < other.node_->kids[i]) return true;
        if (other.node_->kids[i] < node_->kids[i]) return false;
    }
    return false;
}

Formula Var(std::string name) { return Formula::make(Kind::Var, {}, std::move(name)); }
Formula Bot() { return Formula::make(Kind::Bot, {}); }
Formula Top() { return Formula::make(Kind::Top, {}); }
Formula Not(Formula f) { return Formula::make(Kind::Not, {std::move(f)}); }
Formula And(Formula a, Formula b) { return Formula::make(Kind::And, {std::move(a), std::move(b)}); }
Formula Or(Formula a, Formula b) { return Formula::make(Kind::Or, {std::move(a), std::move(b)}); }
Formula Imp(Formula a, Formula b) { return Formula::make(Kind::Imp, {std::move(a), std::move(b)}); }
Formula Iff(Formula a, Formula b) { return Formula::make(Kind::Iff, {std::move(a), std::move(b)}); }
Formula Box(Formula f) { return Formula::make(Kind::Box, {std::move(f)}); }
Formula Dia(Formula f) { return Formula::make(Kind::Dia, {std::move(f)}); }
Formula DBox(Formula f) { return Formula::make(Kind::DBox, {std::move(f)}); }
Formula DDia(Formula f) { return Formula::make(Kind::DDia, {std::move(f)}); }
Formula ABox(Formula f) { return Formula::make(Kind::ABox, {std::move(f)}); }
Formula ADia(Formula f) { return Formula::make(Kind::ADia, {std::move(f)}); }

Signature signature_of(const Formula& f) {
    bool diff = false, univ = false;
    std::function<void(const Formula&)> walk = [&](const Formula& g) {
        switch (g.kind()) {
            case Kind::DBox:
            case Kind::DDia: diff = true; break;
            case Kind::ABox:
            case Kind::ADia: univ = true; break;
            default: break;
        }
        for (std::size_t i = 0; i < g.arity(); ++i) walk(g.child(i));
    };
    walk(f);
    if (diff && univ) return Signature::FULL;
    if (diff) return Signature::BOX_DIFF;
    if (univ) return Signature::BOX_ALL;
    return Signature::BOX_ONLY;
}

// ── Lexer ────────────────────────────────────────────────────────────────

namespace {

enum class Tok {
    Ident,
    False,
    True,
    Not,
    And,
    Or,
    Imp,
    Iff,
    Box,
    Dia,
    DBox,
    DDia,
    ABox,
    ADia,
    LParen,
    RParen,
    End,
};

struct Token {
    Tok tok;
    std::string text;
    std::size_t offset;
};

struct Lexer {
    const std::string& s;
    std::size_t pos = 0;

    explicit Lexer(const std::string& text) : s(text) {}

    bool at(const char* lit) const {
        std::size_t n = std::strlen(lit);
        return s.compare(pos, n, lit) == 0;
    }

    Token next() {
        while (pos < s.size() && (s[pos] == ' ' || s[pos] == '\t' || s[pos] == '\n' ||
                                  s[pos] == '\r'))
            ++pos;
        std::size_t start = pos;
        if (pos >= s.size()) return {Tok::End, "", start};

        struct Fixed {
            const char* lit;
            Tok tok;
        };
        // Longest match first. Unicode glyphs are input-only aliases.
        static const Fixed fixed[] = {
            {"<->", Tok::Iff},        {"->", Tok::Imp},       {"[!=]", Tok::DBox},
            {"<!=>", Tok::DDia},      {"[A]", Tok::ABox},     {"<E>", Tok::ADia},
            {"[]", Tok::Box},         {"<>", Tok::Dia},       {"~", Tok::Not},
            {"&", Tok::And},          {"|", Tok::Or},         {"(", Tok::LParen},
            {")", Tok::RParen},       {"↔", Tok::Iff},   {"→", Tok::Imp},
            {"⊃", Tok::Imp},     {"∧", Tok::And},   {"∨", Tok::Or},
            {"¬", Tok::Not},     {"□", Tok::Box},   {"◇", Tok::Dia},
            {"⊥", Tok::False},   {"⊤", Tok::True},  {"[≠]", Tok::DBox},
            {"⟨≠⟩", Tok::DDia}, {"[∀]", Tok::ABox},
            {"⟨∃⟩", Tok::ADia},
        };
        for (const auto& fx : fixed) {
            if (at(fx.lit)) {
                pos += std::strlen(fx.lit);
                return {fx.tok, fx.lit, start};
            }
        }
        char c = s[pos];
        if ((c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z') || c == '_') {
            std::size_t end = pos + 1;
            while (end < s.size() &&
                   ((s[end] >= 'a' && s[end] <= 'z') || (s[end] >= 'A' && s[end] <= 'Z') ||
                    (s[end] >= '0' && s[end] <= '9') || s[end] == '_'))
                ++end;
            std::string word = s.substr(pos, end - pos);
            pos = end;
            if (word == "false") return {Tok::False, word, start};
            if (word == "true") return {Tok::True, word, start};
            return {Tok::Ident, word, start};
        }
        throw ParseError(start, "unexpected character '" + std::string(1, c) + "'");
    }
};

struct Parser {
    std::vector<Token> toks;
    std::size_t i = 0;

    explicit Parser(const std::string& text) {
        Lexer lx(text);
        for (;;) {
            Token t = lx.next();
            toks.push_back(t);
            if (t.tok == Tok::End) break;
        }
    }

    const Token& peek() const { return toks[i]; }
    Token take() { return toks[i++]; }

    Formula parse_top() {
        Formula f = parse_iff();
        if (peek().tok != Tok::End)
            throw ParseError(peek().offset, "expected end of input, found '" + peek().text + "'");
        return f;
    }

    Formula parse_iff() {
        Formula lhs = parse_imp();
        if (peek().tok == Tok::Iff) {
            take();
            return Iff(std::move(lhs), parse_iff());
        }
        return lhs;
    }

    Formula parse_imp() {
        Formula lhs = parse_or();
        if (peek().tok == Tok::Imp) {
            take();
            return Imp(std::move(lhs), parse_imp());
        }
        return lhs;
    }

    Formula parse_or() {
        Formula lhs = parse_and();
        if (peek().tok == Tok::Or) {
            take();
            return Or(std::move(lhs), parse_or());
        }
        return lhs;
    }

    Formula parse_and() {
        Formula lhs = parse_unary();
        if (peek().tok == Tok::And) {
            take();
            return And(std::move(lhs), parse_and());
        }
        return lhs;
    }

    Formula parse_unary() {
        switch (peek().tok) {
            case Tok::Not: take(); return Not(parse_unary());
            case Tok::Box: take(); return Box(parse_unary());
            case Tok::Dia: take(); return Dia(parse_unary());
            case Tok::DBox: take(); return DBox(parse_unary());
            case Tok::DDia: take(); return DDia(parse_unary());
            case Tok::ABox: take(); return ABox(parse_unary());
            case Tok::ADia: take(); return ADia(parse_unary());
            default: return parse_atom();
        }
    }

    Formula parse_atom() {
        Token t = take();
        switch (t.tok) {
            case Tok::Ident: return Var(t.text);
            case Tok::False: return Bot();
            case Tok::True: return Top();
            case Tok::LParen: {
                Formula f = parse_iff();
                Token close = take();
                if (close.tok != Tok::RParen)
                    throw ParseError(close.offset, "expected ')'");
                return f;
            }
            default:
                throw ParseError(t.offset,
                                 "expected formula, found '" +
                                     (t.tok == Tok::End ? std::string("end of input") : t.text) +
                                     "'");
        }
    }
};

int precedence(Kind k) {
    switch (k) {
        case Kind::Iff: return 1;
        case Kind::Imp: return 2;
        case Kind::Or: return 3;
        case Kind::And: return 4;
        default: return is_unary(k) ? 5 : 6;
    }
}

const char* op_text(Kind k) {
    switch (k) {
        case Kind::Not: return "~";
        case Kind::And: return "&";
        case Kind::Or: return "|";
        case Kind::Imp: return "->";
        case Kind::Iff: return "<->";
        case Kind::Box: return "[]";
        case Kind::Dia: return "<>";
        case Kind::DBox: return "[!=]";
        case Kind::DDia: return "<!=>";
        case Kind::ABox: return "[A]";
        case Kind::ADia: return "<E>";
        default: return "";
    }
}

void print_rec(const Formula& f, std::ostringstream& out) {
    Kind k = f.kind();
    switch (k) {
        case Kind::Var: out << f.var_name(); return;
        case Kind::Bot: out << "false"; return;
        case Kind::Top: out << "true"; return;
        default: break;
    }
    if (is_unary(k)) {
        out << op_text(k);
        const Formula& c = f.child(0);
        if (precedence(c.kind()) < 5) {
            out << '(';
            print_rec(c, out);
            out << ')';
        } else {
            print_rec(c, out);
        }
        return;
    }
    // Binary, right-associative: parenthesize the left child at equal or
    // lower precedence, the right child at strictly lower precedence.
    int p = precedence(k);
    const Formula& l = f.child(0);
    const Formula& r = f.child(1);
    if (precedence(l.kind()) <= p) {
        out << '(';
        print_rec(l, out);
        out << ')';
    } else {
        print_rec(l, out);
    }
    out << ' ' << op_text(k) << ' ';
    if (precedence(r.kind()) < p) {
        out << '(';
        print_rec(r, out);
        out << ')';
    } else {
        print_rec(r, out);
    }
}

}  // namespace

Formula parse(const std::string& text) {
    Parser p(text);
    return p.parse_top();
}

std::string print(const Formula& f) {
    std::ostringstream out;
    print_rec(f, out);
    return out.str();
}

// ── Translations ─────────────────────────────────────────────────────────

namespace {

Formula map_children(const Formula& f, const std::function<Formula(const Formula&)>& fn) {
    std::vector<Formula> kids;
    kids.reserve(f.arity());
    for (std::size_t i = 0; i < f.arity(); ++i) kids.push_back(fn(f.child(i)));
    return Formula::make(f.kind(), std::move(kids),
                         f.kind() == Kind::Var ? f.var_name() : std::string{});
}

Formula normalize_dia(const Formula& f) {
    if (f.kind() == Kind::Dia) return Not(Box(Not(normalize_dia(f.child(0)))));
    return map_children(f, normalize_dia);
}

Formula normalize_adia(const Formula& f) {
    if (f.kind() == Kind::ADia) return Not(ABox(Not(normalize_adia(f.child(0)))));
    return map_children(f, normalize_adia);
}

Formula sharp_core(const Formula& f) {
    if (f.kind() == Kind::Box) {
        Formula b = sharp_core(f.child(0));
        return And(Box(b), b);
    }
    return map_children(f, sharp_core);
}

Formula u_core(const Formula& f) {
    if (f.kind() == Kind::ABox) {
        Formula b = u_core(f.child(0));
        return And(DBox(b), b);
    }
    return map_children(f, u_core);
}

}  // namespace

Formula sharp(const Formula& f) { return sharp_core(normalize_dia(f)); }

Formula u_translate(const Formula& f) {
    Signature sig = signature_of(f);
    if (sig == Signature::BOX_DIFF || sig == Signature::FULL)
        throw std::invalid_argument("u_translate: input contains [!=]/<!=>");
    return u_core(normalize_adia(f));
}

std::set<Formula> subformula_closure(const std::set<Formula>& fs) {
    std::set<Formula> out;
    std::function<void(const Formula&)> add = [&](const Formula& f) {
        if (!out.insert(f).second) return;
        for (std::size_t i = 0; i < f.arity(); ++i) add(f.child(i));
    };
    for (const auto& f : fs) add(f);
    return out;
}

Formula substitute(const Formula& f, const std::string& var, const Formula& g) {
    if (f.kind() == Kind::Var) return f.var_name() == var ? g : f;
    return map_children(f, [&](const Formula& c) { return substitute(c, var, g); });
}

std::vector<std::string> variables(const Formula& f) {
    std::vector<std::string> order;
    std::set<std::string> seen;
    std::function<void(const Formula&)> walk = [&](const Formula& g) {
        if (g.kind() == Kind::Var) {
            if (seen.insert(g.var_name()).second) order.push_back(g.var_name());
            return;
        }
        for (std::size_t i = 0; i < g.arity(); ++i) walk(g.child(i));
    };
    walk(f);
    return order;
}

}  // namespace topomodal
