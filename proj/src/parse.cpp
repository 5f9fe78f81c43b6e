#include "strata/parse.hpp"

#include <cctype>
#include <optional>

namespace strata {

namespace {

enum class Tok {
    Ident, Number,
    Forall, Exists, In, Vbar, PairSym,
    LParen, RParen, Dot, Comma, Caret,
    Eq, And, Or, Not, Arrow, Iff,
    End,
};

struct Token {
    Tok kind;
    std::string text;
    int line, col;
};

struct Lexer {
    const std::string& src;
    size_t pos = 0;
    int line = 1, col = 1;

    [[noreturn]] void fail(const std::string& msg) const { throw ParseError(line, col, msg); }

    void advance(size_t n) {
        for (size_t i = 0; i < n && pos < src.size(); ++i, ++pos) {
            if (src[pos] == '\n') { ++line; col = 1; } else { ++col; }
        }
    }

    Token next() {
        while (pos < src.size() && std::isspace(static_cast<unsigned char>(src[pos]))) advance(1);
        Token t{Tok::End, "", line, col};
        if (pos >= src.size()) return t;
        char c = src[pos];
        auto two = [&](char a, char b) {
            return c == a && pos + 1 < src.size() && src[pos + 1] == b;
        };
        if (two('<', '-')) {
            if (pos + 2 >= src.size() || src[pos + 2] != '>') fail("expected '<->'");
            t.kind = Tok::Iff; advance(3); return t;
        }
        if (two('-', '>')) { t.kind = Tok::Arrow; advance(2); return t; }
        switch (c) {
            case '(': t.kind = Tok::LParen; advance(1); return t;
            case ')': t.kind = Tok::RParen; advance(1); return t;
            case '.': t.kind = Tok::Dot; advance(1); return t;
            case ',': t.kind = Tok::Comma; advance(1); return t;
            case '^': t.kind = Tok::Caret; advance(1); return t;
            case '=': t.kind = Tok::Eq; advance(1); return t;
            case '&': t.kind = Tok::And; advance(1); return t;
            case '|': t.kind = Tok::Or; advance(1); return t;
            case '~': t.kind = Tok::Not; advance(1); return t;
            default: break;
        }
        if (std::isdigit(static_cast<unsigned char>(c))) {
            size_t start = pos;
            while (pos < src.size() && std::isdigit(static_cast<unsigned char>(src[pos]))) advance(1);
            t.kind = Tok::Number;
            t.text = src.substr(start, pos - start);
            return t;
        }
        if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
            size_t start = pos;
            while (pos < src.size() &&
                   (std::isalnum(static_cast<unsigned char>(src[pos])) || src[pos] == '_'))
                advance(1);
            t.text = src.substr(start, pos - start);
            if (t.text == "forall") t.kind = Tok::Forall;
            else if (t.text == "exists") t.kind = Tok::Exists;
            else if (t.text == "in") t.kind = Tok::In;
            else if (t.text == "Vbar") t.kind = Tok::Vbar;
            else if (t.text == "P") t.kind = Tok::PairSym;
            else t.kind = Tok::Ident;
            return t;
        }
        fail(std::string("unexpected character '") + c + "'");
    }
};

struct Parser {
    Dialect dialect;
    Lexer lex;
    Token tok;

    Parser(const std::string& src, Dialect d) : dialect(d), lex{src} { tok = lex.next(); }

    [[noreturn]] void fail(const std::string& msg) const { throw ParseError(tok.line, tok.col, msg); }

    void eat(Tok k, const char* what) {
        if (tok.kind != k) fail(std::string("expected ") + what);
        tok = lex.next();
    }

    int type_suffix() {
        eat(Tok::Caret, "'^'");
        if (tok.kind != Tok::Number) fail("expected a type index after '^'");
        int v = std::stoi(tok.text);
        tok = lex.next();
        return v;
    }

    TermPtr term() {
        if (tok.kind == Tok::Vbar) {
            if (dialect != Dialect::Lstar) fail("Vbar is only a term of the lstar dialect");
            tok = lex.next();
            return mk_vbar();
        }
        if (tok.kind == Tok::PairSym) {
            if (dialect != Dialect::Lstar) fail("pair terms P(s, t) are only terms of the lstar dialect");
            tok = lex.next();
            eat(Tok::LParen, "'(' after P");
            TermPtr l = term();
            eat(Tok::Comma, "','");
            TermPtr r = term();
            eat(Tok::RParen, "')'");
            return mk_pair(l, r);
        }
        if (tok.kind != Tok::Ident) fail("expected a term");
        std::string name = tok.text;
        tok = lex.next();
        if (dialect == Dialect::Tst) {
            if (tok.kind != Tok::Caret) fail("tst variable '" + name + "' needs a type index");
            return mk_set_var(name, type_suffix());
        }
        if (dialect == Dialect::Lstar && std::isupper(static_cast<unsigned char>(name[0])))
            return mk_class_var(name);
        return mk_set_var(name);
    }

    FormulaPtr atom_from(TermPtr lhs) {
        bool member;
        if (tok.kind == Tok::In) member = true;
        else if (tok.kind == Tok::Eq) member = false;
        else fail("expected 'in' or '='");
        Token at = tok;
        tok = lex.next();
        std::optional<int> idx;
        if (dialect == Dialect::Tst && tok.kind == Tok::Caret) idx = type_suffix();
        TermPtr rhs = term();
        if (dialect == Dialect::Tst) {
            int lt = lhs->type_index, rt = rhs->type_index;
            if (idx && *idx != lt)
                throw ParseError(at.line, at.col, "predicate index disagrees with the left term's type");
            if (member && rt != lt + 1)
                throw ParseError(at.line, at.col, "membership needs types n and n+1, got " +
                                                      std::to_string(lt) + " and " + std::to_string(rt));
            if (!member && rt != lt)
                throw ParseError(at.line, at.col, "equality needs equal types, got " +
                                                      std::to_string(lt) + " and " + std::to_string(rt));
        }
        return member ? mk_member(lhs, rhs) : mk_equal(lhs, rhs);
    }

    FormulaPtr unary() {
        switch (tok.kind) {
            case Tok::Not: {
                tok = lex.next();
                return mk_not(unary());
            }
            case Tok::Forall:
            case Tok::Exists: {
                bool forall = tok.kind == Tok::Forall;
                tok = lex.next();
                if (tok.kind != Tok::Ident) fail("expected a bound variable");
                std::string name = tok.text;
                tok = lex.next();
                int vt = -1;
                if (dialect == Dialect::Tst) vt = type_suffix();
                TermKind vk = dialect == Dialect::Lstar && std::isupper(static_cast<unsigned char>(name[0]))
                                  ? TermKind::ClassVar
                                  : TermKind::SetVar;
                eat(Tok::Dot, "'.' after the bound variable");
                FormulaPtr body = formula();
                return forall ? mk_forall(name, body, vk, vt) : mk_exists(name, body, vk, vt);
            }
            case Tok::LParen: {
                tok = lex.next();
                FormulaPtr f = formula();
                eat(Tok::RParen, "')'");
                return f;
            }
            default:
                return atom_from(term());
        }
    }

    FormulaPtr conjunction() {
        FormulaPtr f = unary();
        while (tok.kind == Tok::And) {
            tok = lex.next();
            f = mk_and(f, unary());
        }
        return f;
    }

    FormulaPtr disjunction() {
        FormulaPtr f = conjunction();
        while (tok.kind == Tok::Or) {
            tok = lex.next();
            f = mk_or(f, conjunction());
        }
        return f;
    }

    FormulaPtr implication() {
        FormulaPtr f = disjunction();
        if (tok.kind == Tok::Arrow) {
            tok = lex.next();
            return mk_implies(f, implication());
        }
        return f;
    }

    FormulaPtr formula() {
        FormulaPtr f = implication();
        while (tok.kind == Tok::Iff) {
            tok = lex.next();
            f = mk_iff(f, implication());
        }
        return f;
    }

    FormulaPtr top() {
        FormulaPtr f = formula();
        if (tok.kind != Tok::End) fail("trailing input after the formula");
        return f;
    }
};

}  // namespace

FormulaPtr parse(const std::string& text, Dialect d) {
    Parser p(text, d);
    return resolve(p.top(), d);
}

std::vector<FormulaPtr> parse_many(const std::string& text, Dialect d, bool multi) {
    std::vector<FormulaPtr> out;
    std::vector<std::string> chunks;
    std::string cur;
    for (char c : text) {
        if ((multi && c == ';') || (!multi && c == '\n')) {
            chunks.push_back(cur);
            cur.clear();
        } else {
            cur += c;
        }
    }
    chunks.push_back(cur);
    for (const auto& chunk : chunks) {
        bool blank = true;
        for (char c : chunk)
            if (!std::isspace(static_cast<unsigned char>(c))) { blank = false; break; }
        if (blank) continue;
        size_t first = chunk.find_first_not_of(" \t\r\n");
        if (chunk[first] == '#') continue;
        out.push_back(parse(chunk, d));
    }
    return out;
}

}  // namespace strata
