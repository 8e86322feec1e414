#pragma once

#include "diffalg/diffpoly.hpp"
#include "diffalg/error.hpp"

#include <cctype>
#include <memory>
#include <string>
#include <vector>

namespace diffalg {

// Recursive-descent parser for the shell expression grammar:
//
//   expr   := ['+'|'-'] term (('+'|'-') term)*
//   term   := factor (('*'|'/')? factor)*        (juxtaposition multiplies)
//   factor := atom ('^' nat)?
//   atom   := rational | name | derivative | 'δ(' expr ')' | '(' expr ')'
//   derivative := name prime* | name '^(' nat ')'
//   rational   := nat ('/' nat)?                  (single token, no spaces)
//
// '/' between factors divides and requires a ground-field divisor, so printed
// canonical forms round-trip.  δ(...) elaborates through total_derive during
// lowering.

struct Ast {
    enum class Node { Rational, Name, Deriv, Add, Sub, Mul, Div, Pow, Delta, Neg };

    Node node;
    Rat value;               // Rational
    std::string name;        // Name / Deriv
    int order = 0;           // Deriv
    unsigned exponent = 0;   // Pow
    std::vector<std::shared_ptr<Ast>> kids;
    int pos = 0;             // input column, for diagnostics
};
using AstPtr = std::shared_ptr<Ast>;

namespace detail {

struct Token {
    enum class T { Rational, Ident, Prime, Plus, Minus, Star, Slash, Caret, LParen, RParen, Delta, End };
    T t;
    Rat value;
    std::string text;
    int pos = 0;
};

class Lexer {
public:
    explicit Lexer(const std::string& s) : s_(s) {}

    Token next() {
        skip_ws();
        int p = int(i_);
        if (i_ >= s_.size()) return {Token::T::End, 0, "", p};
        char c = s_[i_];
        if (std::isdigit((unsigned char)c)) return lex_rational(p);
        if (std::isalpha((unsigned char)c) || c == '_') return lex_ident(p);
        // UTF-8 delta
        if ((unsigned char)c == 0xCE && i_ + 1 < s_.size() && (unsigned char)s_[i_ + 1] == 0xB4) {
            i_ += 2;
            return {Token::T::Delta, 0, "δ", p};
        }
        ++i_;
        switch (c) {
        case '\'': return {Token::T::Prime, 0, "'", p};
        case '+': return {Token::T::Plus, 0, "+", p};
        case '-': return {Token::T::Minus, 0, "-", p};
        case '*': return {Token::T::Star, 0, "*", p};
        case '/': return {Token::T::Slash, 0, "/", p};
        case '^': return {Token::T::Caret, 0, "^", p};
        case '(': return {Token::T::LParen, 0, "(", p};
        case ')': return {Token::T::RParen, 0, ")", p};
        default:
            throw SyntaxError("unexpected character '" + std::string(1, c) + "' at column " +
                              std::to_string(p + 1));
        }
    }

private:
    void skip_ws() {
        while (i_ < s_.size() && std::isspace((unsigned char)s_[i_])) ++i_;
    }
    Token lex_rational(int p) {
        std::string digits;
        while (i_ < s_.size() && std::isdigit((unsigned char)s_[i_])) digits += s_[i_++];
        Int num(digits);
        Int den(1);
        if (i_ < s_.size() && s_[i_] == '/' && i_ + 1 < s_.size() &&
            std::isdigit((unsigned char)s_[i_ + 1])) {
            ++i_;
            std::string d2;
            while (i_ < s_.size() && std::isdigit((unsigned char)s_[i_])) d2 += s_[i_++];
            den = Int(d2);
            if (den == 0) throw SyntaxError("zero denominator in rational at column " + std::to_string(p + 1));
        }
        return {Token::T::Rational, Rat(num, den), digits, p};
    }
    Token lex_ident(int p) {
        std::string id;
        while (i_ < s_.size() && (std::isalnum((unsigned char)s_[i_]) || s_[i_] == '_')) id += s_[i_++];
        return {Token::T::Ident, 0, id, p};
    }

    const std::string& s_;
    size_t i_ = 0;
};

class Parser {
public:
    explicit Parser(const std::string& s) : lex_(s) { advance(); }

    AstPtr parse() {
        AstPtr e = expr();
        if (cur_.t != Token::T::End)
            throw SyntaxError("unexpected trailing input at column " + std::to_string(cur_.pos + 1));
        return e;
    }

private:
    using T = Token::T;

    void advance() { cur_ = lex_.next(); }
    [[noreturn]] void fail(const std::string& what) {
        throw SyntaxError(what + " at column " + std::to_string(cur_.pos + 1));
    }

    AstPtr node(Ast::Node n) {
        auto a = std::make_shared<Ast>();
        a->node = n;
        a->pos = cur_.pos;
        return a;
    }

    AstPtr expr() {
        bool neg = false;
        if (cur_.t == T::Plus) advance();
        else if (cur_.t == T::Minus) {
            neg = true;
            advance();
        }
        AstPtr lhs = term();
        if (neg) {
            AstPtr n = node(Ast::Node::Neg);
            n->kids = {lhs};
            lhs = n;
        }
        while (cur_.t == T::Plus || cur_.t == T::Minus) {
            Ast::Node op = cur_.t == T::Plus ? Ast::Node::Add : Ast::Node::Sub;
            advance();
            AstPtr rhs = term();
            AstPtr n = node(op);
            n->kids = {lhs, rhs};
            lhs = n;
        }
        return lhs;
    }

    bool starts_factor() const {
        return cur_.t == T::Rational || cur_.t == T::Ident || cur_.t == T::Delta ||
               cur_.t == T::LParen;
    }

    AstPtr term() {
        AstPtr lhs = factor();
        while (true) {
            if (cur_.t == T::Star || cur_.t == T::Slash) {
                Ast::Node op = cur_.t == T::Star ? Ast::Node::Mul : Ast::Node::Div;
                advance();
                AstPtr rhs = factor();
                AstPtr n = node(op);
                n->kids = {lhs, rhs};
                lhs = n;
            } else if (starts_factor()) {
                AstPtr rhs = factor();
                AstPtr n = node(Ast::Node::Mul);
                n->kids = {lhs, rhs};
                lhs = n;
            } else {
                break;
            }
        }
        return lhs;
    }

    unsigned nat() {
        if (cur_.t != T::Rational || denominator(cur_.value) != 1 || cur_.value < 0)
            fail("expected a natural number");
        unsigned n = unsigned(numerator(cur_.value));
        advance();
        return n;
    }

    AstPtr factor() {
        AstPtr a = atom();
        if (cur_.t == T::Caret) {
            advance();
            // exponent, which for a bare name in parentheses form means a
            // derivative order: name^(k)
            if (cur_.t == T::LParen && a->node == Ast::Node::Name) {
                advance();
                unsigned k = nat();
                if (cur_.t != T::RParen) fail("expected ')'");
                advance();
                a->node = Ast::Node::Deriv;
                a->order = int(k);
                return a;
            }
            unsigned e = nat();
            AstPtr n = node(Ast::Node::Pow);
            n->exponent = e;
            n->kids = {a};
            return n;
        }
        return a;
    }

    AstPtr atom() {
        switch (cur_.t) {
        case T::Rational: {
            AstPtr a = node(Ast::Node::Rational);
            a->value = cur_.value;
            advance();
            return a;
        }
        case T::Ident: {
            AstPtr a = node(Ast::Node::Name);
            a->name = cur_.text;
            advance();
            int primes = 0;
            while (cur_.t == T::Prime) {
                ++primes;
                advance();
            }
            if (primes) {
                a->node = Ast::Node::Deriv;
                a->order = primes;
            }
            return a;
        }
        case T::Delta: {
            advance();
            if (cur_.t != T::LParen) fail("expected '(' after δ");
            advance();
            AstPtr e = expr();
            if (cur_.t != T::RParen) fail("expected ')'");
            advance();
            AstPtr n = node(Ast::Node::Delta);
            n->kids = {e};
            return n;
        }
        case T::LParen: {
            advance();
            AstPtr e = expr();
            if (cur_.t != T::RParen) fail("expected ')'");
            advance();
            return e;
        }
        default: fail("expected an expression");
        }
    }

    Lexer lex_;
    Token cur_;
};

} // namespace detail

inline AstPtr parse_expression(const std::string& input) {
    return detail::Parser(input).parse();
}

// Names used as derivative atoms (or bare names that are not generators).
inline void collect_indet_names(const AstPtr& a, const std::vector<std::string>& generators,
                                std::vector<std::string>& out) {
    if (a->node == Ast::Node::Deriv ||
        (a->node == Ast::Node::Name &&
         std::find(generators.begin(), generators.end(), a->name) == generators.end())) {
        if (std::find(out.begin(), out.end(), a->name) == out.end()) out.push_back(a->name);
    }
    for (auto& k : a->kids) collect_indet_names(k, generators, out);
}

inline DiffPoly lower_ast(const AstPtr& a, const RingPtr& ring) {
    const auto& gens = ring->field()->generators();
    const auto& indets = ring->indets();
    auto find = [](const std::vector<std::string>& v, const std::string& s) {
        for (size_t i = 0; i < v.size(); ++i)
            if (v[i] == s) return int(i);
        return -1;
    };
    switch (a->node) {
    case Ast::Node::Rational: return DiffPoly::from_rat(ring, a->value);
    case Ast::Node::Name: {
        int g = find(gens, a->name);
        if (g >= 0)
            return DiffPoly::constant(ring, FieldElem::generator(ring->field(), g));
        int i = find(indets, a->name);
        if (i >= 0) return DiffPoly::var(ring, {i, 0});
        throw UnknownName("unknown name '" + a->name + "'");
    }
    case Ast::Node::Deriv: {
        int i = find(indets, a->name);
        if (i < 0) {
            if (find(gens, a->name) >= 0)
                throw SyntaxError("generator '" + a->name + "' cannot carry derivatives; use δ(...)");
            throw UnknownName("unknown name '" + a->name + "'");
        }
        return DiffPoly::var(ring, {i, a->order});
    }
    case Ast::Node::Add: return lower_ast(a->kids[0], ring) + lower_ast(a->kids[1], ring);
    case Ast::Node::Sub: return lower_ast(a->kids[0], ring) - lower_ast(a->kids[1], ring);
    case Ast::Node::Mul: return lower_ast(a->kids[0], ring) * lower_ast(a->kids[1], ring);
    case Ast::Node::Div: {
        DiffPoly num = lower_ast(a->kids[0], ring);
        DiffPoly den = lower_ast(a->kids[1], ring);
        if (!den.in_K() || den.is_zero())
            throw SyntaxError("division requires a nonzero ground-field divisor");
        return num * den.constant_part().inv();
    }
    case Ast::Node::Pow: return lower_ast(a->kids[0], ring).pow(a->exponent);
    case Ast::Node::Delta: return lower_ast(a->kids[0], ring).total_derive();
    case Ast::Node::Neg: return -lower_ast(a->kids[0], ring);
    }
    throw SyntaxError("malformed expression tree");
}

} // namespace diffalg
