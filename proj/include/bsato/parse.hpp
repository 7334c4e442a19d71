#pragma once

#include <cctype>
#include <string>
#include <string_view>
#include <vector>

#include "bsato/poly.hpp"

namespace bsato {

// Text grammar shared by the CLI and fixtures:
//   poly  := term (('+'|'-') term)*
//   term  := coeff ('*'? mono)? | mono
//   mono  := var ('^' uint)? ('*'? var ('^' uint)?)*
//   var   := 'x' uint | 's'            (s only in lifted contexts)
//   coeff := int ('/' uint)?
// Whitespace is insignificant; a leading sign is accepted.

namespace detail {

struct Token {
    enum Kind { Number, Var, SVar, Plus, Minus, Star, Caret, Slash, End } kind;
    std::size_t col = 0; // 1-based
    Int number = 0;
    int var_index = 0;   // 1-based x-index
};

inline std::vector<Token> lex_poly(std::string_view text) {
    std::vector<Token> out;
    std::size_t i = 0;
    while (i < text.size()) {
        char c = text[i];
        std::size_t col = i + 1;
        if (std::isspace(static_cast<unsigned char>(c))) { ++i; continue; }
        if (c == '+') { out.push_back({Token::Plus, col}); ++i; continue; }
        if (c == '-') { out.push_back({Token::Minus, col}); ++i; continue; }
        if (c == '*') { out.push_back({Token::Star, col}); ++i; continue; }
        if (c == '^') { out.push_back({Token::Caret, col}); ++i; continue; }
        if (c == '/') { out.push_back({Token::Slash, col}); ++i; continue; }
        if (std::isdigit(static_cast<unsigned char>(c))) {
            Int n = 0;
            while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i])))
                n = n * 10 + (text[i++] - '0');
            out.push_back({Token::Number, col, n});
            continue;
        }
        if (c == 'x') {
            ++i;
            if (i >= text.size() || !std::isdigit(static_cast<unsigned char>(text[i])))
                throw ParseError("expected variable index after 'x'", col);
            long idx = 0;
            while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) {
                idx = idx * 10 + (text[i++] - '0');
                if (idx > 1000000) throw ParseError("variable index too large", col);
            }
            if (idx < 1) throw ParseError("variable indices start at 1", col);
            Token t{Token::Var, col};
            t.var_index = static_cast<int>(idx);
            out.push_back(t);
            continue;
        }
        if (c == 's') { out.push_back({Token::SVar, col}); ++i; continue; }
        throw ParseError(std::string("unexpected character '") + c + "'", col);
    }
    out.push_back({Token::End, text.size() + 1});
    return out;
}

class PolyParser {
public:
    PolyParser(std::string_view text, Context ctx)
        : ctx_(ctx), toks_(lex_poly(text)) {}

    Poly parse() {
        Poly acc(ctx_);
        int sign = 1;
        if (peek().kind == Token::Plus || peek().kind == Token::Minus) {
            sign = peek().kind == Token::Minus ? -1 : 1;
            next();
        }
        while (true) {
            acc += parse_term().scaled(sign);
            if (peek().kind == Token::Plus || peek().kind == Token::Minus) {
                sign = peek().kind == Token::Minus ? -1 : 1;
                next();
                continue;
            }
            if (peek().kind == Token::End) break;
            throw ParseError("expected '+', '-' or end of input", peek().col);
        }
        return acc;
    }

private:
    const Token& peek() const { return toks_[pos_]; }
    Token next() { return toks_[pos_++]; }

    bool at_var() const {
        return peek().kind == Token::Var || peek().kind == Token::SVar;
    }

    Poly parse_term() {
        if (peek().kind == Token::Number) {
            Rational c = parse_coeff();
            if (peek().kind == Token::Star) {
                next();
                return Poly::term(ctx_, parse_mono(), c);
            }
            if (at_var()) return Poly::term(ctx_, parse_mono(), c);
            return Poly::constant(ctx_, c);
        }
        if (at_var()) return Poly::term(ctx_, parse_mono(), 1);
        throw ParseError("expected coefficient or variable", peek().col);
    }

    Rational parse_coeff() {
        Token t = next();
        Int numerator = t.number;
        Int denominator = 1;
        if (peek().kind == Token::Slash) {
            next();
            if (peek().kind != Token::Number)
                throw ParseError("expected denominator after '/'", peek().col);
            Token d = next();
            if (d.number == 0) throw ParseError("zero denominator", d.col);
            denominator = d.number;
        }
        return Rational(numerator, denominator);
    }

    Monomial parse_mono() {
        Monomial m(static_cast<std::size_t>(ctx_.width()));
        parse_var_power(m);
        while (true) {
            if (peek().kind == Token::Star && (toks_[pos_ + 1].kind == Token::Var ||
                                               toks_[pos_ + 1].kind == Token::SVar)) {
                next();
                parse_var_power(m);
            } else if (at_var()) {
                parse_var_power(m);
            } else {
                break;
            }
        }
        return m;
    }

    void parse_var_power(Monomial& m) {
        Token t = next();
        int index;
        if (t.kind == Token::SVar) {
            if (!ctx_.with_s)
                throw ParseError("variable 's' is not allowed here", t.col);
            index = ctx_.s_index();
        } else {
            if (t.var_index > ctx_.nvars)
                throw ParseError("variable x" + std::to_string(t.var_index) +
                                     " exceeds the declared variable count " +
                                     std::to_string(ctx_.nvars),
                                 t.col);
            index = t.var_index - 1;
        }
        int exp = 1;
        if (peek().kind == Token::Caret) {
            next();
            if (peek().kind != Token::Number)
                throw ParseError("expected exponent after '^'", peek().col);
            Token e = next();
            if (e.number > 100000) throw ParseError("exponent too large", e.col);
            exp = e.number.convert_to<int>();
        }
        m[static_cast<std::size_t>(index)] += exp;
    }

    Context ctx_;
    std::vector<Token> toks_;
    std::size_t pos_ = 0;
};

} // namespace detail

inline Poly parse_poly(std::string_view text, Context ctx) {
    return detail::PolyParser(text, ctx).parse();
}

// Highest x-index mentioned; 0 when none. Used to infer the ring size.
inline int max_var_index(std::string_view text) {
    int n = 0;
    for (const auto& t : detail::lex_poly(text))
        if (t.kind == detail::Token::Var) n = std::max(n, t.var_index);
    return n;
}

namespace detail {

// display order: total degree descending, then lexicographic descending
inline bool print_before(const Monomial& a, const Monomial& b) {
    int da = a.total_degree(), db = b.total_degree();
    if (da != db) return da > db;
    return a.e > b.e;
}

inline std::string monomial_string(const Monomial& m, const Context& ctx) {
    std::string out;
    for (int i = 0; i < ctx.width(); ++i) {
        int e = m[static_cast<std::size_t>(i)];
        if (e == 0) continue;
        if (!out.empty()) out += "*";
        out += ctx.var_name(i);
        if (e != 1) out += "^" + std::to_string(e);
    }
    return out;
}

} // namespace detail

inline std::string to_string(const Poly& p) {
    if (p.is_zero()) return "0";
    std::vector<const std::pair<const Monomial, Rational>*> terms;
    for (const auto& t : p.terms()) terms.push_back(&t);
    std::sort(terms.begin(), terms.end(), [](auto* a, auto* b) {
        return detail::print_before(a->first, b->first);
    });
    std::string out;
    bool first = true;
    for (auto* t : terms) {
        const Rational& c = t->second;
        bool negative = c < 0;
        Rational mag = negative ? Rational(-c) : c;
        if (first) {
            if (negative) out += "-";
            first = false;
        } else {
            out += negative ? " - " : " + ";
        }
        std::string mono = detail::monomial_string(t->first, p.ctx());
        if (mono.empty()) {
            out += to_string(mag);
        } else if (mag == 1) {
            out += mono;
        } else {
            out += to_string(mag) + "*" + mono;
        }
    }
    return out;
}

} // namespace bsato
