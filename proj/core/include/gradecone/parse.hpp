#pragma once

#include <cctype>
#include <stdexcept>
#include <string>

#include "gradecone/polynomial.hpp"

namespace gradecone {

class ParseError : public std::runtime_error {
public:
    ParseError(const std::string& msg, std::size_t pos)
        : std::runtime_error(msg + " at position " + std::to_string(pos)), pos_(pos) {}
    std::size_t position() const { return pos_; }

private:
    std::size_t pos_;
};

// Recursive descent over:
//   expr   := term (('+'|'-') term)*
//   term   := factor (('*'|'/') factor)*
//   factor := INT | VAR ('^' INT)? | '(' expr ')'
// Whitespace is insignificant. A leading sign on the first term is accepted.
// A '/' divisor must evaluate to a nonzero constant, so "1/2*x" works over Q
// but "x/y" is rejected. Variables must be declared in the ring; anything
// else is an error with the offending position.
template <class F>
class PolyParser {
public:
    PolyParser(RingPtr<F> ring, std::string text)
        : ring_(std::move(ring)), s_(std::move(text)) {}

    Polynomial<F> run() {
        auto f = parse_expr();
        skip_ws();
        if (i_ < s_.size()) throw ParseError("unexpected trailing input", i_);
        return f;
    }

private:
    using Poly = Polynomial<F>;

    void skip_ws() {
        while (i_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[i_]))) ++i_;
    }
    bool peek(char c) {
        skip_ws();
        return i_ < s_.size() && s_[i_] == c;
    }
    bool eat(char c) {
        if (peek(c)) { ++i_; return true; }
        return false;
    }

    Poly parse_expr() {
        bool neg = false;
        skip_ws();
        if (eat('-')) neg = true;
        else eat('+');
        Poly acc = parse_term();
        if (neg) acc = -acc;
        for (;;) {
            if (eat('+')) acc = acc + parse_term();
            else if (eat('-')) acc = acc - parse_term();
            else break;
        }
        return acc;
    }

    Poly parse_term() {
        Poly acc = parse_factor();
        for (;;) {
            if (eat('*')) {
                acc = acc * parse_factor();
            } else if (peek('/')) {
                std::size_t at = i_;
                ++i_;
                Poly d = parse_factor();
                if (!d.is_constant() || d.is_zero())
                    throw ParseError("divisor must be a nonzero constant", at);
                acc = acc * Poly::constant(ring_, d.terms()[0].c.inv());
            } else {
                break;
            }
        }
        return acc;
    }

    Poly parse_factor() {
        skip_ws();
        if (i_ >= s_.size()) throw ParseError("unexpected end of input", i_);
        char c = s_[i_];
        if (c == '(') {
            ++i_;
            Poly f = parse_expr();
            if (!eat(')')) throw ParseError("expected ')'", i_);
            return f;
        }
        if (std::isdigit(static_cast<unsigned char>(c)) || c == '-' || c == '+') {
            return Poly::constant(ring_, parse_int_coeff());
        }
        if (std::isalpha(static_cast<unsigned char>(c))) {
            std::size_t start = i_;
            std::string name = parse_ident();
            std::size_t v = 0;
            for (; v < ring_->nvars(); ++v)
                if (ring_->vars[v] == name) break;
            if (v == ring_->nvars())
                throw ParseError("unknown variable '" + name + "'", start);
            int e = 1;
            if (eat('^')) e = parse_exponent();
            std::vector<int> exps(ring_->nvars(), 0);
            exps[v] = e;
            return Poly::monomial(ring_, ring_->field.one(), Monomial{exps});
        }
        throw ParseError(std::string("unexpected character '") + c + "'", i_);
    }

    std::string parse_ident() {
        std::size_t start = i_;
        ++i_;
        while (i_ < s_.size() &&
               (std::isalnum(static_cast<unsigned char>(s_[i_])) || s_[i_] == '_'))
            ++i_;
        return s_.substr(start, i_ - start);
    }

    typename F::Elem parse_int_coeff() {
        std::size_t start = i_;
        if (s_[i_] == '-' || s_[i_] == '+') ++i_;
        if (i_ >= s_.size() || !std::isdigit(static_cast<unsigned char>(s_[i_])))
            throw ParseError("expected integer", i_);
        while (i_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[i_]))) ++i_;
        return ring_->field.from_decimal_string(s_.substr(start, i_ - start));
    }

    int parse_exponent() {
        skip_ws();
        std::size_t start = i_;
        if (i_ >= s_.size() || !std::isdigit(static_cast<unsigned char>(s_[i_])))
            throw ParseError("expected exponent", i_);
        long long e = 0;
        while (i_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[i_]))) {
            e = e * 10 + (s_[i_] - '0');
            if (e > 1000000) throw ParseError("exponent too large", start);
            ++i_;
        }
        return static_cast<int>(e);
    }

    RingPtr<F> ring_;
    std::string s_;
    std::size_t i_ = 0;
};

template <class F>
Polynomial<F> parse_polynomial(const RingPtr<F>& ring, const std::string& text) {
    return PolyParser<F>(ring, text).run();
}

} // namespace gradecone
