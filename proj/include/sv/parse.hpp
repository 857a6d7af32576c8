#pragma once

#include <cctype>
#include <string>
#include <vector>

#include "sv/errors.hpp"
#include "sv/polynomial.hpp"

namespace sv {

// Polynomial text grammar:
//
//   poly   := [sign] term (sign term)*
//   term   := factor ('*'? factor)*
//   factor := INT | VAR ('^' INT)?
//
// '*' is optional for adjacent factors, so "3x^2y - 2z^3" and
// "x*z - y^2" both parse.  Variables must be declared ring names; integer
// coefficients can be arbitrarily large (reduced mod p over prime fields).
// Errors carry 1-based line/column positions.
template <class K> class PolyParser {
public:
    PolyParser(RingPtr<K> ring, std::string text, int line_no = 1)
        : ring_(std::move(ring)), text_(std::move(text)), line_(line_no) {}

    Polynomial<K> parse() {
        skip_ws();
        if (eof()) throw error("empty polynomial");
        Polynomial<K> out = Polynomial<K>::zero(ring_);
        bool first = true;
        for (;;) {
            skip_ws();
            if (eof()) {
                if (first) throw error("expected a term");
                break;
            }
            bool negative = false;
            if (peek() == '+' || peek() == '-') {
                negative = peek() == '-';
                ++pos_;
                skip_ws();
            } else if (!first) {
                throw error("expected '+' or '-' between terms");
            }
            Polynomial<K> t = parse_term();
            out = negative ? out - t : out + t;
            first = false;
            skip_ws();
            if (eof()) break;
            if (peek() != '+' && peek() != '-')
                throw error("unexpected character '" + std::string(1, peek()) + "'");
        }
        return out;
    }

private:
    Polynomial<K> parse_term() {
        Polynomial<K> prod = parse_factor();
        for (;;) {
            skip_ws();
            if (eof()) break;
            char c = peek();
            if (c == '*') {
                ++pos_;
                skip_ws();
                if (eof()) throw error("expected a factor after '*'");
                prod = prod * parse_factor();
            } else if (std::isdigit(static_cast<unsigned char>(c)) || is_ident_start(c)) {
                prod = prod * parse_factor(); // implicit product
            } else {
                break;
            }
        }
        return prod;
    }

    Polynomial<K> parse_factor() {
        if (eof()) throw error("expected a factor");
        char c = peek();
        if (std::isdigit(static_cast<unsigned char>(c))) {
            std::string digits = lex_integer();
            return Polynomial<K>::constant(ring_, ring_->one().from_string_like(digits));
        }
        if (is_ident_start(c)) {
            int col = col_here();
            std::string name = lex_ident();
            int var = -1;
            for (int i = 0; i < ring_->nvars(); ++i)
                if (ring_->name(i) == name) { var = i; break; }
            if (var < 0)
                throw ParseError("unknown variable '" + name + "'", line_, col);
            int power = 1;
            if (!eof() && peek() == '^') {
                ++pos_;
                if (eof() || !std::isdigit(static_cast<unsigned char>(peek())))
                    throw error("expected an integer exponent after '^'");
                std::string digits = lex_integer();
                if (digits.size() > 6) throw error("exponent too large");
                power = std::stoi(digits);
            }
            return Polynomial<K>::variable(ring_, var, power);
        }
        throw error("expected a factor, found '" + std::string(1, c) + "'");
    }

    std::string lex_integer() {
        std::size_t start = pos_;
        while (!eof() && std::isdigit(static_cast<unsigned char>(peek()))) ++pos_;
        return text_.substr(start, pos_ - start);
    }

    std::string lex_ident() {
        std::size_t start = pos_;
        ++pos_;
        while (!eof() && is_ident_char(peek())) ++pos_;
        return text_.substr(start, pos_ - start);
    }

    static bool is_ident_start(char c) {
        return std::isalpha(static_cast<unsigned char>(c)) || c == '_';
    }
    static bool is_ident_char(char c) {
        return std::isalnum(static_cast<unsigned char>(c)) || c == '_';
    }

    void skip_ws() {
        while (!eof() && (peek() == ' ' || peek() == '\t')) ++pos_;
    }

    bool eof() const { return pos_ >= text_.size(); }
    char peek() const { return text_[pos_]; }
    int col_here() const { return static_cast<int>(pos_) + 1; }
    ParseError error(const std::string& msg) const {
        return ParseError(msg, line_, col_here());
    }

    RingPtr<K> ring_;
    std::string text_;
    int line_;
    std::size_t pos_ = 0;
};

template <class K>
Polynomial<K> parse_polynomial(const RingPtr<K>& ring, const std::string& text,
                               int line_no = 1) {
    return PolyParser<K>(ring, text, line_no).parse();
}

} // namespace sv
