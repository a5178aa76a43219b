#pragma once

#include <cctype>
#include <istream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "cremona/elementary.hpp"
#include "cremona/jonquieres.hpp"
#include "cremona/poly.hpp"
#include "cremona/rat.hpp"
#include "cremona/ratfunc.hpp"
#include "cremona/words.hpp"

namespace cremona {

// Syntax error with the offending input position (0-based).
class ParseError : public std::runtime_error {
public:
    ParseError(std::size_t position, const std::string& message)
        : std::runtime_error("parse error at position " + std::to_string(position) +
                             ": " + message),
          position_(position) {}

    std::size_t position() const { return position_; }

private:
    std::size_t position_;
};

namespace detail {

// Recursive-descent cursor over the input.
class Cursor {
public:
    explicit Cursor(std::string_view text) : text_(text) {}

    std::size_t pos() const { return pos_; }

    void skip_ws() {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_])))
            ++pos_;
    }

    bool at_end() {
        skip_ws();
        return pos_ >= text_.size();
    }

    char peek() {
        skip_ws();
        return pos_ < text_.size() ? text_[pos_] : '\0';
    }

    bool accept(char c) {
        if (peek() == c) {
            ++pos_;
            return true;
        }
        return false;
    }

    void expect(char c, const std::string& what) {
        if (!accept(c))
            throw ParseError(pos_, "expected '" + std::string(1, c) + "' " + what);
    }

    [[noreturn]] void fail(const std::string& message) {
        throw ParseError(pos_, message);
    }

    long long integer() {
        skip_ws();
        const std::size_t start = pos_;
        if (pos_ < text_.size() && (text_[pos_] == '+' || text_[pos_] == '-'))
            ++pos_;
        std::size_t digits = 0;
        while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
            ++pos_;
            ++digits;
        }
        if (digits == 0)
            throw ParseError(start, "expected an integer");
        try {
            return std::stoll(std::string(text_.substr(start, pos_ - start)));
        } catch (const std::out_of_range&) {
            throw ParseError(start, "integer literal out of range");
        }
    }

    BigInt natural() {
        skip_ws();
        const std::size_t start = pos_;
        while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_])))
            ++pos_;
        if (pos_ == start)
            throw ParseError(start, "expected a number");
        return BigInt(std::string(text_.substr(start, pos_ - start)));
    }

private:
    std::string_view text_;
    std::size_t pos_ = 0;
};

// Expression grammar over rational functions in one named variable:
//   expr   := term (('+' | '-') term)*
//   term   := unary (('*' | '/') unary)*
//   unary  := '-' unary | power
//   power  := atom ('^' integer)?
//   atom   := natural | variable | '(' expr ')'
// Divisions and negative exponents leave the polynomial subset; the callers
// that need a polynomial check for a trivial denominator afterwards.
class FuncParser {
public:
    FuncParser(Cursor& cur, std::string var) : cur_(cur), var_(std::move(var)) {}

    RatFunc expr() {
        RatFunc v = term();
        for (;;) {
            if (cur_.accept('+'))
                v += term();
            else if (cur_.accept('-'))
                v -= term();
            else
                return v;
        }
    }

private:
    Cursor& cur_;
    std::string var_;

    RatFunc term() {
        RatFunc v = unary();
        for (;;) {
            if (cur_.accept('*'))
                v *= unary();
            else if (cur_.accept('/')) {
                const std::size_t at = cur_.pos();
                const RatFunc d = unary();
                if (d.is_zero())
                    throw ParseError(at, "division by zero rational function");
                v /= d;
            } else
                return v;
        }
    }

    RatFunc unary() {
        if (cur_.accept('-'))
            return -unary();
        return power();
    }

    RatFunc power() {
        RatFunc base = atom();
        if (cur_.accept('^')) {
            const std::size_t at = cur_.pos();
            const long long e = cur_.integer();
            if (e < 0 && base.is_zero())
                throw ParseError(at, "division by zero rational function");
            base = base.pow(e);
        }
        return base;
    }

    RatFunc atom() {
        const char c = cur_.peek();
        if (c == '(') {
            cur_.expect('(', "to open a group");
            RatFunc v = expr();
            cur_.expect(')', "to close the group");
            return v;
        }
        if (std::isdigit(static_cast<unsigned char>(c)))
            return RatFunc(Rat(cur_.natural()));
        if (!var_.empty() && c == var_[0]) {
            cur_.expect(var_[0], "");
            return RatFunc(Poly::variable());
        }
        cur_.fail("expected a number, '" + var_ + "' or '('");
    }
};

} // namespace detail

inline RatFunc parse_ratfunc(std::string_view text, const std::string& var = "X") {
    detail::Cursor cur(text);
    detail::FuncParser parser(cur, var);
    const RatFunc v = parser.expr();
    if (!cur.at_end())
        cur.fail("unexpected trailing input");
    return v;
}

inline Poly parse_poly(std::string_view text, const std::string& var = "X") {
    detail::Cursor cur(text);
    detail::FuncParser parser(cur, var);
    const RatFunc v = parser.expr();
    if (!cur.at_end())
        cur.fail("unexpected trailing input");
    if (!v.is_polynomial())
        cur.fail("expected a polynomial, got a proper rational function");
    return v.num();
}

inline Rat parse_rat(std::string_view text) {
    detail::Cursor cur(text);
    detail::FuncParser parser(cur, "");
    const RatFunc v = parser.expr();
    if (!cur.at_end())
        cur.fail("unexpected trailing input");
    if (!v.is_constant())
        cur.fail("expected a rational constant");
    return v.num().coeff(0);
}

// Word over the three generator families, with bindings collected as the
// literals are read:
//   expr   := factor ('*' factor)*
//   factor := atom ('^' integer)?
//   atom   := 's(' rat ')' | 'a(' poly ')' | 'm(' ratfunc ')'
//           | '[' expr ',' expr ']' | '(' expr ')'
// Distinct literals get distinct generator ids (the canonical printed form),
// so re-parsing a printed word reproduces the same bindings.
namespace detail {

class WordParser {
public:
    explicit WordParser(Cursor& cur) : cur_(cur) {}

    Word expr() {
        Word w = factor();
        while (cur_.accept('*'))
            w = w * factor();
        return w;
    }

    Assignment take_env() { return std::move(env_); }

private:
    Cursor& cur_;
    Assignment env_;

    Word factor() {
        Word w = atom();
        if (cur_.accept('^'))
            w = w.pow(cur_.integer());
        return w;
    }

    Word atom() {
        const char c = cur_.peek();
        if (c == '[') {
            cur_.expect('[', "to open a commutator");
            const Word u = expr();
            cur_.expect(',', "between commutator entries");
            const Word v = expr();
            cur_.expect(']', "to close the commutator");
            return commutator(u, v);
        }
        if (c == '(') {
            cur_.expect('(', "to open a group");
            Word w = expr();
            cur_.expect(')', "to close the group");
            return w;
        }
        if (c == 's' || c == 'a' || c == 'm')
            return generator(c);
        cur_.fail("expected 's(', 'a(', 'm(', '[' or '('");
    }

    Word generator(char kind) {
        cur_.expect(kind, "");
        cur_.expect('(', "after generator name");
        FuncParser params(cur_, "X");
        const std::size_t at = cur_.pos();
        const RatFunc value = params.expr();
        cur_.expect(')', "to close the generator argument");

        std::string id;
        JonqElement elem;
        switch (kind) {
        case 's': {
            if (!value.is_constant())
                throw ParseError(at, "translation parameter must be a rational constant");
            const Rat t = value.num().coeff(0);
            id = "s(" + t.str() + ")";
            elem = JonqElement::translation(t);
            break;
        }
        case 'a': {
            if (!value.is_polynomial())
                throw ParseError(at, "shear parameter must be a polynomial");
            id = "a(" + value.num().str() + ")";
            elem = JonqElement::shear(value);
            break;
        }
        default: {
            if (value.is_zero())
                throw ParseError(at, "multiplier must be nonzero");
            id = "m(" + value.str() + ")";
            elem = JonqElement::scaling(value);
            break;
        }
        }
        env_.emplace(id, elem);
        return Word::letter(id);
    }
};

} // namespace detail

inline std::pair<Word, Assignment> parse_word(std::string_view text) {
    detail::Cursor cur(text);
    detail::WordParser parser(cur);
    Word w = parser.expr();
    if (!cur.at_end())
        cur.fail("unexpected trailing input");
    return {std::move(w), parser.take_env()};
}

// Generator file: one elementary automorphism per line as
// "alpha;beta;c;P(y)", blank lines and '#' comments skipped.
inline std::vector<ElementaryAut> parse_generator_file(std::istream& in) {
    std::vector<ElementaryAut> gens;
    std::string line;
    std::size_t lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        const auto first = line.find_first_not_of(" \t\r\n");
        if (first == std::string::npos || line[first] == '#')
            continue;
        std::vector<std::string> fields;
        std::size_t start = 0;
        for (std::size_t i = 0; i <= line.size(); ++i) {
            if (i == line.size() || line[i] == ';') {
                fields.push_back(line.substr(start, i - start));
                start = i + 1;
            }
        }
        if (fields.size() != 4)
            throw ParseError(0, "line " + std::to_string(lineno) +
                                    ": expected alpha;beta;c;P(y)");
        try {
            gens.emplace_back(parse_rat(fields[0]), parse_rat(fields[1]),
                              parse_rat(fields[2]), parse_poly(fields[3], "y"));
        } catch (const ParseError& e) {
            throw ParseError(e.position(),
                             "line " + std::to_string(lineno) + ": " + e.what());
        }
    }
    return gens;
}

} // namespace cremona
