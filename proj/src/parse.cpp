#include <cctype>
#include <string>

#include "csmforge/poly.hpp"

namespace csmforge {

namespace {

// Recursive-descent parser for polynomial expressions:
//   expr    := term (('+'|'-') term)*
//   term    := factor ('*' factor)*
//   factor  := '-' factor | atom ('^' INT)?
//   atom    := INT ('/' INT)? | NAME | '(' expr ')'
// INT is a nonnegative integer literal; NAME is [a-zA-Z][a-zA-Z0-9_]*.
// Multiplication is always explicit.
class Parser {
public:
    Parser(const std::string& text, const Ring& ring) : text_(text), ring_(ring) {}

    Poly run() {
        skip_ws();
        if (pos_ >= text_.size()) fail("empty expression");
        Poly p = expr();
        skip_ws();
        if (pos_ < text_.size()) fail("unexpected character '" + std::string(1, text_[pos_]) + "'");
        return p;
    }

private:
    const std::string& text_;
    const Ring& ring_;
    size_t pos_ = 0;

    [[noreturn]] void fail(const std::string& msg) const {
        throw InputError("parse error at offset " + std::to_string(pos_) + ": " + msg);
    }

    void skip_ws() {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    }

    bool peek_is(char c) {
        skip_ws();
        return pos_ < text_.size() && text_[pos_] == c;
    }

    bool accept(char c) {
        if (peek_is(c)) {
            ++pos_;
            return true;
        }
        return false;
    }

    Poly expr() {
        Poly acc = term();
        for (;;) {
            if (accept('+')) {
                acc = acc + term();
            } else if (accept('-')) {
                acc = acc - term();
            } else {
                return acc;
            }
        }
    }

    Poly term() {
        Poly acc = factor();
        while (accept('*')) acc = acc * factor();
        return acc;
    }

    Poly factor() {
        if (accept('-')) return -factor();
        Poly base = atom();
        if (accept('^')) {
            skip_ws();
            unsigned long e = integer_literal("exponent");
            if (e > kMaxExponent) fail("exponent overflow (limit 65535)");
            return base.pow(static_cast<unsigned>(e));
        }
        return base;
    }

    Poly atom() {
        skip_ws();
        if (pos_ >= text_.size()) fail("expected a value");
        char c = text_[pos_];
        if (c == '(') {
            ++pos_;
            Poly p = expr();
            if (!accept(')')) fail("expected ')'");
            return p;
        }
        if (std::isdigit(static_cast<unsigned char>(c))) {
            size_t start = pos_;
            while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
            mpz_class num(text_.substr(start, pos_ - start));
            skip_ws();
            if (accept('/')) {
                skip_ws();
                size_t dstart = pos_;
                while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_])))
                    ++pos_;
                if (dstart == pos_) fail("expected a denominator");
                mpz_class den(text_.substr(dstart, pos_ - dstart));
                if (den == 0) fail("zero denominator");
                return Poly::constant(ring_, make_rational(num, den));
            }
            return Poly::constant(ring_, mpq_class(num));
        }
        if (std::isalpha(static_cast<unsigned char>(c))) {
            size_t start = pos_;
            ++pos_;
            while (pos_ < text_.size() &&
                   (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_'))
                ++pos_;
            std::string name = text_.substr(start, pos_ - start);
            int idx = ring_.var_index(name);
            if (idx < 0) {
                pos_ = start;
                fail("unknown variable '" + name + "'");
            }
            return Poly::variable(ring_, idx);
        }
        fail("unexpected character '" + std::string(1, c) + "'");
    }

    unsigned long integer_literal(const std::string& what) {
        skip_ws();
        if (pos_ >= text_.size() || !std::isdigit(static_cast<unsigned char>(text_[pos_])))
            fail("expected " + what);
        size_t start = pos_;
        while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
        std::string digits = text_.substr(start, pos_ - start);
        if (digits.size() > 9) fail(what + " too large");
        return std::stoul(digits);
    }
};

} // namespace

Poly Poly::parse(const std::string& text, const Ring& r) {
    return Parser(text, r).run();
}

} // namespace csmforge
