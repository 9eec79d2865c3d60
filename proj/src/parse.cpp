#include <cctype>

#include "tlq/errors.hpp"
#include "tlq/field.hpp"

// Recursive-descent parser for the field-element grammar:
//   expr   := term (('+'|'-') term)*
//   term   := factor (('*'|'/') factor)*
//   factor := '-'* primary ('^' '-'? INT)?
//   primary:= INT | 's' | 'q' | 'th' | '(' expr ')'
// In complex fields, decimal literals are also accepted and 's' requires a
// configured numeric sigma.

namespace tlq {

namespace {

struct Lexer {
    const std::string& text;
    size_t pos = 0;

    explicit Lexer(const std::string& t) : text(t) {}

    void skip_ws() {
        while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
    }

    char peek() {
        skip_ws();
        return pos < text.size() ? text[pos] : '\0';
    }

    char get() {
        char c = peek();
        if (pos < text.size()) ++pos;
        return c;
    }

    [[noreturn]] void fail(const std::string& msg) {
        throw ParseError(msg + " at position " + std::to_string(pos) + " in '" + text + "'");
    }
};

struct Parser {
    Lexer lx;
    const Field& field;

    Parser(const std::string& t, const Field& f) : lx(t), field(f) {}

    FieldElement parse() {
        FieldElement r = expr();
        if (lx.peek() != '\0') lx.fail("unexpected trailing input");
        return r;
    }

    FieldElement expr() {
        FieldElement acc = term();
        while (true) {
            char c = lx.peek();
            if (c == '+') {
                lx.get();
                acc = acc + term();
            } else if (c == '-') {
                lx.get();
                acc = acc - term();
            } else {
                return acc;
            }
        }
    }

    FieldElement term() {
        FieldElement acc = factor();
        while (true) {
            char c = lx.peek();
            if (c == '*') {
                lx.get();
                acc = acc * factor();
            } else if (c == '/') {
                lx.get();
                acc = acc / factor();
            } else {
                return acc;
            }
        }
    }

    FieldElement factor() {
        int sign = 1;
        while (lx.peek() == '-') {
            lx.get();
            sign = -sign;
        }
        FieldElement base = primary();
        if (lx.peek() == '^') {
            lx.get();
            long e = exponent();
            base = base.pow(e);
        }
        return sign < 0 ? -base : base;
    }

    long exponent() {
        long sign = 1;
        if (lx.peek() == '-') {
            lx.get();
            sign = -1;
        }
        if (!std::isdigit(static_cast<unsigned char>(lx.peek()))) lx.fail("expected integer exponent");
        long v = 0;
        while (lx.pos < lx.text.size() && std::isdigit(static_cast<unsigned char>(lx.text[lx.pos]))) {
            v = v * 10 + (lx.text[lx.pos] - '0');
            if (v > 1000000) lx.fail("exponent out of range");
            ++lx.pos;
        }
        return sign * v;
    }

    FieldElement primary() {
        char c = lx.peek();
        if (c == '(') {
            lx.get();
            FieldElement r = expr();
            if (lx.peek() != ')') lx.fail("expected ')'");
            lx.get();
            return r;
        }
        if (std::isdigit(static_cast<unsigned char>(c))) return number();
        if (std::isalpha(static_cast<unsigned char>(c))) return symbol();
        lx.fail("expected a number, symbol, or '('");
    }

    FieldElement number() {
        lx.skip_ws();
        size_t start = lx.pos;
        while (lx.pos < lx.text.size() && std::isdigit(static_cast<unsigned char>(lx.text[lx.pos])))
            ++lx.pos;
        bool is_decimal = false;
        if (lx.pos < lx.text.size() && lx.text[lx.pos] == '.') {
            is_decimal = true;
            ++lx.pos;
            while (lx.pos < lx.text.size() &&
                   std::isdigit(static_cast<unsigned char>(lx.text[lx.pos])))
                ++lx.pos;
        }
        std::string tok = lx.text.substr(start, lx.pos - start);
        if (!is_decimal) return field.from_rational(rat_from_string(tok));
        if (field.kind() != FieldKind::complex_float)
            lx.fail("decimal literals are only valid in complex fields");
        // exact decimal -> rational, then rounded once into the field
        size_t dot = tok.find('.');
        std::string digits = tok.substr(0, dot) + tok.substr(dot + 1);
        size_t frac = tok.size() - dot - 1;
        Integer num(digits), den = 1;
        for (size_t i = 0; i < frac; ++i) den *= 10;
        return field.from_rational(rat(num, den));
    }

    FieldElement symbol() {
        lx.skip_ws();
        size_t start = lx.pos;
        while (lx.pos < lx.text.size() && std::isalpha(static_cast<unsigned char>(lx.text[lx.pos])))
            ++lx.pos;
        std::string name = lx.text.substr(start, lx.pos - start);
        if (name == "s") return field.sigma();
        if (name == "q") return field.q();
        if (name == "th") {
            if (field.kind() != FieldKind::quad_ext)
                lx.fail("'th' requires a quadratic-extension field, got " + field.describe());
            return field.theta();
        }
        lx.fail("unknown symbol '" + name + "'");
    }
};

}  // namespace

FieldElement Field::parse(const std::string& text) const {
    Parser p(text, *this);
    return p.parse();
}

}  // namespace tlq
