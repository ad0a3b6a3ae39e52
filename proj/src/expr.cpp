#include <cctype>
#include <sstream>

#include "navt/scenario.hpp"

namespace navt {

namespace {

// Recursive-descent parser for the expression grammar shared by forms
// (variables X0..XN) and series (single variable z). Everything parses
// into an MPoly; series are univariate polynomials in z.
struct Parser {
    const std::string& text;
    size_t pos = 0;
    int nvars;
    bool series_mode;  // z is the only variable

    explicit Parser(const std::string& t, int nvars, bool series_mode)
        : text(t), nvars(nvars), series_mode(series_mode) {}

    void skip_ws() {
        while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos])))
            ++pos;
    }

    bool eat(char c) {
        skip_ws();
        if (pos < text.size() && text[pos] == c) {
            ++pos;
            return true;
        }
        return false;
    }

    char peek() {
        skip_ws();
        return pos < text.size() ? text[pos] : '\0';
    }

    [[noreturn]] void fail(const std::string& what) {
        throw ScenarioError("parse error at offset " + std::to_string(pos) +
                            ": " + what + " in \"" + text + "\"");
    }

    long integer() {
        skip_ws();
        size_t start = pos;
        while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos])))
            ++pos;
        if (pos == start) fail("expected an integer");
        return std::stol(text.substr(start, pos - start));
    }

    MPoly number() {
        skip_ws();
        size_t start = pos;
        while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos])))
            ++pos;
        Int num(text.substr(start, pos - start));
        if (eat('/')) {
            skip_ws();
            size_t dstart = pos;
            while (pos < text.size() &&
                   std::isdigit(static_cast<unsigned char>(text[pos])))
                ++pos;
            if (pos == dstart) fail("expected a denominator");
            Int den(text.substr(dstart, pos - dstart));
            if (den == 0) fail("zero denominator");
            return MPoly::constant(nvars, Rational(num, den));
        }
        return MPoly::constant(nvars, Rational(num));
    }

    MPoly variable_ref() {
        skip_ws();
        if (series_mode) {
            if (text[pos] != 'z') fail("expected z");
            ++pos;
            return MPoly::variable(1, 0);
        }
        if (text[pos] != 'X') fail("expected a variable X<k>");
        ++pos;
        size_t start = pos;
        while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos])))
            ++pos;
        if (pos == start) fail("expected a variable index");
        long idx = std::stol(text.substr(start, pos - start));
        if (idx < 0 || idx >= nvars)
            fail("variable X" + std::to_string(idx) + " out of range");
        return MPoly::variable(nvars, static_cast<int>(idx));
    }

    MPoly primary() {
        char c = peek();
        if (c == '(') {
            ++pos;
            MPoly e = expression();
            if (!eat(')')) fail("expected ')'");
            return e;
        }
        if (std::isdigit(static_cast<unsigned char>(c))) return number();
        if (c == 'X' || c == 'z') return variable_ref();
        fail("unexpected character");
    }

    MPoly factor() {
        // unary minus binds looser than '^': -X0^2 is -(X0^2)
        if (peek() == '-') {
            ++pos;
            return factor().scaled(Rational(-1));
        }
        MPoly base = primary();
        if (eat('^')) {
            long e = integer();
            MPoly out = MPoly::constant(nvars, Rational(1));
            for (long i = 0; i < e; ++i) out *= base;
            return out;
        }
        return base;
    }

    MPoly term() {
        MPoly out = factor();
        while (eat('*')) out *= factor();
        return out;
    }

    MPoly expression() {
        MPoly out = term();
        while (true) {
            char c = peek();
            if (c == '+') {
                ++pos;
                out += term();
            } else if (c == '-') {
                ++pos;
                out -= term();
            } else {
                return out;
            }
        }
    }

    MPoly parse() {
        MPoly out = expression();
        skip_ws();
        if (pos != text.size()) fail("trailing input");
        return out;
    }
};

}  // namespace

MPoly parse_form_expr(const std::string& text, int nvars) {
    return Parser(text, nvars, /*series_mode=*/false).parse();
}

std::vector<Rational> parse_series_expr(const std::string& text) {
    MPoly p = Parser(text, 1, /*series_mode=*/true).parse();
    std::vector<Rational> coeffs;
    for (const auto& [m, c] : p.terms) {
        size_t deg = static_cast<size_t>(m[0]);
        if (coeffs.size() <= deg) coeffs.resize(deg + 1, Rational(0));
        coeffs[deg] = c;
    }
    if (coeffs.empty()) coeffs.push_back(Rational(0));
    return coeffs;
}

std::string form_to_expr(const MPoly& p) { return p.to_string(); }

std::string series_to_expr(const std::vector<Rational>& coeffs) {
    MPoly p = MPoly::zero(1);
    for (size_t i = 0; i < coeffs.size(); ++i)
        if (!(coeffs[i] == 0))
            p += MPoly::term(1, {static_cast<int>(i)}, coeffs[i]);
    return p.to_string({"z"});
}

}  // namespace navt
