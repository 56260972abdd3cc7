#include "invar/polynomial.hpp"

#include <cctype>

namespace invar {

namespace {

struct Scanner {
    const std::string& text;
    const VariableSet& vars;
    size_t pos = 0;

    void skip_ws() {
        while (pos < text.size() && std::isspace((unsigned char)text[pos])) ++pos;
    }
    bool done() {
        skip_ws();
        return pos >= text.size();
    }
    char peek() {
        skip_ws();
        return pos < text.size() ? text[pos] : '\0';
    }
    bool eat(char c) {
        if (peek() == c) {
            ++pos;
            return true;
        }
        return false;
    }

    std::string digits() {
        skip_ws();
        size_t start = pos;
        while (pos < text.size() && std::isdigit((unsigned char)text[pos])) ++pos;
        if (pos == start) throw ParseError("expected integer", start);
        return text.substr(start, pos - start);
    }

    // arbitrary precision, for coefficients
    Integer integer() { return Integer(digits()); }

    // bounded, for exponents
    int exponent() {
        size_t at = pos;
        const std::string d = digits();
        if (d.size() > 6) throw ParseError("exponent out of range", at);
        return std::stoi(d);
    }

    // longest variable name of the active set starting here, or error.
    size_t variable() {
        skip_ws();
        size_t best_len = 0, best_idx = 0;
        for (size_t i = 0; i < vars.size(); ++i) {
            const std::string& n = vars.name(i);
            if (n.size() > best_len && text.compare(pos, n.size(), n) == 0) {
                best_len = n.size();
                best_idx = i;
            }
        }
        if (best_len == 0) throw ParseError("unknown variable name", pos);
        pos += best_len;
        return best_idx;
    }
};

} // namespace

Polynomial parse_polynomial(const std::string& text, const VarSetPtr& vars) {
    Scanner sc{text, *vars};
    std::vector<Term> raw;
    bool first = true;
    while (!sc.done()) {
        int sign = 1;
        if (sc.eat('+')) {
            if (first) throw ParseError("leading '+' is not allowed", sc.pos);
        } else if (sc.eat('-')) {
            sign = -1;
        } else if (!first) {
            throw ParseError("expected '+' or '-'", sc.pos);
        }
        if (sc.done()) throw ParseError("dangling sign", sc.pos);
        first = false;

        Rational coeff(sign);
        Monomial mono(vars->size());
        bool saw_factor = false;
        bool star_pending = false;
        for (;;) {
            char c = sc.peek();
            if (std::isdigit((unsigned char)c)) {
                Rational f(sc.integer());
                if (sc.eat('/')) {
                    Integer den = sc.integer();
                    if (den == 0) throw ParseError("zero denominator", sc.pos);
                    f /= Rational(den);
                }
                coeff *= f;
                saw_factor = true;
            } else if (std::isalpha((unsigned char)c)) {
                size_t v = sc.variable();
                int e = 1;
                if (sc.eat('^')) e = sc.exponent();
                mono.e[v] += e;
                saw_factor = true;
            } else {
                if (star_pending) throw ParseError("expected factor after '*'", sc.pos);
                break;
            }
            star_pending = sc.eat('*'); // '*' between factors is optional
        }
        if (!saw_factor) throw ParseError("expected coefficient or variable", sc.pos);
        raw.push_back({std::move(coeff), std::move(mono)});
    }
    if (raw.empty()) throw ParseError("empty input", 0);
    return Polynomial::from_terms(vars, std::move(raw));
}

} // namespace invar
