#include "floorsums/dsl.hpp"

#include <cctype>

namespace fsum {
namespace {

struct Cursor {
    const std::string& s;
    size_t i = 0;

    void skip_ws() {
        while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) ++i;
    }
    bool done() {
        skip_ws();
        return i >= s.size();
    }
    char peek() {
        skip_ws();
        return i < s.size() ? s[i] : '\0';
    }
    bool eat(char c) {
        skip_ws();
        if (i < s.size() && s[i] == c) {
            ++i;
            return true;
        }
        return false;
    }
    void expect(char c, const char* what) {
        if (!eat(c)) throw ParseError(std::string("expected '") + c + "' " + what, i);
    }
    bool eat_word(const char* w) {
        skip_ws();
        size_t n = std::char_traits<char>::length(w);
        if (s.compare(i, n, w) == 0) {
            i += n;
            return true;
        }
        return false;
    }
    std::optional<i64> eat_int() {
        skip_ws();
        if (i >= s.size() || !std::isdigit(static_cast<unsigned char>(s[i])))
            return std::nullopt;
        i64 v = 0;
        size_t start = i;
        while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) {
            v = v * 10 + (s[i] - '0');
            if (v > 1000000000) throw ParseError("number too large", start);
            ++i;
        }
        return v;
    }
    std::optional<char> eat_var() {
        skip_ws();
        if (i < s.size() && s[i] >= 'u' && s[i] <= 'z') return s[i++];
        return std::nullopt;
    }
};

// atom := VAR^2 | VAR^3 | VAR(VAR+1) | T(VAR) | p5(VAR) | p7(VAR) | p8(VAR)
std::pair<AtomSpec, char> parse_atom(Cursor& c) {
    size_t at = c.i;
    if (c.eat_word("T(")) {
        auto v = c.eat_var();
        if (!v) throw ParseError("expected a variable inside T(...)", c.i);
        c.expect(')', "after T(var");
        return {triangular(), *v};
    }
    for (i64 m : {5, 7, 8}) {
        std::string kw = "p" + std::to_string(m) + "(";
        if (c.eat_word(kw.c_str())) {
            auto v = c.eat_var();
            if (!v) throw ParseError("expected a variable inside " + kw + "...)", c.i);
            c.expect(')', "after the variable");
            return {polygonal(m), *v};
        }
    }
    auto v = c.eat_var();
    if (!v) throw ParseError("expected an atom (x^2, x^3, x(x+1), T(x), p5/p7/p8)", at);
    if (c.eat('^')) {
        auto e = c.eat_int();
        if (e == 2) return {square(), *v};
        if (e == 3) return {cube(Domain::Naturals), *v};
        throw ParseError("only exponents 2 and 3 are supported", c.i);
    }
    if (c.eat('(')) {
        auto v2 = c.eat_var();
        if (!v2 || *v2 != *v)
            throw ParseError("pronic form must repeat the variable, like x(x+1)", c.i);
        c.expect('+', "in x(x+1)");
        auto one = c.eat_int();
        if (one != 1) throw ParseError("pronic form must be exactly x(x+1)", c.i);
        c.expect(')', "closing x(x+1)");
        return {pronic(), *v};
    }
    throw ParseError("lone variable; write x^2, x^3, x(x+1) or T(x)", at);
}

} // namespace

ParsedFamily parse_family(const std::string& text) {
    Cursor c{text};
    ParsedFamily fam;
    std::vector<char> seen;
    if (c.done()) throw ParseError("empty family", 0);
    for (;;) {
        TermSpec t;
        size_t term_at = c.i;
        Rounding r = Rounding::Floor;
        bool wrapped = false;
        if (c.eat_word("floor(")) {
            wrapped = true;
            r = Rounding::Floor;
        } else if (c.eat_word("ceil(")) {
            wrapped = true;
            r = Rounding::Ceil;
        } else if (c.eat_word("exact(")) {
            wrapped = true;
            r = Rounding::Exact;
        }
        i64 coeff = c.eat_int().value_or(1);
        if (coeff < 1) throw ParseError("coefficients must be positive", term_at);
        auto [atom, var] = parse_atom(c);
        i64 den = 1;
        bool free_den = false;
        if (wrapped) {
            c.expect('/', "before the denominator");
            if (c.eat('c')) {
                free_den = true;
            } else {
                auto d = c.eat_int();
                if (!d || *d < 1)
                    throw ParseError("expected a positive denominator or 'c'", c.i);
                den = *d;
            }
            c.expect(')', "closing the rounded term");
        }
        for (char s : seen)
            if (s == var)
                throw ParseError(std::string("variable '") + var + "' used twice",
                                 term_at);
        seen.push_back(var);
        t = simple_term(r, atom, den, coeff, std::string(1, var));
        if (free_den) {
            if (fam.free_term)
                throw ParseError("only one 'c' denominator slot is allowed", term_at);
            fam.free_term = fam.terms.size();
        }
        fam.terms.push_back(std::move(t));
        if (c.done()) break;
        c.expect('+', "between terms");
    }
    if (fam.terms.empty() || fam.terms.size() > 4)
        throw ParseError("families need 1 to 4 terms", 0);
    return fam;
}

CongruenceConstraint parse_constraint(const std::string& text) {
    Cursor c{text};
    auto v = c.eat_var();
    if (!v) throw ParseError("constraint must start with a variable", 0);
    c.expect('%', "after the variable");
    auto m = c.eat_int();
    if (!m || *m < 1) throw ParseError("expected a positive modulus", c.i);
    c.expect('=', "before the residues");
    CongruenceConstraint cc{std::string(1, *v), *m, {}};
    for (;;) {
        auto r = c.eat_int();
        if (!r) throw ParseError("expected a residue", c.i);
        cc.residues.push_back(*r);
        if (!c.eat(',')) break;
    }
    if (!c.done()) throw ParseError("trailing input after the constraint", c.i);
    return cc;
}

} // namespace fsum
