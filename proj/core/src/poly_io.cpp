#include "triplane/poly_io.hpp"

#include <cctype>

namespace triplane {

namespace {

struct Parser {
    std::string_view text;
    std::size_t pos = 0;
    const VarSet& vars;
    const std::map<std::string, Rat>& bindings;

    Parser(std::string_view t, const VarSet& v, const std::map<std::string, Rat>& b)
        : text(t), vars(v), bindings(b) {}

    void skip_ws() {
        while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
    }
    bool eof() {
        skip_ws();
        return pos >= text.size();
    }
    char peek() {
        skip_ws();
        return pos < text.size() ? text[pos] : '\0';
    }
    bool accept(char c) {
        if (peek() == c) { ++pos; return true; }
        return false;
    }
    void expect(char c) {
        if (!accept(c)) throw ParseError(std::string("expected '") + c + "'", pos);
    }

    Int integer() {
        skip_ws();
        std::size_t start = pos;
        while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
        if (pos == start) throw ParseError("expected a number", start);
        return Int(std::string(text.substr(start, pos - start)));
    }

    std::string ident() {
        skip_ws();
        std::size_t start = pos;
        while (pos < text.size() &&
               (std::isalnum(static_cast<unsigned char>(text[pos])) || text[pos] == '_'))
            ++pos;
        return std::string(text.substr(start, pos - start));
    }

    QPoly expr() {
        bool neg = accept('-');
        QPoly r = term();
        if (neg) r = -r;
        while (true) {
            if (accept('+')) r += term();
            else if (accept('-')) r -= term();
            else break;
        }
        return r;
    }

    QPoly term() {
        QPoly r = factor();
        while (true) {
            if (accept('*')) {
                r = r * factor();
            } else if (accept('/')) {
                std::size_t at = pos;
                Int d = integer();
                if (d == 0) throw ParseError("division by zero", at);
                r = r.scaled(Rat(1, d));
            } else {
                break;
            }
        }
        return r;
    }

    QPoly factor() {
        char c = peek();
        if (c == '(') {
            ++pos;
            QPoly inner = expr();
            expect(')');
            return inner;
        }
        if (c == '-') { // unary minus inside a product, e.g. "2*-3" is rejected; "-(...)" handled by expr
            ++pos;
            return -factor();
        }
        if (std::isdigit(static_cast<unsigned char>(c))) {
            Int n = integer();
            return QPoly::constant(vars, Rat(n));
        }
        if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
            std::size_t at = pos;
            std::string name = ident();
            QPoly base(vars);
            int vi = vars.index_of(name);
            if (vi >= 0) {
                base = QPoly::variable(vars, vi);
            } else if (auto it = bindings.find(name); it != bindings.end()) {
                base = QPoly::constant(vars, it->second);
            } else {
                throw ParseError("unknown variable '" + name + "'", at);
            }
            if (accept('^')) {
                Int e = integer();
                if (e > 64) throw ParseError("exponent too large", pos);
                return base.pow(static_cast<unsigned>(e));
            }
            return base;
        }
        throw ParseError("unexpected character", pos);
    }
};

void append_monomial(std::string& out, const VarSet& vars, const Exp& e, bool coeff_printed) {
    bool first = !coeff_printed;
    for (int i = 0; i < vars.size(); ++i) {
        int k = e[static_cast<std::size_t>(i)];
        if (k == 0) continue;
        if (!first) out += "*";
        out += vars.name(i);
        if (k >= 2) out += "^" + std::to_string(k);
        first = false;
    }
}

template <typename K, typename AbsStr>
std::string format_impl(const MPoly<K>& p, AbsStr&& abs_str) {
    if (p.is_zero()) return "0";
    std::string out;
    bool first = true;
    for (const auto& [e, c] : p.terms()) {
        auto [negative, cs] = abs_str(c);
        if (first) {
            if (negative) out += "-";
        } else {
            out += negative ? " - " : " + ";
        }
        bool is_const_term = e == Exp{0, 0, 0};
        bool coeff_printed = false;
        if (is_const_term || cs != "1") {
            out += cs;
            coeff_printed = true;
        }
        if (!is_const_term) append_monomial(out, p.vars(), e, coeff_printed);
        first = false;
    }
    return out;
}

} // namespace

QPoly parse_poly(std::string_view text, const VarSet& vars,
                 const std::map<std::string, Rat>& bindings) {
    Parser p(text, vars, bindings);
    if (p.eof()) throw ParseError("empty polynomial", 0);
    QPoly r = p.expr();
    if (!p.eof()) throw ParseError("trailing input", p.pos);
    return r;
}

HPoly parse_hpoly(std::string_view text, const VarSet& vars,
                  const std::map<std::string, Rat>& bindings) {
    return HPoly(parse_poly(text, vars, bindings));
}

std::string format(const QPoly& p) {
    return format_impl(p, [](const Rat& c) {
        bool neg = c < 0;
        return std::make_pair(neg, to_string(neg ? Rat(-c) : c));
    });
}

std::string format(const HPoly& p) { return format(p.poly()); }

std::string format(const XPoly& p) {
    return format_impl(p, [](const QuadExt& c) {
        // Radical coefficients never print as a bare leading minus; wrap them.
        if (c.is_rational()) {
            bool neg = c.as_rational() < 0;
            Rat a = neg ? Rat(-c.as_rational()) : c.as_rational();
            return std::make_pair(neg, to_string(a));
        }
        return std::make_pair(false, "(" + c.str() + ")");
    });
}

std::string format(const XHPoly& p) { return format(p.poly()); }

} // namespace triplane
