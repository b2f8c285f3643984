#include "pencilgit/intpoly.hpp"

#include <cctype>

namespace pencilgit {

IntPoly IntPoly::constant(int nvars, const Int& c) {
    IntPoly p(nvars);
    if (c != 0) p.terms_[Exps(static_cast<std::size_t>(nvars), 0)] = c;
    return p;
}

IntPoly IntPoly::variable(int nvars, int index, unsigned exp) {
    IntPoly p(nvars);
    Exps e(static_cast<std::size_t>(nvars), 0);
    e[static_cast<std::size_t>(index)] = exp;
    p.terms_[e] = 1;
    return p;
}

void IntPoly::add_term(const Exps& e, const Int& c) {
    if (c == 0) return;
    auto it = terms_.find(e);
    if (it == terms_.end()) {
        terms_[e] = c;
    } else {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

namespace {
int merged_nvars(const IntPoly& a, const IntPoly& b) {
    int n = std::max(a.nvars(), b.nvars());
    require(a.nvars() < 0 || a.is_zero() || a.nvars() == n || b.nvars() < 0, "DegreeMismatch",
            "polynomial arity mismatch");
    require(b.nvars() < 0 || b.is_zero() || b.nvars() == n || a.nvars() < 0, "DegreeMismatch",
            "polynomial arity mismatch");
    return n;
}
} // namespace

IntPoly IntPoly::operator+(const IntPoly& o) const {
    IntPoly r(merged_nvars(*this, o));
    r.terms_ = terms_;
    for (const auto& [e, c] : o.terms_) r.add_term(e, c);
    return r;
}

IntPoly IntPoly::operator-(const IntPoly& o) const {
    IntPoly r(merged_nvars(*this, o));
    r.terms_ = terms_;
    for (const auto& [e, c] : o.terms_) r.add_term(e, -c);
    return r;
}

IntPoly IntPoly::operator*(const IntPoly& o) const {
    IntPoly r(merged_nvars(*this, o));
    for (const auto& [e1, c1] : terms_)
        for (const auto& [e2, c2] : o.terms_) {
            Exps e = e1;
            for (std::size_t i = 0; i < e.size(); ++i) e[i] += e2[i];
            r.add_term(e, c1 * c2);
        }
    return r;
}

IntPoly IntPoly::scaled(const Int& c) const {
    IntPoly r(nvars_);
    if (c == 0) return r;
    for (const auto& [e, v] : terms_) r.terms_[e] = v * c;
    return r;
}

IntPoly IntPoly::pow(unsigned e) const {
    require(nvars_ >= 0, "DegreeMismatch", "power of an arity-less polynomial");
    IntPoly r = constant(nvars_, 1);
    IntPoly base = *this;
    while (e) {
        if (e & 1u) r = r * base;
        base = base * base;
        e >>= 1u;
    }
    return r;
}

IntPoly IntPoly::substitute(const std::vector<IntPoly>& images, int target_nvars) const {
    require(static_cast<int>(images.size()) == nvars_, "DegreeMismatch",
            "substitution needs one image per variable");
    IntPoly r(target_nvars);
    for (const auto& [e, c] : terms_) {
        IntPoly term = IntPoly::constant(target_nvars, c);
        for (std::size_t i = 0; i < e.size(); ++i)
            if (e[i]) term = term * images[i].pow(e[i]);
        r = r + term;
    }
    return r;
}

std::string IntPoly::str(const std::vector<std::string>& names) const {
    if (is_zero()) return "0";
    std::string out;
    for (const auto& [e, c] : terms_) {
        std::string term;
        Int a = c;
        bool neg = a < 0;
        if (neg) a = -a;
        bool unit = a == 1;
        if (!unit) term += a.str();
        bool any = false;
        for (std::size_t i = 0; i < e.size(); ++i) {
            if (!e[i]) continue;
            if (!term.empty()) term += "*";
            term += names[i];
            if (e[i] > 1) term += "^" + std::to_string(e[i]);
            any = true;
        }
        if (!any && unit) term = "1";
        if (out.empty()) {
            out = (neg ? "-" : "") + term;
        } else {
            out += (neg ? " - " : " + ") + term;
        }
    }
    return out;
}

// ------------------------------------------------------------ parser

namespace {

struct Parser {
    const std::string& s;
    std::size_t pos = 0;
    const std::vector<std::string>& names;
    std::optional<long> j;

    void skip() {
        while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos]))) ++pos;
    }

    bool eat(char c) {
        skip();
        if (pos < s.size() && s[pos] == c) {
            ++pos;
            return true;
        }
        return false;
    }

    char peek() {
        skip();
        return pos < s.size() ? s[pos] : '\0';
    }

    [[noreturn]] void die(const std::string& msg) { fail("BadExpression", msg + " in: " + s); }

    // integer expression for exponents: numbers, j, + - *, parentheses
    long parse_exp_expr() {
        long v = parse_exp_term();
        while (true) {
            if (eat('+')) v += parse_exp_term();
            else if (eat('-')) v -= parse_exp_term();
            else return v;
        }
    }

    long parse_exp_term() {
        long v = parse_exp_atom();
        while (eat('*')) v *= parse_exp_atom();
        return v;
    }

    long parse_exp_atom() {
        skip();
        if (eat('(')) {
            long v = parse_exp_expr();
            if (!eat(')')) die("expected )");
            return v;
        }
        if (peek() == 'j') {
            if (!j) die("parameter j is not bound");
            ++pos;
            return *j;
        }
        if (!std::isdigit(static_cast<unsigned char>(peek()))) die("expected exponent");
        long v = 0;
        while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) {
            v = v * 10 + (s[pos] - '0');
            ++pos;
        }
        return v;
    }

    IntPoly parse_sum() {
        IntPoly v = parse_product(eat('-'));
        while (true) {
            if (eat('+')) v = v + parse_product(false);
            else if (eat('-')) v = v + parse_product(true);
            else return v;
        }
    }

    IntPoly parse_product(bool negate) {
        IntPoly v = parse_power();
        while (true) {
            skip();
            if (eat('*')) {
                v = v * parse_power();
                continue;
            }
            // implicit multiplication before a letter or '('
            char c = peek();
            if (c == '(' || std::isalpha(static_cast<unsigned char>(c))) {
                v = v * parse_power();
                continue;
            }
            break;
        }
        return negate ? v.scaled(-1) : v;
    }

    IntPoly parse_power() {
        IntPoly base = parse_atom();
        if (eat('^')) {
            long e = 0;
            if (eat('(')) {
                e = parse_exp_expr();
                if (!eat(')')) die("expected )");
            } else {
                e = parse_exp_atom();
            }
            if (e < 0) die("negative exponent");
            return base.pow(static_cast<unsigned>(e));
        }
        return base;
    }

    IntPoly parse_atom() {
        skip();
        if (eat('(')) {
            IntPoly v = parse_sum();
            if (!eat(')')) die("expected )");
            return v;
        }
        int n = static_cast<int>(names.size());
        if (std::isdigit(static_cast<unsigned char>(peek()))) {
            std::string digits;
            while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) digits += s[pos++];
            return IntPoly::constant(n, Int(digits));
        }
        if (std::isalpha(static_cast<unsigned char>(peek()))) {
            std::string word;
            while (pos < s.size() &&
                   (std::isalnum(static_cast<unsigned char>(s[pos])) || s[pos] == '_'))
                word += s[pos++];
            for (std::size_t i = 0; i < names.size(); ++i)
                if (names[i] == word) return IntPoly::variable(n, static_cast<int>(i));
            if (word == "j") {
                if (!j) die("parameter j is not bound");
                return IntPoly::constant(n, Int(*j));
            }
            die("unknown variable '" + word + "'");
        }
        die("unexpected character");
    }
};

} // namespace

IntPoly parse_poly(const std::string& text, const std::vector<std::string>& names,
                   std::optional<long> j) {
    Parser p{text, 0, names, j};
    IntPoly v = p.parse_sum();
    p.skip();
    require(p.pos == text.size(), "BadExpression", "trailing input in: " + text);
    if (v.nvars() < 0) v = IntPoly(static_cast<int>(names.size()));
    return v;
}

} // namespace pencilgit
