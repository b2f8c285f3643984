#include "pencilgit/field.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

namespace pencilgit {

// ---------------------------------------------------------------- Fel

Fel Fel::operator+(const Fel& o) const {
    require_same_field(*this, o);
    return Fel(k_, k_->base_add(a_, o.a_), k_->base_add(b_, o.b_));
}

Fel Fel::operator-(const Fel& o) const {
    require_same_field(*this, o);
    return Fel(k_, k_->base_sub(a_, o.a_), k_->base_sub(b_, o.b_));
}

Fel Fel::operator*(const Fel& o) const {
    require_same_field(*this, o);
    const Field& k = *k_;
    if (b_ == 0 && o.b_ == 0) return Fel(k_, k.base_mul(a_, o.a_), 0);
    // (a + b s)(c + e s) = ac + be d + (ae + bc) s
    Rat a = k.base_add(k.base_mul(a_, o.a_), k.base_mul(k.base_mul(b_, o.b_), k.d_));
    Rat b = k.base_add(k.base_mul(a_, o.b_), k.base_mul(b_, o.a_));
    return Fel(k_, std::move(a), std::move(b));
}

Fel Fel::operator/(const Fel& o) const { return *this * o.inverse(); }

Fel Fel::operator-() const {
    require(static_cast<bool>(k_), "FieldMismatch", "null element");
    return Fel(k_, k_->base_neg(a_), k_->base_neg(b_));
}

bool Fel::operator==(const Fel& o) const {
    require_same_field(*this, o);
    return a_ == o.a_ && b_ == o.b_;
}

Fel Fel::inverse() const {
    require(static_cast<bool>(k_), "FieldMismatch", "null element");
    require(!is_zero(), "DivisionByZero", "inverse of zero");
    const Field& k = *k_;
    if (b_ == 0) return Fel(k_, k.base_inv(a_), 0);
    // (a - b s) / (a^2 - b^2 d)
    Rat n = k.base_sub(k.base_mul(a_, a_), k.base_mul(k.base_mul(b_, b_), k.d_));
    Rat ni = k.base_inv(n);
    return Fel(k_, k.base_mul(a_, ni), k.base_mul(k.base_neg(b_), ni));
}

Fel Fel::pow(long e) const {
    require(static_cast<bool>(k_), "FieldMismatch", "null element");
    Fel base = e < 0 ? inverse() : *this;
    unsigned long n = e < 0 ? static_cast<unsigned long>(-e) : static_cast<unsigned long>(e);
    Fel r = k_->one();
    while (n) {
        if (n & 1) r = r * base;
        base = base * base;
        n >>= 1;
    }
    return r;
}

bool Fel::less(const Fel& o) const {
    require_same_field(*this, o);
    if (a_ != o.a_) return a_ < o.a_;
    return b_ < o.b_;
}

std::string Fel::str() const {
    if (!k_) return "<null>";
    if (b_ == 0) return rat_str(a_);
    std::string bs;
    if (b_ == 1) bs = "s";
    else if (b_ == -1) bs = "-s";
    else bs = rat_str(b_) + "*s";
    if (a_ == 0) return bs;
    if (b_ > 0 || (k_->finite())) return rat_str(a_) + "+" + bs;
    return rat_str(a_) + bs; // negative b prints its own sign
}

// ---------------------------------------------------------------- Field

FieldPtr Field::rationals() {
    static FieldPtr q = [] {
        auto f = std::shared_ptr<Field>(new Field());
        return FieldPtr(f);
    }();
    return q;
}

FieldPtr Field::prime(std::int64_t p) {
    require(is_prime(p), "NotPrime", std::to_string(p) + " is not prime");
    require(p != 2 && p != 3, "CharTwoOrThree", "characteristic 2 and 3 are excluded");
    auto f = std::shared_ptr<Field>(new Field());
    f->p_ = p;
    return f;
}

FieldPtr Field::quadratic(const FieldPtr& base, const Rat& d) {
    require(static_cast<bool>(base), "FieldMismatch", "null base field");
    require(!base->is_extension(), "SquareDiscriminant",
            "towers of quadratic extensions are not supported");
    Rat dr = base->reduce(d);
    require(dr != 0 && !base->base_sqrt(dr).has_value(), "SquareDiscriminant",
            "discriminant is a square in the base field");
    auto f = std::shared_ptr<Field>(new Field());
    f->p_ = base->p_;
    f->ext_ = true;
    f->d_ = dr;
    return f;
}

FieldPtr Field::parse(const std::string& spec) {
    std::string s = spec;
    std::string sqrt_part;
    auto paren = s.find('(');
    if (paren != std::string::npos) {
        require(s.back() == ')', "BadFieldSpec", "unbalanced field spec: " + spec);
        sqrt_part = s.substr(paren + 1, s.size() - paren - 2);
        s = s.substr(0, paren);
    }
    FieldPtr base;
    if (s == "q") {
        base = rationals();
    } else if (s.rfind("fp:", 0) == 0) {
        std::int64_t p = 0;
        try {
            p = std::stoll(s.substr(3));
        } catch (...) {
            fail("BadFieldSpec", "bad prime in field spec: " + spec);
        }
        base = prime(p);
    } else {
        fail("BadFieldSpec", "unknown field spec: " + spec);
    }
    if (sqrt_part.empty()) return base;
    require(sqrt_part.rfind("sqrt:", 0) == 0, "BadFieldSpec", "expected sqrt:<d> in: " + spec);
    auto d = parse_rat(sqrt_part.substr(5));
    require(d.has_value(), "BadFieldSpec", "bad discriminant in: " + spec);
    return quadratic(base, *d);
}

std::uint64_t Field::order() const {
    require(finite(), "InfiniteField", "order of an infinite field");
    auto q = static_cast<std::uint64_t>(p_);
    return ext_ ? q * q : q;
}

bool Field::same(const Field& o) const {
    return p_ == o.p_ && ext_ == o.ext_ && d_ == o.d_;
}

std::string Field::spec() const {
    std::string s = finite() ? "fp:" + std::to_string(p_) : "q";
    if (ext_) s += "(sqrt:" + rat_str(d_) + ")";
    return s;
}

Fel Field::zero() const { return Fel(shared_from_this(), 0, 0); }
Fel Field::one() const { return Fel(shared_from_this(), reduce(1), 0); }
Fel Field::from_int(std::int64_t v) const { return Fel(shared_from_this(), reduce(Rat(v)), 0); }
Fel Field::element(const Rat& a) const { return Fel(shared_from_this(), reduce(a), 0); }

Fel Field::element(const Rat& a, const Rat& b) const {
    require(ext_ || b == 0, "FieldMismatch", "sqrt coordinate in a base field");
    return Fel(shared_from_this(), reduce(a), reduce(b));
}

Fel Field::gen() const {
    require(ext_, "FieldMismatch", "generator of a non-extension field");
    return Fel(shared_from_this(), 0, reduce(1));
}

std::vector<Fel> Field::elements() const {
    require(finite(), "InfiniteField", "cannot list an infinite field");
    std::uint64_t q = order();
    require(q <= (1ull << 22), "FieldTooLarge", "field too large to enumerate");
    std::vector<Fel> out;
    out.reserve(q);
    for (std::uint64_t i = 0; i < q; ++i) out.push_back(element_at(i));
    return out;
}

Fel Field::element_at(std::uint64_t index) const {
    require(finite(), "InfiniteField", "cannot index an infinite field");
    auto p = static_cast<std::uint64_t>(p_);
    Rat a = Rat(Int(index % p));
    Rat b = Rat(Int(index / p));
    return Fel(shared_from_this(), a, b);
}

Rat Field::reduce(const Rat& v) const {
    if (p_ == 0) return v;
    Int m(p_);
    Int n = mod_floor(num(v), m);
    Int d = mod_floor(den(v), m);
    require(d != 0, "DivisionByZero", "denominator divisible by the characteristic");
    return Rat(mod_floor(n * mod_inverse(d, m), m));
}

Rat Field::base_add(const Rat& x, const Rat& y) const {
    if (p_ != 0) {
        // canonical residues: integer arithmetic, no rational normalization
        Int r = num(x) + num(y);
        if (r >= p_) r -= p_;
        return Rat(r);
    }
    return x + y;
}

Rat Field::base_sub(const Rat& x, const Rat& y) const {
    if (p_ != 0) {
        Int r = num(x) - num(y);
        if (r < 0) r += p_;
        return Rat(r);
    }
    return x - y;
}

Rat Field::base_mul(const Rat& x, const Rat& y) const {
    if (p_ != 0) return Rat(mod_floor(num(x) * num(y), Int(p_)));
    return x * y;
}

Rat Field::base_neg(const Rat& x) const {
    if (p_ != 0) return x == 0 ? Rat(0) : Rat(Int(p_) - num(x));
    return -x;
}

Rat Field::base_inv(const Rat& x) const {
    require(x != 0, "DivisionByZero", "inverse of zero");
    if (p_ != 0) return Rat(mod_inverse(num(x), Int(p_)));
    return 1 / x;
}

std::optional<Rat> Field::base_sqrt(const Rat& x) const {
    if (p_ == 0) return rational_sqrt(x);
    Int m(p_);
    Int v = num(x);
    for (Int s = 0; s <= m / 2; ++s) {
        if (mod_floor(s * s - v, m) == 0) return Rat(s);
    }
    return std::nullopt;
}

std::optional<Fel> Field::sqrt(const Fel& x) const {
    require(x.field() && same(*x.field()), "FieldMismatch", "sqrt in the wrong field");
    auto self = shared_from_this();
    if (x.b() == 0) {
        if (auto s = base_sqrt(x.a())) return Fel(self, *s, 0);
        if (ext_) {
            // x = d * t^2  =>  sqrt(x) = t*s
            if (auto t = base_sqrt(base_mul(x.a(), base_inv(d_)))) return Fel(self, 0, *t);
        }
        if (!ext_) return std::nullopt;
    }
    if (!ext_) return std::nullopt;
    // solve (u + v s)^2 = a + b s: u^2 + v^2 d = a, 2uv = b.
    // u^2 is a root of T^2 - a T + b^2 d / 4; needs sqrt(a^2 - b^2 d) in the base.
    Rat nrm = base_sub(base_mul(x.a(), x.a()), base_mul(base_mul(x.b(), x.b()), d_));
    auto s = base_sqrt(nrm);
    if (!s) return std::nullopt;
    Rat half = base_inv(reduce(2));
    for (int which = 0; which < 2; ++which) {
        Rat u2 = base_mul(which == 0 ? base_add(x.a(), *s) : base_sub(x.a(), *s), half);
        if (auto u = base_sqrt(u2)) {
            if (*u == 0) continue;
            Rat v = base_mul(base_mul(x.b(), half), base_inv(*u));
            Fel r(self, *u, v);
            Fel rn = -r;
            return rn.less(r) ? rn : r;
        }
    }
    // remaining possibility: pure-sqrt root (u = 0) handled above for b == 0
    return std::nullopt;
}

long Field::element_order(const Fel& x, long cap) const {
    Fel acc = x;
    for (long n = 1; n <= cap; ++n) {
        if (acc == one()) return n;
        acc = acc * x;
    }
    return 0;
}

std::optional<Fel> Field::root_of_unity(long m) const {
    require(m >= 1, "MissingRootOfUnity", "order must be positive");
    auto self = shared_from_this();
    if (m == 1) return one();
    if (m == 2) return from_int(-1);
    if (finite()) {
        std::uint64_t q = order();
        if ((q - 1) % static_cast<std::uint64_t>(m) != 0) return std::nullopt;
        for (std::uint64_t i = 1; i < q; ++i) {
            Fel x = element_at(i);
            if (x.is_zero()) continue;
            if (element_order(x, m) == m) return x;
        }
        return std::nullopt;
    }
    if (!ext_) return std::nullopt;
    // torsion in quadratic number fields: omega_4 if -d is a square,
    // omega_3 / omega_6 if -3d is a square (times rational squares).
    if (m == 4) {
        if (auto t = rational_sqrt(-Rat(1) / d_)) return Fel(self, 0, *t);
        return std::nullopt;
    }
    if (m == 3 || m == 6) {
        if (auto t = rational_sqrt(Rat(-3) / (Rat(4) * d_))) {
            Fel w3(self, Rat(-1, 2), *t);
            if (m == 3) return w3;
            return -(w3 * w3);
        }
        return std::nullopt;
    }
    return std::nullopt;
}

Fel Field::parse_element(const std::string& text) const {
    std::string t;
    for (char c : text)
        if (!std::isspace(static_cast<unsigned char>(c))) t += c;
    require(!t.empty(), "BadElementSyntax", "empty element");
    // split into top-level +/- terms
    std::vector<std::string> terms;
    std::size_t start = 0;
    for (std::size_t i = 0; i < t.size(); ++i) {
        if ((t[i] == '+' || t[i] == '-') && i > start) {
            terms.push_back(t.substr(start, i - start));
            start = i;
        }
    }
    terms.push_back(t.substr(start));
    Rat a = 0, b = 0;
    for (auto& term : terms) {
        bool neg = false;
        std::string body = term;
        if (!body.empty() && (body[0] == '+' || body[0] == '-')) {
            neg = body[0] == '-';
            body = body.substr(1);
        }
        require(!body.empty(), "BadElementSyntax", "bad element: " + text);
        Rat coef;
        bool has_s = false;
        if (body == "s") {
            coef = 1;
            has_s = true;
        } else if (body.size() > 2 && body.compare(body.size() - 2, 2, "*s") == 0) {
            auto c = parse_rat(body.substr(0, body.size() - 2));
            require(c.has_value(), "BadElementSyntax", "bad element: " + text);
            coef = *c;
            has_s = true;
        } else {
            auto c = parse_rat(body);
            require(c.has_value(), "BadElementSyntax", "bad element: " + text);
            coef = *c;
        }
        if (neg) coef = -coef;
        if (has_s) {
            require(ext_, "BadElementSyntax", "sqrt term in a base field: " + text);
            b += coef;
        } else {
            a += coef;
        }
    }
    return Fel(shared_from_this(), reduce(a), reduce(b));
}

} // namespace pencilgit
