#include "pencilgit/binary_form.hpp"

#include <algorithm>

namespace pencilgit {

BinaryForm::BinaryForm(FieldPtr k, std::vector<Fel> coeffs) : k_(std::move(k)), c_(std::move(coeffs)) {
    require(!c_.empty(), "WrongDegree", "a form needs at least one coefficient");
    for (auto& x : c_) require(x.field() && x.field()->same(*k_), "FieldMismatch", "coefficient field");
}

BinaryForm BinaryForm::zero(const FieldPtr& k, int degree) {
    std::vector<Fel> c(static_cast<std::size_t>(degree) + 1, k->zero());
    return BinaryForm(k, std::move(c));
}

BinaryForm BinaryForm::from_ints(const FieldPtr& k, const std::vector<std::int64_t>& coeffs) {
    std::vector<Fel> c;
    c.reserve(coeffs.size());
    for (auto v : coeffs) c.push_back(k->from_int(v));
    return BinaryForm(k, std::move(c));
}

bool BinaryForm::is_zero() const {
    return std::all_of(c_.begin(), c_.end(), [](const Fel& x) { return x.is_zero(); });
}

BinaryForm BinaryForm::operator+(const BinaryForm& o) const {
    require(degree() == o.degree(), "DegreeMismatch", "adding forms of different degree");
    std::vector<Fel> c;
    c.reserve(c_.size());
    for (std::size_t i = 0; i < c_.size(); ++i) c.push_back(c_[i] + o.c_[i]);
    return BinaryForm(k_, std::move(c));
}

BinaryForm BinaryForm::operator-(const BinaryForm& o) const {
    require(degree() == o.degree(), "DegreeMismatch", "subtracting forms of different degree");
    std::vector<Fel> c;
    c.reserve(c_.size());
    for (std::size_t i = 0; i < c_.size(); ++i) c.push_back(c_[i] - o.c_[i]);
    return BinaryForm(k_, std::move(c));
}

BinaryForm BinaryForm::scaled(const Fel& s) const {
    std::vector<Fel> c;
    c.reserve(c_.size());
    for (auto& x : c_) c.push_back(x * s);
    return BinaryForm(k_, std::move(c));
}

BinaryForm BinaryForm::times(const BinaryForm& o) const {
    std::vector<Fel> c(c_.size() + o.c_.size() - 1, k_->zero());
    for (std::size_t i = 0; i < c_.size(); ++i)
        for (std::size_t j = 0; j < o.c_.size(); ++j) c[i + j] += c_[i] * o.c_[j];
    return BinaryForm(k_, std::move(c));
}

BinaryForm BinaryForm::d_t0() const {
    int n = degree();
    require(n >= 1, "WrongDegree", "derivative of a constant form");
    std::vector<Fel> c;
    c.reserve(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) c.push_back(c_[static_cast<std::size_t>(i)] * k_->from_int(n - i));
    return BinaryForm(k_, std::move(c));
}

BinaryForm BinaryForm::d_t1() const {
    int n = degree();
    require(n >= 1, "WrongDegree", "derivative of a constant form");
    std::vector<Fel> c;
    c.reserve(static_cast<std::size_t>(n));
    for (int i = 1; i <= n; ++i) c.push_back(c_[static_cast<std::size_t>(i)] * k_->from_int(i));
    return BinaryForm(k_, std::move(c));
}

BinaryForm BinaryForm::substitute(const Fel& a, const Fel& b, const Fel& c, const Fel& d) const {
    std::size_t n = c_.size() - 1;
    // coefficient tables of (a t0 + b t1)^k and (c t0 + d t1)^k
    std::vector<std::vector<Fel>> xp(n + 1), yp(n + 1);
    xp[0] = {k_->one()};
    yp[0] = {k_->one()};
    for (std::size_t k = 1; k <= n; ++k) {
        xp[k].assign(k + 1, k_->zero());
        yp[k].assign(k + 1, k_->zero());
        for (std::size_t i = 0; i < k; ++i) {
            xp[k][i] += xp[k - 1][i] * a;
            xp[k][i + 1] += xp[k - 1][i] * b;
            yp[k][i] += yp[k - 1][i] * c;
            yp[k][i + 1] += yp[k - 1][i] * d;
        }
    }
    std::vector<Fel> res(n + 1, k_->zero());
    for (std::size_t i = 0; i <= n; ++i) {
        const Fel& ci = c_[i];
        if (ci.is_zero()) continue;
        const auto& xs = xp[n - i];
        const auto& ys = yp[i];
        for (std::size_t s = 0; s < xs.size(); ++s) {
            Fel t = ci * xs[s];
            if (t.is_zero()) continue;
            for (std::size_t u = 0; u < ys.size(); ++u) res[s + u] += t * ys[u];
        }
    }
    return BinaryForm(k_, std::move(res));
}

Fel BinaryForm::eval(const Fel& t0, const Fel& t1) const {
    Fel acc = k_->zero();
    int n = degree();
    for (int i = 0; i <= n; ++i)
        acc += c_[static_cast<std::size_t>(i)] * t0.pow(n - i) * t1.pow(i);
    return acc;
}

BinaryForm BinaryForm::monic() const {
    for (auto& x : c_) {
        if (!x.is_zero()) return scaled(x.inverse());
    }
    return *this;
}

bool BinaryForm::proportional_to(const BinaryForm& o) const {
    if (degree() != o.degree()) return false;
    if (is_zero() || o.is_zero()) return is_zero() && o.is_zero();
    return monic().coeffs() == o.monic().coeffs();
}

std::string BinaryForm::str() const {
    std::string s = "[";
    for (std::size_t i = 0; i < c_.size(); ++i) {
        if (i) s += ",";
        s += c_[i].str();
    }
    return s + "]";
}

BinaryForm jacobian(const BinaryForm& f, const BinaryForm& g) {
    require(f.degree() == g.degree(), "DegreeMismatch", "jacobian of unequal degrees");
    require(f.degree() >= 1, "WrongDegree", "jacobian needs degree >= 1");
    return f.d_t0().times(g.d_t1()) - f.d_t1().times(g.d_t0());
}

BinaryForm hessian(const BinaryForm& f) {
    require(f.degree() >= 2, "WrongDegree", "hessian needs degree >= 2");
    BinaryForm f00 = f.d_t0().d_t0();
    BinaryForm f11 = f.d_t1().d_t1();
    BinaryForm f01 = f.d_t0().d_t1();
    return f00.times(f11) - f01.times(f01);
}

namespace {

// dehomogenization at t0 = 1: the coefficient list read as a polynomial in t1
// (ascending). Trailing zeros are the t0-powers of the form.
std::vector<Fel> trim(std::vector<Fel> v) {
    while (!v.empty() && v.back().is_zero()) v.pop_back();
    return v;
}

// remainder of a by b (univariate, ascending coefficients, b nonzero)
std::vector<Fel> poly_rem(std::vector<Fel> a, const std::vector<Fel>& b) {
    Fel lead_inv = b.back().inverse();
    while (a.size() >= b.size()) {
        Fel f = a.back() * lead_inv;
        std::size_t off = a.size() - b.size();
        for (std::size_t i = 0; i < b.size(); ++i) a[off + i] -= f * b[i];
        a = trim(std::move(a));
        if (a.empty()) break;
    }
    return a;
}

} // namespace

BinaryForm gcd_forms(const BinaryForm& f, const BinaryForm& g) {
    require(!(f.is_zero() && g.is_zero()), "BothZero", "gcd of two zero forms");
    require(f.field()->same(*g.field()), "FieldMismatch", "gcd across fields");
    const FieldPtr& k = f.field();
    if (f.is_zero()) return g.monic();
    if (g.is_zero()) return f.monic();
    std::vector<Fel> pf = trim(f.coeffs());
    std::vector<Fel> pg = trim(g.coeffs());
    int t0f = f.degree() - (static_cast<int>(pf.size()) - 1);
    int t0g = g.degree() - (static_cast<int>(pg.size()) - 1);
    int t0common = std::min(t0f, t0g);
    std::vector<Fel> a = pf, b = pg;
    while (!b.empty()) {
        std::vector<Fel> r = poly_rem(a, b);
        a = std::move(b);
        b = std::move(r);
    }
    // homogenize the polynomial gcd and restore the common t0-power
    int n = static_cast<int>(a.size()) - 1 + t0common;
    std::vector<Fel> out(static_cast<std::size_t>(n) + 1, k->zero());
    for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i];
    return BinaryForm(k, std::move(out)).monic();
}

BinaryForm divide_exact(const BinaryForm& f, const BinaryForm& g) {
    require(!g.is_zero(), "DivisionByZero", "dividing a form by zero");
    const FieldPtr& k = f.field();
    require(k->same(*g.field()), "FieldMismatch", "division across fields");
    int n = f.degree(), m = g.degree();
    require(n >= m, "DegreeMismatch", "quotient degree would be negative");
    if (f.is_zero()) return BinaryForm::zero(k, n - m);
    std::vector<Fel> pf = trim(f.coeffs());
    std::vector<Fel> pg = trim(g.coeffs());
    int t0f = n - (static_cast<int>(pf.size()) - 1);
    int t0g = m - (static_cast<int>(pg.size()) - 1);
    require(t0f >= t0g, "NotDivisible", "t0-power of divisor exceeds dividend");
    // long division of pf by pg; must be exact
    std::vector<Fel> q(pf.size() - pg.size() + 1, k->zero());
    std::vector<Fel> r = pf;
    Fel lead_inv = pg.back().inverse();
    while (r.size() >= pg.size()) {
        Fel fq = r.back() * lead_inv;
        std::size_t off = r.size() - pg.size();
        q[off] = fq;
        for (std::size_t i = 0; i < pg.size(); ++i) r[off + i] -= fq * pg[i];
        r = trim(std::move(r));
        if (r.empty()) break;
    }
    require(r.empty(), "NotDivisible", "inexact form division");
    int qdeg = n - m;
    std::vector<Fel> out(static_cast<std::size_t>(qdeg) + 1, k->zero());
    for (std::size_t i = 0; i < q.size(); ++i) out[i] = q[i];
    return BinaryForm(k, std::move(out));
}

bool is_perfect_cube(const BinaryForm& f) {
    require(f.degree() == 3, "WrongDegree", "cube test is for cubics");
    require(!f.is_zero(), "ZeroForm", "cube test on the zero form");
    return hessian(f).is_zero();
}

Fel cubic_discriminant(const BinaryForm& f) {
    require(f.degree() == 3, "WrongDegree", "discriminant of a non-cubic");
    const Fel &a = f[0], &b = f[1], &c = f[2], &d = f[3];
    const FieldPtr& k = f.field();
    return k->from_int(18) * a * b * c * d - k->from_int(4) * b * b * b * d + b * b * c * c -
           k->from_int(4) * a * c * c * c - k->from_int(27) * a * a * d * d;
}

} // namespace pencilgit
