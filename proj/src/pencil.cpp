#include "pencilgit/pencil.hpp"

#include <algorithm>

namespace pencilgit {

namespace {

// in-place RREF; returns pivot columns
std::vector<int> rref_inplace(const FieldPtr& k, std::vector<std::vector<Fel>>& m) {
    std::vector<int> pivots;
    std::size_t rows = m.size(), cols = rows ? m[0].size() : 0;
    std::size_t r = 0;
    for (std::size_t c = 0; c < cols && r < rows; ++c) {
        std::size_t pr = rows;
        for (std::size_t i = r; i < rows; ++i)
            if (!m[i][c].is_zero()) { pr = i; break; }
        if (pr == rows) continue;
        std::swap(m[r], m[pr]);
        Fel s = m[r][c].inverse();
        for (auto& x : m[r]) x = x * s;
        for (std::size_t i = 0; i < rows; ++i) {
            if (i == r || m[i][c].is_zero()) continue;
            Fel f = m[i][c];
            for (std::size_t j = 0; j < cols; ++j) m[i][j] -= f * m[r][j];
        }
        pivots.push_back(static_cast<int>(c));
        ++r;
    }
    (void)k;
    return pivots;
}

} // namespace

Pencil::Pencil(const BinaryForm& f, const BinaryForm& g)
    : k_(f.field()), basis_{f, g} {
    require(f.degree() == 3 && g.degree() == 3, "WrongDegree", "pencil generators must be cubics");
    require(k_->same(*g.field()), "FieldMismatch", "pencil generators over different fields");
    std::vector<std::vector<Fel>> m = {f.coeffs(), g.coeffs()};
    auto pivots = rref_inplace(k_, m);
    require(pivots.size() == 2, "LinearlyDependent", "generators span less than two dimensions");
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 4; ++j) rref_[i][j] = m[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
    std::array<Fel, 4> a, b;
    for (int j = 0; j < 4; ++j) {
        a[j] = f[j];
        b[j] = g[j];
    }
    pl_ = plucker_of_rows(k_, a, b);
}

BinaryForm Pencil::rref_form(int row) const {
    std::vector<Fel> c(rref_[static_cast<std::size_t>(row)].begin(), rref_[static_cast<std::size_t>(row)].end());
    return BinaryForm(k_, std::move(c));
}

bool Pencil::operator==(const Pencil& o) const {
    if (!k_->same(*o.k_)) return false;
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 4; ++j)
            if (rref_[i][j] != o.rref_[i][j]) return false;
    return true;
}

bool Pencil::less(const Pencil& o) const {
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 4; ++j)
            if (rref_[i][j] != o.rref_[i][j]) return rref_[i][j].less(o.rref_[i][j]);
    return false;
}

ProjPoint Pencil::wronskian_point() const {
    const auto& p = pl_;
    Fel two = k_->from_int(2), three = k_->from_int(3);
    std::vector<Fel> w = {p[0], two * p[1], three * p[2] + p[3], two * p[4], p[5]};
    bool all_zero = std::all_of(w.begin(), w.end(), [](const Fel& x) { return x.is_zero(); });
    require(!all_zero, "InternalError", "zero Wronskian for a genuine pencil");
    return ProjPoint(k_, std::move(w));
}

BinaryForm Pencil::member(const Fel& lambda, const Fel& mu) const {
    return basis_[0].scaled(lambda) + basis_[1].scaled(mu);
}

std::string Pencil::str() const {
    return "pencil{f=" + basis_[0].str() + ";g=" + basis_[1].str() + "}";
}

std::array<Fel, 6> plucker_of_rows(const FieldPtr& k, const std::array<Fel, 4>& a,
                                   const std::array<Fel, 4>& b) {
    (void)k;
    auto mi = [&](int i, int j) { return a[i] * b[j] - a[j] * b[i]; };
    return {mi(0, 1), mi(0, 2), mi(0, 3), mi(1, 2), mi(1, 3), mi(2, 3)};
}

Fel plucker_quadric(const FieldPtr& k, const std::array<Fel, 6>& p) {
    (void)k;
    return p[0] * p[5] - p[1] * p[4] + p[2] * p[3];
}

Pencil pencil_from_plucker(const FieldPtr& k, const std::array<Fel, 6>& p) {
    bool all_zero = std::all_of(p.begin(), p.end(), [](const Fel& x) { return x.is_zero(); });
    require(!all_zero, "ZeroVector", "zero Pluecker tuple");
    require(plucker_quadric(k, p).is_zero(), "NotOnPluckerQuadric",
            "tuple violates p01 p23 - p02 p13 + p03 p12 = 0");
    const Fel &p01 = p[0], &p02 = p[1], &p03 = p[2], &p12 = p[3], &p13 = p[4], &p23 = p[5];
    Fel z = k->zero();
    // v in the pencil iff v wedge omega = 0; rows are the four Lambda^3 coordinates
    std::vector<std::vector<Fel>> m = {
        {p12, z - p02, p01, z},
        {p13, z - p03, z, p01},
        {p23, z, z - p03, p02},
        {z, p23, z - p13, p12},
    };
    auto pivots = rref_inplace(k, m);
    require(pivots.size() == 2, "NotOnPluckerQuadric", "tuple is not decomposable");
    // kernel basis from the two free columns
    std::vector<int> free_cols;
    for (int c = 0; c < 4; ++c)
        if (std::find(pivots.begin(), pivots.end(), c) == pivots.end()) free_cols.push_back(c);
    std::vector<BinaryForm> gens;
    for (int fc : free_cols) {
        std::vector<Fel> v(4, k->zero());
        v[static_cast<std::size_t>(fc)] = k->one();
        for (std::size_t r = 0; r < pivots.size(); ++r)
            v[static_cast<std::size_t>(pivots[r])] = z - m[r][static_cast<std::size_t>(fc)];
        gens.emplace_back(k, std::move(v));
    }
    Pencil q(gens[0], gens[1]);
    // sanity: reconstructed tuple is projectively the input
    const auto& ql = q.plucker();
    int lead = -1;
    for (int i = 0; i < 6; ++i)
        if (!p[static_cast<std::size_t>(i)].is_zero()) { lead = i; break; }
    Fel s = ql[static_cast<std::size_t>(lead)] / p[static_cast<std::size_t>(lead)];
    for (int i = 0; i < 6; ++i)
        require(ql[static_cast<std::size_t>(i)] == p[static_cast<std::size_t>(i)] * s, "InternalError",
                "Pluecker reconstruction mismatch");
    return q;
}

namespace {

FieldPtr designated_extension(const FieldPtr& k) {
    if (k->is_extension()) return k;
    if (k->finite()) {
        for (std::int64_t d = 2; d < k->characteristic(); ++d) {
            Fel cand = k->from_int(d);
            if (!k->sqrt(cand).has_value()) return Field::quadratic(k, Rat(d));
        }
        fail("InternalError", "no quadratic non-residue found");
    }
    return k; // over Q the extension depends on the discriminant; handled at use site
}

Fel embed(const FieldPtr& ext, const Fel& x) {
    if (ext.get() == x.field().get() || ext->same(*x.field())) return x;
    require(x.in_base(), "FieldMismatch", "cannot embed extension element");
    return ext->element(x.a());
}

} // namespace

CubeMembers cube_members(const Pencil& p, bool use_quadratic_extension) {
    const FieldPtr& k = p.field();
    const auto& a = p.gen0().coeffs();
    const auto& b = p.gen1().coeffs();
    Fel two = k->from_int(2), three = k->from_int(3), nine = k->from_int(9);
    // Hessian(lambda f + mu g) = 4 (A t0^2 + B t0 t1 + C t1^2) with A, B, C
    // quadratic forms in (lambda, mu); coefficient lists are (l^2, l*mu, mu^2).
    auto quad = [&](const Fel& laa, const Fel& lab, const Fel& lbb) {
        return BinaryForm(k, {laa, lab, lbb});
    };
    BinaryForm qA = quad(three * a[0] * a[2] - a[1] * a[1],
                         three * (a[0] * b[2] + a[2] * b[0]) - two * a[1] * b[1],
                         three * b[0] * b[2] - b[1] * b[1]);
    BinaryForm qB = quad(nine * a[0] * a[3] - a[1] * a[2],
                         nine * (a[0] * b[3] + a[3] * b[0]) - (a[1] * b[2] + a[2] * b[1]),
                         nine * b[0] * b[3] - b[1] * b[2]);
    BinaryForm qC = quad(three * a[1] * a[3] - a[2] * a[2],
                         three * (a[1] * b[3] + a[3] * b[1]) - two * a[2] * b[2],
                         three * b[1] * b[3] - b[2] * b[2]);
    std::vector<BinaryForm> qs;
    for (auto& q : {qA, qB, qC})
        if (!q.is_zero()) qs.push_back(q);
    require(!qs.empty(), "InternalError", "every member of a pencil cannot be a cube");
    BinaryForm g = qs[0];
    for (std::size_t i = 1; i < qs.size(); ++i) g = gcd_forms(g, qs[i]);

    CubeMembers out;
    out.member_field = k;
    auto add_root = [&](const FieldPtr& kk, Fel lam, Fel mu) {
        ProjPoint pt(kk, {std::move(lam), std::move(mu)});
        for (auto& m : out.members)
            if (m == pt) return;
        out.members.push_back(std::move(pt));
    };

    if (g.degree() == 0) {
        out.count = 0;
        return out;
    }
    if (g.degree() == 1) {
        // g = c0 lambda + c1 mu
        add_root(k, k->zero() - g[1], g[0]);
        out.count = 1;
        return out;
    }
    // degree 2: roots of c0 l^2 + c1 l m + c2 m^2
    const Fel &c0 = g[0], &c1 = g[1], &c2 = g[2];
    if (c0.is_zero()) {
        add_root(k, k->one(), k->zero()); // mu = 0
        if (!c1.is_zero()) add_root(k, k->zero() - c2, c1);
        out.count = static_cast<int>(out.members.size());
        return out;
    }
    Fel disc = c1 * c1 - k->from_int(4) * c0 * c2;
    if (disc.is_zero()) {
        add_root(k, k->zero() - c1, two * c0);
        out.count = 1;
        return out;
    }
    if (auto s = k->sqrt(disc)) {
        add_root(k, (k->zero() - c1) + *s, two * c0);
        add_root(k, (k->zero() - c1) - *s, two * c0);
        out.count = 2;
        return out;
    }
    if (!use_quadratic_extension) {
        out.count = 0;
        return out;
    }
    // move to the designated quadratic extension
    FieldPtr ext;
    Fel sd = k->zero();
    if (k->is_extension()) {
        out.count = 0; // no towers; sqrt absent in the field itself
        return out;
    }
    if (k->finite()) {
        ext = designated_extension(k);
        // disc = d * (disc/d), and disc/d is a residue
        Fel t = *k->sqrt(disc / k->element(ext->disc()));
        sd = ext->gen() * embed(ext, t);
    } else {
        ext = Field::quadratic(k, disc.a());
        sd = ext->gen();
    }
    Fel ec1 = embed(ext, c1), ec0 = embed(ext, c0);
    add_root(ext, (ext->zero() - ec1) + sd, embed(ext, two) * ec0);
    add_root(ext, (ext->zero() - ec1) - sd, embed(ext, two) * ec0);
    out.member_field = ext;
    out.count = 2;
    return out;
}

} // namespace pencilgit
