#include "pencilgit/pgl2.hpp"

#include <algorithm>
#include <deque>

namespace pencilgit {

ProjMat::ProjMat(FieldPtr k, const Fel& a, const Fel& b, const Fel& c, const Fel& d)
    : k_(std::move(k)), m_{a, b, c, d} {
    Fel dt = a * d - b * c;
    require(!dt.is_zero(), "SingularMatrix", "projective matrix must be invertible");
    for (auto& x : m_) {
        if (!x.is_zero()) {
            Fel s = x.inverse();
            for (auto& y : m_) y = y * s;
            break;
        }
    }
}

ProjMat ProjMat::identity(const FieldPtr& k) {
    return ProjMat(k, k->one(), k->zero(), k->zero(), k->one());
}

ProjMat ProjMat::from_ints(const FieldPtr& k, std::int64_t a, std::int64_t b, std::int64_t c,
                           std::int64_t d) {
    return ProjMat(k, k->from_int(a), k->from_int(b), k->from_int(c), k->from_int(d));
}

ProjMat ProjMat::operator*(const ProjMat& o) const {
    require(k_->same(*o.k_), "FieldMismatch", "matrix product across fields");
    return ProjMat(k_, m_[0] * o.m_[0] + m_[1] * o.m_[2], m_[0] * o.m_[1] + m_[1] * o.m_[3],
                   m_[2] * o.m_[0] + m_[3] * o.m_[2], m_[2] * o.m_[1] + m_[3] * o.m_[3]);
}

ProjMat ProjMat::inverse() const {
    return ProjMat(k_, m_[3], k_->zero() - m_[1], k_->zero() - m_[2], m_[0]);
}

bool ProjMat::less(const ProjMat& o) const {
    for (int i = 0; i < 4; ++i)
        if (m_[i] != o.m_[i]) return m_[i].less(o.m_[i]);
    return false;
}

int ProjMat::order(int cap) const {
    ProjMat id = identity(k_);
    ProjMat x = *this;
    for (int n = 1; n <= cap; ++n) {
        if (x == id) return n;
        x = x * *this;
    }
    fail("InfiniteOrder", "element order exceeds cap");
}

std::string ProjMat::str() const {
    return "[" + m_[0].str() + "," + m_[1].str() + ";" + m_[2].str() + "," + m_[3].str() + "]";
}

BinaryForm act(const ProjMat& A, const BinaryForm& f) {
    require(A.field()->same(*f.field()), "FieldMismatch", "matrix acts over a different field");
    const auto& m = A.entries();
    // adjugate of the canonical representative: a projective lift of A^{-1}
    return f.substitute(m[3], A.field()->zero() - m[1], A.field()->zero() - m[2], m[0]);
}

Pencil act(const ProjMat& A, const Pencil& p) { return Pencil(act(A, p.gen0()), act(A, p.gen1())); }

ProjPoint act(const ProjMat& A, const ProjPoint& pt) {
    require(pt.size() == 2, "DegreeMismatch", "matrix action is on P^1 points");
    const auto& m = A.entries();
    return ProjPoint(A.field(), {m[0] * pt[0] + m[1] * pt[1], m[2] * pt[0] + m[3] * pt[1]});
}

Pencil act_lift(const std::array<Fel, 4>& lift, const Pencil& p) {
    const FieldPtr& k = p.field();
    Fel dt = lift[0] * lift[3] - lift[1] * lift[2];
    require(!dt.is_zero(), "SingularMatrix", "singular lift");
    auto sub = [&](const BinaryForm& f) {
        return f.substitute(lift[3], k->zero() - lift[1], k->zero() - lift[2], lift[0]);
    };
    return Pencil(sub(p.gen0()), sub(p.gen1()));
}

FiniteSubgroup::FiniteSubgroup(std::string name, std::vector<ProjMat> generators)
    : name_(std::move(name)) {
    require(!generators.empty(), "EmptyGenerators", "subgroup needs generators");
    k_ = generators[0].field();
    gens_ = std::move(generators);
    ProjMat id = ProjMat::identity(k_);
    auto cmp = [](const ProjMat& x, const ProjMat& y) { return x.less(y); };
    std::vector<ProjMat> seen = {id};
    std::deque<ProjMat> frontier = {id};
    auto known = [&](const ProjMat& g) {
        auto it = std::lower_bound(seen.begin(), seen.end(), g, cmp);
        return it != seen.end() && *it == g;
    };
    auto insert = [&](const ProjMat& g) {
        auto it = std::lower_bound(seen.begin(), seen.end(), g, cmp);
        seen.insert(it, g);
    };
    while (!frontier.empty()) {
        ProjMat x = frontier.front();
        frontier.pop_front();
        for (const auto& g : gens_) {
            ProjMat y = x * g;
            if (!known(y)) {
                insert(y);
                frontier.push_back(y);
            }
            require(seen.size() <= 4096, "InfiniteOrder", "generated group is too large");
        }
    }
    elems_ = std::move(seen);
    // closure under inverse comes for free in a finite group; spot-check anyway
    for (const auto& g : gens_) require(contains(g.inverse()), "InternalError", "closure failure");
}

FiniteSubgroup FiniteSubgroup::from_closed_set(std::string name, std::vector<ProjMat> elements) {
    require(!elements.empty(), "EmptyGenerators", "subgroup needs elements");
    FiniteSubgroup g(std::move(name), {ProjMat::identity(elements[0].field())});
    g.gens_ = elements;
    std::sort(elements.begin(), elements.end(),
              [](const ProjMat& x, const ProjMat& y) { return x.less(y); });
    g.elems_ = std::move(elements);
    require(g.contains(ProjMat::identity(g.k_)), "InternalError", "set lacks identity");
    std::size_t step = std::max<std::size_t>(1, g.elems_.size() / 8);
    for (std::size_t i = 0; i < g.elems_.size(); i += step) {
        require(g.contains(g.elems_[i].inverse()), "InternalError", "set not inverse-closed");
        require(g.contains(g.elems_[i] * g.elems_[(i * 7 + 3) % g.elems_.size()]), "InternalError",
                "set not product-closed");
    }
    return g;
}

bool FiniteSubgroup::contains(const ProjMat& g) const {
    auto cmp = [](const ProjMat& x, const ProjMat& y) { return x.less(y); };
    auto it = std::lower_bound(elems_.begin(), elems_.end(), g, cmp);
    return it != elems_.end() && *it == g;
}

bool FiniteSubgroup::contains_subgroup(const FiniteSubgroup& h) const {
    return std::all_of(h.elements().begin(), h.elements().end(),
                       [&](const ProjMat& g) { return contains(g); });
}

bool FiniteSubgroup::set_equal(const FiniteSubgroup& h) const {
    return order() == h.order() && contains_subgroup(h);
}

std::vector<int> FiniteSubgroup::order_profile() const {
    std::vector<int> out;
    out.reserve(elems_.size());
    for (const auto& g : elems_) out.push_back(g.order());
    std::sort(out.begin(), out.end());
    return out;
}

std::string FiniteSubgroup::type_guess() const {
    auto prof = order_profile();
    std::size_t n = order();
    auto count = [&](int k) { return std::count(prof.begin(), prof.end(), k); };
    if (n == 1) return "trivial";
    if (n == 2) return "Z/2";
    if (n == 4 && count(2) == 3) return "D4 (Klein four)";
    if (n == 12 && count(3) == 8) return "A4";
    if (n == 24 && count(4) == 6 && prof.back() == 4) return "S4";
    if (k_->finite()) {
        // the connected-ish isotropy groups of the orbit atlas
        auto q = static_cast<std::size_t>(k_->characteristic());
        if (n == q * (q - 1)) return "B2 (Borel)";
        if (n == q - 1 && prof.back() == static_cast<int>(n)) return "T (torus)";
        if (q > 5 && n == 2 * (q - 1) && count(2) >= static_cast<int>(n / 2)) return "N(T)";
    }
    if (prof.back() == static_cast<int>(n)) return "C" + std::to_string(n);
    if (n % 2 == 0 && count(static_cast<int>(n / 2)) > 0 && count(2) >= static_cast<int>(n / 2))
        return "D" + std::to_string(n) + " (dihedral)";
    return "order " + std::to_string(n);
}

ProjMat sigma3(const FieldPtr& k) {
    auto w4 = k->root_of_unity(4);
    require(w4.has_value(), "MissingRootOfUnity", "sigma3 needs a primitive 4th root of unity");
    return ProjMat(k, *w4, k->from_int(-1), *w4, k->one());
}

ProjMat sigma2(const FieldPtr& k) {
    return ProjMat::from_ints(k, -1, 1, 1, 1);
}

namespace {

std::vector<ProjMat> d4_generators(const FieldPtr& k) {
    return {ProjMat::from_ints(k, 1, 0, 0, -1), ProjMat::from_ints(k, 0, -1, 1, 0)};
}

} // namespace

FiniteSubgroup subgroup_cyclic(long m, const FieldPtr& k) {
    auto w = k->root_of_unity(m);
    require(w.has_value(), "MissingRootOfUnity",
            "no primitive root of unity of order " + std::to_string(m));
    return FiniteSubgroup("C" + std::to_string(m),
                          {ProjMat(k, k->one(), k->zero(), k->zero(), *w)});
}

FiniteSubgroup subgroup_dihedral(long m, const FieldPtr& k) {
    require(m >= 2, "MissingRootOfUnity", "dihedral groups start at D4");
    auto w = k->root_of_unity(m);
    require(w.has_value(), "MissingRootOfUnity",
            "no primitive root of unity of order " + std::to_string(m));
    std::vector<ProjMat> gens = {ProjMat(k, k->one(), k->zero(), k->zero(), *w),
                                 ProjMat::from_ints(k, 0, -1, 1, 0)};
    return FiniteSubgroup("D" + std::to_string(2 * m), std::move(gens));
}

FiniteSubgroup subgroup_d4(const FieldPtr& k) { return FiniteSubgroup("D4", d4_generators(k)); }

FiniteSubgroup subgroup_d8(const FieldPtr& k) {
    auto gens = d4_generators(k);
    gens.push_back(sigma3(k).inverse() * sigma2(k));
    return FiniteSubgroup("D8", std::move(gens));
}

FiniteSubgroup subgroup_a4(const FieldPtr& k) {
    auto gens = d4_generators(k);
    gens.push_back(sigma3(k));
    return FiniteSubgroup("A4", std::move(gens));
}

FiniteSubgroup subgroup_s4(const FieldPtr& k) {
    auto gens = d4_generators(k);
    gens.push_back(sigma3(k));
    gens.push_back(sigma2(k));
    return FiniteSubgroup("S4", std::move(gens));
}

FiniteSubgroup subgroup_named(const std::string& name, const FieldPtr& k) {
    if (name == "D4") return subgroup_d4(k);
    if (name == "D8") return subgroup_d8(k);
    if (name == "A4") return subgroup_a4(k);
    if (name == "S4") return subgroup_s4(k);
    if (name.size() > 1 && name[0] == 'C') return subgroup_cyclic(std::stol(name.substr(1)), k);
    if (name.size() > 1 && name[0] == 'D') {
        long n = std::stol(name.substr(1));
        require(n % 2 == 0, "UnknownName", "dihedral order must be even: " + name);
        return subgroup_dihedral(n / 2, k);
    }
    fail("UnknownName", "unknown subgroup: " + name);
}

std::vector<ProjMat> enumerate_pgl2(const FieldPtr& k) {
    require(k->finite(), "InfiniteField", "PGL2 enumeration needs a finite field");
    auto els = k->elements();
    std::vector<ProjMat> out;
    out.reserve(els.size() * els.size() * els.size());
    // canonical forms: (1, b, c, d) with d != bc, then (0, 1, c, d) with c != 0
    for (const auto& b : els)
        for (const auto& c : els)
            for (const auto& d : els) {
                if (d == b * c) continue;
                out.emplace_back(k, k->one(), b, c, d);
            }
    for (const auto& c : els) {
        if (c.is_zero()) continue;
        for (const auto& d : els) out.emplace_back(k, k->zero(), k->one(), c, d);
    }
    return out;
}

FiniteSubgroup stabilizer(const Pencil& p) {
    const FieldPtr& k = p.field();
    auto all = enumerate_pgl2(k);
    std::vector<ProjMat> fix;
    for (const auto& A : all)
        if (act(A, p) == p) fix.push_back(A);
    return FiniteSubgroup::from_closed_set("Stab", std::move(fix));
}

FiniteSubgroup normalizer(const FiniteSubgroup& h) {
    const FieldPtr& k = h.field();
    auto all = enumerate_pgl2(k);
    std::vector<ProjMat> norm;
    for (const auto& A : all) {
        ProjMat Ai = A.inverse();
        bool ok = true;
        for (const auto& g : h.elements()) {
            if (!h.contains(A * g * Ai)) {
                ok = false;
                break;
            }
        }
        if (ok) norm.push_back(A);
    }
    return FiniteSubgroup::from_closed_set("N(" + h.name() + ")", std::move(norm));
}

} // namespace pencilgit
