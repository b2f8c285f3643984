#include "pencilgit/wall.hpp"

#include <algorithm>
#include <map>
#include <mutex>

namespace pencilgit {

WallParam::WallParam(ProjPoint pt) : pt_(std::move(pt)) {
    require(pt_.size() == 2, "DegreeMismatch", "wall parameter lives in P^1");
}

WallParam WallParam::of(const Fel& rho) {
    return WallParam(ProjPoint(rho.field(), {rho, rho.field()->one()}));
}

WallParam WallParam::infinity(const FieldPtr& k) {
    return WallParam(ProjPoint(k, {k->one(), k->zero()}));
}

Fel WallParam::value() const {
    require(!is_infinity(), "InfinityParam", "infinite parameter has no field value");
    return pt_[0] / pt_[1];
}

bool WallParam::in_fwall() const {
    if (is_infinity()) return true;
    Fel v = value();
    const FieldPtr& k = field();
    for (std::int64_t c : {0, 1, -1, 3, -3})
        if (v == k->from_int(c)) return true;
    return false;
}

std::string WallParam::str() const { return is_infinity() ? "inf" : value().str(); }

Pencil wall_pencil(const WallParam& rho) {
    const FieldPtr& k = rho.field();
    if (rho.is_infinity()) {
        return Pencil(BinaryForm::from_ints(k, {0, 0, 1, 0}), BinaryForm::from_ints(k, {0, 1, 0, 0}));
    }
    Fel r = rho.value();
    BinaryForm f(k, {k->one(), k->zero(), r, k->zero()});
    BinaryForm g(k, {k->zero(), r, k->zero(), k->one()});
    return Pencil(f, g);
}

PencilInvariants wall_closed_invariants(const WallParam& rho) {
    require(!rho.is_infinity(), "InfinityParam", "closed forms need a finite parameter");
    const FieldPtr& k = rho.field();
    Fel r = rho.value();
    Fel r2 = r * r;
    Fel three = k->from_int(3), six = k->from_int(6);
    Fel Ip = three + r2;
    Fel J = (r2 - three) * (r2 - six * r - three) * (r2 + six * r - three) *
            k->from_int(216).inverse();
    return {Ip, J};
}

std::vector<WallParam> fwall_params(const FieldPtr& k) {
    std::vector<WallParam> out;
    for (std::int64_t c : {0, 1, -1, 3, -3}) out.push_back(WallParam::of(k->from_int(c)));
    out.push_back(WallParam::infinity(k));
    // over small fields some of these coincide (never for p > 7, but stay safe)
    std::sort(out.begin(), out.end(), [](const WallParam& a, const WallParam& b) { return a.less(b); });
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

std::vector<WallParam> all_params(const FieldPtr& k) {
    require(k->finite(), "InfiniteField", "cannot enumerate P^1 over an infinite field");
    std::vector<WallParam> out;
    for (const auto& x : k->elements()) out.push_back(WallParam::of(x));
    out.push_back(WallParam::infinity(k));
    return out;
}

namespace {

struct CosetMap {
    ProjMat rep;    // coset representative in S4
    ProjMat moebius; // action on the parameter line
};

// The D4-cosets of S4 act on rho through six Moebius maps. The assignment
// below is the one forced by the convention (A.f)(t) = f(A^{-1}t); it is
// verified against the pencil action by the test suite.
std::vector<CosetMap> coset_maps(const FieldPtr& k) {
    ProjMat s3 = sigma3(k), s2 = sigma2(k);
    ProjMat s3i = s3.inverse();
    auto mk = [&](std::int64_t a, std::int64_t b, std::int64_t c, std::int64_t d) {
        return ProjMat::from_ints(k, a, b, c, d);
    };
    return {
        {ProjMat::identity(k), mk(1, 0, 0, 1)},
        {s3, mk(-1, -3, 1, -1)},      // rho -> -(rho+3)/(rho-1)
        {s3i, mk(1, -3, 1, 1)},       // rho -> (rho-3)/(rho+1)
        {s2, mk(-1, 3, 1, 1)},        // rho -> -(rho-3)/(rho+1)
        {s3i * s2, mk(-1, 0, 0, 1)},  // rho -> -rho
        {s3 * s2, mk(1, 3, 1, -1)},   // rho -> (rho+3)/(rho-1)
    };
}

} // namespace

namespace {

struct CosetTable {
    FiniteSubgroup d4;
    std::vector<CosetMap> maps;
};

const CosetTable& coset_table(const FieldPtr& k) {
    static std::mutex mu;
    static std::map<std::string, CosetTable> cache;
    std::lock_guard<std::mutex> lock(mu);
    auto it = cache.find(k->spec());
    if (it == cache.end())
        it = cache.emplace(k->spec(), CosetTable{subgroup_d4(k), coset_maps(k)}).first;
    return it->second;
}

} // namespace

WallParam s4_on_rho(const ProjMat& sigma, const WallParam& rho) {
    const FieldPtr& k = sigma.field();
    require(k->same(*rho.field()), "FieldMismatch", "parameter and matrix fields differ");
    const CosetTable& tab = coset_table(k);
    for (const auto& cm : tab.maps) {
        if (tab.d4.contains(cm.rep.inverse() * sigma)) return WallParam(act(cm.moebius, rho.point()));
    }
    fail("NotInS4", "matrix is not in the distinguished S4");
}

std::vector<WallParam> s4_orbit_rho(const WallParam& rho) {
    const FieldPtr& k = rho.field();
    std::vector<WallParam> out;
    auto add = [&](const WallParam& w) {
        for (const auto& x : out)
            if (x == w) return;
        out.push_back(w);
    };
    auto mk = [&](std::int64_t a, std::int64_t b, std::int64_t c, std::int64_t d) {
        return ProjMat::from_ints(k, a, b, c, d);
    };
    add(rho);
    for (const auto& m : {mk(-1, 0, 0, 1), mk(1, 3, 1, -1), mk(-1, -3, 1, -1), mk(1, -3, 1, 1),
                          mk(-1, 3, 1, 1)})
        add(WallParam(act(m, rho.point())));
    std::sort(out.begin(), out.end(), [](const WallParam& a, const WallParam& b) { return a.less(b); });
    return out;
}

FiberResult invariant_fiber_rho(const ProjPoint& newstead, const FieldPtr& k) {
    require(newstead.size() == 2, "DegreeMismatch", "Newstead point lives in P^1");
    const Fel &x = newstead[0], &y = newstead[1];
    // F(rho,tau) = y * 216 * (rho^2 + 3 tau^2)^3 - x * (rho^2-3t^2)(rho^2-6rt-3t^2)(rho^2+6rt-3t^2)
    BinaryForm a1 = BinaryForm::from_ints(k, {1, 0, 3});
    BinaryForm j1 = BinaryForm::from_ints(k, {1, 0, -3});
    BinaryForm j2 = BinaryForm::from_ints(k, {1, -6, -3});
    BinaryForm j3 = BinaryForm::from_ints(k, {1, 6, -3});
    BinaryForm F = a1.times(a1).times(a1).scaled(y * k->from_int(216)) -
                   j1.times(j2).times(j3).scaled(x);
    require(!F.is_zero(), "InternalError", "fiber form vanished identically");

    FiberResult res;
    // divide out the linear form vanishing at w, with multiplicity
    auto strip_root = [&](BinaryForm& g, const WallParam& w) {
        const auto& pt = w.point();
        BinaryForm linear = w.is_infinity()
                                ? BinaryForm::from_ints(k, {0, 1})
                                : BinaryForm(k, {k->one(), k->zero() - w.value()});
        while (g.degree() > 0 && g.eval(pt[0], pt[1]).is_zero()) {
            g = divide_exact(g, linear);
            res.roots.push_back(w);
        }
    };

    BinaryForm g = F;
    if (k->finite()) {
        for (const auto& w : all_params(k)) {
            if (g.degree() == 0) break;
            strip_root(g, w);
        }
    } else {
        require(k->characteristic() == 0 && !k->is_extension(), "FieldMismatch",
                "rational root search needs Q");
        strip_root(g, WallParam::infinity(k));
        strip_root(g, WallParam::of(k->zero()));
        if (g.degree() > 0) {
            // primitive integer coefficients; leading and trailing now nonzero
            Int lcm = 1;
            for (const auto& c : g.coeffs()) lcm = lcm / gcd_int(lcm, den(c.a())) * den(c.a());
            std::vector<Int> ic;
            Int content = 0;
            for (const auto& c : g.coeffs()) {
                Int v = num(c.a() * Rat(lcm));
                ic.push_back(v);
                content = gcd_int(content, v);
            }
            if (content > 1)
                for (auto& v : ic) v /= content;
            auto divisors = [](Int n) {
                std::vector<Int> out;
                if (n < 0) n = -n;
                require(n != 0, "InternalError", "divisors of zero");
                require(n <= Int("1000000000000"), "FieldTooLarge",
                        "coefficients too large for the rational root scan");
                for (Int d = 1; d * d <= n; ++d) {
                    if (n % d == 0) {
                        out.push_back(d);
                        out.push_back(n / d);
                    }
                }
                return out;
            };
            std::vector<Rat> cands;
            for (const Int& u : divisors(ic.back()))
                for (const Int& v : divisors(ic.front())) {
                    cands.push_back(Rat(u, v));
                    cands.push_back(-Rat(u, v));
                }
            std::sort(cands.begin(), cands.end());
            cands.erase(std::unique(cands.begin(), cands.end()), cands.end());
            for (const Rat& r : cands) {
                if (g.degree() == 0) break;
                strip_root(g, WallParam::of(k->element(r)));
            }
        }
    }
    res.fully_split = g.degree() == 0;
    std::sort(res.roots.begin(), res.roots.end(),
              [](const WallParam& a, const WallParam& b) { return a.less(b); });
    return res;
}

std::pair<ProjMat, WallParam> wall_normal_form(const Pencil& p) {
    require(classify_stability(p) == Stability::Stable, "NotStable",
            "wall normal form exists for stable pencils only");
    const FieldPtr& k = p.field();
    require(k->finite(), "InfiniteField", "normal-form search scans a finite PGL2");
    ProjPoint nu = newstead_point(p);
    FiberResult fib = invariant_fiber_rho(nu, k);
    std::vector<WallParam> cands;
    for (const auto& w : fib.roots) {
        if (w.in_fwall()) continue;
        if (std::find(cands.begin(), cands.end(), w) == cands.end()) cands.push_back(w);
    }
    auto all = enumerate_pgl2(k);
    for (const auto& w : cands) {
        Pencil pw = wall_pencil(w);
        for (const auto& A : all)
            if (act(A, pw) == p) return {A, w};
    }
    fail("NotFoundOverThisField", "no rational wall witness over " + k->spec());
}

std::vector<std::pair<ProjMat, WallParam>> phi_fiber(const Pencil& p) {
    require(classify_stability(p) == Stability::Stable, "NotStable",
            "the covering is defined over the stable locus");
    const FieldPtr& k = p.field();
    require(k->finite(), "InfiniteField", "fiber scan needs a finite field");
    std::vector<std::pair<ProjMat, WallParam>> out;
    auto all = enumerate_pgl2(k);
    for (const auto& w : all_params(k)) {
        if (w.in_fwall()) continue;
        Pencil pw = wall_pencil(w);
        for (const auto& A : all)
            if (act(A, pw) == p) out.emplace_back(A, w);
    }
    return out;
}

std::string OrbitLabel::str() const {
    switch (kind) {
        case OrbitKind::Z1: return "Z1";
        case OrbitKind::Z2_0: return "Z2_0";
        case OrbitKind::Z2_1: return "Z2_1";
        case OrbitKind::Z2_2: return "Z2_2";
        case OrbitKind::Z3_1: return "Z3_1";
        case OrbitKind::Z3_2: return "Z3_2";
        case OrbitKind::Stable: {
            std::string s = "STABLE(";
            for (std::size_t i = 0; i < newstead->size(); ++i) {
                if (i) s += ":";
                s += (*newstead)[i].str();
            }
            return s + ")";
        }
    }
    return "?";
}

bool OrbitLabel::operator==(const OrbitLabel& o) const {
    if (kind != o.kind) return false;
    if (kind != OrbitKind::Stable) return true;
    return *newstead == *o.newstead;
}

OrbitLabel classify_orbit(const Pencil& p) {
    Stability s = classify_stability(p);
    if (s == Stability::Stable) return {OrbitKind::Stable, newstead_point(p)};
    int gd = gcd_forms(p.gen0(), p.gen1()).degree();
    switch (s) {
        case Stability::Unstable:
            if (gd == 2) return {OrbitKind::Z1, std::nullopt};
            if (gd == 1) return {OrbitKind::Z2_0, std::nullopt};
            break;
        case Stability::SemistablePlus:
            if (gd == 2) return {OrbitKind::Z2_1, std::nullopt};
            if (gd == 1) return {OrbitKind::Z3_1, std::nullopt};
            break;
        case Stability::SemistableMinus: {
            int n = cube_members(p, true).count;
            if (n == 2) return {OrbitKind::Z2_2, std::nullopt};
            if (n == 1) return {OrbitKind::Z3_2, std::nullopt};
            break;
        }
        default: break;
    }
    fail("UnclassifiableInput", "no atlas case matches (characteristic violation or bug)");
}

Pencil atlas_representative(OrbitKind kind, const FieldPtr& k) {
    auto mk = [&](std::vector<std::int64_t> f, std::vector<std::int64_t> g) {
        return Pencil(BinaryForm::from_ints(k, f), BinaryForm::from_ints(k, g));
    };
    switch (kind) {
        case OrbitKind::Z1: return mk({1, 0, 0, 0}, {0, 1, 0, 0});
        case OrbitKind::Z2_0: return mk({1, 0, 0, 0}, {0, 0, 1, 0});
        case OrbitKind::Z2_1: return mk({0, 0, 1, 0}, {0, 1, 0, 0});
        case OrbitKind::Z2_2: return mk({1, 0, 0, 0}, {0, 0, 0, 1});
        case OrbitKind::Z3_1: return mk({0, 0, 1, 0}, {1, 1, 0, 0});
        case OrbitKind::Z3_2: return mk({1, 0, 0, 0}, {0, 0, 1, 1});
        case OrbitKind::Stable: break;
    }
    fail("UnknownName", "stable orbits have no single representative");
}

OrbitKind orbit_kind_from_name(const std::string& name) {
    if (name == "Z1") return OrbitKind::Z1;
    if (name == "Z2_0") return OrbitKind::Z2_0;
    if (name == "Z2_1") return OrbitKind::Z2_1;
    if (name == "Z2_2") return OrbitKind::Z2_2;
    if (name == "Z3_1") return OrbitKind::Z3_1;
    if (name == "Z3_2") return OrbitKind::Z3_2;
    fail("UnknownName", "unknown orbit label: " + name);
}

std::vector<Fel> closure_relation_values(OrbitKind kind, const FieldPtr& k,
                                         const std::array<Fel, 6>& p) {
    require(plucker_quadric(k, p).is_zero(), "NotOnPluckerQuadric",
            "tuple violates the Pluecker relation");
    const Fel &p01 = p[0], &p02 = p[1], &p03 = p[2], &p12 = p[3], &p13 = p[4], &p23 = p[5];
    Fel nine = k->from_int(9);
    if (kind == OrbitKind::Z2_2) {
        return {p12 * (nine * p03 + p12) - nine * p02 * p13, p12 * p12 - nine * p01 * p23};
    }
    if (kind == OrbitKind::Z2_1) {
        return {p02 * p02 - p01 * p03 - p01 * p12, p02 * p03 - p01 * p13,
                p13 * p13 - p03 * p23 - p12 * p23, p03 * p13 - p02 * p23,
                p01 * p23 - p03 * p03};
    }
    fail("UnknownName", "closure relations exist for Z2_1 and Z2_2 only");
}

bool closure_predicate(OrbitKind kind, const FieldPtr& k, const std::array<Fel, 6>& p) {
    auto vals = closure_relation_values(kind, k, p);
    return std::all_of(vals.begin(), vals.end(), [](const Fel& v) { return v.is_zero(); });
}

ProjPoint anharmonic_lambda(const WallParam& rho) {
    require(!rho.is_infinity(), "PoleParam", "lambda has a pole at infinity");
    const FieldPtr& k = rho.field();
    Fel r = rho.value();
    require(!r.is_zero(), "PoleParam", "lambda has a pole at zero");
    // (3/rho - rho + 2)/4 = (3 - rho^2 + 2 rho) / (4 rho)
    Fel numr = k->from_int(3) - r * r + k->from_int(2) * r;
    return ProjPoint(k, {numr, k->from_int(4) * r});
}

std::vector<ProjPoint> anharmonic_orbit(const ProjPoint& lambda) {
    require(lambda.size() == 2, "DegreeMismatch", "anharmonic orbit lives in P^1");
    const FieldPtr& k = lambda.field();
    const Fel &x = lambda[0], &y = lambda[1];
    std::vector<ProjPoint> out;
    auto add = [&](Fel a, Fel b) {
        ProjPoint pt(k, {std::move(a), std::move(b)});
        for (const auto& q : out)
            if (q == pt) return;
        out.push_back(pt);
    };
    add(x, y);          // l
    add(y - x, y);      // 1 - l
    add(y, x);          // 1/l
    add(y, y - x);      // 1/(1-l)
    add(x - y, x);      // (l-1)/l
    add(x, x - y);      // l/(l-1)
    std::sort(out.begin(), out.end(), [](const ProjPoint& a, const ProjPoint& b) { return a.less(b); });
    return out;
}

} // namespace pencilgit
