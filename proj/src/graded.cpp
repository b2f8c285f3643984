#include "pencilgit/graded.hpp"

#include <algorithm>
#include <functional>
#include <sstream>

namespace pencilgit {

Presentation::Presentation(std::string name, int degree_unit)
    : name_(std::move(name)), degree_unit_(degree_unit) {
    require(degree_unit == 1 || degree_unit == 2, "BadPresentation", "degree unit must be 1 or 2");
}

void Presentation::add_generator(const std::string& gname, int public_degree) {
    require(public_degree >= 1, "BadPresentation", "generator degrees must be positive");
    for (const auto& g : gens_)
        require(g.name != gname, "BadPresentation", "duplicate generator " + gname);
    gens_.push_back({gname, public_degree, public_degree * degree_unit_});
}

std::vector<std::string> Presentation::generator_names() const {
    std::vector<std::string> out;
    out.reserve(gens_.size());
    for (const auto& g : gens_) out.push_back(g.name);
    return out;
}

IntPoly Presentation::parse(const std::string& expr) const {
    return parse_poly(expr, generator_names());
}

std::string Presentation::poly_str(const IntPoly& p) const { return p.str(generator_names()); }

int Presentation::internal_degree(const IntPoly::Exps& e) const {
    int d = 0;
    for (std::size_t i = 0; i < e.size(); ++i)
        d += static_cast<int>(e[i]) * gens_[i].internal_degree;
    return d;
}

int Presentation::homogeneous_internal_degree(const IntPoly& p) const {
    require(!p.is_zero(), "NotHomogeneous", "the zero polynomial has no degree");
    int d = -1;
    for (const auto& [e, c] : p.terms()) {
        int dd = internal_degree(e);
        if (d < 0) d = dd;
        require(d == dd, "NotHomogeneous", "inhomogeneous expression: " + poly_str(p));
    }
    return d;
}

void Presentation::add_relation(const IntPoly& r) {
    if (r.is_zero()) return;
    int d = homogeneous_internal_degree(r);
    require(d >= 1, "NotHomogeneous", "relations must have positive degree");
    rels_.push_back(r);
}

void Presentation::add_relation(const std::string& expr) { add_relation(parse(expr)); }

void Presentation::add_family(const std::string& template_text, int start) {
    // validate on the first two instances: homogeneous, strictly increasing degree
    IntPoly p0 = parse_poly(template_text, generator_names(), start);
    IntPoly p1 = parse_poly(template_text, generator_names(), start + 1);
    int d0 = homogeneous_internal_degree(p0);
    int d1 = homogeneous_internal_degree(p1);
    require(d1 > d0, "BadPresentation", "family degrees must increase in j");
    fams_.push_back({template_text, start});
}

std::vector<IntPoly> Presentation::expanded_relations(int internal_bound) const {
    std::vector<IntPoly> out = rels_;
    for (const auto& fam : fams_) {
        for (int j = fam.start;; ++j) {
            IntPoly p = parse_poly(fam.template_text, generator_names(), j);
            int d = homogeneous_internal_degree(p);
            if (d > internal_bound) break;
            out.push_back(p);
            require(j < fam.start + 4096, "BadPresentation", "family expansion does not terminate");
        }
    }
    return out;
}

std::vector<IntPoly::Exps> Presentation::monomials(int internal_degree) const {
    std::vector<IntPoly::Exps> out;
    IntPoly::Exps cur(gens_.size(), 0);
    // generators have internal degree >= 1, so the recursion is finite
    std::function<void(std::size_t, int)> rec = [&](std::size_t i, int rem) {
        if (i == gens_.size()) {
            if (rem == 0) out.push_back(cur);
            return;
        }
        int gd = gens_[i].internal_degree;
        for (int k = 0; k * gd <= rem; ++k) {
            cur[i] = static_cast<unsigned>(k);
            rec(i + 1, rem - k * gd);
        }
        cur[i] = 0;
    };
    rec(0, internal_degree);
    return out;
}

std::string Presentation::text() const {
    std::ostringstream os;
    for (const auto& g : gens_) os << "gen " << g.name << " " << g.public_degree << "; ";
    for (const auto& r : rels_) os << "rel " << poly_str(r) << "; ";
    for (const auto& f : fams_)
        os << "family " << f.template_text << " j>=" << f.start << " " << default_bound_ << "; ";
    return os.str();
}

Presentation parse_presentation(const std::string& name, int degree_unit, const std::string& text) {
    Presentation P(name, degree_unit);
    std::vector<std::pair<std::string, std::string>> items;
    std::string cur;
    for (char c : text) {
        if (c == ';') {
            items.emplace_back("", cur);
            cur.clear();
        } else {
            cur += c;
        }
    }
    if (!cur.empty() &&
        !std::all_of(cur.begin(), cur.end(), [](char c) { return std::isspace(static_cast<unsigned char>(c)); }))
        items.emplace_back("", cur);
    std::vector<std::string> rel_texts;
    std::vector<std::pair<std::string, int>> fam_texts;
    for (auto& [_, item] : items) {
        std::istringstream is(item);
        std::string kind;
        is >> kind;
        if (kind.empty()) continue;
        if (kind == "gen") {
            std::string gname;
            int d = 0;
            is >> gname >> d;
            require(!gname.empty() && d >= 1, "BadPresentation", "bad generator item: " + item);
            P.add_generator(gname, d);
        } else if (kind == "rel") {
            std::string rest;
            std::getline(is, rest);
            rel_texts.push_back(rest);
        } else if (kind == "family") {
            std::string rest;
            std::getline(is, rest);
            // trailing "j>=<n> [bound]"
            auto mark = rest.rfind("j>=");
            require(mark != std::string::npos, "BadPresentation", "family needs j>=<n>: " + item);
            std::istringstream tail(rest.substr(mark + 3));
            int start = 1;
            tail >> start;
            int bound = 0;
            if (tail >> bound) P.set_default_bound(bound);
            fam_texts.emplace_back(rest.substr(0, mark), start);
        } else {
            fail("BadPresentation", "unknown item '" + kind + "'");
        }
    }
    for (const auto& r : rel_texts) P.add_relation(r);
    for (const auto& [t, s] : fam_texts) P.add_family(t, s);
    return P;
}

Presentation builtin_presentation(const std::string& name) {
    if (name == "PGL2_PT") {
        Presentation P(name, 2);
        P.add_generator("c2", 2);
        P.add_generator("c3", 3);
        P.add_relation("2*c3");
        return P;
    }
    if (name == "S4_PT") {
        Presentation P(name, 2);
        P.add_generator("alpha", 1);
        P.add_generator("nu", 3);
        P.add_generator("zeta1", 2);
        P.add_generator("eta", 2);
        P.add_relation("2*alpha");
        P.add_relation("2*nu");
        P.add_relation("4*zeta1");
        P.add_relation("3*eta");
        P.add_family("alpha*nu^j - alpha^(j+1)*(zeta1+alpha^2)^j", 1);
        return P;
    }
    if (name == "S4_COHOM") {
        Presentation P(name, 1);
        P.add_generator("alphap", 2);
        P.add_generator("nup", 3);
        P.add_generator("zeta1p", 4);
        P.add_generator("etap", 4);
        P.add_relation("2*alphap");
        P.add_relation("2*nup");
        P.add_relation("4*zeta1p");
        P.add_relation("3*etap");
        P.add_family("alphap*nup^(2*j) - alphap^(j+1)*(zeta1p+alphap^2)^j", 1);
        return P;
    }
    if (name == "D8_COHOM") {
        Presentation P(name, 1);
        P.add_generator("alphap", 2);
        P.add_generator("betap", 2);
        P.add_generator("nup", 3);
        P.add_generator("zeta1pp", 4);
        P.add_relation("2*alphap");
        P.add_relation("2*betap");
        P.add_relation("2*nup");
        P.add_relation("4*zeta1pp");
        P.add_relation("alphap^2 - alphap*betap");
        P.add_relation("nup^2 - betap*zeta1pp");
        return P;
    }
    if (name == "S4_P1" || name == "S4_P1_MINUS_F") {
        Presentation P(name, 2);
        P.add_generator("alpha", 1);
        P.add_generator("nu", 3);
        P.add_generator("zeta1", 2);
        P.add_generator("eta", 2);
        P.add_generator("zeta", 1);
        P.add_generator("c1V", 1);
        P.add_generator("c2V", 2);
        P.add_relation("2*alpha");
        P.add_relation("2*nu");
        P.add_relation("4*zeta1");
        P.add_relation("3*eta");
        P.add_family("alpha*nu^j - alpha^(j+1)*(zeta1+alpha^2)^j", 1);
        P.add_relation("zeta^2 + c1V*zeta + c2V"); // projective bundle relation
        if (name == "S4_P1_MINUS_F") {
            P.add_relation("3*zeta");
            P.add_relation("3*c1V");
        }
        return P;
    }
    if (name == "FINAL") {
        Presentation P(name, 2);
        P.add_generator("alpha", 1);
        P.add_generator("zeta1", 2);
        P.add_generator("zeta", 1);
        P.add_relation("2*alpha");
        P.add_relation("4*zeta1");
        P.add_relation("3*zeta");
        P.add_relation("alpha^2");
        return P;
    }
    if (name == "D8_P1_SUB") {
        // even part of the D8-equivariant ring of P^1: xi^2 + c_{1,D4} xi = 0
        // since the restricted rank-2 bundle is trivial + k_{D4}
        Presentation P(name, 2);
        P.add_generator("xi", 1);
        P.add_generator("betap", 1);
        P.add_generator("alphap", 1);
        P.add_generator("zeta1pp", 2);
        P.add_relation("2*alphap");
        P.add_relation("2*betap");
        P.add_relation("4*zeta1pp");
        P.add_relation("alphap^2 - alphap*betap");
        P.add_relation("xi^2 + betap*xi");
        return P;
    }
    fail("UnknownName", "unknown presentation: " + name);
}

std::vector<std::string> builtin_presentation_names() {
    return {"PGL2_PT", "S4_PT", "S4_COHOM", "D8_COHOM", "S4_P1", "S4_P1_MINUS_F", "FINAL",
            "D8_P1_SUB"};
}

namespace {

int internal_bound_of(const Presentation& P, int public_bound) {
    int b = public_bound > 0 ? public_bound : P.default_bound();
    return b * P.degree_unit();
}

// columns of (monomial x relation) products in the degree-d monomial basis
IMat relation_lattice(const Presentation& P, int internal_d,
                      const std::vector<IntPoly::Exps>& mons,
                      const std::vector<IntPoly>& rels) {
    std::map<IntPoly::Exps, std::size_t> index;
    for (std::size_t i = 0; i < mons.size(); ++i) index[mons[i]] = i;
    IMat cols; // collected as columns first
    for (const auto& r : rels) {
        int rd = P.homogeneous_internal_degree(r);
        if (rd > internal_d) continue;
        for (const auto& m : P.monomials(internal_d - rd)) {
            IVec col(mons.size(), 0);
            for (const auto& [e, c] : r.terms()) {
                IntPoly::Exps prod = e;
                for (std::size_t i = 0; i < prod.size(); ++i) prod[i] += m[i];
                col[index.at(prod)] += c;
            }
            if (std::any_of(col.begin(), col.end(), [](const Int& x) { return x != 0; }))
                cols.push_back(col);
        }
    }
    std::sort(cols.begin(), cols.end());
    cols.erase(std::unique(cols.begin(), cols.end()), cols.end());
    // transpose into row-major (rows = monomials)
    IMat A(mons.size());
    for (auto& row : A) row.reserve(cols.size());
    for (std::size_t i = 0; i < mons.size(); ++i)
        for (const auto& col : cols) A[i].push_back(col[i]);
    return A;
}

IVec coordinates(const Presentation& P, const IntPoly& x,
                 const std::vector<IntPoly::Exps>& mons) {
    std::map<IntPoly::Exps, std::size_t> index;
    for (std::size_t i = 0; i < mons.size(); ++i) index[mons[i]] = i;
    IVec v(mons.size(), 0);
    for (const auto& [e, c] : x.terms()) {
        auto it = index.find(e);
        require(it != index.end(), "InternalError", "monomial outside the degree basis");
        v[it->second] = c;
    }
    (void)P;
    return v;
}

} // namespace

GradedPiece graded_piece(const Presentation& P, int public_degree, int public_bound) {
    require(public_degree >= 0, "BadDegree", "degree must be non-negative");
    int internal_d = public_degree * P.degree_unit();
    int ib = std::max(internal_bound_of(P, public_bound), internal_d);
    GradedPiece piece;
    piece.public_degree = public_degree;
    piece.monomials = P.monomials(internal_d);
    piece.lattice = relation_lattice(P, internal_d, piece.monomials, P.expanded_relations(ib));
    piece.group = cokernel_group(piece.lattice, piece.monomials.size());
    return piece;
}

bool in_ideal(const Presentation& P, const IntPoly& x, int public_bound) {
    if (x.is_zero()) return true;
    int d = P.homogeneous_internal_degree(x);
    int ib = std::max(internal_bound_of(P, public_bound), d);
    auto mons = P.monomials(d);
    IMat lat = relation_lattice(P, d, mons, P.expanded_relations(ib));
    return in_column_lattice(lat, coordinates(P, x, mons));
}

bool in_ideal(const Presentation& P, const std::string& expr, int public_bound) {
    return in_ideal(P, P.parse(expr), public_bound);
}

RingMap make_map(const std::string& name, const Presentation& source, const Presentation& target,
                 const std::vector<std::string>& image_exprs) {
    require(image_exprs.size() == source.generators().size(), "DegreeMismatch",
            "need one image per source generator");
    RingMap m{name, &source, &target, {}};
    for (std::size_t i = 0; i < image_exprs.size(); ++i) {
        IntPoly img = target.parse(image_exprs[i]);
        if (!img.is_zero()) {
            int d = target.homogeneous_internal_degree(img);
            require(d == source.generators()[i].internal_degree, "DegreeMismatch",
                    "image of " + source.generators()[i].name + " has the wrong degree");
        }
        m.images.push_back(img);
    }
    return m;
}

IntPoly apply_map(const RingMap& m, const IntPoly& x) {
    return x.substitute(m.images, m.target->nvars());
}

bool verify_map(const RingMap& m, int public_bound) {
    int ib = internal_bound_of(*m.source, public_bound);
    for (const auto& r : m.source->expanded_relations(ib)) {
        IntPoly img = apply_map(m, r);
        if (!in_ideal(*m.target, img, 0)) return false;
    }
    return true;
}

Presentation quotient(const Presentation& P, const std::vector<std::string>& extra,
                      const std::string& new_name) {
    Presentation Q(new_name.empty() ? P.name() + "/(...)" : new_name, P.degree_unit());
    Q.set_default_bound(P.default_bound());
    for (const auto& g : P.generators()) Q.add_generator(g.name, g.public_degree);
    for (const auto& r : P.relations()) Q.add_relation(r);
    for (const auto& f : P.families()) Q.add_family(f.template_text, f.start);
    for (const auto& e : extra) Q.add_relation(e);
    return Q;
}

IntPoly pushforward_projection(const Presentation& target, const IntPoly& y,
                               const IntPoly& phi_star_one) {
    if (!y.is_zero()) target.homogeneous_internal_degree(y);
    return y * phi_star_one;
}

SolveResult solve_by_pullbacks(const Presentation& source, const std::vector<IntPoly>& basis,
                               const std::vector<std::pair<const RingMap*, IntPoly>>& constraints,
                               int public_bound) {
    require(!basis.empty(), "BadExpression", "empty candidate basis");
    int d = source.homogeneous_internal_degree(basis[0]);
    for (const auto& b : basis)
        require(source.homogeneous_internal_degree(b) == d, "DegreeMismatch",
                "candidate basis is not equigraded");

    // stacked system over the target graded pieces, unknowns (c, y_1, .., y_m)
    std::size_t k = basis.size();
    std::vector<IMat> Ms, Ls;
    std::vector<IVec> vs;
    for (const auto& [map, value] : constraints) {
        require(map->source == &source, "FieldMismatch", "constraint map has a different source");
        const Presentation& T = *map->target;
        int ib = std::max(internal_bound_of(T, public_bound), d);
        auto mons = T.monomials(d);
        IMat M(mons.size());
        std::map<IntPoly::Exps, std::size_t> index;
        for (std::size_t i = 0; i < mons.size(); ++i) index[mons[i]] = i;
        for (std::size_t i = 0; i < mons.size(); ++i) M[i].assign(k, 0);
        for (std::size_t bi = 0; bi < k; ++bi) {
            IntPoly img = apply_map(*map, basis[bi]);
            for (const auto& [e, c] : img.terms()) M[index.at(e)][bi] = c;
        }
        IMat L = relation_lattice(T, d, mons, T.expanded_relations(ib));
        IVec v(mons.size(), 0);
        if (!value.is_zero()) {
            require(T.homogeneous_internal_degree(value) == d, "DegreeMismatch",
                    "constraint value degree mismatch");
            for (const auto& [e, c] : value.terms()) v[index.at(e)] = c;
        }
        Ms.push_back(std::move(M));
        Ls.push_back(std::move(L));
        vs.push_back(std::move(v));
    }

    std::size_t rows = 0, aux = 0;
    for (std::size_t j = 0; j < Ms.size(); ++j) {
        rows += Ms[j].size();
        aux += Ls[j].empty() ? 0 : Ls[j][0].size();
    }
    IMat A(rows, IVec(k + aux, 0));
    IVec rhs(rows, 0);
    std::size_t r0 = 0, a0 = 0;
    for (std::size_t j = 0; j < Ms.size(); ++j) {
        std::size_t nr = Ms[j].size();
        std::size_t na = Ls[j].empty() ? 0 : Ls[j][0].size();
        for (std::size_t i = 0; i < nr; ++i) {
            for (std::size_t bi = 0; bi < k; ++bi) A[r0 + i][bi] = Ms[j][i][bi];
            for (std::size_t ai = 0; ai < na; ++ai) A[r0 + i][k + a0 + ai] = Ls[j][i][ai];
            rhs[r0 + i] = vs[j][i];
        }
        r0 += nr;
        a0 += na;
    }

    SolveResult out;
    auto sol = solve_columns(A, rhs);
    if (!sol) {
        out.status = SolveStatus::NoSolution;
        out.detail = "constraints are inconsistent";
        return out;
    }
    IVec c(sol->begin(), sol->begin() + static_cast<long>(k));

    // homogeneous solutions, projected to the candidate coefficients
    IMat ker = kernel_columns(A);
    IMat lambda(k);
    if (!ker.empty()) {
        for (std::size_t i = 0; i < k; ++i)
            lambda[i] = IVec(ker[i].begin(), ker[i].end());
    }
    IMat H = column_hnf(lambda);
    // a free direction (unit pivot) that the source ideal does not kill is a
    // genuine ambiguity; torsion-sized wiggle is resolved canonically
    if (!H.empty() && !H[0].empty()) {
        std::size_t ncols = H[0].size();
        std::size_t col = 0;
        for (std::size_t r = 0; r < k && col < ncols; ++r) {
            if (H[r][col] == 0) continue;
            if (H[r][col] == 1) {
                IntPoly dir(source.nvars());
                for (std::size_t i = 0; i < k; ++i) dir = dir + basis[i].scaled(H[i][col]);
                if (!in_ideal(source, dir, public_bound)) {
                    out.status = SolveStatus::NonUnique;
                    out.detail = "free direction " + source.poly_str(dir);
                    return out;
                }
            }
            ++col;
        }
        c = reduce_mod_hnf(c, H);
    }

    IntPoly u(source.nvars());
    for (std::size_t i = 0; i < k; ++i) u = u + basis[i].scaled(c[i]);
    out.status = SolveStatus::Unique;
    out.element = u;
    return out;
}

} // namespace pencilgit
