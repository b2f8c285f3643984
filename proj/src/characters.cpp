#include "pencilgit/characters.hpp"

#include <algorithm>

namespace pencilgit {

GroupData::GroupData(std::string name, FiniteSubgroup group)
    : name_(std::move(name)), group_(std::move(group)) {}

void GroupData::compute_classes() {
    const auto& els = group_.elements();
    std::vector<bool> seen(els.size(), false);
    auto index_of = [&](const ProjMat& g) {
        auto it = std::lower_bound(els.begin(), els.end(), g,
                                   [](const ProjMat& x, const ProjMat& y) { return x.less(y); });
        require(it != els.end() && *it == g, "InternalError", "element escaped the group");
        return static_cast<std::size_t>(it - els.begin());
    };
    std::vector<std::vector<std::size_t>> classes;
    for (std::size_t i = 0; i < els.size(); ++i) {
        if (seen[i]) continue;
        std::vector<std::size_t> cls;
        for (const auto& h : els) {
            std::size_t j = index_of(h * els[i] * h.inverse());
            if (!seen[j]) {
                seen[j] = true;
                cls.push_back(j);
            }
        }
        std::sort(cls.begin(), cls.end());
        classes.push_back(std::move(cls));
    }
    classes_.clear();
    for (const auto& cls : classes) {
        ConjClass c{els[cls[0]], cls.size(), els[cls[0]].order(), 0, ""};
        classes_.push_back(std::move(c));
    }
    // deterministic order: element order, class size, then representative
    std::vector<std::size_t> perm(classes_.size());
    for (std::size_t i = 0; i < perm.size(); ++i) perm[i] = i;
    std::sort(perm.begin(), perm.end(), [&](std::size_t a, std::size_t b) {
        if (classes_[a].element_order != classes_[b].element_order)
            return classes_[a].element_order < classes_[b].element_order;
        if (classes_[a].size != classes_[b].size) return classes_[a].size < classes_[b].size;
        return classes_[a].rep.less(classes_[b].rep);
    });
    std::vector<ConjClass> ordered;
    std::vector<std::vector<std::size_t>> ordered_members;
    for (std::size_t p : perm) {
        ordered.push_back(classes_[p]);
        ordered_members.push_back(classes[p]);
    }
    classes_ = std::move(ordered);
    class_map_.clear();
    for (std::size_t ci = 0; ci < ordered_members.size(); ++ci)
        for (std::size_t j : ordered_members[ci]) class_map_.emplace_back(els[j], ci);
    std::sort(class_map_.begin(), class_map_.end(),
              [](const auto& a, const auto& b) { return a.first.less(b.first); });
    for (auto& c : classes_) c.inverse_class = class_of(c.rep.inverse());
}

std::size_t GroupData::class_of(const ProjMat& g) const {
    auto it = std::lower_bound(class_map_.begin(), class_map_.end(), g,
                               [](const auto& a, const ProjMat& b) { return a.first.less(b); });
    require(it != class_map_.end() && it->first == g, "NotASubgroup",
            "element is not in " + name_);
    return it->second;
}

std::size_t GroupData::irrep_index(const std::string& irrep_name) const {
    for (std::size_t i = 0; i < irrep_names_.size(); ++i)
        if (irrep_names_[i] == irrep_name) return i;
    fail("UnknownName", "no irreducible called " + irrep_name + " in " + name_);
}

namespace {

Fel omega3(const FieldPtr& k) {
    auto w = k->root_of_unity(3);
    require(w.has_value(), "MissingRootOfUnity", "character table needs omega3");
    return *w;
}

} // namespace

GroupData GroupData::builtin(const std::string& name, const FieldPtr& matrix_field) {
    FiniteSubgroup g = [&]() -> FiniteSubgroup {
        if (name == "S4") return subgroup_s4(matrix_field);
        if (name == "A4") return subgroup_a4(matrix_field);
        if (name == "D8") return subgroup_d8(matrix_field);
        if (name == "D4") return subgroup_d4(matrix_field);
        if (name == "C3") return FiniteSubgroup("C3", {sigma3(matrix_field)});
        fail("UnknownName", "no builtin group data for " + name);
    }();
    GroupData G(name, std::move(g));
    G.compute_classes();

    auto reorder = [&](const std::vector<std::size_t>& perm) {
        std::vector<ConjClass> ordered;
        for (std::size_t p : perm) ordered.push_back(G.classes_[p]);
        // remap the element->class and inverse-class tables
        std::vector<std::size_t> inv_perm(perm.size());
        for (std::size_t i = 0; i < perm.size(); ++i) inv_perm[perm[i]] = i;
        for (auto& [el, ci] : G.class_map_) ci = inv_perm[ci];
        G.classes_ = std::move(ordered);
        for (auto& c : G.classes_) c.inverse_class = G.class_of(c.rep.inverse());
    };
    auto find_class = [&](int order, std::size_t size, int which = 0) {
        int hit = 0;
        for (std::size_t i = 0; i < G.classes_.size(); ++i) {
            if (G.classes_[i].element_order == order && G.classes_[i].size == size) {
                if (hit == which) return i;
                ++hit;
            }
        }
        fail("InternalError", "missing conjugacy class in " + name);
    };
    const FieldPtr q = Field::rationals();
    auto qi = [&](std::int64_t v) { return q->from_int(v); };

    if (name == "S4") {
        require(G.classes_.size() == 5, "InternalError", "S4 has five classes");
        reorder({find_class(1, 1), find_class(2, 6), find_class(2, 3), find_class(3, 8),
                 find_class(4, 6)});
        G.classes_[0].label = "e";
        G.classes_[1].label = "transposition";
        G.classes_[2].label = "double-transposition";
        G.classes_[3].label = "3-cycle";
        G.classes_[4].label = "4-cycle";
        G.table_field_ = q;
        G.irrep_names_ = {"triv", "sign", "V", "std", "std_sign"};
        auto row = [&](std::int64_t a, std::int64_t b, std::int64_t c, std::int64_t d,
                       std::int64_t e) {
            return std::vector<Fel>{qi(a), qi(b), qi(c), qi(d), qi(e)};
        };
        G.table_ = {row(1, 1, 1, 1, 1), row(1, -1, 1, 1, -1), row(2, 0, 2, -1, 0),
                    row(3, 1, -1, 0, -1), row(3, -1, -1, 0, 1)};
    } else if (name == "A4") {
        require(G.classes_.size() == 4, "InternalError", "A4 has four classes");
        reorder({find_class(1, 1), find_class(2, 3), find_class(3, 4, 0), find_class(3, 4, 1)});
        G.classes_[0].label = "e";
        G.classes_[1].label = "double-transposition";
        G.classes_[2].label = "3-cycle-a";
        G.classes_[3].label = "3-cycle-b";
        FieldPtr kw = Field::quadratic(q, Rat(-3));
        Fel w = omega3(kw), w2 = w * w, one = kw->one();
        G.table_field_ = kw;
        G.irrep_names_ = {"triv", "omega", "omega2", "std3"};
        G.table_ = {{one, one, one, one},
                    {one, one, w, w2},
                    {one, one, w2, w},
                    {kw->from_int(3), kw->from_int(-1), kw->zero(), kw->zero()}};
    } else if (name == "D8") {
        require(G.classes_.size() == 5, "InternalError", "D8 has five classes");
        // split the two reflection classes by membership in the distinguished D4
        FiniteSubgroup d4 = subgroup_d4(matrix_field);
        std::size_t ra = find_class(2, 2, 0), rb = find_class(2, 2, 1);
        if (!d4.contains(G.classes_[ra].rep)) std::swap(ra, rb);
        require(d4.contains(G.classes_[ra].rep) && !d4.contains(G.classes_[rb].rep),
                "InternalError", "reflection classes do not split along D4");
        reorder({find_class(1, 1), find_class(2, 1), find_class(4, 2), ra, rb});
        G.classes_[0].label = "e";
        G.classes_[1].label = "central";
        G.classes_[2].label = "order-4";
        G.classes_[3].label = "reflection-in-D4";
        G.classes_[4].label = "reflection";
        G.table_field_ = q;
        G.irrep_names_ = {"triv", "k_sigma4", "k_D4", "k_other", "k2"};
        auto row = [&](std::int64_t a, std::int64_t b, std::int64_t c, std::int64_t d,
                       std::int64_t e) {
            return std::vector<Fel>{qi(a), qi(b), qi(c), qi(d), qi(e)};
        };
        G.table_ = {row(1, 1, 1, 1, 1), row(1, 1, 1, -1, -1), row(1, 1, -1, 1, -1),
                    row(1, 1, -1, -1, 1), row(2, -2, 0, 0, 0)};
    } else if (name == "D4") {
        require(G.classes_.size() == 4, "InternalError", "the Klein group has four classes");
        G.classes_[0].label = "e";
        for (std::size_t i = 1; i < 4; ++i) G.classes_[i].label = "involution-" + std::to_string(i);
        G.table_field_ = q;
        G.irrep_names_ = {"triv", "chi1", "chi2", "chi3"};
        auto row = [&](std::int64_t a, std::int64_t b, std::int64_t c, std::int64_t d) {
            return std::vector<Fel>{qi(a), qi(b), qi(c), qi(d)};
        };
        G.table_ = {row(1, 1, 1, 1), row(1, 1, -1, -1), row(1, -1, 1, -1), row(1, -1, -1, 1)};
    } else { // C3
        require(G.classes_.size() == 3, "InternalError", "C3 has three classes");
        // order classes as e, g, g^2 for the deterministic generator class g
        std::size_t gi = find_class(3, 1, 0);
        std::size_t g2 = G.class_of(G.classes_[gi].rep * G.classes_[gi].rep);
        reorder({find_class(1, 1), gi, g2});
        G.classes_[0].label = "e";
        G.classes_[1].label = "g";
        G.classes_[2].label = "g2";
        FieldPtr kw = Field::quadratic(q, Rat(-3));
        Fel w = omega3(kw), w2 = w * w, one = kw->one();
        G.table_field_ = kw;
        G.irrep_names_ = {"triv", "omega", "omega2"};
        G.table_ = {{one, one, one}, {one, w, w2}, {one, w2, w}};
    }
    G.check_orthogonality();
    return G;
}

void GroupData::check_orthogonality() const {
    const FieldPtr& kt = table_field_;
    Fel order = kt->from_int(static_cast<std::int64_t>(group_.order()));
    // rows: <chi_i, chi_j> = delta_ij
    for (std::size_t i = 0; i < table_.size(); ++i)
        for (std::size_t j = 0; j < table_.size(); ++j) {
            Fel s = kt->zero();
            for (std::size_t c = 0; c < classes_.size(); ++c) {
                s += kt->from_int(static_cast<std::int64_t>(classes_[c].size)) * table_[i][c] *
                     table_[j][classes_[c].inverse_class];
            }
            require(s == (i == j ? order : kt->zero()), "InternalError",
                    "row orthogonality fails in " + name_);
        }
    // columns: sum_i chi_i(c) chi_i(c'^-1) = |C(c)| delta_{c,c'}
    for (std::size_t c = 0; c < classes_.size(); ++c)
        for (std::size_t cp = 0; cp < classes_.size(); ++cp) {
            Fel s = kt->zero();
            for (std::size_t i = 0; i < table_.size(); ++i)
                s += table_[i][c] * table_[i][classes_[cp].inverse_class];
            Fel expect = kt->zero();
            if (c == cp)
                expect = order / kt->from_int(static_cast<std::int64_t>(classes_[c].size));
            require(s == expect, "InternalError", "column orthogonality fails in " + name_);
        }
}

ClassFunction class_function_from_ints(const GroupData& G, const std::vector<Int>& values) {
    require(values.size() == G.classes().size(), "DegreeMismatch",
            "one value per conjugacy class");
    ClassFunction out;
    out.reserve(values.size());
    for (const Int& v : values) out.push_back(G.table_field()->element(Rat(v)));
    return out;
}

ClassFunction adjoint_character(const GroupData& G) {
    std::vector<Int> vals;
    const FieldPtr& km = G.group().field();
    for (const auto& c : G.classes()) {
        const auto& m = c.rep.entries();
        Fel tr = m[0] + m[3];
        Fel v = tr * tr / c.rep.det() - km->one();
        require(v.in_base(), "InternalError", "adjoint trace left the base field");
        Int value;
        if (km->finite()) {
            // symmetric lift; |trace| <= 3 < p/2 for every usable prime
            Int p(km->characteristic());
            Int a = num(v.a());
            value = a > p / 2 ? a - p : a;
        } else {
            require(is_integer(v.a()), "InternalError", "adjoint trace is not integral");
            value = num(v.a());
        }
        vals.push_back(value);
    }
    return class_function_from_ints(G, vals);
}

ClassFunction v_character(const GroupData& G) {
    if (G.name() == "S4") return G.table()[G.irrep_index("V")];
    if (G.name() == "D8") {
        GroupData s4 = GroupData::builtin("S4", G.group().field());
        return restrict_class_function(s4.table()[s4.irrep_index("V")], s4, G);
    }
    fail("UnknownName", "v_character is defined for S4 and D8");
}

std::vector<Int> decompose(const ClassFunction& chi, const GroupData& G) {
    require(chi.size() == G.classes().size(), "DegreeMismatch", "one value per class");
    const FieldPtr& kt = G.table_field();
    Fel order = kt->from_int(static_cast<std::int64_t>(G.group().order()));
    std::vector<Int> out;
    for (const auto& row : G.table()) {
        Fel s = kt->zero();
        for (std::size_t c = 0; c < chi.size(); ++c)
            s += kt->from_int(static_cast<std::int64_t>(G.classes()[c].size)) * chi[c] *
                 row[G.classes()[c].inverse_class];
        Fel m = s / order;
        require(m.in_base() && is_integer(m.a()) && m.a() >= 0, "NotACharacter",
                "multiplicity " + m.str() + " is not a non-negative integer");
        out.push_back(num(m.a()));
    }
    return out;
}

ClassFunction restrict_class_function(const ClassFunction& chi, const GroupData& G,
                                      const GroupData& H) {
    require(chi.size() == G.classes().size(), "DegreeMismatch", "one value per class");
    require(G.table_field()->same(*H.table_field()) ||
                std::all_of(chi.begin(), chi.end(), [](const Fel& x) { return x.in_base(); }),
            "FieldMismatch", "restricted values must embed into the subgroup's table field");
    for (const auto& g : H.group().elements())
        require(G.group().contains(g), "NotASubgroup", H.name() + " is not inside " + G.name());
    ClassFunction out;
    for (const auto& c : H.classes()) {
        Fel v = chi[G.class_of(c.rep)];
        if (G.table_field()->same(*H.table_field())) {
            out.push_back(v);
        } else {
            require(v.in_base(), "FieldMismatch", "value does not embed");
            out.push_back(H.table_field()->element(v.a()));
        }
    }
    return out;
}

} // namespace pencilgit
