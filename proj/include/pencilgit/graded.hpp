#pragma once

#include "pencilgit/intpoly.hpp"
#include "pencilgit/snf.hpp"

#include <optional>

namespace pencilgit {

/// Finitely presented graded commutative Z-algebra. Gradings are stored in
/// cohomological units internally (a Chow class of degree k sits in internal
/// degree 2k), so maps between Chow-style and cohomology-style presentations
/// are uniformly degree-preserving. `degree_unit` converts the public degree
/// of this presentation to internal units (2 for Chow rings, 1 for rings
/// printed with cohomological degrees).
///
/// The engine is plainly commutative. The built-in rings have exactly one
/// odd-degree generator (nu' in degree 3) and it satisfies 2 nu' = 0, so
/// signed commutativity and plain commutativity coincide.
class Presentation {
public:
    struct Generator {
        std::string name;
        int public_degree;
        int internal_degree;
    };

    struct Family {
        std::string template_text; // polynomial in the generators and j
        int start;                 // expanded for j >= start
    };

    Presentation(std::string name, int degree_unit);

    const std::string& name() const { return name_; }
    int degree_unit() const { return degree_unit_; }
    int default_bound() const { return default_bound_; } // public units
    void set_default_bound(int b) { default_bound_ = b; }

    void add_generator(const std::string& gname, int public_degree);
    void add_relation(const IntPoly& r);            // NotHomogeneous
    void add_relation(const std::string& expr);
    void add_family(const std::string& template_text, int start = 1);

    const std::vector<Generator>& generators() const { return gens_; }
    const std::vector<IntPoly>& relations() const { return rels_; }
    const std::vector<Family>& families() const { return fams_; }
    std::vector<std::string> generator_names() const;
    int nvars() const { return static_cast<int>(gens_.size()); }

    IntPoly parse(const std::string& expr) const;
    std::string poly_str(const IntPoly& p) const;

    int internal_degree(const IntPoly::Exps& e) const;
    /// internal degree of a homogeneous polynomial (NotHomogeneous otherwise)
    int homogeneous_internal_degree(const IntPoly& p) const;

    /// relations with families expanded up to the internal bound
    std::vector<IntPoly> expanded_relations(int internal_bound) const;

    /// monomial exponent vectors of the given internal degree
    std::vector<IntPoly::Exps> monomials(int internal_degree) const;

    /// external text format
    std::string text() const;

private:
    std::string name_;
    int degree_unit_;
    int default_bound_ = 8;
    std::vector<Generator> gens_;
    std::vector<IntPoly> rels_;
    std::vector<Family> fams_;
};

/// built-in presentations:
/// PGL2_PT, S4_PT, S4_COHOM, D8_COHOM, S4_P1, S4_P1_MINUS_F, FINAL, D8_P1_SUB
Presentation builtin_presentation(const std::string& name); // UnknownName
std::vector<std::string> builtin_presentation_names();

/// "gen <name> <degree>; rel <poly>; family <template> j>=<n>;"
Presentation parse_presentation(const std::string& name, int degree_unit,
                                const std::string& text);

struct GradedPiece {
    int public_degree = 0;
    AbelianGroup group;
    std::vector<IntPoly::Exps> monomials;
    IMat lattice; // relation multiples in the monomial basis
};

/// degree-d piece (public units) as the cokernel of the relation lattice;
/// families are expanded to the bound (public units; <= 0 means the default)
GradedPiece graded_piece(const Presentation& P, int public_degree, int public_bound = 0);

/// does x lie in the span of degree-matched relation multiples? (NotHomogeneous)
bool in_ideal(const Presentation& P, const IntPoly& x, int public_bound = 0);
bool in_ideal(const Presentation& P, const std::string& expr, int public_bound = 0);

/// ring map given by generator images; images must be homogeneous of the
/// matching internal degree (DegreeMismatch)
struct RingMap {
    std::string name;
    const Presentation* source;
    const Presentation* target;
    std::vector<IntPoly> images;
};

RingMap make_map(const std::string& name, const Presentation& source, const Presentation& target,
                 const std::vector<std::string>& image_exprs);
IntPoly apply_map(const RingMap& m, const IntPoly& x);

/// every source relation (families expanded to the bound) maps into the target ideal
bool verify_map(const RingMap& m, int public_bound = 0);

/// presentation with extra homogeneous relations appended
Presentation quotient(const Presentation& P, const std::vector<std::string>& extra,
                      const std::string& new_name = "");

/// projection formula: the pushforward of a pullback is y * phi_*(1)
IntPoly pushforward_projection(const Presentation& target, const IntPoly& y,
                               const IntPoly& phi_star_one);

enum class SolveStatus { Unique, NoSolution, NonUnique };

struct SolveResult {
    SolveStatus status = SolveStatus::NoSolution;
    IntPoly element;     // canonical solution when status != NoSolution
    std::string detail;
};

/// Find u = sum c_i basis_i (c integer) with map_j(u) = value_j modulo the
/// target ideal for every constraint. The solution coset is canonicalized by
/// Hermite reduction of the homogeneous-solution lattice; NonUnique is
/// reserved for a free ambiguity direction that the source ideal does not kill.
SolveResult solve_by_pullbacks(const Presentation& source, const std::vector<IntPoly>& basis,
                               const std::vector<std::pair<const RingMap*, IntPoly>>& constraints,
                               int public_bound = 0);

} // namespace pencilgit
