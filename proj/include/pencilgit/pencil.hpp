#pragma once

#include "pencilgit/binary_form.hpp"
#include "pencilgit/projective.hpp"

#include <array>
#include <optional>

namespace pencilgit {

/// Two-dimensional space of binary cubics. Canonical identity is the reduced
/// row echelon form of the 2x4 coefficient matrix (pivots left to right,
/// normalized to 1); two pencils are equal iff their RREF matrices agree.
///
/// The Pluecker tuple is cached from the construction basis (f, g), so the
/// closed formulas of the wall family evaluate on the nose; it agrees with
/// the RREF tuple up to a nonzero scalar.
class Pencil {
public:
    Pencil(const BinaryForm& f, const BinaryForm& g); // LinearlyDependent

    const FieldPtr& field() const { return k_; }
    const std::array<std::array<Fel, 4>, 2>& rref() const { return rref_; }
    const BinaryForm& gen0() const { return basis_[0]; }
    const BinaryForm& gen1() const { return basis_[1]; }
    BinaryForm rref_form(int row) const;

    /// minors (p01, p02, p03, p12, p13, p23) of the construction basis
    const std::array<Fel, 6>& plucker() const { return pl_; }

    bool operator==(const Pencil& o) const;
    bool operator!=(const Pencil& o) const { return !(*this == o); }
    bool less(const Pencil& o) const;

    /// Newstead normal form of the Wronskian in P^4:
    /// (p01 : 2 p02 : 3 p03 + p12 : 2 p13 : p23)
    ProjPoint wronskian_point() const;

    /// member lambda*f + mu*g of the pencil
    BinaryForm member(const Fel& lambda, const Fel& mu) const;

    std::string str() const;

private:
    FieldPtr k_;
    std::array<BinaryForm, 2> basis_;
    std::array<std::array<Fel, 4>, 2> rref_;
    std::array<Fel, 6> pl_;
};

std::array<Fel, 6> plucker_of_rows(const FieldPtr& k, const std::array<Fel, 4>& a,
                                   const std::array<Fel, 4>& b);

/// p01 p23 - p02 p13 + p03 p12
Fel plucker_quadric(const FieldPtr& k, const std::array<Fel, 6>& p);

/// reconstruct a pencil from a tuple on the Pluecker quadric (NotOnPluckerQuadric)
Pencil pencil_from_plucker(const FieldPtr& k, const std::array<Fel, 6>& p);

struct CubeMembers {
    int count = 0;                  // distinct cube members over the working field
    std::vector<ProjPoint> members; // (lambda : mu), over `member_field`
    FieldPtr member_field;          // the field or its designated quadratic extension
};

/// All (lambda : mu) with lambda*f + mu*g a perfect cube, found as the common
/// projective roots of the three coefficient quadratics of Hessian(lambda f + mu g).
/// With `use_quadratic_extension`, roots are counted over the designated quadratic
/// extension (F_p: adjoin sqrt of the least non-residue; Q: adjoin the needed
/// discriminant).
CubeMembers cube_members(const Pencil& p, bool use_quadratic_extension);

} // namespace pencilgit
