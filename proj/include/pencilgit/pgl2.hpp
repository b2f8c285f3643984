#pragma once

#include "pencilgit/pencil.hpp"

#include <map>
#include <vector>

namespace pencilgit {

/// Element of PGL2: invertible 2x2 matrix, canonical representative scales
/// the first nonzero entry (row-major) to 1.
class ProjMat {
public:
    ProjMat(FieldPtr k, const Fel& a, const Fel& b, const Fel& c, const Fel& d);
    static ProjMat identity(const FieldPtr& k);
    static ProjMat from_ints(const FieldPtr& k, std::int64_t a, std::int64_t b, std::int64_t c,
                             std::int64_t d);

    const FieldPtr& field() const { return k_; }
    const std::array<Fel, 4>& entries() const { return m_; }
    Fel det() const { return m_[0] * m_[3] - m_[1] * m_[2]; }

    ProjMat operator*(const ProjMat& o) const;
    ProjMat inverse() const;
    bool operator==(const ProjMat& o) const { return m_ == o.m_; }
    bool operator!=(const ProjMat& o) const { return !(*this == o); }
    bool less(const ProjMat& o) const;

    /// multiplicative order in PGL2 (throws past the cap; finite groups only)
    int order(int cap = 4096) const;

    std::string str() const;

private:
    FieldPtr k_;
    std::array<Fel, 4> m_; // row-major a b ; c d
};

/// (A.f)(t) = f(A^{-1} t), computed with the adjugate of the canonical
/// representative (a fixed projective lift of the inverse).
BinaryForm act(const ProjMat& A, const BinaryForm& f);
Pencil act(const ProjMat& A, const Pencil& p);
/// action on P^1 column vectors (x:y)
ProjPoint act(const ProjMat& A, const ProjPoint& pt);

/// substitution by the exact inverse of a given matrix lift (for weight checks)
Pencil act_lift(const std::array<Fel, 4>& lift, const Pencil& p);

class FiniteSubgroup {
public:
    FiniteSubgroup(std::string name, std::vector<ProjMat> generators);

    /// wrap an already-closed element set (as from a brute-force scan);
    /// closure is spot-checked, not recomputed
    static FiniteSubgroup from_closed_set(std::string name, std::vector<ProjMat> elements);

    const std::string& name() const { return name_; }
    const FieldPtr& field() const { return k_; }
    const std::vector<ProjMat>& elements() const { return elems_; }
    const std::vector<ProjMat>& generators() const { return gens_; }
    std::size_t order() const { return elems_.size(); }

    bool contains(const ProjMat& g) const;
    bool contains_subgroup(const FiniteSubgroup& h) const;
    bool set_equal(const FiniteSubgroup& h) const;

    /// sorted multiset of element orders
    std::vector<int> order_profile() const;
    /// isomorphism-type guess from (order, order profile)
    std::string type_guess() const;

private:
    std::string name_;
    FieldPtr k_;
    std::vector<ProjMat> gens_;
    std::vector<ProjMat> elems_; // closure, sorted canonically
};

// distinguished generators (need a primitive 4th root of unity)
ProjMat sigma3(const FieldPtr& k);
ProjMat sigma2(const FieldPtr& k);

FiniteSubgroup subgroup_cyclic(long m, const FieldPtr& k);   // MissingRootOfUnity
FiniteSubgroup subgroup_dihedral(long m, const FieldPtr& k); // D_{2m}, order 2m
FiniteSubgroup subgroup_d4(const FieldPtr& k);
FiniteSubgroup subgroup_d8(const FieldPtr& k); // <D4, sigma3^-1 sigma2>, order 8
FiniteSubgroup subgroup_a4(const FieldPtr& k);
FiniteSubgroup subgroup_s4(const FieldPtr& k);
/// name in {"C<m>", "D<2m>", "D4", "D8", "A4", "S4"}
FiniteSubgroup subgroup_named(const std::string& name, const FieldPtr& k);

/// all q^3 - q elements of PGL2 over a finite field, canonical order (InfiniteField)
std::vector<ProjMat> enumerate_pgl2(const FieldPtr& k);

/// brute-force stabilizer of a pencil over a finite field
FiniteSubgroup stabilizer(const Pencil& p);

/// brute-force normalizer inside PGL2 over a finite field
FiniteSubgroup normalizer(const FiniteSubgroup& h);

} // namespace pencilgit
