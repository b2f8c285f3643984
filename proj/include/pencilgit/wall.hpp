#pragma once

#include "pencilgit/invariants.hpp"
#include "pencilgit/pgl2.hpp"

#include <optional>
#include <utility>

namespace pencilgit {

/// Parameter of the wall family, a point of P^1: (rho : 1) or infinity = (1 : 0).
class WallParam {
public:
    explicit WallParam(ProjPoint pt);
    static WallParam of(const Fel& rho);
    static WallParam infinity(const FieldPtr& k);

    const ProjPoint& point() const { return pt_; }
    const FieldPtr& field() const { return pt_.field(); }
    bool is_infinity() const { return pt_[1].is_zero(); }
    Fel value() const; // finite parameters only

    /// rho in {0, +-1, +-3, infinity}: exactly the non-stable wall pencils
    bool in_fwall() const;

    bool operator==(const WallParam& o) const { return pt_ == o.pt_; }
    bool operator!=(const WallParam& o) const { return !(*this == o); }
    bool less(const WallParam& o) const { return pt_.less(o.pt_); }

    std::string str() const; // "2", "1/2", "inf"

private:
    ProjPoint pt_;
};

/// p_rho = <t0^3 + rho t0 t1^2, rho t0^2 t1 + t1^3>; p_inf = <t0 t1^2, t0^2 t1>
Pencil wall_pencil(const WallParam& rho);

/// (3 + rho^2, (rho^2-3)(rho^2-6rho-3)(rho^2+6rho-3)/216); InfinityParam at infinity
PencilInvariants wall_closed_invariants(const WallParam& rho);

/// the six wall parameters {0, 1, -1, 3, -3, inf}
std::vector<WallParam> fwall_params(const FieldPtr& k);
/// all q + 1 parameters of P^1 over a finite field, canonical order
std::vector<WallParam> all_params(const FieldPtr& k);

/// Moebius action of sigma in S4 on the parameter line (factors through S4/D4).
/// NotInS4 when sigma is not in the distinguished S4.
WallParam s4_on_rho(const ProjMat& sigma, const WallParam& rho);

/// orbit {rho, -rho, +-(rho+3)/(rho-1), +-(rho-3)/(rho+1)}, duplicates merged, sorted
std::vector<WallParam> s4_orbit_rho(const WallParam& rho);

struct FiberResult {
    std::vector<WallParam> roots; // with multiplicity, sorted
    bool fully_split = true;      // false over Q when irrational roots remain
};

/// roots of the degree-6 form y*216*I'^3(rho,tau) - x*216*J(rho,tau)
/// for the target Newstead point (x : y)
FiberResult invariant_fiber_rho(const ProjPoint& newstead, const FieldPtr& k);

/// some (A, rho) with A . p_rho = p, rho outside F_Wall (finite fields;
/// NotStable / NotFoundOverThisField)
std::pair<ProjMat, WallParam> wall_normal_form(const Pencil& p);

/// all (B, rho') with rho' outside F_Wall and B . p_rho' = p, by exhaustive scan
std::vector<std::pair<ProjMat, WallParam>> phi_fiber(const Pencil& p);

enum class OrbitKind { Z1, Z2_0, Z2_1, Z2_2, Z3_1, Z3_2, Stable };

struct OrbitLabel {
    OrbitKind kind;
    std::optional<ProjPoint> newstead; // present for stable orbits
    std::string str() const;           // "Z1", ..., "STABLE(x:y)"
    bool operator==(const OrbitLabel& o) const;
};

/// case split of the orbit atlas: stability class, then the degree of the
/// common factor (unstable and (6^3:1) cases) or the cube-member count
/// ((-6^3:1) case); UnclassifiableInput if nothing matches
OrbitLabel classify_orbit(const Pencil& p);

/// representatives <t0^3,t0^2 t1>, <t0^3,t0 t1^2>, <t0 t1^2,t0^2 t1>,
/// <t0^3,t1^3>, <t0 t1^2,t0^3+t0^2 t1>, <t0^3,t0 t1^2+t1^3>
Pencil atlas_representative(OrbitKind kind, const FieldPtr& k);
OrbitKind orbit_kind_from_name(const std::string& name);

/// the closure relations of the two 2-dimensional semistable orbits
/// (two relations for Z2_2, five for Z2_1); NotOnPluckerQuadric
std::vector<Fel> closure_relation_values(OrbitKind kind, const FieldPtr& k,
                                         const std::array<Fel, 6>& plucker);
bool closure_predicate(OrbitKind kind, const FieldPtr& k, const std::array<Fel, 6>& plucker);

/// lambda = (3/rho - rho + 2)/4 as a point of P^1; PoleParam at rho in {0, inf}
ProjPoint anharmonic_lambda(const WallParam& rho);

/// {l, 1-l, 1/l, 1/(1-l), (l-1)/l, l/(l-1)}, duplicates merged, sorted
std::vector<ProjPoint> anharmonic_orbit(const ProjPoint& lambda);

} // namespace pencilgit
