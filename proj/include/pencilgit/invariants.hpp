#pragma once

#include "pencilgit/pencil.hpp"

namespace pencilgit {

/// Invariants of a binary quartic in the weighted convention
/// c0 t0^4 + 4 c1 t0^3 t1 + 6 c2 t0^2 t1^2 + 4 c3 t0 t1^3 + c4 t1^4.
struct QuarticInvariants {
    Fel I; // c0 c4 - 4 c1 c3 + 3 c2^2
    Fel J; // c0 c2 c4 + 2 c1 c2 c3 - c0 c3^2 - c1^2 c4 - c2^3
};

QuarticInvariants quartic_invariants(const std::array<Fel, 5>& c); // ZeroQuartic

/// weighted tuple (c0..c4) of a raw quartic (divides by 4 and 6)
std::array<Fel, 5> weighted_quartic(const BinaryForm& raw);

struct PencilInvariants {
    Fel Iprime; // 3 p03 - p12
    Fel J;      // quartic J of the Wronskian, via c = (p01, p02/2, (3p03+p12)/6, p13/2, p23)
};

/// Evaluated on the construction-basis Pluecker tuple; satisfies Iprime^2 = 12 I.
PencilInvariants pencil_invariants(const Pencil& p);

/// (Iprime^3 : J) in P^1; UnstableNoImage when both invariants vanish
ProjPoint newstead_point(const Pencil& p);
ProjPoint newstead_point(const FieldPtr& k, const PencilInvariants& inv);

enum class Stability {
    Unstable,          // Iprime = J = 0
    SemistablePlus,    // (Iprime^3 : J) = (6^3 : 1)
    SemistableMinus,   // (Iprime^3 : J) = (-6^3 : 1)
    Stable,
};

Stability classify_stability(const Pencil& p);
std::string stability_name(Stability s);

} // namespace pencilgit
