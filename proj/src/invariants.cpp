#include "pencilgit/invariants.hpp"

#include <algorithm>

namespace pencilgit {

QuarticInvariants quartic_invariants(const std::array<Fel, 5>& c) {
    bool all_zero = std::all_of(c.begin(), c.end(), [](const Fel& x) { return x.is_zero(); });
    require(!all_zero, "ZeroQuartic", "invariants of the zero quartic");
    const FieldPtr& k = c[0].field();
    Fel I = c[0] * c[4] - k->from_int(4) * c[1] * c[3] + k->from_int(3) * c[2] * c[2];
    Fel J = c[0] * c[2] * c[4] + k->from_int(2) * c[1] * c[2] * c[3] - c[0] * c[3] * c[3] -
            c[1] * c[1] * c[4] - c[2] * c[2] * c[2];
    return {I, J};
}

std::array<Fel, 5> weighted_quartic(const BinaryForm& raw) {
    require(raw.degree() == 4, "WrongDegree", "weighted convention is for quartics");
    const FieldPtr& k = raw.field();
    Fel inv4 = k->from_int(4).inverse(), inv6 = k->from_int(6).inverse();
    return {raw[0], raw[1] * inv4, raw[2] * inv6, raw[3] * inv4, raw[4]};
}

PencilInvariants pencil_invariants(const Pencil& p) {
    const FieldPtr& k = p.field();
    const auto& pl = p.plucker();
    Fel half = k->from_int(2).inverse(), sixth = k->from_int(6).inverse();
    Fel Ip = k->from_int(3) * pl[2] - pl[3];
    std::array<Fel, 5> c = {pl[0], pl[1] * half, (k->from_int(3) * pl[2] + pl[3]) * sixth,
                            pl[4] * half, pl[5]};
    // the Wronskian of a pencil never vanishes, so c is a genuine quartic
    return {Ip, quartic_invariants(c).J};
}

ProjPoint newstead_point(const FieldPtr& k, const PencilInvariants& inv) {
    require(!(inv.Iprime.is_zero() && inv.J.is_zero()), "UnstableNoImage",
            "unstable pencil has no quotient image");
    return ProjPoint(k, {inv.Iprime.pow(3), inv.J});
}

ProjPoint newstead_point(const Pencil& p) { return newstead_point(p.field(), pencil_invariants(p)); }

Stability classify_stability(const Pencil& p) {
    const FieldPtr& k = p.field();
    PencilInvariants inv = pencil_invariants(p);
    if (inv.Iprime.is_zero() && inv.J.is_zero()) return Stability::Unstable;
    Fel cube = inv.Iprime.pow(3);
    Fel scale = k->from_int(216);
    if (cube == scale * inv.J) return Stability::SemistablePlus;
    if (cube == k->zero() - scale * inv.J) return Stability::SemistableMinus;
    return Stability::Stable;
}

std::string stability_name(Stability s) {
    switch (s) {
        case Stability::Unstable: return "Unstable";
        case Stability::SemistablePlus: return "StrictlySemistablePlus";
        case Stability::SemistableMinus: return "StrictlySemistableMinus";
        case Stability::Stable: return "Stable";
    }
    return "?";
}

} // namespace pencilgit
