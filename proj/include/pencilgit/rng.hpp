#pragma once

#include "pencilgit/pgl2.hpp"

#include <random>

namespace pencilgit {

/// Deterministic sampling helpers; every consumer owns its own stream.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : g_(seed) {}

    std::uint64_t below(std::uint64_t bound) { return bound ? g_() % bound : 0; }
    std::int64_t in_range(std::int64_t lo, std::int64_t hi) {
        return lo + static_cast<std::int64_t>(below(static_cast<std::uint64_t>(hi - lo + 1)));
    }

    Fel element(const FieldPtr& k) {
        if (k->finite()) return k->element_at(below(k->order()));
        Rat a(in_range(-9, 9), in_range(1, 9));
        if (!k->is_extension()) return k->element(a);
        return k->element(a, Rat(in_range(-9, 9), in_range(1, 9)));
    }

    Fel nonzero(const FieldPtr& k) {
        while (true) {
            Fel x = element(k);
            if (!x.is_zero()) return x;
        }
    }

    BinaryForm cubic(const FieldPtr& k) {
        std::vector<Fel> c;
        for (int i = 0; i < 4; ++i) c.push_back(element(k));
        return BinaryForm(k, std::move(c));
    }

    Pencil pencil(const FieldPtr& k) {
        while (true) {
            BinaryForm f = cubic(k), g = cubic(k);
            try {
                return Pencil(f, g);
            } catch (const MathError&) {
                // dependent or zero rows; resample
            }
        }
    }

    ProjMat pgl2(const FieldPtr& k) {
        while (true) {
            Fel a = element(k), b = element(k), c = element(k), d = element(k);
            if ((a * d - b * c).is_zero()) continue;
            return ProjMat(k, a, b, c, d);
        }
    }

    /// exact matrix with determinant 1
    std::array<Fel, 4> sl2(const FieldPtr& k) {
        while (true) {
            Fel a = element(k), b = element(k), c = element(k);
            if (a.is_zero()) continue;
            Fel d = (k->one() + b * c) / a;
            return {a, b, c, d};
        }
    }

private:
    std::mt19937_64 g_;
};

} // namespace pencilgit
