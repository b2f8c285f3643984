#pragma once

#include "pencilgit/error.hpp"
#include "pencilgit/rational.hpp"

#include <memory>
#include <optional>
#include <string>
#include <vector>

namespace pencilgit {

class Field;
using FieldPtr = std::shared_ptr<const Field>;

/// Element of Q, F_p (p prime, p not 2 or 3), or a quadratic extension of
/// either, stored as a + b*s with s^2 = d. Base-field elements have b = 0.
/// All arithmetic is exact; residues are kept canonical in [0, p).
class Fel {
public:
    Fel() = default; // null element; arithmetic on it throws

    const Rat& a() const { return a_; }
    const Rat& b() const { return b_; }
    const FieldPtr& field() const { return k_; }

    bool is_zero() const { return a_ == 0 && b_ == 0; }
    bool in_base() const { return b_ == 0; }

    Fel operator+(const Fel& o) const;
    Fel operator-(const Fel& o) const;
    Fel operator*(const Fel& o) const;
    Fel operator/(const Fel& o) const;
    Fel operator-() const;
    Fel& operator+=(const Fel& o) { return *this = *this + o; }
    Fel& operator-=(const Fel& o) { return *this = *this - o; }
    Fel& operator*=(const Fel& o) { return *this = *this * o; }

    bool operator==(const Fel& o) const;
    bool operator!=(const Fel& o) const { return !(*this == o); }

    Fel inverse() const;
    Fel pow(long e) const;

    // total order used for canonical choices (not a field order)
    bool less(const Fel& o) const;

    std::string str() const;

private:
    friend class Field;
    Fel(FieldPtr k, Rat a, Rat b) : k_(std::move(k)), a_(std::move(a)), b_(std::move(b)) {}

    FieldPtr k_;
    Rat a_ = 0, b_ = 0;
};

/// Immutable field descriptor; elements thread a shared pointer to it.
class Field : public std::enable_shared_from_this<Field> {
public:
    static FieldPtr rationals();
    static FieldPtr prime(std::int64_t p);                  // NotPrime, CharTwoOrThree
    static FieldPtr quadratic(const FieldPtr& base, const Rat& d); // SquareDiscriminant
    /// "q" | "fp:<p>" | "q(sqrt:<d>)" | "fp:<p>(sqrt:<d>)"
    static FieldPtr parse(const std::string& spec);

    std::int64_t characteristic() const { return p_; }
    bool is_extension() const { return ext_; }
    const Rat& disc() const { return d_; }
    bool finite() const { return p_ != 0; }
    std::uint64_t order() const; // finite fields only

    bool same(const Field& o) const;
    std::string spec() const;

    Fel zero() const;
    Fel one() const;
    Fel from_int(std::int64_t v) const;
    Fel element(const Rat& a) const;
    Fel element(const Rat& a, const Rat& b) const;
    /// generator sqrt(d) of a quadratic extension
    Fel gen() const;

    /// canonical enumeration of a finite field: index i -> (i % p) + (i / p)*s
    std::vector<Fel> elements() const;
    Fel element_at(std::uint64_t index) const;

    /// deterministic square root: F_p roots in {0..(p-1)/2}; Q roots >= 0;
    /// sqrt(d) is the distinguished generator
    std::optional<Fel> sqrt(const Fel& x) const;

    /// primitive m-th root of unity, first in canonical element order
    std::optional<Fel> root_of_unity(long m) const;

    /// "a/b", residue "a", extension "a+b*s"
    Fel parse_element(const std::string& text) const;

private:
    Field() = default;

    Rat reduce(const Rat& v) const;       // canonical residue for finite fields
    Rat base_mul(const Rat& x, const Rat& y) const;
    Rat base_add(const Rat& x, const Rat& y) const;
    Rat base_sub(const Rat& x, const Rat& y) const;
    Rat base_neg(const Rat& x) const;
    Rat base_inv(const Rat& x) const;
    std::optional<Rat> base_sqrt(const Rat& x) const;
    long element_order(const Fel& x, long cap) const;

    friend class Fel;

    std::int64_t p_ = 0; // 0 = characteristic zero
    bool ext_ = false;
    Rat d_ = 0;          // extension discriminant when ext_
};

inline void require_same_field(const Fel& x, const Fel& y) {
    require(x.field() && y.field() &&
                (x.field().get() == y.field().get() || x.field()->same(*y.field())),
            "FieldMismatch", "elements of different fields");
}

} // namespace pencilgit
