#pragma once

#include "pencilgit/field.hpp"

#include <array>
#include <vector>

namespace pencilgit {

/// Homogeneous form of degree n in t0, t1: f = sum c[i] t0^(n-i) t1^i.
class BinaryForm {
public:
    BinaryForm(FieldPtr k, std::vector<Fel> coeffs);
    static BinaryForm zero(const FieldPtr& k, int degree);
    static BinaryForm from_ints(const FieldPtr& k, const std::vector<std::int64_t>& coeffs);

    int degree() const { return static_cast<int>(c_.size()) - 1; }
    const Fel& operator[](int i) const { return c_[static_cast<std::size_t>(i)]; }
    const std::vector<Fel>& coeffs() const { return c_; }
    const FieldPtr& field() const { return k_; }

    bool is_zero() const;

    BinaryForm operator+(const BinaryForm& o) const;
    BinaryForm operator-(const BinaryForm& o) const;
    BinaryForm scaled(const Fel& s) const;
    BinaryForm times(const BinaryForm& o) const;

    BinaryForm d_t0() const; // partial derivative, degree n-1
    BinaryForm d_t1() const;

    /// f(a t0 + b t1, c t0 + d t1)
    BinaryForm substitute(const Fel& a, const Fel& b, const Fel& c, const Fel& d) const;

    Fel eval(const Fel& t0, const Fel& t1) const;

    /// scaled so the leading (first) nonzero coefficient is 1
    BinaryForm monic() const;

    bool proportional_to(const BinaryForm& o) const;

    std::string str() const; // "[c0,c1,...]"

private:
    FieldPtr k_;
    std::vector<Fel> c_;
};

/// df/dt0 * dg/dt1 - df/dt1 * dg/dt0, degree 2n - 2. DegreeMismatch if degrees differ.
BinaryForm jacobian(const BinaryForm& f, const BinaryForm& g);

/// Hessian determinant f_00 f_11 - f_01^2, degree 2n - 4.
BinaryForm hessian(const BinaryForm& f);

/// Monic homogeneous gcd (Euclid on the dehomogenization at t0 = 1, with the
/// common t0-power restored). BothZero if both inputs vanish.
BinaryForm gcd_forms(const BinaryForm& f, const BinaryForm& g);

/// Exact division (throws if g does not divide f).
BinaryForm divide_exact(const BinaryForm& f, const BinaryForm& g);

/// True iff f is the cube of a linear form over the algebraic closure,
/// tested as "the Hessian of f vanishes identically". Degree-3 input only.
bool is_perfect_cube(const BinaryForm& f);

/// Discriminant of a binary cubic.
Fel cubic_discriminant(const BinaryForm& f);

} // namespace pencilgit
