#pragma once

#include "pencilgit/error.hpp"
#include "pencilgit/rational.hpp"

#include <map>
#include <optional>
#include <string>
#include <vector>

namespace pencilgit {

/// Sparse multivariate polynomial over Z; exponent vectors are indexed by
/// a fixed generator list owned by the enclosing presentation.
class IntPoly {
public:
    using Exps = std::vector<unsigned>;

    IntPoly() = default; // zero with unknown arity; usable as additive identity
    explicit IntPoly(int nvars) : nvars_(nvars) {}
    static IntPoly constant(int nvars, const Int& c);
    static IntPoly variable(int nvars, int index, unsigned exp = 1);

    int nvars() const { return nvars_; }
    bool is_zero() const { return terms_.empty(); }
    const std::map<Exps, Int>& terms() const { return terms_; }

    IntPoly operator+(const IntPoly& o) const;
    IntPoly operator-(const IntPoly& o) const;
    IntPoly operator*(const IntPoly& o) const;
    IntPoly scaled(const Int& c) const;
    IntPoly pow(unsigned e) const;
    bool operator==(const IntPoly& o) const { return terms_ == o.terms_; }
    bool operator!=(const IntPoly& o) const { return !(*this == o); }

    void add_term(const Exps& e, const Int& c);

    /// substitute each variable by the given polynomials (in another ring)
    IntPoly substitute(const std::vector<IntPoly>& images, int target_nvars) const;

    std::string str(const std::vector<std::string>& names) const;

private:
    int nvars_ = -1;
    std::map<Exps, Int> terms_;
};

/// Parse "2*a*b^2 - 3*(c+1)^j" style integer polynomials over the named
/// variables; exponents are integer expressions in an optional parameter j.
IntPoly parse_poly(const std::string& text, const std::vector<std::string>& names,
                   std::optional<long> j = std::nullopt);

} // namespace pencilgit
