#pragma once

#include "pencilgit/field.hpp"

#include <vector>

namespace pencilgit {

/// Point of projective space, canonical representative: first nonzero
/// coordinate scaled to 1. Equality is equality of representatives.
class ProjPoint {
public:
    ProjPoint(FieldPtr k, std::vector<Fel> coords); // ZeroVector if all zero

    std::size_t size() const { return x_.size(); }
    const Fel& operator[](std::size_t i) const { return x_[i]; }
    const std::vector<Fel>& coords() const { return x_; }
    const FieldPtr& field() const { return k_; }

    bool operator==(const ProjPoint& o) const;
    bool operator!=(const ProjPoint& o) const { return !(*this == o); }
    bool less(const ProjPoint& o) const; // canonical order for sorting

    std::string str() const; // "(x0:x1:...)"

    /// scaled to integer coordinates with content 1 (characteristic-zero base only)
    std::vector<Rat> primitive_integer() const;

private:
    FieldPtr k_;
    std::vector<Fel> x_;
};

} // namespace pencilgit
