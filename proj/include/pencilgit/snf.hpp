#pragma once

#include "pencilgit/rational.hpp"

#include <optional>
#include <string>
#include <vector>

namespace pencilgit {

using IVec = std::vector<Int>;
using IMat = std::vector<IVec>; // row-major

IMat identity_matrix(std::size_t n);
IMat mat_mul(const IMat& a, const IMat& b);
IVec mat_apply(const IMat& a, const IVec& v);

/// Smith normal form U*A*V = S with unimodular U, V and a divisibility chain
/// on the diagonal. Transforms are tracked on demand.
struct SnfResult {
    IMat S;
    IMat U, V;        // empty unless requested
    std::vector<Int> diag; // nonzero diagonal entries (the chain)
    std::size_t rank = 0;
};

SnfResult smith_normal_form(IMat A, bool want_u, bool want_v);

/// Finitely generated abelian group Z^rank + sum Z/n_i, n_1 | n_2 | ...
struct AbelianGroup {
    long free_rank = 0;
    std::vector<Int> invariant_factors; // > 1, divisibility chain

    bool operator==(const AbelianGroup& o) const {
        return free_rank == o.free_rank && invariant_factors == o.invariant_factors;
    }
    /// primary decomposition, e.g. "Z + Z/2 + Z/3"
    std::string str() const;
};

/// cokernel of the column lattice of A inside Z^nrows
AbelianGroup cokernel_group(const IMat& A, std::size_t nrows);

/// is b an integer combination of the columns of A?
bool in_column_lattice(const IMat& A, const IVec& b);

/// particular integer solution of A x = b
std::optional<IVec> solve_columns(const IMat& A, const IVec& b);

/// basis (as columns) of { x : A x = 0 }
IMat kernel_columns(const IMat& A);

/// column-style Hermite normal form of the lattice spanned by the columns
IMat column_hnf(IMat A);

/// canonical representative of v modulo the column lattice of H (H in HNF)
IVec reduce_mod_hnf(IVec v, const IMat& H);

} // namespace pencilgit
