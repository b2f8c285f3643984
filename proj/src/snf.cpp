#include "pencilgit/snf.hpp"

#include "pencilgit/error.hpp"

#include <algorithm>
#include <map>

namespace pencilgit {

IMat identity_matrix(std::size_t n) {
    IMat m(n, IVec(n, 0));
    for (std::size_t i = 0; i < n; ++i) m[i][i] = 1;
    return m;
}

IMat mat_mul(const IMat& a, const IMat& b) {
    std::size_t r = a.size(), mid = b.size(), c = mid ? b[0].size() : 0;
    IMat out(r, IVec(c, 0));
    for (std::size_t i = 0; i < r; ++i)
        for (std::size_t k = 0; k < mid; ++k) {
            if (a[i][k] == 0) continue;
            for (std::size_t j = 0; j < c; ++j) out[i][j] += a[i][k] * b[k][j];
        }
    return out;
}

IVec mat_apply(const IMat& a, const IVec& v) {
    IVec out(a.size(), 0);
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < v.size(); ++j) out[i] += a[i][j] * v[j];
    return out;
}

namespace {
Int int_abs(const Int& x) { return x < 0 ? -x : x; }
} // namespace

SnfResult smith_normal_form(IMat A, bool want_u, bool want_v) {
    std::size_t m = A.size(), n = m ? A[0].size() : 0;
    SnfResult res;
    res.U = want_u ? identity_matrix(m) : IMat{};
    res.V = want_v ? identity_matrix(n) : IMat{};

    auto row_sub = [&](std::size_t dst, std::size_t src, const Int& q) {
        if (q == 0) return;
        for (std::size_t j = 0; j < n; ++j) A[dst][j] -= q * A[src][j];
        if (want_u)
            for (std::size_t j = 0; j < m; ++j) res.U[dst][j] -= q * res.U[src][j];
    };
    auto col_sub = [&](std::size_t dst, std::size_t src, const Int& q) {
        if (q == 0) return;
        for (std::size_t i = 0; i < m; ++i) A[i][dst] -= q * A[i][src];
        if (want_v)
            for (std::size_t i = 0; i < n; ++i) res.V[i][dst] -= q * res.V[i][src];
    };
    auto row_swap = [&](std::size_t a, std::size_t b) {
        if (a == b) return;
        std::swap(A[a], A[b]);
        if (want_u) std::swap(res.U[a], res.U[b]);
    };
    auto col_swap = [&](std::size_t a, std::size_t b) {
        if (a == b) return;
        for (std::size_t i = 0; i < m; ++i) std::swap(A[i][a], A[i][b]);
        if (want_v)
            for (std::size_t i = 0; i < n; ++i) std::swap(res.V[i][a], res.V[i][b]);
    };
    auto row_negate = [&](std::size_t r) {
        for (std::size_t j = 0; j < n; ++j) A[r][j] = -A[r][j];
        if (want_u)
            for (std::size_t j = 0; j < m; ++j) res.U[r][j] = -res.U[r][j];
    };

    std::size_t t = 0;
    while (t < m && t < n) {
        // smallest nonzero pivot in the remaining block; +-1 wins immediately
        std::size_t pi = m, pj = n;
        bool unit = false;
        for (std::size_t i = t; i < m && !unit; ++i) {
            for (std::size_t j = t; j < n; ++j) {
                if (A[i][j] == 0) continue;
                if (pi == m || int_abs(A[i][j]) < int_abs(A[pi][pj])) {
                    pi = i;
                    pj = j;
                    if (A[i][j] == 1 || A[i][j] == -1) {
                        unit = true;
                        break;
                    }
                }
            }
        }
        if (pi == m) break;
        row_swap(t, pi);
        col_swap(t, pj);
        bool clean = false;
        while (!clean) {
            clean = true;
            for (std::size_t i = t + 1; i < m; ++i) {
                if (A[i][t] == 0) continue;
                Int q = A[i][t] / A[t][t];
                row_sub(i, t, q);
                if (A[i][t] != 0) {
                    row_swap(t, i); // smaller remainder becomes the pivot
                    clean = false;
                }
            }
            for (std::size_t j = t + 1; j < n; ++j) {
                if (A[t][j] == 0) continue;
                Int q = A[t][j] / A[t][t];
                col_sub(j, t, q);
                if (A[t][j] != 0) {
                    col_swap(t, j);
                    clean = false;
                }
            }
            if (!clean) continue;
            // the pivot must divide the rest of the block for the chain
            if (A[t][t] == 1 || A[t][t] == -1) break;
            for (std::size_t i = t + 1; i < m && clean; ++i)
                for (std::size_t j = t + 1; j < n && clean; ++j) {
                    if (A[i][j] % A[t][t] != 0) {
                        row_sub(t, i, Int(-1)); // add row i to row t
                        clean = false;
                    }
                }
        }
        if (A[t][t] < 0) row_negate(t);
        ++t;
    }
    res.rank = t;
    for (std::size_t i = 0; i < t; ++i) res.diag.push_back(A[i][i]);
    res.S = std::move(A);
    return res;
}

std::string AbelianGroup::str() const {
    std::vector<std::pair<Int, int>> primary; // (p, e)
    for (const Int& f : invariant_factors) {
        Int n = f;
        for (Int p = 2; p * p <= n; ++p) {
            if (n % p != 0) continue;
            int e = 0;
            while (n % p == 0) {
                n /= p;
                ++e;
            }
            primary.emplace_back(p, e);
        }
        if (n > 1) primary.emplace_back(n, 1);
    }
    std::sort(primary.begin(), primary.end());
    std::string out;
    if (free_rank == 1) out = "Z";
    else if (free_rank > 1) out = "Z^" + std::to_string(free_rank);
    for (const auto& [p, e] : primary) {
        Int q = 1;
        for (int i = 0; i < e; ++i) q *= p;
        if (!out.empty()) out += " + ";
        out += "Z/" + q.str();
    }
    return out.empty() ? "0" : out;
}

AbelianGroup cokernel_group(const IMat& A, std::size_t nrows) {
    AbelianGroup g;
    if (A.empty() || A[0].empty()) {
        g.free_rank = static_cast<long>(nrows);
        return g;
    }
    require(A.size() == nrows, "DegreeMismatch", "cokernel row count mismatch");
    SnfResult s = smith_normal_form(A, false, false);
    g.free_rank = static_cast<long>(nrows - s.rank);
    for (const Int& d : s.diag)
        if (d != 1) g.invariant_factors.push_back(d);
    return g;
}

bool in_column_lattice(const IMat& A, const IVec& b) {
    if (A.empty() || A[0].empty())
        return std::all_of(b.begin(), b.end(), [](const Int& x) { return x == 0; });
    SnfResult s = smith_normal_form(A, true, false);
    IVec c = mat_apply(s.U, b);
    for (std::size_t i = 0; i < c.size(); ++i) {
        if (i < s.rank) {
            if (c[i] % s.diag[i] != 0) return false;
        } else if (c[i] != 0) {
            return false;
        }
    }
    return true;
}

std::optional<IVec> solve_columns(const IMat& A, const IVec& b) {
    if (A.empty() || A[0].empty()) {
        bool zero = std::all_of(b.begin(), b.end(), [](const Int& x) { return x == 0; });
        if (!zero) return std::nullopt;
        return IVec{};
    }
    SnfResult s = smith_normal_form(A, true, true);
    IVec c = mat_apply(s.U, b);
    std::size_t n = A[0].size();
    IVec z(n, 0);
    for (std::size_t i = 0; i < c.size(); ++i) {
        if (i < s.rank) {
            if (c[i] % s.diag[i] != 0) return std::nullopt;
            z[i] = c[i] / s.diag[i];
        } else if (c[i] != 0) {
            return std::nullopt;
        }
    }
    return mat_apply(s.V, z);
}

IMat kernel_columns(const IMat& A) {
    if (A.empty() || A[0].empty()) return {};
    std::size_t n = A[0].size();
    SnfResult s = smith_normal_form(A, false, true);
    IMat out(n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t k = s.rank; k < n; ++k) out[i].push_back(s.V[i][k]);
    if (!out.empty() && out[0].empty()) return {};
    return out;
}

IMat column_hnf(IMat A) {
    if (A.empty()) return A;
    std::size_t m = A.size(), n = A[0].size();
    std::size_t t = 0;
    for (std::size_t r = 0; r < m && t < n; ++r) {
        while (true) {
            std::size_t best = n;
            for (std::size_t j = t; j < n; ++j) {
                if (A[r][j] == 0) continue;
                if (best == n || int_abs(A[r][j]) < int_abs(A[r][best])) best = j;
            }
            if (best == n) break;
            for (std::size_t i = 0; i < m; ++i) std::swap(A[i][t], A[i][best]);
            bool done = true;
            for (std::size_t j = t + 1; j < n; ++j) {
                if (A[r][j] == 0) continue;
                Int q = A[r][j] / A[r][t];
                for (std::size_t i = 0; i < m; ++i) A[i][j] -= q * A[i][t];
                if (A[r][j] != 0) done = false;
            }
            if (done) break;
        }
        if (A[r][t] != 0) {
            if (A[r][t] < 0)
                for (std::size_t i = 0; i < m; ++i) A[i][t] = -A[i][t];
            ++t;
        }
    }
    // drop zero columns past t
    IMat out(m);
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = 0; j < t; ++j) out[i].push_back(A[i][j]);
    return out;
}

IVec reduce_mod_hnf(IVec v, const IMat& H) {
    if (H.empty() || H[0].empty()) return v;
    std::size_t m = H.size(), n = H[0].size();
    std::size_t col = 0;
    for (std::size_t r = 0; r < m && col < n; ++r) {
        if (H[r][col] == 0) continue;
        // floor division so the residue lands in [0, pivot)
        Int p = H[r][col];
        Int q = v[r] / p;
        if (v[r] - q * p < 0) q -= 1;
        if (q != 0)
            for (std::size_t i = 0; i < m; ++i) v[i] -= q * H[i][col];
        ++col;
    }
    return v;
}

} // namespace pencilgit
