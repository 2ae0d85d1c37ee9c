#pragma once

#include <algorithm>
#include <cstddef>
#include <utility>
#include <vector>

#include "spoke/bigint.hpp"
#include "spoke/error.hpp"

namespace spoke {

struct IntMatrix {
    std::size_t nrows = 0;
    std::size_t ncols = 0;
    std::vector<std::vector<BigInt>> e;

    IntMatrix() = default;
    IntMatrix(std::size_t r, std::size_t c)
        : nrows(r), ncols(c), e(r, std::vector<BigInt>(c, BigInt(0))) {}

    static IntMatrix identity(std::size_t n) {
        IntMatrix m(n, n);
        for (std::size_t i = 0; i < n; ++i) m.e[i][i] = 1;
        return m;
    }

    static IntMatrix from_rows(std::vector<std::vector<BigInt>> rows, std::size_t cols) {
        IntMatrix m;
        m.nrows = rows.size();
        m.ncols = cols;
        for (const auto& r : rows)
            require(r.size() == cols, ErrorKind::DomainError, "ragged matrix rows");
        m.e = std::move(rows);
        return m;
    }

    std::vector<BigInt>& operator[](std::size_t i) { return e[i]; }
    const std::vector<BigInt>& operator[](std::size_t i) const { return e[i]; }

    bool operator==(const IntMatrix& o) const {
        return nrows == o.nrows && ncols == o.ncols && e == o.e;
    }
};

inline IntMatrix transpose(const IntMatrix& m) {
    IntMatrix t(m.ncols, m.nrows);
    for (std::size_t i = 0; i < m.nrows; ++i)
        for (std::size_t j = 0; j < m.ncols; ++j) t.e[j][i] = m.e[i][j];
    return t;
}

inline IntMatrix mat_mul(const IntMatrix& a, const IntMatrix& b) {
    require(a.ncols == b.nrows, ErrorKind::DomainError, "matrix product shape mismatch");
    IntMatrix c(a.nrows, b.ncols);
    for (std::size_t i = 0; i < a.nrows; ++i)
        for (std::size_t k = 0; k < a.ncols; ++k) {
            if (a.e[i][k] == 0) continue;
            for (std::size_t j = 0; j < b.ncols; ++j) c.e[i][j] += a.e[i][k] * b.e[k][j];
        }
    return c;
}

inline std::vector<BigInt> vec_mat(const std::vector<BigInt>& v, const IntMatrix& m) {
    require(v.size() == m.nrows, ErrorKind::DomainError, "vector/matrix shape mismatch");
    std::vector<BigInt> out(m.ncols, BigInt(0));
    for (std::size_t i = 0; i < m.nrows; ++i) {
        if (v[i] == 0) continue;
        for (std::size_t j = 0; j < m.ncols; ++j) out[j] += v[i] * m.e[i][j];
    }
    return out;
}

// Row-style Hermite normal form: pivots positive, entries above each pivot
// reduced into [0, pivot), zero rows removed. Canonical, so two row lattices
// are equal iff their forms are identical.
inline IntMatrix hnf(IntMatrix m) {
    std::size_t r = 0;
    for (std::size_t c = 0; c < m.ncols && r < m.nrows; ++c) {
        // Gcd-eliminate column c among rows r..end, keeping the shrinking
        // pivot at position r.
        while (true) {
            std::size_t best = m.nrows;
            for (std::size_t i = r; i < m.nrows; ++i) {
                if (m.e[i][c] == 0) continue;
                if (best == m.nrows ||
                    big_abs(m.e[i][c]) < big_abs(m.e[best][c]))
                    best = i;
            }
            if (best == m.nrows) break;
            if (best != r) std::swap(m.e[best], m.e[r]);
            bool others = false;
            for (std::size_t i = r + 1; i < m.nrows; ++i) {
                if (m.e[i][c] == 0) continue;
                others = true;
                BigInt q = round_div(m.e[i][c], m.e[r][c]);
                for (std::size_t j = c; j < m.ncols; ++j) m.e[i][j] -= q * m.e[r][j];
            }
            if (!others) break;
        }
        if (m.e[r][c] == 0) continue;
        if (m.e[r][c] < 0)
            for (std::size_t j = c; j < m.ncols; ++j) m.e[r][j] = -m.e[r][j];
        for (std::size_t i = 0; i < r; ++i) {
            BigInt q = floor_div(m.e[i][c], m.e[r][c]);
            if (q == 0) continue;
            for (std::size_t j = c; j < m.ncols; ++j) m.e[i][j] -= q * m.e[r][j];
        }
        ++r;
    }
    m.e.resize(r);
    m.nrows = r;
    return m;
}

// Basis for the left kernel {v : v m = 0}, computed from the HNF of [m | I].
// The result is automatically saturated.
inline IntMatrix left_kernel(const IntMatrix& m) {
    IntMatrix aug(m.nrows, m.ncols + m.nrows);
    for (std::size_t i = 0; i < m.nrows; ++i) {
        for (std::size_t j = 0; j < m.ncols; ++j) aug.e[i][j] = m.e[i][j];
        aug.e[i][m.ncols + i] = 1;
    }
    IntMatrix h = hnf(std::move(aug));
    std::vector<std::vector<BigInt>> ker;
    for (std::size_t i = 0; i < h.nrows; ++i) {
        bool zero = true;
        for (std::size_t j = 0; j < m.ncols; ++j)
            if (h.e[i][j] != 0) { zero = false; break; }
        if (!zero) continue;
        ker.emplace_back(h.e[i].begin() + static_cast<std::ptrdiff_t>(m.ncols), h.e[i].end());
    }
    return IntMatrix::from_rows(std::move(ker), m.nrows);
}

// Fraction-free Gaussian elimination; divisions are exact.
inline BigInt det_bareiss(IntMatrix a) {
    require(a.nrows == a.ncols, ErrorKind::DomainError, "determinant of non-square matrix");
    std::size_t n = a.nrows;
    if (n == 0) return BigInt(1);
    BigInt prev(1);
    int sign = 1;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        std::size_t piv = n;
        for (std::size_t i = k; i < n; ++i)
            if (a.e[i][k] != 0) { piv = i; break; }
        if (piv == n) return BigInt(0);
        if (piv != k) {
            std::swap(a.e[piv], a.e[k]);
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i) {
            for (std::size_t j = k + 1; j < n; ++j)
                a.e[i][j] = exact_div(a.e[k][k] * a.e[i][j] - a.e[i][k] * a.e[k][j], prev);
            a.e[i][k] = 0;
        }
        prev = a.e[k][k];
    }
    return sign < 0 ? BigInt(-a.e[n - 1][n - 1]) : a.e[n - 1][n - 1];
}

struct SmithResult {
    std::vector<BigInt> divisors;  // positive, divisors[i] | divisors[i+1]
    IntMatrix V;                   // ncols x ncols unimodular column transform
    std::size_t rank = 0;
};

// Smith normal form of the row lattice of a. Only the right transform V is
// tracked: row span of (a V) equals row span of diag(divisors) padded with
// zeros, so quotient coordinates of x are (x V) reduced mod the divisors.
inline SmithResult smith_normal_form(IntMatrix a) {
    SmithResult res;
    res.V = IntMatrix::identity(a.ncols);
    std::size_t limit = std::min(a.nrows, a.ncols);
    std::size_t t = 0;
    auto swap_cols = [&](std::size_t j1, std::size_t j2) {
        for (std::size_t i = 0; i < a.nrows; ++i) std::swap(a.e[i][j1], a.e[i][j2]);
        for (std::size_t i = 0; i < res.V.nrows; ++i) std::swap(res.V.e[i][j1], res.V.e[i][j2]);
    };
    auto sub_col = [&](std::size_t j, std::size_t from, const BigInt& q) {
        for (std::size_t i = 0; i < a.nrows; ++i) a.e[i][j] -= q * a.e[i][from];
        for (std::size_t i = 0; i < res.V.nrows; ++i) res.V.e[i][j] -= q * res.V.e[i][from];
    };
    for (; t < limit; ++t) {
        std::size_t pi = a.nrows, pj = a.ncols;
        for (std::size_t i = t; i < a.nrows; ++i)
            for (std::size_t j = t; j < a.ncols; ++j) {
                if (a.e[i][j] == 0) continue;
                if (pi == a.nrows || big_abs(a.e[i][j]) < big_abs(a.e[pi][pj])) {
                    pi = i;
                    pj = j;
                }
            }
        if (pi == a.nrows) break;
        if (pi != t) std::swap(a.e[pi], a.e[t]);
        if (pj != t) swap_cols(pj, t);
        while (true) {
            bool restart = false;
            for (std::size_t i = t + 1; i < a.nrows; ++i) {
                if (a.e[i][t] == 0) continue;
                BigInt q = round_div(a.e[i][t], a.e[t][t]);
                for (std::size_t j = t; j < a.ncols; ++j) a.e[i][j] -= q * a.e[t][j];
                if (a.e[i][t] != 0) {
                    std::swap(a.e[i], a.e[t]);
                    restart = true;
                    break;
                }
            }
            if (restart) continue;
            for (std::size_t j = t + 1; j < a.ncols; ++j) {
                if (a.e[t][j] == 0) continue;
                BigInt q = round_div(a.e[t][j], a.e[t][t]);
                sub_col(j, t, q);
                if (a.e[t][j] != 0) {
                    swap_cols(j, t);
                    restart = true;
                    break;
                }
            }
            if (restart) continue;
            std::size_t bi = a.nrows, bj = a.ncols;
            for (std::size_t i = t + 1; i < a.nrows && bi == a.nrows; ++i)
                for (std::size_t j = t + 1; j < a.ncols; ++j)
                    if (!divides(a.e[t][t], a.e[i][j])) {
                        bi = i;
                        bj = j;
                        break;
                    }
            if (bi == a.nrows) break;
            (void)bj;
            for (std::size_t j = t; j < a.ncols; ++j) a.e[t][j] += a.e[bi][j];
        }
        if (a.e[t][t] < 0)
            for (std::size_t j = t; j < a.ncols; ++j) a.e[t][j] = -a.e[t][j];
    }
    res.rank = t;
    for (std::size_t i = 0; i < t; ++i) res.divisors.push_back(a.e[i][i]);
    return res;
}

struct LinearSolution {
    std::vector<Rational> coeffs;
    bool integral = false;
};

inline bool rational_is_integer(const Rational& q) {
    return q.get_den() == 1;
}

// Unique rational solution c with c * basis = target; rows of basis must be
// linearly independent. Throws NoSolution if target lies outside the row span.
inline LinearSolution solve_rational(const IntMatrix& basis, const std::vector<BigInt>& target) {
    require(target.size() == basis.ncols, ErrorKind::DomainError, "solve target length mismatch");
    std::size_t k = basis.nrows, r = basis.ncols;
    // Equations indexed by ambient coordinate: sum_i c_i basis[i][j] = target[j].
    std::vector<std::vector<Rational>> m(r, std::vector<Rational>(k + 1));
    for (std::size_t j = 0; j < r; ++j) {
        for (std::size_t i = 0; i < k; ++i) m[j][i] = Rational(basis.e[i][j]);
        m[j][k] = Rational(target[j]);
    }
    std::size_t row = 0;
    std::vector<std::size_t> pivot_of;  // column solved at each pivot row
    for (std::size_t col = 0; col < k && row < r; ++col) {
        std::size_t piv = r;
        for (std::size_t i = row; i < r; ++i)
            if (m[i][col] != 0) { piv = i; break; }
        if (piv == r) continue;
        std::swap(m[piv], m[row]);
        Rational inv = m[row][col];
        for (std::size_t j = col; j <= k; ++j) m[row][j] /= inv;
        for (std::size_t i = 0; i < r; ++i) {
            if (i == row || m[i][col] == 0) continue;
            Rational f = m[i][col];
            for (std::size_t j = col; j <= k; ++j) m[i][j] -= f * m[row][j];
        }
        pivot_of.push_back(col);
        ++row;
    }
    require(pivot_of.size() == k, ErrorKind::DomainError, "basis rows linearly dependent");
    for (std::size_t i = row; i < r; ++i)
        if (m[i][k] != 0) fail(ErrorKind::NoSolution, "target outside rational row span");
    LinearSolution sol;
    sol.coeffs.assign(k, Rational(0));
    for (std::size_t i = 0; i < k; ++i) sol.coeffs[pivot_of[i]] = m[i][k];
    sol.integral = true;
    for (const auto& q : sol.coeffs)
        if (!rational_is_integer(q)) { sol.integral = false; break; }
    return sol;
}

}  // namespace spoke
