#pragma once

#include <cstddef>
#include <optional>
#include <utility>
#include <vector>

#include "spoke/bigint.hpp"
#include "spoke/error.hpp"
#include "spoke/matrix.hpp"

namespace spoke {

// Sublattice of Z^ambient_rank. Basis rows are kept in canonical HNF with
// zero rows removed, so equality of lattices is equality of representations.
class Lattice {
public:
    Lattice() = default;

    static Lattice from_rows(std::size_t ambient_rank, IntMatrix rows) {
        require(rows.nrows == 0 || rows.ncols == ambient_rank, ErrorKind::DomainError,
                "lattice generator length mismatch");
        rows.ncols = ambient_rank;
        Lattice l;
        l.ambient_ = ambient_rank;
        l.basis_ = hnf(std::move(rows));
        return l;
    }

    static Lattice zero(std::size_t ambient_rank) {
        return from_rows(ambient_rank, IntMatrix(0, ambient_rank));
    }

    static Lattice full(std::size_t ambient_rank) {
        return from_rows(ambient_rank, IntMatrix::identity(ambient_rank));
    }

    std::size_t ambient_rank() const { return ambient_; }
    std::size_t rank() const { return basis_.nrows; }
    const IntMatrix& basis() const { return basis_; }

    bool operator==(const Lattice& o) const {
        return ambient_ == o.ambient_ && basis_ == o.basis_;
    }
    bool operator!=(const Lattice& o) const { return !(*this == o); }

    // Echelon reduction against the HNF basis; exact divisions only.
    bool contains(std::vector<BigInt> v) const {
        require(v.size() == ambient_, ErrorKind::DomainError, "membership vector length mismatch");
        for (std::size_t i = 0; i < basis_.nrows; ++i) {
            std::size_t c = pivot_col(i);
            if (v[c] == 0) continue;
            if (!divides(basis_.e[i][c], v[c])) return false;
            BigInt q = exact_div(v[c], basis_.e[i][c]);
            for (std::size_t j = c; j < ambient_; ++j) v[j] -= q * basis_.e[i][j];
        }
        for (const auto& x : v)
            if (x != 0) return false;
        return true;
    }

    bool contains_lattice(const Lattice& sub) const {
        require(sub.ambient_ == ambient_, ErrorKind::DomainError, "ambient rank mismatch");
        for (std::size_t i = 0; i < sub.basis_.nrows; ++i)
            if (!contains(sub.basis_.e[i])) return false;
        return true;
    }

private:
    std::size_t pivot_col(std::size_t row) const {
        for (std::size_t j = 0; j < ambient_; ++j)
            if (basis_.e[row][j] != 0) return j;
        fail(ErrorKind::DomainError, "zero row in lattice basis");
    }

    std::size_t ambient_ = 0;
    IntMatrix basis_;
};

inline Lattice kernel_lattice(const IntMatrix& m) {
    return Lattice::from_rows(m.nrows, left_kernel(m));
}

struct LatticeIndex {
    bool finite = false;
    BigInt index;  // valid only when finite

    static LatticeIndex of(BigInt v) { return {true, std::move(v)}; }
    static LatticeIndex infinite() { return {false, BigInt(0)}; }

    bool operator==(const LatticeIndex& o) const {
        return finite == o.finite && (!finite || index == o.index);
    }
};

// Index [sup : sub]; requires sub to be contained in sup.
inline LatticeIndex lattice_index(const Lattice& sub, const Lattice& sup) {
    require(sub.ambient_rank() == sup.ambient_rank(), ErrorKind::DomainError,
            "ambient rank mismatch");
    require(sup.contains_lattice(sub), ErrorKind::NotASublattice,
            "first lattice is not contained in the second");
    if (sub.rank() < sup.rank()) return LatticeIndex::infinite();
    // Coefficient matrix of sub's basis in sup's basis; the index is |det|.
    std::size_t k = sup.rank();
    IntMatrix c(k, k);
    for (std::size_t i = 0; i < k; ++i) {
        LinearSolution sol = solve_rational(sup.basis(), sub.basis().e[i]);
        require(sol.integral, ErrorKind::NotASublattice, "non-integral coordinates");
        for (std::size_t j = 0; j < k; ++j) c.e[i][j] = BigInt(sol.coeffs[j].get_num());
    }
    return LatticeIndex::of(big_abs(det_bareiss(std::move(c))));
}

}  // namespace spoke
