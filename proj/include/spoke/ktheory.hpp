#pragma once

#include <spoke/error.hpp>
#include <spoke/group.hpp>
#include <spoke/lattice.hpp>
#include <spoke/matrix.hpp>
#include <spoke/repring.hpp>

#include <cstddef>
#include <numeric>
#include <optional>
#include <vector>

namespace spoke {

// Class in the half-integer graded group pi_{0,k}KU_{C_{p^n}}. For even k = 2m
// the class is payload * beta_m over the first m d-characters; for odd
// k = 2m-1 it is the a^{1/2}-preimage of payload * beta_{m-1}, which exists
// exactly when the payload has augmentation zero.
struct GradedKUClass {
    GroupSpec group;
    long degree;
    RUElement payload;

    GradedKUClass(const GroupSpec& g, long k, RUElement q) : group(g), degree(k), payload(std::move(q)) {
        require(k >= 0, ErrorKind::DomainError, "graded degree must be nonnegative");
        require(payload.group == group, ErrorKind::GroupMismatch, "payload group mismatch");
        if (k % 2 == 1)
            require(augmentation(payload) == 0, ErrorKind::DomainError,
                    "odd-degree payload must have augmentation zero");
    }

    bool operator==(const GradedKUClass& o) const {
        return group == o.group && degree == o.degree && payload == o.payload;
    }
};

// One half-step down. Even 2m -> odd 2m-1 multiplies by (1 - L^{d_m}) so that
// two half-steps compose to the Euler class of L^{d_m}; odd -> even keeps the
// payload (inclusion of representatives).
inline GradedKUClass a_half(const GradedKUClass& x) {
    require(x.degree >= 1, ErrorKind::DomainError, "cannot step below degree zero");
    if (x.degree % 2 == 0) {
        std::size_t m = static_cast<std::size_t>(x.degree) / 2;
        DSequence ds(x.group.p);
        RUElement q =
            ru_mul(x.payload, ru_sub(ru_one(x.group), ru_L_power(x.group, ds.d(m))));
        return GradedKUClass(x.group, x.degree - 1, q);
    }
    return GradedKUClass(x.group, x.degree - 1, x.payload);
}

// psi^ell in degree k: psi^ell on the payload times the Bott multiplier
// B_{floor(k/2)}(ell). Odd degrees act on the even representative one half-step
// down, which is well defined because the a^{1/2}-preimage is unique.
inline GradedKUClass adams_graded(const GradedKUClass& x, long ell) {
    require(ell != 0 && std::gcd(ell, static_cast<long>(x.group.p)) == 1, ErrorKind::DomainError,
            "Adams exponent must be coprime to p");
    std::size_t m = static_cast<std::size_t>(x.degree) / 2;
    RUElement q = ru_mul(adams(x.payload, ell), bott_multiplier(x.group, m, ell));
    return GradedKUClass(x.group, x.degree, q);
}

// Multiplication by the full Euler block down to degree zero.
inline RUElement to_degree_zero(const GradedKUClass& x) {
    return ru_mul(x.payload, euler_block(x.group, 0, static_cast<std::size_t>(x.degree) / 2));
}

// Geometric fixed-point marks of the degree-zero image at levels j = 0..n.
// Irrational character values mean the input was not a fixed class.
inline std::vector<BigInt> marks_of(const GradedKUClass& x) {
    RUElement z = to_degree_zero(x);
    std::vector<BigInt> marks;
    for (unsigned long j = 0; j <= x.group.n; ++j) {
        CyclotomicValue v = char_value(z, j);
        require(cyc_is_rational(v), ErrorKind::TheoremViolation,
                "marks of a fixed class must be rational");
        marks.push_back(v.coeffs[0]);
    }
    return marks;
}

enum class LatticeProvenance { Oracle, ClosedFormComplex, ClosedFormReal };

inline const char* provenance_name(LatticeProvenance p) {
    switch (p) {
        case LatticeProvenance::Oracle: return "oracle";
        case LatticeProvenance::ClosedFormComplex: return "closed_form_complex";
        case LatticeProvenance::ClosedFormReal: return "closed_form_real";
    }
    return "unknown";
}

// Fixed lattice of payload vectors in degree k, stored in RU coefficient
// coordinates as a canonical HNF lattice.
struct FixedLattice {
    GroupSpec group;
    long degree;
    Lattice lattice;
    LatticeProvenance provenance;
    std::optional<bool> stabilized;
};

inline FixedLattice lattice_of_classes(const GroupSpec& g, long degree,
                                       const std::vector<GradedKUClass>& xs,
                                       LatticeProvenance prov) {
    const std::size_t N = g.order();
    std::vector<std::vector<BigInt>> rows;
    for (const auto& x : xs) {
        require(x.group == g && x.degree == degree, ErrorKind::GroupMismatch,
                "classes must share group and degree");
        rows.push_back(x.payload.coeffs);
    }
    return FixedLattice{g, degree, Lattice::from_rows(N, IntMatrix::from_rows(rows, N)), prov,
                        std::nullopt};
}

// Row a of the fixed-point condition psi^ell(x) * B_m(ell) = x, as the matrix
// T - I acting on coefficient row vectors.
inline IntMatrix adams_condition_matrix(const GroupSpec& g, std::size_t m, long ell) {
    const std::size_t N = g.order();
    RUElement B = bott_multiplier(g, m, ell);
    IntMatrix A(N, N);
    for (std::size_t a = 0; a < N; ++a) {
        const std::size_t base = static_cast<std::size_t>(
            floor_mod(BigInt(ell * static_cast<long>(a)), BigInt(N)).get_ui());
        for (std::size_t e = 0; e < N; ++e) A.e[a][(base + e) % N] += B.coeffs[e];
        A.e[a][a] -= 1;
    }
    return A;
}

namespace detail {

// Restricts basis rows R to the sublattice killed by the condition matrix
// rows -> R' with R' spanning {x in span R : x * A = 0}. Saturation is
// preserved because integer kernels are saturated.
inline IntMatrix restrict_to_kernel(const IntMatrix& R, const IntMatrix& A) {
    IntMatrix M = mat_mul(R, A);
    IntMatrix K = left_kernel(M);
    if (K.nrows == 0) return IntMatrix(0, R.ncols);
    return hnf(mat_mul(K, R));
}

inline IntMatrix augmentation_column(std::size_t N) {
    IntMatrix A(N, 1);
    for (std::size_t i = 0; i < N; ++i) A.e[i][0] = 1;
    return A;
}

}  // namespace detail

// Brute-force fixed lattice in degree k: the intersection over ell of the
// integer kernels of psi^ell(x) B_{floor(k/2)}(ell) - x, with the odd-degree
// augmentation-zero condition applied last.
inline FixedLattice oracle_complex_fixed(const GroupSpec& g, long k, const std::vector<long>& ells) {
    require(k >= 1, ErrorKind::DomainError, "fixed lattices start in degree one");
    require(!ells.empty(), ErrorKind::DomainError, "need at least one Adams exponent");
    const std::size_t N = g.order();
    const std::size_t m = static_cast<std::size_t>(k) / 2;
    IntMatrix R = hnf(IntMatrix::identity(N));
    for (long ell : ells) {
        require(ell != 0 && std::gcd(ell, static_cast<long>(g.p)) == 1, ErrorKind::DomainError,
                "Adams exponent must be coprime to p");
        R = detail::restrict_to_kernel(R, adams_condition_matrix(g, m, ell));
    }
    if (k % 2 == 1) R = detail::restrict_to_kernel(R, detail::augmentation_column(N));
    return FixedLattice{g, k, Lattice::from_rows(N, R), LatticeProvenance::Oracle, std::nullopt};
}

inline FixedLattice oracle_complex_fixed(const GroupSpec& g, long k) {
    return oracle_complex_fixed(g, k, default_adams_exponents(g.p));
}

// Sweep-shared oracle. The kernels K(m) for consecutive multiplier lengths are
// linked by x -> x (1 - L^{d_{m+1}}), which maps K(m+1) into K(m): if
// psi(x) B_{m+1} = x then psi(x (1-L^{d})) B_m = psi(x) B_{m+1} (1-L^{d}) / mult = x (1-L^{d}).
// So K(m+1) lies inside the small candidate space {x : x (1-L^{d_{m+1}}) in span K(m)},
// whose rank is at most rank K(m) + 1 since 1 - L^{d} annihilates only the
// regular-character line. Each step therefore needs one small-entry kernel and
// one exact cut of a handful of candidate rows.
class OracleSweep {
public:
    OracleSweep(const GroupSpec& g, std::vector<long> ells)
        : group_(g), ells_(std::move(ells)), ds_(g.p) {
        require(!ells_.empty(), ErrorKind::DomainError, "need at least one Adams exponent");
        for (long ell : ells_)
            require(ell != 0 && std::gcd(ell, static_cast<long>(g.p)) == 1, ErrorKind::DomainError,
                    "Adams exponent must be coprime to p");
        kernels_.push_back(base_kernel());
        for (long ell : ells_) {
            BottMultiplierCache cache(group_, ell);
            bott_.push_back(std::move(cache));
        }
    }

    explicit OracleSweep(const GroupSpec& g) : OracleSweep(g, default_adams_exponents(g.p)) {}

    // Canonical HNF basis of K(m) = {x : psi^ell(x) B_m(ell) = x for all ell}.
    const IntMatrix& kernel(std::size_t m) {
        while (kernels_.size() <= m) step();
        return kernels_[m];
    }

    FixedLattice fixed_lattice(long k) {
        require(k >= 1, ErrorKind::DomainError, "fixed lattices start in degree one");
        const std::size_t N = group_.order();
        IntMatrix R = kernel(static_cast<std::size_t>(k) / 2);
        if (k % 2 == 1) R = detail::restrict_to_kernel(R, detail::augmentation_column(N));
        return FixedLattice{group_, k, Lattice::from_rows(N, R), LatticeProvenance::Oracle,
                            std::nullopt};
    }

private:
    GroupSpec group_;
    std::vector<long> ells_;
    DSequence ds_;
    std::vector<BottMultiplierCache> bott_;
    std::vector<IntMatrix> kernels_;

    // K(0): the subring fixed by the permutations psi^ell, spanned by the
    // orbit sums of exponent multiplication.
    IntMatrix base_kernel() {
        const std::size_t N = group_.order();
        std::vector<std::size_t> orbit(N, N);
        std::vector<std::vector<BigInt>> rows;
        for (std::size_t a = 0; a < N; ++a) {
            if (orbit[a] != N) continue;
            std::vector<std::size_t> stack{a};
            orbit[a] = a;
            std::vector<BigInt> row(N, BigInt(0));
            while (!stack.empty()) {
                std::size_t b = stack.back();
                stack.pop_back();
                row[b] = 1;
                for (long ell : ells_) {
                    std::size_t c = static_cast<std::size_t>(
                        floor_mod(BigInt(ell * static_cast<long>(b)), BigInt(N)).get_ui());
                    if (orbit[c] == N) {
                        orbit[c] = a;
                        stack.push_back(c);
                    }
                }
            }
            rows.push_back(std::move(row));
        }
        return hnf(IntMatrix::from_rows(rows, N));
    }

    RUElement row_to_ru(const std::vector<BigInt>& row) const {
        return RUElement(group_, row);
    }

    void step() {
        const std::size_t N = group_.order();
        const std::size_t m = kernels_.size();  // building K(m) from K(m-1)
        const IntMatrix& prev = kernels_[m - 1];
        const long d = ds_.d(m);

        // Candidate rows: x with x (1 - L^{d_m}) in span(prev).
        std::vector<std::vector<BigInt>> stacked;
        for (std::size_t a = 0; a < N; ++a) {
            std::vector<BigInt> row(N, BigInt(0));
            row[a] += 1;
            row[(a + static_cast<std::size_t>(floor_mod(BigInt(d), BigInt(N)).get_ui())) % N] -= 1;
            stacked.push_back(std::move(row));
        }
        for (const auto& r : prev.e) stacked.push_back(r);
        IntMatrix kernel_rows = left_kernel(IntMatrix::from_rows(stacked, N));
        std::vector<std::vector<BigInt>> candidates;
        for (const auto& r : kernel_rows.e)
            candidates.emplace_back(r.begin(), r.begin() + static_cast<long>(N));
        IntMatrix C = hnf(IntMatrix::from_rows(candidates, N));

        // Exact cut: impose psi^ell(x) B_m(ell) = x on the candidate span.
        for (std::size_t i = 0; i < ells_.size(); ++i) {
            if (C.nrows == 0) break;
            const RUElement& B = bott_[i].at(m);
            std::vector<std::vector<BigInt>> residual;
            for (const auto& row : C.e) {
                RUElement x = row_to_ru(row);
                RUElement y = ru_sub(ru_mul(adams(x, ells_[i]), B), x);
                residual.push_back(y.coeffs);
            }
            IntMatrix K = left_kernel(IntMatrix::from_rows(residual, N));
            C = (K.nrows == 0) ? IntMatrix(0, N) : hnf(mat_mul(K, C));
        }
        kernels_.push_back(std::move(C));
    }
};

// Checks that widening the Adams exponent set to every residue coprime to p in
// [2, 2 p^n + 1] does not shrink the oracle lattice.
inline bool oracle_stabilization_check(const GroupSpec& g, long k, const std::vector<long>& ells) {
    FixedLattice base = oracle_complex_fixed(g, k, ells);
    std::vector<long> wide = ells;
    for (long ell = 2; ell <= 2 * static_cast<long>(g.order()) + 1; ++ell)
        if (std::gcd(ell, static_cast<long>(g.p)) == 1) wide.push_back(ell);
    FixedLattice widened = oracle_complex_fixed(g, k, wide);
    return base.lattice == widened.lattice;
}

// The n closed-form generators of the complex fixed lattice in degree k >= 1:
// y_s = t_{n,s} times the Euler block from floor(k/2) up to q_s/2, where q_s is
// the smallest multiple of 2 p^{s-1}(p-1) strictly larger than k.
inline std::vector<GradedKUClass> closed_form_complex_basis(const GroupSpec& g, long k) {
    require(k >= 1, ErrorKind::DomainError, "closed form starts in degree one");
    require(g.n >= 1, ErrorKind::DomainError, "closed form needs a nontrivial group");
    std::vector<GradedKUClass> basis;
    for (unsigned long s = 1; s <= g.n; ++s) {
        const long twoP = 2 * static_cast<long>(g.totient_level(s));
        const long q = twoP * ((k + twoP) / twoP);  // smallest multiple > k
        RUElement payload = ru_mul(t_as_ru(g, s),
                                   euler_block(g, static_cast<std::size_t>(k) / 2,
                                               static_cast<std::size_t>(q) / 2));
        basis.emplace_back(g, k, payload);
    }
    return basis;
}

namespace detail {

struct RealGeneratorSpec {
    BigInt coeff;
    unsigned long s;
    std::size_t b;
};

// Generator table for the real fixed lattices at p = 2, by n and the residue
// class of k = 8k' - j with 1 <= j <= 8.
inline std::vector<RealGeneratorSpec> real_generator_table(unsigned long n, long kp, long j) {
    const long fourk = 4 * kp;
    std::vector<RealGeneratorSpec> specs;
    auto add = [&](long c, unsigned long s, long b) {
        specs.push_back({BigInt(c), s, static_cast<std::size_t>(b)});
    };
    if (n == 1) {
        if (j <= 4) add(1, 1, fourk);
        else if (j == 5) add(1, 1, fourk - 1);
        else if (j == 6) add(1, 1, fourk - 2);
        else add(1, 1, fourk - 3);
        return specs;
    }
    if (n == 2) {
        if (j <= 4) {
            add(1, 1, fourk);
            add(1, 2, fourk);
        } else if (j == 5) {
            add(1, 1, fourk - 2);
            add(2, 2, fourk - 2);
        } else if (j == 6) {
            add(1, 1, fourk - 2);
            add(1, 2, fourk - 2);
        } else {
            add(1, 1, fourk - 3);
            add(1, 2, fourk - 2);
        }
        return specs;
    }
    // n >= 3: b_i = smallest multiple of 2^{i-1} at least 4k'.
    auto bi = [&](unsigned long i) {
        long step = static_cast<long>(checked_pow_ul(2, i - 1));
        return ((fourk + step - 1) / step) * step;
    };
    if (j <= 4) {
        for (unsigned long i = 1; i <= n; ++i) add(1, i, bi(i));
    } else if (j <= 6) {
        add(1, 1, fourk - 2);
        add(1, 2, fourk - 2);
        for (unsigned long i = 3; i <= n; ++i) add(1, i, bi(i));
    } else {
        add(1, 1, fourk - 3);
        add(1, 2, fourk - 2);
        for (unsigned long i = 3; i <= n; ++i) add(1, i, bi(i));
    }
    return specs;
}

}  // namespace detail

// Closed-form generators of the real fixed lattice: the complex basis for odd
// p, and the 2-primary case table for p = 2.
inline std::vector<GradedKUClass> closed_form_real_basis(const GroupSpec& g, long k) {
    if (g.p != 2) return closed_form_complex_basis(g, k);
    require(k >= 1, ErrorKind::DomainError, "closed form starts in degree one");
    require(g.n >= 1, ErrorKind::DomainError, "closed form needs a nontrivial group");
    const long r = k % 8;
    const long j = (r == 0) ? 8 : 8 - r;
    const long kp = (k + j) / 8;
    std::vector<GradedKUClass> basis;
    for (const auto& spec : detail::real_generator_table(g.n, kp, j)) {
        RUElement payload =
            ru_scaled(ru_mul(t_as_ru(g, spec.s),
                             euler_block(g, static_cast<std::size_t>(k) / 2, spec.b)),
                      spec.coeff);
        basis.emplace_back(g, k, payload);
    }
    return basis;
}

// Structure of M_k / a^{1/2} M_{k+1} over the real closed-form bases: the
// nontrivial Smith divisors plus, when the quotient is cyclic, the normalized
// signed residue of each degree-k generator. Normalization rescales by the
// inverse of the largest-index generator mapping to a unit.
struct QuotientStructure {
    GroupSpec group;
    long degree;
    std::vector<BigInt> divisors;
    std::vector<BigInt> generator_images;
};

inline QuotientStructure quotient_structure(const GroupSpec& g, long k) {
    std::vector<GradedKUClass> bk = closed_form_real_basis(g, k);
    std::vector<GradedKUClass> bk1 = closed_form_real_basis(g, k + 1);
    const std::size_t N = g.order();
    std::vector<std::vector<BigInt>> basis_rows;
    for (const auto& y : bk) basis_rows.push_back(y.payload.coeffs);
    IntMatrix basis = IntMatrix::from_rows(basis_rows, N);

    std::vector<std::vector<BigInt>> coord_rows;
    for (const auto& y : bk1) {
        GradedKUClass img = a_half(y);
        LinearSolution sol = solve_rational(basis, img.payload.coeffs);
        require(sol.integral, ErrorKind::TheoremViolation,
                "half-step image must be integral over the degree-k basis");
        std::vector<BigInt> row;
        for (const auto& c : sol.coeffs) row.push_back(BigInt(c.get_num()));
        coord_rows.push_back(std::move(row));
    }
    IntMatrix coords = IntMatrix::from_rows(coord_rows, bk.size());
    SmithResult snf = smith_normal_form(coords);
    require(snf.rank == bk.size(), ErrorKind::TheoremViolation,
            "half-step image must have full rank");

    QuotientStructure q{g, k, {}, {}};
    std::size_t nontrivial = bk.size();
    for (std::size_t i = 0; i < snf.divisors.size(); ++i)
        if (snf.divisors[i] != 1) {
            q.divisors.push_back(snf.divisors[i]);
            nontrivial = i;
        }
    if (q.divisors.empty()) return q;
    if (q.divisors.size() > 1) return q;

    const BigInt d = q.divisors[0];
    std::vector<BigInt> images;
    for (std::size_t s = 0; s < bk.size(); ++s)
        images.push_back(floor_mod(snf.V.e[s][nontrivial], d));
    std::size_t pivot = bk.size();
    for (std::size_t s = bk.size(); s-- > 0;)
        if (big_gcd(images[s], d) == 1) {
            pivot = s;
            break;
        }
    if (pivot != bk.size()) {
        BigInt inv;
        mpz_invert(inv.get_mpz_t(), images[pivot].get_mpz_t(), d.get_mpz_t());
        for (auto& v : images) v = floor_mod(v * inv, d);
    }
    for (auto& v : images)
        if (2 * v > d) v -= d;
    q.generator_images = std::move(images);
    return q;
}

// One isomorphism step of the half-step chain: the a^{1/2} image of the
// complex basis in degree j spans exactly the complex lattice in degree j - 1,
// with degree zero read as the span of the z-characters.
inline bool iso_step_check(const GroupSpec& g, long j) {
    require(j >= 1, ErrorKind::DomainError, "chain steps start in degree one");
    std::vector<GradedKUClass> top = closed_form_complex_basis(g, j);
    const std::size_t N = g.order();
    std::vector<std::vector<BigInt>> rows;
    for (const auto& y : top) rows.push_back(a_half(y).payload.coeffs);
    Lattice image = Lattice::from_rows(N, IntMatrix::from_rows(rows, N));
    if (j - 1 >= 1) {
        FixedLattice target =
            lattice_of_classes(g, j - 1, closed_form_complex_basis(g, j - 1),
                               LatticeProvenance::ClosedFormComplex);
        return image == target.lattice;
    }
    std::vector<std::vector<BigInt>> zrows;
    for (unsigned long i = 1; i <= g.n; ++i) zrows.push_back(z_as_ru(g, i).coeffs);
    return image == Lattice::from_rows(N, IntMatrix::from_rows(zrows, N));
}

}  // namespace spoke
