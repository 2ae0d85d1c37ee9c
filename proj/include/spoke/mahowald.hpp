#pragma once

#include <spoke/burnside.hpp>
#include <spoke/error.hpp>
#include <spoke/group.hpp>
#include <spoke/ktheory.hpp>
#include <spoke/repring.hpp>

#include <algorithm>
#include <cstddef>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

namespace spoke {

// Filtration function table value f_{s,k}^{p,n}(i): zero above the diagonal
// (i > s), the general p-power formula elsewhere, with the 2-primary
// exceptional cells at (s=1, n=1), (s=1, n>=2) and (s=2, n=2).
inline BigInt f_value(unsigned long p, unsigned long n, unsigned long s, long k, unsigned long i) {
    require(1 <= s && s <= n, ErrorKind::LevelOutOfRange, "f-table column out of range");
    require(1 <= i && i <= n, ErrorKind::LevelOutOfRange, "f-table level out of range");
    require(k >= 1, ErrorKind::DomainError, "f-table degree starts at one");
    if (i > s) return BigInt(0);
    if (p == 2) {
        const long l = k / 8;
        const long r = k % 8;
        if (s == 1 && n == 1) {
            long e = (r <= 1) ? 1 : (r == 2) ? 2 : (r == 3) ? 3 : 4;
            return big_pow(2, static_cast<unsigned long>(4 * l + e));
        }
        if (s == 1) {
            long e = (r <= 1) ? 0 : (r <= 3) ? 1 : 3;
            return big_pow(2, n + static_cast<unsigned long>(4 * l + e));
        }
        if (s == 2 && n == 2) {
            if (i == 1) {
                long e = (r <= 2) ? 2 : (r == 3) ? 3 : 4;
                return big_pow(2, static_cast<unsigned long>(4 * l + e));
            }
            long e = (r <= 2) ? 1 : 2;
            return big_pow(2, static_cast<unsigned long>(2 * l + e));
        }
    }
    const long twoP = 2 * static_cast<long>(checked_pow_ul(p, s - 1)) * static_cast<long>(p - 1);
    const long q = (k + twoP) / twoP;  // ceil((k+1)/twoP)
    const unsigned long e =
        n - s + checked_pow_ul(p, s - i) * static_cast<unsigned long>(q);
    return big_pow(BigInt(p), e);
}

// Landweber's 2-primary degree function, implemented from its own 8-periodic
// case table so the f-table identity f_{1,k}^{2,1}(1) = g(k) is a real check.
inline BigInt landweber_g(long k) {
    require(k >= 1, ErrorKind::DomainError, "g starts at one");
    const long l = k / 8;
    const long r = k % 8;
    const long e = (r <= 1) ? 1 : (r == 2) ? 2 : (r == 3) ? 3 : 4;
    return big_pow(2, static_cast<unsigned long>(4 * l + e));
}

// Integer coefficients (c_1,...,c_n) with marks(X) = sum_s c_s f_{s,k} at
// levels 1..n, found by back-substitution down the upper-triangular table;
// absence of an integral solution means X is not in Gamma_k.
inline std::optional<std::vector<BigInt>> gamma_membership(const BurnsideElement& x, long k) {
    const unsigned long p = x.group.p;
    const unsigned long n = x.group.n + 1;
    MarksVector marks = to_marks(x);
    std::vector<BigInt> c(n, BigInt(0));
    for (unsigned long s = n; s >= 1; --s) {
        BigInt acc = marks[s - 1];
        for (unsigned long u = s + 1; u <= n; ++u) acc -= c[u - 1] * f_value(p, n, u, k, s);
        BigInt diag = f_value(p, n, s, k, s);
        if (!divides(diag, acc)) return std::nullopt;
        c[s - 1] = exact_div(acc, diag);
    }
    return c;
}

// Largest k with X in Gamma_k; zero when p^n does not divide |X|. Once every
// diagonal f_{s,k}(s) exceeds max |marks(X)| no nonzero coefficient vector can
// match a nonzero mark, and the diagonals are nondecreasing in k, so the scan
// below is a hard bound.
inline long mahowald_degree(const BurnsideElement& x) {
    const unsigned long p = x.group.p;
    const unsigned long n = x.group.n + 1;
    MarksVector marks = to_marks(x);
    bool zero = true;
    BigInt cap(0);
    for (const auto& m : marks) {
        if (m != 0) zero = false;
        cap = std::max(cap, big_abs(m));
    }
    require(!zero, ErrorKind::ZeroElement, "zero element has unbounded degree");
    if (!divides(big_pow(BigInt(p), n), marks[0])) return 0;
    long best = 0;
    for (long k = 1;; ++k) {
        BigInt mind = f_value(p, n, 1, k, 1);
        for (unsigned long s = 2; s <= n; ++s) mind = std::min(mind, f_value(p, n, s, k, s));
        if (mind > cap) break;
        if (gamma_membership(x, k)) best = k;
    }
    require(best >= 1, ErrorKind::TheoremViolation,
            "element of Gamma_1 admits no filtration degree");
    return best;
}

// Symbolic image-of-J element. The coefficient is the canonical residue in
// (-modulus/2, modulus/2]; raw keeps the unreduced case value.
struct JImageElement {
    long stem = 0;
    std::string family;
    long l = 0;
    long c = 0;
    BigInt raw;
    BigInt coefficient;
    BigInt modulus;
    std::string indeterminacy = "0";
    std::string display;
};

struct MahowaldResult {
    BurnsideElement input;
    long degree = 0;
    std::vector<BigInt> coefficients;
    std::optional<JImageElement> j;
    std::optional<BigInt> residue;  // degree-0 case: |X| mod p^n
    std::string display;
};

namespace detail {

inline BigInt canonical_residue(const BigInt& raw, const BigInt& modulus) {
    BigInt r = floor_mod(raw, modulus);
    if (2 * r > modulus) r -= modulus;
    return r;
}

inline std::string power_of_P(long e) {
    if (e == 0) return "";
    if (e == 1) return "P";
    return "P^" + std::to_string(e);
}

inline std::string coefficient_prefix(const BigInt& c) {
    if (c == 1) return "";
    if (c == -1) return "-";
    return c.get_str();
}

inline std::string j_generator_name(unsigned long p, long stem) {
    if (p == 2) {
        if (stem == 3) return "ν";
        if (stem == 7) return "σ";
        return "j_" + std::to_string(stem);
    }
    return "j_" + std::to_string(stem) + "^(" + std::to_string(p) + ")";
}

inline JImageElement j_part_odd(unsigned long p, unsigned long n, long k,
                                const std::vector<BigInt>& c) {
    const long period = 2 * static_cast<long>(p - 1);
    require((k + 1) % period == 0, ErrorKind::TheoremViolation,
            "odd-primary degree must be -1 mod 2(p-1)");
    const BigInt m = BigInt((k + 1) / period);
    const long l = p_adic_valuation(static_cast<long>(p), m) + 1;
    JImageElement j;
    j.stem = k;
    j.family = "j_generator";
    j.l = l;
    j.c = static_cast<long>(
        exact_div(m, big_pow(BigInt(p), static_cast<unsigned long>(l - 1))).get_si());
    const long t = std::min<long>(n, l);
    BigInt sum(0);
    for (long i = 1; i <= t; ++i)
        sum += big_pow(BigInt(p), static_cast<unsigned long>(t - i)) * c[i - 1];
    j.raw = sum * big_pow(BigInt(p), static_cast<unsigned long>(l - t));
    j.modulus = big_pow(BigInt(p), static_cast<unsigned long>(l));
    j.coefficient = canonical_residue(j.raw, j.modulus);
    j.display = coefficient_prefix(j.coefficient) + j_generator_name(p, k);
    return j;
}

inline JImageElement j_part_two(unsigned long n, long k, const std::vector<BigInt>& c) {
    JImageElement j;
    j.stem = k;
    j.modulus = 2;
    j.raw = 1;
    j.coefficient = 1;
    const long r = k % 8;
    const long l8 = k / 8;
    if (r == 1) {
        if (k == 1) {
            j.family = "eta";
            j.display = "η";
        } else {
            j.family = "P_eta";
            j.l = l8;
            j.display = power_of_P(l8) + "η";
            j.indeterminacy = "Z/2{" + power_of_P(l8 - 1) + "ηε}";
        }
        return j;
    }
    if (r == 2) {
        require(n <= 2, ErrorKind::TheoremViolation,
                "degree 2 mod 8 can only occur for n <= 2");
        if (k == 2) {
            j.family = "eta_squared";
            j.display = "η²";
        } else {
            j.family = "P_eta_squared";
            j.l = l8;
            j.display = power_of_P(l8) + "η²";
        }
        return j;
    }
    if (r == 3) {
        j.family = "j_generator";
        j.l = 2;
        j.c = 2 * l8 + 1;
        j.modulus = 8;
        if (n == 1) j.raw = 4;
        else if (n == 2) j.raw = -2 * (c[0] - c[1]);
        else j.raw = -(2 * c[0] - c[1]);
        j.coefficient = canonical_residue(j.raw, j.modulus);
        j.display = coefficient_prefix(j.coefficient) + j_generator_name(2, k);
        return j;
    }
    require(r == 7, ErrorKind::TheoremViolation, "2-primary degree must be 1,2,3,7 mod 8");
    const long l = p_adic_valuation(2, BigInt(k + 1));
    j.family = "j_generator";
    j.l = l;
    j.c = static_cast<long>((k + 1) >> l);
    const long t = std::min<long>(n, l);
    BigInt sum(0);
    for (long i = 1; i <= t; ++i)
        sum += big_pow(2, static_cast<unsigned long>(t - i)) * c[i - 1];
    j.raw = sum * big_pow(2, static_cast<unsigned long>(l + 1 - t));
    j.modulus = big_pow(2, static_cast<unsigned long>(l + 1));
    j.coefficient = canonical_residue(j.raw, j.modulus);
    j.display = coefficient_prefix(j.coefficient) + j_generator_name(2, k);
    return j;
}

}  // namespace detail

// Degree, coefficients, and the symbolic image-of-J value of the equivariant
// Mahowald invariant of X, per the theorem's case analysis. Elements whose
// degree is not divisible by p^n keep degree zero and report |X| mod p^n.
inline MahowaldResult mahowald_invariant(const BurnsideElement& x) {
    const unsigned long p = x.group.p;
    const unsigned long n = x.group.n + 1;
    MahowaldResult res{x, 0, {}, std::nullopt, std::nullopt, ""};
    long k = mahowald_degree(x);
    if (k == 0) {
        BigInt r = detail::canonical_residue(burnside_degree(x), big_pow(BigInt(p), n));
        res.residue = r;
        res.display = r.get_str();
        return res;
    }
    res.degree = k;
    auto c = gamma_membership(x, k);
    require(c.has_value(), ErrorKind::TheoremViolation, "degree witness lost");
    res.coefficients = *c;
    res.j = (p == 2) ? detail::j_part_two(n, k, *c) : detail::j_part_odd(p, n, k, *c);
    res.display = res.j->display;
    return res;
}

// The n-element basis of Gamma_k: the Burnside elements at level n-1 whose
// marks are the f-table columns. Integrality through from_marks is part of the
// theorem, so failures surface as NotInBurnsideImage.
inline std::vector<BurnsideElement> gamma_basis(unsigned long p, unsigned long n, long k) {
    require(n >= 1, ErrorKind::DomainError, "need a nontrivial ambient group");
    GroupSpec base(p, n - 1);
    std::vector<BurnsideElement> out;
    for (unsigned long s = 1; s <= n; ++s) {
        MarksVector v(n);
        for (unsigned long i = 1; i <= n; ++i) v[i - 1] = f_value(p, n, s, k, i);
        out.push_back(from_marks(base, v));
    }
    return out;
}

// Even-degree cross-check: for k = 2k' the s-th basis element is the transfer
// of a norm, X_{s,2k'} = tr_{s-1}^{n-1}(N_e(p^{1+floor(k'/(p^{s-1}(p-1)))})),
// except at the 2-primary s = 1 cell.
inline bool gamma_basis_transfer_check(unsigned long p, unsigned long n, long kprime) {
    require(kprime >= 1, ErrorKind::DomainError, "even-degree index starts at one");
    std::vector<BurnsideElement> basis = gamma_basis(p, n, 2 * kprime);
    for (unsigned long s = 1; s <= n; ++s) {
        if (p == 2 && s == 1) continue;
        const long P = static_cast<long>(checked_pow_ul(p, s - 1)) * static_cast<long>(p - 1);
        BigInt q = big_pow(BigInt(p), 1 + static_cast<unsigned long>(kprime / P));
        BurnsideElement nx = norm_from_trivial(q, GroupSpec(p, s - 1));
        if (transfer(nx, n - 1) != basis[s - 1]) return false;
    }
    return true;
}

// Image of the level-i fixed-point degree map in even degree 2k': the smallest
// f_{s,2k'}(i) over s >= i, which is also their gcd since all are p-powers.
inline BigInt degree_image(unsigned long p, unsigned long n, long kprime, unsigned long i) {
    require(1 <= i && i <= n, ErrorKind::LevelOutOfRange, "degree-image level out of range");
    require(kprime >= 1, ErrorKind::DomainError, "even-degree index starts at one");
    BigInt best = f_value(p, n, i, 2 * kprime, i);
    for (unsigned long s = i + 1; s <= n; ++s)
        best = std::min(best, f_value(p, n, s, 2 * kprime, i));
    return best;
}

// Columnwise agreement of the closed-form real basis marks with the f-table in
// degree k (levels 1..n; level 0 must vanish).
inline bool f_marks_consistency(const GroupSpec& g, long k) {
    std::vector<GradedKUClass> basis = closed_form_real_basis(g, k);
    for (unsigned long s = 1; s <= g.n; ++s) {
        std::vector<BigInt> marks = marks_of(basis[s - 1]);
        if (marks[0] != 0) return false;
        for (unsigned long i = 1; i <= g.n; ++i)
            if (marks[i] != f_value(g.p, g.n, s, k, i)) return false;
    }
    return true;
}

inline bool f_even_consistency(unsigned long p, unsigned long n, long kprime) {
    require(kprime >= 1, ErrorKind::DomainError, "even-degree index starts at one");
    return f_marks_consistency(GroupSpec(p, n), 2 * kprime);
}

// --- reduced-ring presentation checker ---

// Formal product a_L^s * (payload * beta_w). Multiplication keeps both the
// Bott block length w and the a_L exponent formal; only a full side is
// materialized, top factor first, so that each a_L consumes the Euler factor
// of the current top d-character.
struct FormalClass {
    RUElement payload;
    std::size_t w = 0;
    std::size_t s = 0;
};

struct PresentationReport {
    unsigned long relations_checked = 0;
    unsigned long relations_skipped = 0;
    std::vector<std::string> failures;
    bool ok() const { return failures.empty(); }
};

namespace detail {

inline FormalClass formal_y(const GroupSpec& g, unsigned long i, long c) {
    return FormalClass{t_as_ru(g, i), g.totient_level(i) * static_cast<std::size_t>(c), 1};
}

inline FormalClass formal_a(const GroupSpec& g) { return FormalClass{ru_one(g), 0, 1}; }

inline FormalClass formal_mul(const FormalClass& x, const FormalClass& y) {
    return FormalClass{ru_mul(x.payload, y.payload), x.w + y.w, x.s + y.s};
}

inline FormalClass formal_scale(const FormalClass& x, const BigInt& c) {
    return FormalClass{ru_scaled(x.payload, c), x.w, x.s};
}

inline FormalClass materialize(FormalClass f) {
    DSequence ds(f.payload.group.p);
    while (f.s > 0 && f.w > 0) {
        f.payload = ru_mul(f.payload,
                           ru_sub(ru_one(f.payload.group), ru_L_power(f.payload.group, ds.d(f.w))));
        --f.w;
        --f.s;
    }
    return f;
}

// Materializes each summand, checks they land in a common formal degree, and
// sums the payloads. Remaining a_L exponent is returned for the mod-rho rule.
inline std::optional<FormalClass> materialize_sum(const std::vector<FormalClass>& terms) {
    std::optional<FormalClass> acc;
    for (const auto& t : terms) {
        FormalClass m = materialize(t);
        if (!acc) {
            acc = m;
            continue;
        }
        if (m.w != acc->w || m.s != acc->s) return std::nullopt;
        acc->payload = ru_add(acc->payload, m.payload);
    }
    return acc;
}

inline bool is_constant_vector(const RUElement& x) {
    for (const auto& v : x.coeffs)
        if (v != x.coeffs[0]) return false;
    return true;
}

// Sides agree when they materialize to the same formal degree and the payload
// difference vanishes, or, if unconsumed a_L powers remain, when it lies in
// the regular-character line that those powers annihilate.
inline bool sides_agree(const std::vector<FormalClass>& lhs, const std::vector<FormalClass>& rhs,
                        std::string& why) {
    std::optional<FormalClass> L = materialize_sum(lhs);
    std::optional<FormalClass> R = materialize_sum(rhs);
    if (!L || !R) {
        why = "summands land in different formal degrees";
        return false;
    }
    if (L->w != R->w || L->s != R->s) {
        why = "sides land in different formal degrees";
        return false;
    }
    RUElement diff = ru_sub(L->payload, R->payload);
    if (L->s == 0) {
        if (ru_is_zero(diff)) return true;
        why = "payloads differ";
        return false;
    }
    if (is_constant_vector(diff)) return true;
    why = "payloads differ mod the regular character";
    return false;
}

inline bool excluded_generator(unsigned long p, unsigned long i, long c) {
    return p == 2 && i == 1 && floor_mod(BigInt(c), BigInt(4)) == 2;
}

}  // namespace detail

// Instantiates the two relation families of the reduced-ring presentation for
// all 1 <= i <= j <= n and 0 <= c,d <= c_max, including the 2-primary
// replacement relation a_L^2 y_{n,1,4k+3} = 4 y_{n,1,4k+1}; failures are
// collected, not thrown.
inline PresentationReport presentation_check(unsigned long p, unsigned long n, long c_max) {
    GroupSpec g(p, n);
    PresentationReport report;
    auto record = [&](const char* tag, unsigned long i, unsigned long j, long c, long d,
                      const std::vector<FormalClass>& lhs, const std::vector<FormalClass>& rhs) {
        std::string why;
        ++report.relations_checked;
        if (!detail::sides_agree(lhs, rhs, why)) {
            std::ostringstream os;
            os << tag << " i=" << i << " j=" << j << " c=" << c << " d=" << d << ": " << why;
            report.failures.push_back(os.str());
        }
    };

    // Product relations y_{i,c} y_{j,d} = p^{n-j} a_L y_{i, c + d p^{j-i}}.
    for (unsigned long i = 1; i <= n; ++i)
        for (unsigned long j = i; j <= n; ++j)
            for (long c = 0; c <= c_max; ++c)
                for (long d = 0; d <= c_max; ++d) {
                    const long target =
                        c + d * static_cast<long>(checked_pow_ul(p, j - i));
                    if (detail::excluded_generator(p, i, c) ||
                        detail::excluded_generator(p, j, d) ||
                        detail::excluded_generator(p, i, target)) {
                        ++report.relations_skipped;
                        continue;
                    }
                    std::vector<FormalClass> lhs{
                        detail::formal_mul(detail::formal_y(g, i, c), detail::formal_y(g, j, d))};
                    std::vector<FormalClass> rhs{detail::formal_scale(
                        detail::formal_mul(detail::formal_a(g), detail::formal_y(g, i, target)),
                        big_pow(BigInt(p), n - j))};
                    record("product", i, j, c, d, lhs, rhs);
                }

    // Shift relations a_L^{p^{i-1}(p-1)} y_{i,c+1} = p y_{i,c} + correction terms.
    for (unsigned long i = 1; i <= n; ++i)
        for (long c = 0; c < c_max; ++c) {
            if (p == 2 && i == 1) {
                const long cm = c % 4;
                if (cm == 1) {  // target y_{1,c+1} is not a presentation generator
                    ++report.relations_skipped;
                    continue;
                }
                if (cm == 2) {  // replacement relation around the excluded y_{1,c}
                    FormalClass a = detail::formal_a(g);
                    std::vector<FormalClass> lhs{detail::formal_mul(
                        detail::formal_mul(a, a), detail::formal_y(g, 1, c + 1))};
                    std::vector<FormalClass> rhs{
                        detail::formal_scale(detail::formal_y(g, 1, c - 1), BigInt(4))};
                    record("replacement", i, i, c, 0, lhs, rhs);
                    continue;
                }
            }
            FormalClass lhs_term = detail::formal_y(g, i, c + 1);
            for (unsigned long t = 0; t < g.totient_level(i); ++t)
                lhs_term = detail::formal_mul(lhs_term, detail::formal_a(g));
            std::vector<FormalClass> lhs{lhs_term};
            std::vector<FormalClass> rhs{
                detail::formal_scale(detail::formal_y(g, i, c), BigInt(p))};
            for (unsigned long j = 1; j < i; ++j) {
                const unsigned long gap = i - j;
                BigInt coeff = exact_div(big_pow(BigInt(p), checked_pow_ul(p, gap)) -
                                             big_pow(BigInt(p), checked_pow_ul(p, gap - 1)),
                                         big_pow(BigInt(p), gap));
                rhs.push_back(detail::formal_scale(
                    detail::formal_y(g, j, static_cast<long>(checked_pow_ul(p, gap)) * c),
                    coeff));
            }
            record("shift", i, i, c, 0, lhs, rhs);
        }
    return report;
}

}  // namespace spoke
