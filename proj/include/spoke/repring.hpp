#pragma once

#include <spoke/bigint.hpp>
#include <spoke/error.hpp>
#include <spoke/group.hpp>

#include <cstddef>
#include <numeric>
#include <vector>

namespace spoke {

// Element of RU(C_{p^n}) = Z[L]/(L^{p^n} - 1), stored as coeffs[a] = coefficient
// of L^a with 0 <= a < p^n.
struct RUElement {
    GroupSpec group;
    std::vector<BigInt> coeffs;

    RUElement(const GroupSpec& g, std::vector<BigInt> c) : group(g), coeffs(std::move(c)) {
        require(coeffs.size() == group.order(), ErrorKind::DomainError,
                "coefficient vector length must equal the group order");
    }

    bool operator==(const RUElement& o) const { return group == o.group && coeffs == o.coeffs; }
    bool operator!=(const RUElement& o) const { return !(*this == o); }
};

inline RUElement ru_zero(const GroupSpec& g) {
    return RUElement(g, std::vector<BigInt>(g.order(), BigInt(0)));
}

inline RUElement ru_scalar(const GroupSpec& g, const BigInt& c) {
    RUElement x = ru_zero(g);
    x.coeffs[0] = c;
    return x;
}

inline RUElement ru_one(const GroupSpec& g) { return ru_scalar(g, BigInt(1)); }

// L^e with e reduced mod p^n; accepts negative exponents.
inline RUElement ru_L_power(const GroupSpec& g, long e) {
    RUElement x = ru_zero(g);
    x.coeffs[static_cast<std::size_t>(floor_mod(BigInt(e), BigInt(g.order())).get_ui())] = 1;
    return x;
}

inline void check_same_group(const RUElement& x, const RUElement& y) {
    require(x.group == y.group, ErrorKind::GroupMismatch, "operands live in different groups");
}

inline RUElement ru_add(const RUElement& x, const RUElement& y) {
    check_same_group(x, y);
    RUElement r = x;
    for (std::size_t a = 0; a < r.coeffs.size(); ++a) r.coeffs[a] += y.coeffs[a];
    return r;
}

inline RUElement ru_sub(const RUElement& x, const RUElement& y) {
    check_same_group(x, y);
    RUElement r = x;
    for (std::size_t a = 0; a < r.coeffs.size(); ++a) r.coeffs[a] -= y.coeffs[a];
    return r;
}

inline RUElement ru_neg(const RUElement& x) {
    RUElement r = x;
    for (auto& c : r.coeffs) c = -c;
    return r;
}

inline RUElement ru_scaled(const RUElement& x, const BigInt& c) {
    RUElement r = x;
    for (auto& v : r.coeffs) v *= c;
    return r;
}

// Cyclic convolution mod L^{p^n} - 1.
inline RUElement ru_mul(const RUElement& x, const RUElement& y) {
    check_same_group(x, y);
    const std::size_t N = x.coeffs.size();
    RUElement r = ru_zero(x.group);
    for (std::size_t a = 0; a < N; ++a) {
        if (x.coeffs[a] == 0) continue;
        for (std::size_t b = 0; b < N; ++b) {
            if (y.coeffs[b] == 0) continue;
            std::size_t c = a + b;
            if (c >= N) c -= N;
            mpz_addmul(r.coeffs[c].get_mpz_t(), x.coeffs[a].get_mpz_t(), y.coeffs[b].get_mpz_t());
        }
    }
    return r;
}

inline bool ru_is_zero(const RUElement& x) {
    for (const auto& c : x.coeffs)
        if (c != 0) return false;
    return true;
}

// Dimension homomorphism L -> 1.
inline BigInt augmentation(const RUElement& x) {
    BigInt s = 0;
    for (const auto& c : x.coeffs) s += c;
    return s;
}

// Adams operation psi^ell: L^a -> L^{ell a}; a ring homomorphism for every ell.
inline RUElement adams(const RUElement& x, long ell) {
    const long N = static_cast<long>(x.group.order());
    RUElement r = ru_zero(x.group);
    for (std::size_t a = 0; a < x.coeffs.size(); ++a) {
        if (x.coeffs[a] == 0) continue;
        long e = floor_mod(BigInt(ell * static_cast<long>(a)), BigInt(N)).get_si();
        r.coeffs[static_cast<std::size_t>(e)] += x.coeffs[a];
    }
    return r;
}

// Restriction RU(C_{p^n}) -> RU(C_{p^j}): exponents reduce mod p^j.
inline RUElement ru_restrict(const RUElement& x, unsigned long j) {
    require(j <= x.group.n, ErrorKind::LevelOutOfRange, "restriction level exceeds n");
    GroupSpec sub(x.group.p, j);
    RUElement r = ru_zero(sub);
    const std::size_t M = sub.order();
    for (std::size_t a = 0; a < x.coeffs.size(); ++a) r.coeffs[a % M] += x.coeffs[a];
    return r;
}

// Element of Z[x]/Phi_{p^j}(x) on the basis 1, x, ..., x^{phi(p^j)-1};
// level 0 is a plain integer.
struct CyclotomicValue {
    unsigned long p;
    unsigned long level;
    std::vector<BigInt> coeffs;

    bool operator==(const CyclotomicValue& o) const {
        return p == o.p && level == o.level && coeffs == o.coeffs;
    }
    bool operator!=(const CyclotomicValue& o) const { return !(*this == o); }
};

inline CyclotomicValue cyc_zero(unsigned long p, unsigned long level) {
    unsigned long phi = (level == 0) ? 1 : checked_pow_ul(p, level - 1) * (p - 1);
    return CyclotomicValue{p, level, std::vector<BigInt>(phi, BigInt(0))};
}

// Adds c * x^e for 0 <= e < p^j. Phi_{p^j}(x) = sum_t x^{t p^{j-1}} gives
// x^e = -sum_{t=0}^{p-2} x^{e - phi + t p^{j-1}} when e >= phi; the rewritten
// exponents are already reduced, so no cascade occurs.
inline void cyc_add_monomial(CyclotomicValue& v, unsigned long e, const BigInt& c) {
    const unsigned long phi = static_cast<unsigned long>(v.coeffs.size());
    if (e < phi) {
        v.coeffs[e] += c;
        return;
    }
    const unsigned long step = (v.level == 0) ? 1 : checked_pow_ul(v.p, v.level - 1);
    const unsigned long r = e - phi;
    for (unsigned long t = 0; t + 1 < v.p; ++t) v.coeffs[r + t * step] -= c;
}

inline bool cyc_is_zero(const CyclotomicValue& v) {
    for (const auto& c : v.coeffs)
        if (c != 0) return false;
    return true;
}

inline bool cyc_is_rational(const CyclotomicValue& v) {
    for (std::size_t i = 1; i < v.coeffs.size(); ++i)
        if (v.coeffs[i] != 0) return false;
    return true;
}

inline BigInt cyc_rational(const CyclotomicValue& v) {
    require(cyc_is_rational(v), ErrorKind::DomainError, "cyclotomic value is irrational");
    return v.coeffs[0];
}

// Character at a generator of C_{p^j}: the image of x under L -> zeta_{p^j},
// reduced mod Phi_{p^j}. Level 0 is the augmentation.
inline CyclotomicValue char_value(const RUElement& x, unsigned long j) {
    require(j <= x.group.n, ErrorKind::LevelOutOfRange, "character level exceeds n");
    const unsigned long pj = checked_pow_ul(x.group.p, j);
    CyclotomicValue v = cyc_zero(x.group.p, j);
    for (std::size_t a = 0; a < x.coeffs.size(); ++a) {
        if (x.coeffs[a] == 0) continue;
        cyc_add_monomial(v, static_cast<unsigned long>(a) % pj, x.coeffs[a]);
    }
    return v;
}

// Permutation character of C_{p^n}/C_{p^s}: sum of L^a over p^s | a.
inline RUElement t_as_ru(const GroupSpec& g, unsigned long s) {
    require(s <= g.n, ErrorKind::LevelOutOfRange, "permutation character level exceeds n");
    RUElement x = ru_zero(g);
    const std::size_t step = g.level_order(s);
    for (std::size_t a = 0; a < x.coeffs.size(); a += step) x.coeffs[a] = 1;
    return x;
}

// z_{n,i} = p t_{n,i} - t_{n,i-1} for i >= 1; z_{n,0} = p t_{n,0}. These span
// the same lattice as the t's and diagonalize the character table.
inline RUElement z_as_ru(const GroupSpec& g, unsigned long i) {
    require(i <= g.n, ErrorKind::LevelOutOfRange, "z-basis level exceeds n");
    RUElement x = ru_scaled(t_as_ru(g, i), BigInt(g.p));
    if (i >= 1) x = ru_sub(x, t_as_ru(g, i - 1));
    return x;
}

// K-theory Euler class of a sum of characters: prod (1 - L^d).
inline RUElement euler_class(const GroupSpec& g, const std::vector<long>& exponents) {
    RUElement e = ru_one(g);
    for (long d : exponents) e = ru_mul(e, ru_sub(ru_one(g), ru_L_power(g, d)));
    return e;
}

// W_{p^i}: the sum of all faithful characters of C_{p^i}, returned in RU(C_{p^i}).
inline RUElement w_character(unsigned long i, const GroupSpec& ambient) {
    require(i <= ambient.n, ErrorKind::LevelOutOfRange, "w-character level exceeds n");
    GroupSpec sub(ambient.p, i);
    RUElement x = ru_zero(sub);
    const unsigned long pi = sub.order();
    for (unsigned long k = 1; k <= pi; ++k) {
        if (k % ambient.p == 0 && i >= 1) continue;
        x.coeffs[k % pi] += 1;
    }
    return x;
}

// The exponent sequence d = (a_1, -a_1, a_2, -a_2, ...) with a_1 < a_2 < ...
// the positive integers coprime to p; generated lazily.
class DSequence {
public:
    explicit DSequence(unsigned long p) : p_(p) {}

    // d_m for m >= 1.
    long d(std::size_t m) const {
        require(m >= 1, ErrorKind::DomainError, "d-sequence index starts at 1");
        std::size_t t = (m + 1) / 2;
        extend(t);
        return (m % 2 == 1) ? a_[t - 1] : -a_[t - 1];
    }

private:
    unsigned long p_;
    mutable std::vector<long> a_;

    void extend(std::size_t t) const {
        long v = a_.empty() ? 0 : a_.back();
        while (a_.size() < t) {
            ++v;
            if (v % static_cast<long>(p_) != 0) a_.push_back(v);
        }
    }
};

// e_{a,b} = prod_{m=a+1}^{b} (1 - L^{d_m}); empty product for a = b.
inline RUElement euler_block(const GroupSpec& g, std::size_t a, std::size_t b) {
    require(a <= b, ErrorKind::DomainError, "euler block needs a <= b");
    DSequence ds(g.p);
    RUElement e = ru_one(g);
    for (std::size_t m = a + 1; m <= b; ++m)
        e = ru_mul(e, ru_sub(ru_one(g), ru_L_power(g, ds.d(m))));
    return e;
}

// A d-sequence block of length phi(p^i) starting at a multiple of phi(p^i)
// restricts to W_{p^i}; unaligned blocks need not, so alignment is required.
inline bool dseq_block_restriction_check(unsigned long p, unsigned long n, unsigned long i,
                                         std::size_t a, std::size_t length) {
    GroupSpec ambient(p, n);
    require(i >= 1 && i <= n, ErrorKind::LevelOutOfRange, "restriction level out of range");
    const unsigned long phi = ambient.totient_level(i);
    require(length == phi, ErrorKind::DomainError, "block length must be phi(p^i)");
    require(a % phi == 0, ErrorKind::DomainError, "block must start at a multiple of phi(p^i)");
    GroupSpec sub(p, i);
    RUElement s = ru_zero(sub);
    DSequence ds(p);
    const std::size_t pi = sub.order();
    for (std::size_t m = a + 1; m <= a + length; ++m)
        s.coeffs[static_cast<std::size_t>(floor_mod(BigInt(ds.d(m)), BigInt(pi)).get_ui())] += 1;
    return s == w_character(i, ambient);
}

// Multiplier of psi^ell on the Bott class of a single character L^d:
// sum_{t=0}^{ell-1} L^{dt} for ell >= 1 and -L^{ell d} sum_{t=0}^{|ell|-1} L^{dt}
// for ell <= -1. The negative-ell branch is forced by psi^ell psi^{ell'} = psi^{ell ell'}
// on Bott classes; in particular ell = -1 gives -L^{-d}.
inline RUElement bott_multiplier_single(const GroupSpec& g, long d, long ell) {
    require(ell != 0, ErrorKind::DomainError, "Adams exponent must be nonzero");
    RUElement s = ru_zero(g);
    const long count = (ell >= 1) ? ell : -ell;
    for (long t = 0; t < count; ++t)
        s = ru_add(s, ru_L_power(g, d * t));
    if (ell >= 1) return s;
    return ru_neg(ru_mul(ru_L_power(g, ell * d), s));
}

// B_m(ell) = prod_{i=1}^{m} multiplier(d_i, ell): the multiplier of psi^ell on
// the degree-2m Bott class over the first m d-characters.
inline RUElement bott_multiplier(const GroupSpec& g, std::size_t m, long ell) {
    DSequence ds(g.p);
    RUElement b = ru_one(g);
    for (std::size_t i = 1; i <= m; ++i)
        b = ru_mul(b, bott_multiplier_single(g, ds.d(i), ell));
    return b;
}

// Incremental cache of B_m(ell) along a sweep in m.
class BottMultiplierCache {
public:
    BottMultiplierCache(const GroupSpec& g, long ell) : group_(g), ell_(ell), ds_(g.p) {
        cache_.push_back(ru_one(g));
    }

    const RUElement& at(std::size_t m) {
        while (cache_.size() <= m) {
            std::size_t next = cache_.size();
            cache_.push_back(
                ru_mul(cache_.back(), bott_multiplier_single(group_, ds_.d(next), ell_)));
        }
        return cache_[m];
    }

    long ell() const { return ell_; }

private:
    GroupSpec group_;
    long ell_;
    DSequence ds_;
    std::vector<RUElement> cache_;
};

// psi^ell fixes the c-th power of the full W_{p^n} Bott class up to the stated
// rank-one correction: B_{c phi(p^n)}(ell) = 1 + ((ell^{c phi} - 1)/p^n) * (regular character).
inline bool verify_adams_on_w_power(unsigned long p, unsigned long n, long ell, unsigned long c) {
    require(c >= 1, ErrorKind::DomainError, "power must be positive");
    require(std::gcd(ell, static_cast<long>(p)) == 1, ErrorKind::DomainError,
            "Adams exponent must be coprime to p");
    GroupSpec g(p, n);
    const std::size_t span = static_cast<std::size_t>(c) * g.totient_level(n);
    RUElement lhs = bott_multiplier(g, span, ell);
    BigInt num = big_pow(BigInt(ell), static_cast<unsigned long>(span)) - 1;
    require(divides(BigInt(g.order()), num), ErrorKind::DivisibilityViolation,
            "ell^{c phi(p^n)} - 1 must be divisible by p^n");
    RUElement rhs = ru_add(ru_one(g), ru_scaled(t_as_ru(g, 0), num / BigInt(g.order())));
    return lhs == rhs;
}

// Geometric fixed-point value of the c-th power of the W_{p^n} Bott class at
// level j >= 1, with a cyclotomic consistency check that the Euler class of
// the faithful characters of C_{p^j} evaluates to p at level j.
inline BigInt bott_fixed_value(const GroupSpec& g, unsigned long c, unsigned long j) {
    require(j >= 1 && j <= g.n, ErrorKind::LevelOutOfRange, "fixed-point level out of range");
    require(c >= 1, ErrorKind::DomainError, "power must be positive");
    GroupSpec sub(g.p, j);
    std::vector<long> faithful;
    for (unsigned long k = 1; k < sub.order(); ++k)
        if (k % g.p != 0) faithful.push_back(static_cast<long>(k));
    CyclotomicValue v = char_value(euler_class(sub, faithful), j);
    require(cyc_is_rational(v) && cyc_rational(v) == g.p, ErrorKind::TheoremViolation,
            "Euler class of faithful characters must evaluate to p");
    return big_pow(BigInt(g.p), c * checked_pow_ul(g.p, g.n - j));
}

// Degrees of the power map psi_d on geometric fixed points: d at the trivial
// level, then 0 where p^j divides d and 1 otherwise.
inline std::vector<BigInt> power_map_degrees(long d, const GroupSpec& g) {
    std::vector<BigInt> marks;
    marks.push_back(BigInt(d));
    for (unsigned long j = 1; j <= g.n; ++j)
        marks.push_back(divides(BigInt(g.level_order(j)), BigInt(d)) ? BigInt(0) : BigInt(1));
    return marks;
}

}  // namespace spoke
