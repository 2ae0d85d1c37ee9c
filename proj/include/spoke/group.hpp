#pragma once

#include <spoke/bigint.hpp>
#include <spoke/error.hpp>

#include <vector>

namespace spoke {

inline bool is_prime(unsigned long p) {
    mpz_class z(p);
    return mpz_probab_prime_p(z.get_mpz_t(), 40) != 0;
}

// The cyclic group C_{p^n}; n = 0 is the trivial group.
struct GroupSpec {
    unsigned long p;
    unsigned long n;

    GroupSpec(unsigned long p_, unsigned long n_) : p(p_), n(n_) {
        require(is_prime(p), ErrorKind::DomainError, "group order base must be prime");
    }

    unsigned long order() const { return checked_pow_ul(p, n); }

    unsigned long level_order(unsigned long j) const {
        require(j <= n, ErrorKind::LevelOutOfRange, "subgroup level exceeds n");
        return checked_pow_ul(p, j);
    }

    // phi(p^j): the number of faithful characters of C_{p^j}.
    unsigned long totient_level(unsigned long j) const {
        require(j <= n, ErrorKind::LevelOutOfRange, "subgroup level exceeds n");
        if (j == 0) return 1;
        return checked_pow_ul(p, j - 1) * (p - 1);
    }

    bool operator==(const GroupSpec& o) const { return p == o.p && n == o.n; }
    bool operator!=(const GroupSpec& o) const { return !(*this == o); }
};

// Smallest primitive root mod p^2 for odd p; such a root generates (Z/p^j)^x for
// every j >= 1. Returns 3 for p = 2 by convention.
inline unsigned long canonical_adams_base(unsigned long p) {
    if (p == 2) return 3;
    unsigned long p2 = p * p;
    unsigned long target = p * (p - 1);
    for (unsigned long g = 2; g < p2; ++g) {
        if (g % p == 0) continue;
        unsigned long ord = 1;
        unsigned long x = g % p2;
        while (x != 1) {
            x = (x * g) % p2;
            ++ord;
        }
        if (ord == target) return g;
    }
    fail(ErrorKind::DomainError, "no primitive root mod p^2");
}

// Adams exponents that cut out the stable fixed lattice: a primitive root is
// topologically dense in Z_p^x for odd p, while Z_2^x needs the extra
// generator -1 because (Z/2^n)^x is not cyclic for n >= 3.
inline std::vector<long> default_adams_exponents(unsigned long p) {
    if (p == 2) return {3, -1};
    long g = static_cast<long>(canonical_adams_base(p));
    return {g, g * g};
}

}  // namespace spoke
