#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include <gmpxx.h>

#include "spoke/error.hpp"

namespace spoke {

using BigInt = mpz_class;
using Rational = mpq_class;

inline BigInt big_pow(const BigInt& base, unsigned long exp) {
    BigInt out;
    mpz_pow_ui(out.get_mpz_t(), base.get_mpz_t(), exp);
    return out;
}

inline BigInt big_pow(long base, unsigned long exp) {
    return big_pow(BigInt(base), exp);
}

inline BigInt big_abs(const BigInt& x) {
    return abs(x);
}

inline BigInt big_gcd(const BigInt& a, const BigInt& b) {
    BigInt out;
    mpz_gcd(out.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return out;
}

inline bool divides(const BigInt& d, const BigInt& x) {
    if (d == 0) return x == 0;
    return mpz_divisible_p(x.get_mpz_t(), d.get_mpz_t()) != 0;
}

// Exact quotient; caller guarantees divisibility.
inline BigInt exact_div(const BigInt& x, const BigInt& d) {
    require(d != 0 && divides(d, x), ErrorKind::DivisibilityViolation,
            "exact_div: " + x.get_str() + " not divisible by " + d.get_str());
    BigInt out;
    mpz_divexact(out.get_mpz_t(), x.get_mpz_t(), d.get_mpz_t());
    return out;
}

inline BigInt floor_div(const BigInt& x, const BigInt& d) {
    require(d != 0, ErrorKind::DomainError, "floor_div by zero");
    BigInt out;
    mpz_fdiv_q(out.get_mpz_t(), x.get_mpz_t(), d.get_mpz_t());
    return out;
}

inline BigInt floor_mod(const BigInt& x, const BigInt& d) {
    require(d != 0, ErrorKind::DomainError, "floor_mod by zero");
    BigInt out;
    mpz_fdiv_r(out.get_mpz_t(), x.get_mpz_t(), d.get_mpz_t());
    return out;
}

// Quotient rounding to nearest (ties toward even quotient are irrelevant here;
// any nearest choice keeps remainders in [-d/2, d/2]).
inline BigInt round_div(const BigInt& x, const BigInt& d) {
    require(d != 0, ErrorKind::DomainError, "round_div by zero");
    BigInt q = floor_div(x, d);
    BigInt r = x - q * d;
    BigInt ad = big_abs(d);
    if (2 * r > ad) q += (d > 0 ? 1 : -1);
    return q;
}

inline BigInt parse_bigint(const std::string& s) {
    if (s.empty()) fail(ErrorKind::ParseError, "empty integer literal");
    std::size_t start = (s[0] == '+' || s[0] == '-') ? 1 : 0;
    if (start == s.size()) fail(ErrorKind::ParseError, "bare sign is not an integer: " + s);
    for (std::size_t i = start; i < s.size(); ++i) {
        if (s[i] < '0' || s[i] > '9')
            fail(ErrorKind::ParseError, "bad integer literal: " + s);
    }
    return BigInt(s, 10);
}

inline long to_long(const BigInt& x) {
    require(x.fits_slong_p(), ErrorKind::DomainError, "value out of machine range: " + x.get_str());
    return x.get_si();
}

inline unsigned long checked_pow_ul(unsigned long base, unsigned long exp) {
    BigInt v = big_pow(BigInt(static_cast<long>(base)), exp);
    require(v.fits_ulong_p(), ErrorKind::DomainError, "power exceeds machine range");
    return v.get_ui();
}

inline long p_adic_valuation(long p, const BigInt& x) {
    require(x != 0, ErrorKind::ZeroElement, "valuation of zero");
    BigInt cur = big_abs(x);
    long v = 0;
    BigInt bp(p);
    while (divides(bp, cur)) {
        cur = exact_div(cur, bp);
        ++v;
    }
    return v;
}

}  // namespace spoke
