#pragma once

#include <spoke/bigint.hpp>
#include <spoke/error.hpp>
#include <spoke/group.hpp>

#include <cstddef>
#include <vector>

namespace spoke {

// Element of the Burnside ring A(C_{p^m}) in the orbit basis
// t_{m,i} = [C_{p^m}/C_{p^i}]; the group field carries m as its exponent.
struct BurnsideElement {
    GroupSpec group;
    std::vector<BigInt> t_coeffs;

    BurnsideElement(const GroupSpec& g, std::vector<BigInt> c)
        : group(g), t_coeffs(std::move(c)) {
        require(t_coeffs.size() == group.n + 1, ErrorKind::DomainError,
                "t-basis vector length must be m + 1");
    }

    bool operator==(const BurnsideElement& o) const {
        return group == o.group && t_coeffs == o.t_coeffs;
    }
    bool operator!=(const BurnsideElement& o) const { return !(*this == o); }
};

// values[j] = |X^{C_{p^j}}| for j = 0..m.
using MarksVector = std::vector<BigInt>;

inline BurnsideElement burnside_zero(const GroupSpec& g) {
    return BurnsideElement(g, std::vector<BigInt>(g.n + 1, BigInt(0)));
}

inline BurnsideElement burnside_t(const GroupSpec& g, unsigned long i) {
    require(i <= g.n, ErrorKind::LevelOutOfRange, "orbit level exceeds m");
    BurnsideElement x = burnside_zero(g);
    x.t_coeffs[i] = 1;
    return x;
}

inline BurnsideElement burnside_one(const GroupSpec& g) { return burnside_t(g, g.n); }

inline BurnsideElement burnside_add(const BurnsideElement& x, const BurnsideElement& y) {
    require(x.group == y.group, ErrorKind::GroupMismatch, "operands live in different groups");
    BurnsideElement r = x;
    for (std::size_t i = 0; i < r.t_coeffs.size(); ++i) r.t_coeffs[i] += y.t_coeffs[i];
    return r;
}

inline BurnsideElement burnside_sub(const BurnsideElement& x, const BurnsideElement& y) {
    require(x.group == y.group, ErrorKind::GroupMismatch, "operands live in different groups");
    BurnsideElement r = x;
    for (std::size_t i = 0; i < r.t_coeffs.size(); ++i) r.t_coeffs[i] -= y.t_coeffs[i];
    return r;
}

inline BurnsideElement burnside_scaled(const BurnsideElement& x, const BigInt& c) {
    BurnsideElement r = x;
    for (auto& v : r.t_coeffs) v *= c;
    return r;
}

// z_{m,i} = p t_{m,i} - t_{m,i-1} for i >= 1, z_{m,0} = p t_{m,0}.
inline BurnsideElement burnside_z(const GroupSpec& g, unsigned long i) {
    require(i <= g.n, ErrorKind::LevelOutOfRange, "z-basis level exceeds m");
    BurnsideElement x = burnside_scaled(burnside_t(g, i), BigInt(g.p));
    if (i >= 1) x = burnside_sub(x, burnside_t(g, i - 1));
    return x;
}

// X = sum b_i z_{m,i} has t-coefficients c_i = p b_i - b_{i+1}.
inline BurnsideElement burnside_from_z_coeffs(const GroupSpec& g, const std::vector<BigInt>& b) {
    require(b.size() == g.n + 1, ErrorKind::DomainError, "z-basis vector length must be m + 1");
    std::vector<BigInt> c(g.n + 1);
    for (std::size_t i = 0; i <= g.n; ++i) {
        c[i] = BigInt(g.p) * b[i];
        if (i + 1 <= g.n) c[i] -= b[i + 1];
    }
    return BurnsideElement(g, c);
}

// phi_{m,j}(t_{m,i}) = p^{m-i} for j <= i, else 0.
inline MarksVector to_marks(const BurnsideElement& x) {
    const unsigned long m = x.group.n;
    MarksVector v(m + 1, BigInt(0));
    for (unsigned long j = 0; j <= m; ++j)
        for (unsigned long i = j; i <= m; ++i)
            v[j] += x.t_coeffs[i] * big_pow(BigInt(x.group.p), m - i);
    return v;
}

// Recovery: c_m = v_m and c_i = (v_i - v_{i+1}) / p^{m-i}.
inline BurnsideElement from_marks(const GroupSpec& g, const MarksVector& v) {
    require(v.size() == g.n + 1, ErrorKind::DomainError, "marks vector length must be m + 1");
    const unsigned long m = g.n;
    std::vector<BigInt> c(m + 1);
    c[m] = v[m];
    for (unsigned long i = m; i-- > 0;) {
        BigInt diff = v[i] - v[i + 1];
        BigInt q = big_pow(BigInt(g.p), m - i);
        require(divides(q, diff), ErrorKind::NotInBurnsideImage,
                "marks fail the p-power congruence at level " + std::to_string(i));
        c[i] = diff / q;
    }
    return BurnsideElement(g, c);
}

inline BigInt burnside_degree(const BurnsideElement& x) { return to_marks(x)[0]; }

// Marks are a ring embedding, so multiplication is pointwise on marks.
inline BurnsideElement multiply(const BurnsideElement& x, const BurnsideElement& y) {
    require(x.group == y.group, ErrorKind::GroupMismatch, "operands live in different groups");
    MarksVector a = to_marks(x), b = to_marks(y);
    for (std::size_t j = 0; j < a.size(); ++j) a[j] *= b[j];
    return from_marks(x.group, a);
}

// tr_i^m carries t-basis coefficients over unchanged.
inline BurnsideElement transfer(const BurnsideElement& x, unsigned long target_level) {
    require(target_level >= x.group.n, ErrorKind::LevelOutOfRange,
            "transfer target below source level");
    GroupSpec g(x.group.p, target_level);
    std::vector<BigInt> c(target_level + 1, BigInt(0));
    for (std::size_t i = 0; i < x.t_coeffs.size(); ++i) c[i] = x.t_coeffs[i];
    return BurnsideElement(g, c);
}

// res^m_{m-1} truncates the marks vector.
inline BurnsideElement restriction(const BurnsideElement& x) {
    require(x.group.n >= 1, ErrorKind::LevelOutOfRange, "cannot restrict below the trivial group");
    GroupSpec g(x.group.p, x.group.n - 1);
    MarksVector v = to_marks(x);
    v.pop_back();
    return from_marks(g, v);
}

// C_p-geometric fixed points shift marks down one level.
inline BurnsideElement geometric_fixed(const BurnsideElement& x) {
    require(x.group.n >= 1, ErrorKind::LevelOutOfRange,
            "cannot take fixed points below the trivial group");
    GroupSpec g(x.group.p, x.group.n - 1);
    MarksVector full = to_marks(x);
    MarksVector v(full.begin() + 1, full.end());
    return from_marks(g, v);
}

// Multiplicative induction of the q-point set: marks (q^{p^m}, ..., q).
inline BurnsideElement norm_from_trivial(const BigInt& q, const GroupSpec& target) {
    require(q >= 0, ErrorKind::DomainError, "norm is defined on set cardinalities");
    const unsigned long m = target.n;
    MarksVector v(m + 1);
    for (unsigned long j = 0; j <= m; ++j)
        v[j] = big_pow(q, checked_pow_ul(target.p, m - j));
    return from_marks(target, v);
}

// The unique augmentation-zero lift through geometric fixed points: exists iff
// p^{m+1} divides |x|.
inline BurnsideElement lift_through_phi(const BurnsideElement& x) {
    GroupSpec up(x.group.p, x.group.n + 1);
    MarksVector v = to_marks(x);
    BigInt order(up.order());
    if (!divides(order, v[0]))
        fail(ErrorKind::AugmentationObstruction,
             "degree obstruction " + floor_mod(v[0], order).get_str() + " mod " + order.get_str());
    MarksVector lifted;
    lifted.push_back(BigInt(0));
    lifted.insert(lifted.end(), v.begin(), v.end());
    return from_marks(up, lifted);
}

}  // namespace spoke
