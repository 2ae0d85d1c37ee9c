#pragma once

#include <spoke/ktheory.hpp>
#include <spoke/mahowald.hpp>

#include <algorithm>
#include <chrono>
#include <map>
#include <random>
#include <sstream>
#include <string>
#include <vector>

namespace spoke {

// Outcome of one verification criterion: every individual comparison is
// counted, and the first few mismatches are kept verbatim.
struct CheckResult {
    std::string name;
    std::string summary;
    bool pass = true;
    unsigned long checks = 0;
    std::vector<std::string> failures;
    long elapsed_ms = 0;

    void record(bool ok, const std::string& what) {
        ++checks;
        if (!ok) {
            pass = false;
            if (failures.size() < 8) failures.push_back(what);
        }
    }
};

// Optional caps on the default sweep; 0 leaves the per-criterion default.
struct SweepLimits {
    unsigned long max_n = 0;
    long max_k = 0;
};

namespace detail {

// The standing grid: p in {2,3,5} with n <= 3, plus C_16.
inline std::vector<GroupSpec> sweep_groups(const SweepLimits& lim) {
    std::vector<GroupSpec> gs;
    for (unsigned long p : {2ul, 3ul, 5ul}) {
        unsigned long ncap = (p == 2) ? 4ul : 3ul;
        if (lim.max_n != 0 && ncap > lim.max_n) ncap = lim.max_n;
        for (unsigned long n = 1; n <= ncap; ++n) gs.emplace_back(p, n);
    }
    return gs;
}

// Three v_1-periods: k <= 6 p^{n-1}(p-1).
inline long sweep_kmax(const GroupSpec& g, const SweepLimits& lim) {
    long kmax = 6 * static_cast<long>(g.order() / g.p) * static_cast<long>(g.p - 1);
    if (lim.max_k != 0 && kmax > lim.max_k) kmax = lim.max_k;
    return kmax;
}

inline std::string spot(const GroupSpec& g, long k) {
    std::ostringstream os;
    os << "p=" << g.p << " n=" << g.n << " k=" << k << ": ";
    return os.str();
}

// The one-shot oracle rebuilds every kernel from scratch, so it is only
// affordable on small groups; the incremental oracle covers the rest.
inline long direct_oracle_cap(const GroupSpec& g) {
    const unsigned long N = g.order();
    if (N <= 16) return 1000000;
    if (N <= 27) return 24;
    return 6;
}

inline BurnsideElement from_t(unsigned long p, unsigned long m, std::vector<long> t) {
    GroupSpec g(p, m);
    std::vector<BigInt> c(t.begin(), t.end());
    return BurnsideElement(g, std::move(c));
}

}  // namespace detail

// 1. The Adams-operation oracle and the closed-form complex basis span the
// same lattice at every degree; the incremental oracle agrees with the
// one-shot oracle wherever the latter is affordable.
inline CheckResult check_oracle_closed(const SweepLimits& lim) {
    CheckResult r{"oracle-vs-closed", "oracle lattices equal closed-form lattices"};
    for (const GroupSpec& g : detail::sweep_groups(lim)) {
        const long kmax = detail::sweep_kmax(g, lim);
        OracleSweep sweep(g);
        for (long k = 1; k <= kmax; ++k) {
            FixedLattice oracle = sweep.fixed_lattice(k);
            FixedLattice closed = lattice_of_classes(g, k, closed_form_complex_basis(g, k),
                                                     LatticeProvenance::ClosedFormComplex);
            r.record(oracle.lattice == closed.lattice,
                     detail::spot(g, k) + "oracle and closed-form lattices differ");
        }
        const long cap = std::min(kmax, detail::direct_oracle_cap(g));
        for (long k = 1; k <= cap; ++k)
            r.record(oracle_complex_fixed(g, k).lattice == sweep.fixed_lattice(k).lattice,
                     detail::spot(g, k) + "incremental oracle differs from one-shot oracle");
    }
    return r;
}

// 2. Subgroup marks of the closed-form real basis match the filtration tables,
// including the exceptional 2-primary cases.
inline CheckResult check_basis_marks(const SweepLimits& lim) {
    CheckResult r{"basis-marks", "real basis marks equal filtration table values"};
    for (const GroupSpec& g : detail::sweep_groups(lim)) {
        const long kmax = detail::sweep_kmax(g, lim);
        for (long k = 1; k <= kmax; ++k)
            r.record(f_marks_consistency(g, k),
                     detail::spot(g, k) + "basis marks disagree with the table");
    }
    return r;
}

// 3. The C_2 level-1 table is the classical g function, and the even-degree
// image at C_2 realizes it.
inline CheckResult check_landweber(const SweepLimits&) {
    CheckResult r{"landweber", "C_2 degree images match the g function"};
    for (long k = 1; k <= 64; ++k)
        r.record(f_value(2, 1, 1, k, 1) == landweber_g(k),
                 "k=" + std::to_string(k) + ": table value differs from g(k)");
    for (long kp = 1; kp <= 32; ++kp)
        r.record(degree_image(2, 1, kp, 1) == landweber_g(2 * kp),
                 "k'=" + std::to_string(kp) + ": degree image differs from g(2k')");
    return r;
}

// 4. Odd-prime level-1 degree images: p^{1 + floor(k'/(p-1))}.
inline CheckResult check_iriye(const SweepLimits&) {
    CheckResult r{"iriye", "odd-prime level-1 degree images"};
    for (unsigned long p : {3ul, 5ul})
        for (long kp = 1; kp <= 40; ++kp)
            r.record(degree_image(p, 1, kp, 1) ==
                         big_pow(BigInt(p), 1 + static_cast<unsigned long>(kp) / (p - 1)),
                     "p=" + std::to_string(p) + " k'=" + std::to_string(kp) +
                         ": degree image differs from the closed form");
    return r;
}

// 5. Low-degree gamma bases have the expected orbit decompositions and marks,
// and transferred norms generate the even-degree bases.
inline CheckResult check_gamma_bases(const SweepLimits&) {
    CheckResult r{"gamma-bases", "low-degree gamma bases and transfer generators"};
    {
        std::vector<BurnsideElement> b = gamma_basis(2, 2, 2);
        MarksVector m0 = to_marks(b[0]), m1 = to_marks(b[1]);
        r.record(b.size() == 2 && m0[0] == 8 && m0[1] == 0 && m1[0] == 4 && m1[1] == 2,
                 "gamma basis (2,2,2) has wrong marks");
        r.record(b[0].t_coeffs[0] == 4 && b[0].t_coeffs[1] == 0,
                 "gamma basis (2,2,2) first generator is not 4[C_2]");
        r.record(b[1].t_coeffs[0] == 1 && b[1].t_coeffs[1] == 2,
                 "gamma basis (2,2,2) second generator is not 2+[C_2]");
    }
    {
        std::vector<BurnsideElement> b = gamma_basis(2, 2, 3);
        MarksVector m0 = to_marks(b[0]), m1 = to_marks(b[1]);
        r.record(b.size() == 2 && m0[0] == 8 && m0[1] == 0 && m1[0] == 8 && m1[1] == 4,
                 "gamma basis (2,2,3) has wrong marks");
    }
    {
        MahowaldResult m = mahowald_invariant(detail::from_t(2, 1, {1, 2}));
        r.record(m.degree == 2 && m.j && m.j->family == "eta_squared" && m.display == "η²",
                 "invariant of 2+[C_2] is not η²");
    }
    for (unsigned long p : {2ul, 3ul})
        for (unsigned long n = 1; n <= 3; ++n)
            for (long kp = 1; kp <= 12; ++kp)
                r.record(gamma_basis_transfer_check(p, n, kp),
                         "p=" + std::to_string(p) + " n=" + std::to_string(n) + " k'=" +
                             std::to_string(kp) + ": transferred norm misses the basis");
    return r;
}

// 6. The worked-example battery: coefficients, degrees, and J-family images
// for specific virtual sets across groups.
inline CheckResult check_invariant_battery(const SweepLimits&) {
    using detail::from_t;
    CheckResult r{"invariant-battery", "worked invariant examples"};
    auto mi = [](const BurnsideElement& x) { return mahowald_invariant(x); };

    {
        auto c = gamma_membership(from_t(2, 1, {1, 2}), 2);
        r.record(c.has_value() && (*c)[0] == 0 && (*c)[1] == 1,
                 "2+[C_2] has wrong degree-2 coefficients");
        r.record(!gamma_membership(from_t(2, 1, {1, 2}), 3).has_value(),
                 "2+[C_2] should leave the filtration at degree 3");
        auto c8 = gamma_membership(from_t(2, 2, {0, 0, 8}), 1);
        r.record(c8.has_value() && (*c8)[0] == -5 && (*c8)[1] == -2 && (*c8)[2] == 4,
                 "8 at C_4 level has wrong degree-1 coefficients");
    }

    for (const BurnsideElement& x :
         {from_t(2, 0, {2}), from_t(2, 1, {2, 0}), from_t(2, 1, {0, 4}), from_t(2, 2, {2, 0, 0}),
          from_t(2, 2, {0, 0, 8})}) {
        MahowaldResult m = mahowald_invariant(x);
        r.record(m.degree == 1 && m.j && m.j->family == "eta" && m.display == "η",
                 "an eta case fails");
    }
    for (const BurnsideElement& x : {from_t(2, 0, {4}), from_t(2, 1, {1, 2})}) {
        MahowaldResult m = mahowald_invariant(x);
        r.record(m.degree == 2 && m.j && m.j->family == "eta_squared" && m.display == "η²",
                 "an eta-squared case fails");
    }
    {
        MahowaldResult a = mi(from_t(2, 1, {2, 4}));
        r.record(a.degree == 3 && a.j && a.j->raw == 2 && a.j->coefficient == 2 &&
                     a.display == "2ν",
                 "4+2[C_2] fails");
        MahowaldResult b = mi(from_t(2, 1, {4, 0}));
        r.record(b.degree == 3 && b.j && b.j->raw == -2 && b.display == "-2ν", "4[C_2] fails");
    }
    {
        MahowaldResult a = mi(from_t(2, 2, {2, 4, 0}));
        r.record(a.degree == 3 && a.j && a.j->raw == 2 && a.j->coefficient == 2,
                 "4[C_4/C_2]+2[C_4] fails");
        MahowaldResult b = mi(from_t(2, 2, {0, 6, 4}));
        r.record(b.degree == 3 && b.j && b.j->raw == 6 && b.j->coefficient == -2 &&
                     b.display == "-2ν",
                 "4+6[C_4/C_2] fails");
        MahowaldResult c = mi(from_t(2, 2, {1, 2, 0}));
        r.record(c.degree == 3 && c.j && c.j->raw == 1 && c.display == "ν",
                 "2[C_4/C_2]+[C_4] fails");
        MahowaldResult d = mi(from_t(2, 2, {4, 0, 0}));
        r.record(d.degree == 3 && d.j && d.j->raw == -2 && d.display == "-2ν", "4[C_4] fails");
        MahowaldResult s = mi(from_t(2, 2, {3, 1, 2}));
        r.record(s.degree == 7 && s.j && s.j->l == 3 && s.j->raw == 2 && s.j->modulus == 16 &&
                     s.display == "2σ",
                 "2+[C_4/C_2]+3[C_4] fails");
    }
    {
        MahowaldResult a = mi(from_t(3, 0, {3}));
        r.record(a.degree == 3 && a.j && a.j->family == "j_generator" && a.j->l == 1 &&
                     a.j->c == 1 && a.j->raw == 1 && a.j->modulus == 3 &&
                     a.display == "j_3^(3)",
                 "3 at p=3 fails");
        MahowaldResult b = mi(from_t(3, 1, {3, 0}));
        r.record(b.degree == 3 && b.j && b.j->raw == 1, "3[C_3] fails");
        MahowaldResult c = mi(from_t(5, 1, {5, 0}));
        r.record(c.degree == 7, "5[C_5] fails");
    }
    {
        MahowaldResult m = mi(from_t(2, 1, {1, 1}));
        r.record(m.degree == 0 && m.residue && *m.residue == -1 && m.display == "-1",
                 "degree-0 residue fails");
    }
    // Filtration degree can only grow under transfer.
    for (long b = 1; b <= 3; ++b) {
        BurnsideElement x = from_t(2, 0, {4 * b});
        r.record(mahowald_degree(transfer(x, 2)) >= mahowald_degree(x),
                 "transfer lowered a filtration degree");
    }
    return r;
}

// 7. Randomized Burnside-ring properties: marks are a ring embedding, the
// coordinate systems round-trip, and the Mackey operations satisfy their
// identities.
inline CheckResult check_burnside_ring(const SweepLimits& lim) {
    CheckResult r{"burnside-ring", "randomized mark/Mackey/lift identities"};
    for (unsigned long p : {2ul, 3ul, 5ul}) {
        unsigned long mcap = 3;
        if (lim.max_n != 0 && mcap > lim.max_n) mcap = lim.max_n;
        for (unsigned long m = 0; m <= mcap; ++m) {
            GroupSpec g(p, m);
            std::mt19937_64 rng(0x9e3779b97f4a7c15ULL ^ (p * 131 + m));
            std::uniform_int_distribution<long> coeff(-9, 9);
            std::uniform_int_distribution<long> card(0, 9);
            auto rand_elem = [&](const GroupSpec& gg) {
                std::vector<BigInt> c(gg.n + 1);
                for (auto& v : c) v = BigInt(coeff(rng));
                return BurnsideElement(gg, std::move(c));
            };
            const std::string where = "p=" + std::to_string(p) + " m=" + std::to_string(m) + ": ";
            for (int it = 0; it < 1000; ++it) {
                BurnsideElement x = rand_elem(g);
                BurnsideElement y = rand_elem(g);
                MarksVector mx = to_marks(x), my = to_marks(y), mxy = to_marks(multiply(x, y));
                bool pointwise = true;
                for (unsigned long j = 0; j <= m; ++j)
                    pointwise = pointwise && mxy[j] == mx[j] * my[j];
                r.record(pointwise, where + "marks are not multiplicative");
                r.record(from_marks(g, mx) == x, where + "marks round-trip fails");

                std::vector<BigInt> zc(m + 1);
                for (auto& v : zc) v = BigInt(coeff(rng));
                BurnsideElement ze = burnside_from_z_coeffs(g, zc);
                MarksVector mz = to_marks(ze);
                bool zround = true;
                for (unsigned long j = 0; j <= m; ++j)
                    zround = zround && mz[j] == zc[j] * big_pow(BigInt(p), m + 1 - j);
                r.record(zround, where + "z-coordinates fail to round-trip");

                BigInt q1(card(rng)), q2(card(rng));
                r.record(multiply(norm_from_trivial(q1, g), norm_from_trivial(q2, g)) ==
                             norm_from_trivial(q1 * q2, g),
                         where + "norms are not multiplicative");

                if (m >= 1) {
                    GroupSpec h(p, m - 1);
                    BurnsideElement u = rand_elem(h);
                    r.record(restriction(transfer(u, m)) == burnside_scaled(u, BigInt(p)),
                             where + "restriction of a transfer is not p times the element");
                    r.record(multiply(x, transfer(u, m)) ==
                                 transfer(multiply(restriction(x), u), m),
                             where + "Frobenius reciprocity fails");
                    r.record(to_marks(transfer(u, m))[m] == 0,
                             where + "a transfer has nonzero top mark");
                    if (mx[m] == 0) {
                        BurnsideElement low(
                            h, std::vector<BigInt>(x.t_coeffs.begin(), x.t_coeffs.end() - 1));
                        r.record(transfer(low, m) == x,
                                 where + "top-mark kernel is not the transfer image");
                    }
                    r.record(geometric_fixed(norm_from_trivial(q1, g)) ==
                                 norm_from_trivial(q1, h),
                             where + "geometric fixed points do not shift norms");
                }

                BigInt deg = burnside_degree(x);
                bool member = gamma_membership(x, 1).has_value();
                r.record(member == divides(big_pow(BigInt(p), m + 1), deg),
                         where + "degree-1 membership disagrees with divisibility");
                if (divides(big_pow(BigInt(p), m + 1), deg)) {
                    BurnsideElement lift = lift_through_phi(x);
                    r.record(geometric_fixed(lift) == x && burnside_degree(lift) == 0,
                             where + "lift through geometric fixed points is wrong");
                } else {
                    bool obstructed = false;
                    try {
                        lift_through_phi(x);
                    } catch (const SpokeError& e) {
                        obstructed = e.kind() == ErrorKind::AugmentationObstruction;
                    }
                    r.record(obstructed, where + "missing augmentation obstruction");
                }
            }
        }
    }
    return r;
}

// 8. Aligned d-sequence blocks: character value p at their level, scalar
// action p^c on z, and the exact z-expansion of the t-product.
inline CheckResult check_euler_blocks(const SweepLimits& lim) {
    CheckResult r{"euler-blocks", "aligned block identities on z and t"};
    for (const GroupSpec& g : detail::sweep_groups(lim)) {
        const long bmax = 4 * static_cast<long>(g.order());
        DSequence ds(g.p);
        for (unsigned long i = 1; i <= g.n; ++i) {
            const long phi = static_cast<long>(g.totient_level(i));
            RUElement z = z_as_ru(g, i);
            RUElement t = t_as_ru(g, i);
            RUElement et_expected = ru_zero(g);
            for (unsigned long j = 1; j <= i; ++j) {
                unsigned long e = checked_pow_ul(g.p, i - j) + j - i - 1;
                et_expected = ru_add(et_expected, ru_scaled(z_as_ru(g, j), big_pow(BigInt(g.p), e)));
            }
            for (long a = 0; a + phi <= bmax; a += phi) {
                RUElement e = ru_one(g);
                RUElement ez = z;
                BigInt pc(1);
                for (long c = 1; a + c * phi <= bmax; ++c) {
                    for (long m = a + (c - 1) * phi + 1; m <= a + c * phi; ++m) {
                        RUElement f = ru_sub(ru_one(g), ru_L_power(g, ds.d(m)));
                        if (c == 1) e = ru_mul(e, f);
                        ez = ru_mul(ez, f);
                    }
                    pc *= g.p;
                    const std::string where = detail::spot(g, a) + "level " + std::to_string(i) +
                                              " c=" + std::to_string(c) + ": ";
                    if (c == 1) {
                        CyclotomicValue v = char_value(e, i);
                        r.record(cyc_is_rational(v) && cyc_rational(v) == g.p,
                                 where + "block character value is not p");
                        r.record(ru_mul(e, t) == et_expected,
                                 where + "t-product has the wrong z-expansion");
                    }
                    r.record(ez == ru_scaled(z, pc), where + "block does not scale z by p^c");
                }
            }
        }
    }
    return r;
}

// 9. The y/a presentation relations, including the exceptional p = 2 cases.
inline CheckResult check_presentation(const SweepLimits& lim) {
    CheckResult r{"presentation", "product and shift relations for the y-classes"};
    for (unsigned long p : {2ul, 3ul}) {
        unsigned long ncap = 3;
        if (lim.max_n != 0 && ncap > lim.max_n) ncap = lim.max_n;
        for (unsigned long n = 1; n <= ncap; ++n) {
            PresentationReport rep = presentation_check(p, n, 8);
            std::string where = "p=" + std::to_string(p) + " n=" + std::to_string(n) + ": ";
            r.record(rep.ok() && rep.relations_checked > 0, where + "relation failures");
            for (const std::string& f : rep.failures)
                if (r.failures.size() < 8) r.failures.push_back(where + f);
        }
    }
    return r;
}

// 10. Successive quotients at jump degrees: the full cyclic group with
// generator images p^{n-s} where the critical lemma applies, and the
// alternating Z/8 pattern for C_8.
inline CheckResult check_quotient_jumps(const SweepLimits& lim) {
    CheckResult r{"quotient-jumps", "successive quotient shapes at jump degrees"};
    for (const GroupSpec& g : detail::sweep_groups(lim)) {
        const long kmax = detail::sweep_kmax(g, lim);
        const long period = 2 * static_cast<long>(g.order() / g.p) * static_cast<long>(g.p - 1);
        if (g.p != 2 || g.n >= 3) {
            for (long k = period - 1; k <= kmax; k += period) {
                QuotientStructure q = quotient_structure(g, k);
                bool shape = q.divisors.size() == 1 && q.divisors[0] == BigInt(g.order());
                if (shape)
                    for (unsigned long s = 1; s <= g.n; ++s)
                        shape = shape && q.generator_images[s - 1] == big_pow(BigInt(g.p), g.n - s);
                r.record(shape, detail::spot(g, k) + "jump quotient is not Z/p^n with images p^{n-s}");
            }
        }
        if (g.p == 2 && g.n == 3) {
            for (long k = 3; k <= kmax; k += 8) {
                QuotientStructure q = quotient_structure(g, k);
                bool shape = q.divisors.size() == 1 && q.divisors[0] == 8 &&
                             q.generator_images[0] == -2 && q.generator_images[1] == 1 &&
                             q.generator_images[2] == 0;
                r.record(shape, detail::spot(g, k) + "odd-lemma quotient is not Z/8 with images (-2,1,0)");
            }
        }
    }
    return r;
}

// 11. Away from multiples of 2(p-1), each halving map carries the degree-j
// basis onto the degree-(j-1) lattice with index 1.
inline CheckResult check_halving_isos(const SweepLimits& lim) {
    CheckResult r{"halving-isos", "non-jump halving maps have index 1"};
    for (const GroupSpec& g : detail::sweep_groups(lim)) {
        const long kmax = detail::sweep_kmax(g, lim);
        const long period = 2 * static_cast<long>(g.p - 1);
        for (long j = 1; j <= kmax; ++j) {
            if (j % period == 0) continue;
            r.record(iso_step_check(g, j), detail::spot(g, j) + "halving map is not an isomorphism");
        }
    }
    return r;
}

using CriterionFn = CheckResult (*)(const SweepLimits&);

struct Criterion {
    int index;
    CriterionFn fn;
};

inline const std::vector<Criterion>& all_criteria() {
    static const std::vector<Criterion> cs{
        {1, check_oracle_closed},   {2, check_basis_marks},     {3, check_landweber},
        {4, check_iriye},           {5, check_gamma_bases},     {6, check_invariant_battery},
        {7, check_burnside_ring},   {8, check_euler_blocks},    {9, check_presentation},
        {10, check_quotient_jumps}, {11, check_halving_isos},
    };
    return cs;
}

// Named suites for the command line; each maps to a subset of the criteria.
inline const std::map<std::string, std::vector<int>>& verify_suites() {
    static const std::map<std::string, std::vector<int>> m{
        {"burnside", {7}},
        {"repring", {8}},
        {"oracle-vs-closed", {1, 11}},
        {"f-tables", {2, 3, 4}},
        {"examples", {5, 6}},
        {"presentation", {9}},
        {"quotients", {10}},
        {"all", {1, 2, 3, 4, 5, 6, 7, 8, 9, 10, 11}},
    };
    return m;
}

inline CheckResult run_criterion(int index, const SweepLimits& lim) {
    for (const Criterion& c : all_criteria()) {
        if (c.index != index) continue;
        auto t0 = std::chrono::steady_clock::now();
        CheckResult r = c.fn(lim);
        auto t1 = std::chrono::steady_clock::now();
        r.elapsed_ms = std::chrono::duration_cast<std::chrono::milliseconds>(t1 - t0).count();
        return r;
    }
    fail(ErrorKind::DomainError, "no such criterion: " + std::to_string(index));
}

}  // namespace spoke
