#include <spoke/ktheory.hpp>

#include <catch2/catch_amalgamated.hpp>

using namespace spoke;

TEST_CASE("graded class invariants") {
    GroupSpec g(2, 2);
    // odd degree requires augmentation zero
    RUElement bad = ru_one(g);
    CHECK_THROWS_AS(GradedKUClass(g, 3, bad), SpokeError);
    RUElement ok = ru_sub(ru_one(g), ru_L_power(g, 1));
    CHECK_NOTHROW(GradedKUClass(g, 3, ok));
    CHECK_THROWS_AS(GradedKUClass(g, -1, ok), SpokeError);

    // irrational character values are rejected when reading marks
    GradedKUClass even(g, 2, ru_L_power(g, 1));
    CHECK_THROWS_AS(marks_of(even), SpokeError);
}

TEST_CASE("halving steps compose to an euler factor") {
    GroupSpec g(2, 2);
    auto b4 = closed_form_complex_basis(g, 4);
    DSequence ds(2);
    for (const auto& y : b4) {
        GradedKUClass two_down = a_half(a_half(y));
        RUElement expect = ru_mul(y.payload, ru_sub(ru_one(g), ru_L_power(g, ds.d(2))));
        CHECK(two_down.degree == 2);
        CHECK(two_down.payload == expect);
        GradedKUClass odd = a_half(y);
        CHECK(a_half(adams_graded(odd, 3)) == adams_graded(a_half(odd), 3));
    }
}

TEST_CASE("landweber marks at C_2") {
    GroupSpec g(2, 1);
    long expected[] = {2, 4, 8, 16, 16, 16, 16, 32};
    for (long k = 1; k <= 8; ++k) {
        auto basis = closed_form_real_basis(g, k);
        REQUIRE(basis.size() == 1);
        auto marks = marks_of(basis[0]);
        REQUIRE(marks.size() == 2);
        CHECK(marks[0] == 0);
        CHECK(marks[1] == expected[k - 1]);
    }
}

TEST_CASE("real basis marks at C_4 in low degrees") {
    GroupSpec g(2, 2);
    auto b2 = closed_form_real_basis(g, 2);
    REQUIRE(b2.size() == 2);
    auto m1 = marks_of(b2[0]);
    auto m2 = marks_of(b2[1]);
    CHECK(m1[1] == 8);
    CHECK(m1[2] == 0);
    CHECK(m2[1] == 4);
    CHECK(m2[2] == 2);
    auto b3 = closed_form_real_basis(g, 3);
    auto n1 = marks_of(b3[0]);
    auto n2 = marks_of(b3[1]);
    CHECK(n1[1] == 8);
    CHECK(n1[2] == 0);
    CHECK(n2[1] == 8);
    CHECK(n2[2] == 4);
}

TEST_CASE("a second adams exponent is necessary at C_8") {
    GroupSpec g(2, 3);
    FixedLattice only3 = oracle_complex_fixed(g, 2, {3});
    FixedLattice both = oracle_complex_fixed(g, 2, {3, -1});
    CHECK(only3.lattice.rank() == 4);
    CHECK(both.lattice.rank() == 3);
    FixedLattice closed = lattice_of_classes(g, 2, closed_form_complex_basis(g, 2),
                                             LatticeProvenance::ClosedFormComplex);
    CHECK(both.lattice == closed.lattice);
    CHECK(oracle_stabilization_check(g, 2, {3, -1}));
    CHECK_FALSE(oracle_stabilization_check(g, 2, {3}));
}

TEST_CASE("oracle equals closed form on small sweeps") {
    struct Config {
        unsigned long p, n;
        long kmax;
    };
    for (Config c : {Config{2, 1, 12}, Config{2, 2, 24}, Config{3, 1, 24}, Config{5, 1, 24}}) {
        GroupSpec g(c.p, c.n);
        OracleSweep sweep(g);
        for (long k = 1; k <= c.kmax; ++k) {
            FixedLattice o = sweep.fixed_lattice(k);
            FixedLattice cl = lattice_of_classes(g, k, closed_form_complex_basis(g, k),
                                                 LatticeProvenance::ClosedFormComplex);
            CHECK(o.lattice == cl.lattice);
            if (k <= 8) CHECK(oracle_complex_fixed(g, k).lattice == o.lattice);
        }
    }
}

TEST_CASE("first fixed lattices at C_2") {
    GroupSpec g(2, 1);
    OracleSweep sweep(g);
    CHECK_THROWS_AS(sweep.fixed_lattice(0), SpokeError);
    FixedLattice f1 = sweep.fixed_lattice(1);
    CHECK(f1.lattice.rank() == 1);
    FixedLattice f2 = sweep.fixed_lattice(2);
    REQUIRE(f2.lattice.rank() == 1);
    CHECK(f2.lattice.basis().e[0] == std::vector<BigInt>{1, -1});
}

TEST_CASE("iso steps away from jump degrees") {
    for (unsigned long p : {2ul, 3ul}) {
        GroupSpec g(p, 2);
        long period = 2 * static_cast<long>(p - 1);
        for (long j = 1; j <= 4 * period; ++j) {
            if (j % period == 0) continue;
            CHECK(iso_step_check(g, j));
        }
    }
}

TEST_CASE("quotient structures") {
    GroupSpec g31(3, 1);
    for (long k : {3L, 7L, 11L}) {
        QuotientStructure q = quotient_structure(g31, k);
        REQUIRE(q.divisors.size() == 1);
        CHECK(q.divisors[0] == 3);
        CHECK(q.generator_images == std::vector<BigInt>{1});
    }
    CHECK(quotient_structure(g31, 5).divisors.empty());

    GroupSpec g8(2, 3);
    for (long k : {7L, 15L, 23L}) {
        QuotientStructure q = quotient_structure(g8, k);
        REQUIRE(q.divisors.size() == 1);
        CHECK(q.divisors[0] == 8);
        CHECK(q.generator_images == std::vector<BigInt>{4, 2, 1});
    }
    for (long k : {3L, 11L, 19L}) {
        QuotientStructure q = quotient_structure(g8, k);
        REQUIRE(q.divisors.size() == 1);
        CHECK(q.divisors[0] == 8);
        CHECK(q.generator_images == std::vector<BigInt>{-2, 1, 0});
    }
    for (long k : {1L, 9L, 17L}) {
        QuotientStructure q = quotient_structure(g8, k);
        REQUIRE(q.divisors.size() == 1);
        CHECK(q.divisors[0] == 2);
        CHECK(q.generator_images == std::vector<BigInt>{1, 0, 0});
    }
}
