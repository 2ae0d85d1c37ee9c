#include <spoke/mahowald.hpp>

#include <catch2/catch_amalgamated.hpp>

#include <vector>

using namespace spoke;

namespace {

BurnsideElement from_t(unsigned long p, unsigned long m, std::vector<long> t) {
    GroupSpec g(p, m);
    std::vector<BigInt> c(t.begin(), t.end());
    return BurnsideElement(g, std::move(c));
}

}  // namespace

TEST_CASE("filtration table spot values") {
    CHECK(f_value(2, 2, 2, 3, 1) == 8);
    CHECK(f_value(2, 2, 2, 3, 2) == 4);
    CHECK(f_value(2, 1, 1, 3, 1) == 8);
    CHECK(f_value(2, 3, 3, 3, 1) == 16);
    CHECK(f_value(2, 3, 3, 3, 2) == 4);
    CHECK(f_value(2, 3, 3, 3, 3) == 2);
    // zero above the diagonal
    CHECK(f_value(3, 2, 1, 5, 2) == 0);
    CHECK_THROWS_AS(f_value(2, 2, 3, 1, 1), SpokeError);
    CHECK_THROWS_AS(f_value(2, 2, 1, 0, 1), SpokeError);
}

TEST_CASE("diagonal entries are nondecreasing in the degree") {
    for (unsigned long p : {2ul, 3ul})
        for (unsigned long n = 1; n <= 3; ++n)
            for (unsigned long s = 1; s <= n; ++s)
                for (long k = 1; k <= 60; ++k)
                    CHECK(f_value(p, n, s, k + 1, s) >= f_value(p, n, s, k, s));
}

TEST_CASE("landweber degree function") {
    long first8[] = {2, 4, 8, 16, 16, 16, 16, 32};
    for (long k = 1; k <= 8; ++k) CHECK(landweber_g(k) == first8[k - 1]);
    for (long k = 1; k <= 56; ++k) CHECK(landweber_g(k + 8) == 16 * landweber_g(k));
    for (long k = 1; k <= 64; ++k) CHECK(f_value(2, 1, 1, k, 1) == landweber_g(k));
    for (long kp = 1; kp <= 32; ++kp) CHECK(degree_image(2, 1, kp, 1) == landweber_g(2 * kp));
}

TEST_CASE("odd primary degree image") {
    for (unsigned long p : {3ul, 5ul})
        for (long kp = 1; kp <= 40; ++kp) {
            unsigned long e = 1 + static_cast<unsigned long>(kp) / (p - 1);
            CHECK(degree_image(p, 1, kp, 1) == big_pow(BigInt(p), e));
        }
}

TEST_CASE("ceiling form of the column exponent") {
    for (long M : {1L, 2L, 4L, 6L, 9L, 18L, 20L, 100L})
        for (long k = 1; k <= 200; ++k) CHECK((k + M) / M == (k + 1 + M - 1) / M);
}

TEST_CASE("gamma membership coefficients") {
    BurnsideElement x = from_t(2, 1, {1, 2});
    auto c2 = gamma_membership(x, 2);
    REQUIRE(c2.has_value());
    CHECK(*c2 == std::vector<BigInt>{0, 1});
    CHECK_FALSE(gamma_membership(x, 3).has_value());

    auto c3 = gamma_membership(from_t(2, 2, {1, 2, 0}), 3);
    REQUIRE(c3.has_value());
    CHECK(*c3 == std::vector<BigInt>{0, 1, 0});
}

TEST_CASE("filtration degree") {
    CHECK(mahowald_degree(from_t(2, 0, {4})) == 2);
    BurnsideElement x = from_t(2, 2, {0, 0, 8});
    CHECK(mahowald_degree(x) == 1);
    auto c = gamma_membership(x, 1);
    REQUIRE(c.has_value());
    CHECK(*c == std::vector<BigInt>{-5, -2, 4});
    CHECK(mahowald_degree(from_t(2, 2, {3, 1, 2})) == 7);
    CHECK_THROWS_AS(mahowald_degree(from_t(2, 1, {0, 0})), SpokeError);
}

TEST_CASE("eta family invariants") {
    for (const BurnsideElement& x : {from_t(2, 0, {2}), from_t(2, 1, {2, 0}),
                                     from_t(2, 1, {1, -2}), from_t(2, 2, {2, 0, 0})}) {
        MahowaldResult r = mahowald_invariant(x);
        CHECK(r.degree == 1);
        REQUIRE(r.j.has_value());
        CHECK(r.j->family == "eta");
        CHECK(r.display == "η");
    }
    MahowaldResult r2 = mahowald_invariant(from_t(2, 1, {1, 2}));
    CHECK(r2.degree == 2);
    CHECK(r2.j->family == "eta_squared");
    CHECK(r2.display == "η²");
}

TEST_CASE("third stem invariants") {
    MahowaldResult a = mahowald_invariant(from_t(2, 1, {2, 4}));
    CHECK(a.degree == 3);
    CHECK(a.j->raw == 2);
    CHECK(a.j->modulus == 8);
    CHECK(a.display == "2ν");

    MahowaldResult b = mahowald_invariant(from_t(2, 1, {4, 0}));
    CHECK(b.j->raw == -2);
    CHECK(b.j->coefficient == -2);
    CHECK(b.display == "-2ν");

    // n = 3 cases, including four copies of the free orbit
    MahowaldResult c = mahowald_invariant(from_t(2, 2, {4, 0, 0}));
    CHECK(c.degree == 3);
    CHECK(c.coefficients == std::vector<BigInt>{1, 0, 0});
    CHECK(c.j->raw == -2);
    CHECK(c.display == "-2ν");

    MahowaldResult d = mahowald_invariant(from_t(2, 2, {2, 4, 0}));
    CHECK(d.j->raw == 2);
    CHECK(d.display == "2ν");

    MahowaldResult e = mahowald_invariant(from_t(2, 2, {1, 2, 0}));
    CHECK(e.degree == 3);
    CHECK(e.j->raw == 1);
    CHECK(e.display == "ν");
}

TEST_CASE("seventh stem and beyond") {
    MahowaldResult s = mahowald_invariant(from_t(2, 2, {3, 1, 2}));
    CHECK(s.degree == 7);
    CHECK(s.j->l == 3);
    CHECK(s.j->raw == 2);
    CHECK(s.j->modulus == 16);
    CHECK(s.display == "2σ");

    MahowaldResult t = mahowald_invariant(from_t(2, 0, {16}));
    CHECK(t.degree == 7);
    CHECK(t.j->family == "j_generator");
    CHECK(t.j->raw == 8);
    CHECK(t.j->modulus == 16);
    CHECK(t.display == "8σ");

    MahowaldResult u = mahowald_invariant(from_t(2, 0, {32}));
    CHECK(u.degree == 9);
    CHECK(u.j->family == "P_eta");
    CHECK(u.display == "Pη");
    CHECK(u.j->indeterminacy == "Z/2{ηε}");

    MahowaldResult v = mahowald_invariant(from_t(2, 0, {64}));
    CHECK(v.degree == 10);
    CHECK(v.j->family == "P_eta_squared");
    CHECK(v.display == "Pη²");
}

TEST_CASE("odd primary invariants") {
    MahowaldResult a = mahowald_invariant(from_t(3, 0, {3}));
    CHECK(a.degree == 3);
    CHECK(a.j->family == "j_generator");
    CHECK(a.j->l == 1);
    CHECK(a.j->c == 1);
    CHECK(a.j->raw == 1);
    CHECK(a.j->modulus == 3);
    CHECK(a.display == "j_3^(3)");

    MahowaldResult b = mahowald_invariant(from_t(3, 0, {9}));
    CHECK(b.degree == 7);
    CHECK(b.j->raw == 1);
    CHECK(b.j->modulus == 3);
    CHECK(b.display == "j_7^(3)");

    MahowaldResult c = mahowald_invariant(from_t(3, 1, {3, 0}));
    CHECK(c.degree == 3);
    CHECK(c.j->raw == 1);

    MahowaldResult d = mahowald_invariant(from_t(5, 1, {5, 0}));
    CHECK(d.degree == 7);
    CHECK(d.display == "j_7^(5)");
}

TEST_CASE("degree zero residue") {
    MahowaldResult r = mahowald_invariant(from_t(2, 1, {1, 1}));
    CHECK(r.degree == 0);
    REQUIRE(r.residue.has_value());
    CHECK(*r.residue == -1);
    CHECK(r.display == "-1");
    CHECK_FALSE(r.j.has_value());
}

TEST_CASE("gamma bases") {
    auto b2 = gamma_basis(2, 2, 2);
    REQUIRE(b2.size() == 2);
    CHECK(to_marks(b2[0]) == MarksVector{8, 0});
    CHECK(to_marks(b2[1]) == MarksVector{4, 2});
    CHECK(b2[0] == from_t(2, 1, {4, 0}));
    CHECK(b2[1] == from_t(2, 1, {1, 2}));
    auto b3 = gamma_basis(2, 2, 3);
    CHECK(to_marks(b3[0]) == MarksVector{8, 0});
    CHECK(to_marks(b3[1]) == MarksVector{8, 4});

    for (unsigned long p : {2ul, 3ul})
        for (unsigned long n = 1; n <= 3; ++n)
            for (long kp = 1; kp <= 12; ++kp) CHECK(gamma_basis_transfer_check(p, n, kp));
}

TEST_CASE("closed form marks match the table") {
    for (unsigned long p : {2ul, 3ul})
        for (unsigned long n = 1; n <= 3; ++n) {
            GroupSpec g(p, n);
            for (long k = 1; k <= 24; ++k) CHECK(f_marks_consistency(g, k));
        }
    for (long kp = 1; kp <= 6; ++kp) {
        CHECK(f_even_consistency(2, 2, kp));
        CHECK(f_even_consistency(2, 3, kp));
        CHECK(f_even_consistency(3, 1, kp));
        CHECK(f_even_consistency(3, 2, kp));
    }
}

TEST_CASE("reduced ring presentation") {
    for (unsigned long p : {2ul, 3ul})
        for (unsigned long n = 1; n <= 3; ++n) {
            PresentationReport rep = presentation_check(p, n, 8);
            INFO("p=" << p << " n=" << n);
            CHECK(rep.ok());
            CHECK(rep.relations_checked > 0);
            CHECK(rep.failures.empty());
        }
}
