#include <spoke/repring.hpp>

#include <catch2/catch_amalgamated.hpp>

#include <random>

using namespace spoke;

namespace {

RUElement random_element(std::mt19937_64& rng, const GroupSpec& g) {
    std::uniform_int_distribution<long> dist(-5, 5);
    RUElement x = ru_zero(g);
    for (auto& c : x.coeffs) c = BigInt(dist(rng));
    return x;
}

}  // namespace

TEST_CASE("ring basics") {
    GroupSpec g21(2, 1);
    RUElement one = ru_one(g21);
    RUElement L = ru_L_power(g21, 1);
    RUElement s = ru_add(one, L);
    CHECK(ru_mul(s, s) == ru_scaled(s, BigInt(2)));
    CHECK(ru_L_power(g21, -1) == L);
    CHECK(augmentation(s) == 2);

    // the regular character kills every Euler factor
    GroupSpec g32(3, 2);
    RUElement reg = t_as_ru(g32, 0);
    CHECK(ru_is_zero(ru_mul(ru_sub(ru_one(g32), ru_L_power(g32, 1)), reg)));

    // restriction is a ring map onto the smaller exponent ring
    RUElement t2 = t_as_ru(GroupSpec(2, 3), 2);
    CHECK(ru_restrict(t2, 2) == ru_scalar(GroupSpec(2, 2), BigInt(2)));
}

TEST_CASE("adams operations are ring homomorphisms") {
    std::mt19937_64 rng(17);
    for (const GroupSpec& g : {GroupSpec(2, 2), GroupSpec(3, 2)}) {
        for (int trial = 0; trial < 25; ++trial) {
            RUElement x = random_element(rng, g);
            RUElement y = random_element(rng, g);
            for (long ell : {2L, 3L, -1L}) {
                CHECK(adams(ru_mul(x, y), ell) == ru_mul(adams(x, ell), adams(y, ell)));
                CHECK(adams(ru_add(x, y), ell) == ru_add(adams(x, ell), adams(y, ell)));
            }
            CHECK(adams(adams(x, 3), -1) == adams(x, -3));
        }
    }
}

TEST_CASE("character values") {
    GroupSpec g23(2, 3);
    RUElement e = ru_mul(ru_sub(ru_one(g23), ru_L_power(g23, 1)),
                         ru_sub(ru_one(g23), ru_L_power(g23, -1)));
    CyclotomicValue cv = char_value(e, 2);
    CHECK(cyc_is_rational(cv));
    CHECK(cyc_rational(cv) == 2);

    GroupSpec g21(2, 1);
    CyclotomicValue cm = char_value(ru_L_power(g21, 1), 1);
    CHECK(cyc_is_rational(cm));
    CHECK(cyc_rational(cm) == -1);

    // a single root of unity at level 2 for p = 2 is irrational
    GroupSpec g22(2, 2);
    CHECK_FALSE(cyc_is_rational(char_value(ru_L_power(g22, 1), 2)));

    // t-characters: p^{n-s} at levels <= s, zero above
    GroupSpec g33(3, 3);
    for (unsigned long s = 0; s <= 3; ++s)
        for (unsigned long j = 0; j <= 3; ++j) {
            CyclotomicValue v = char_value(t_as_ru(g33, s), j);
            REQUIRE(cyc_is_rational(v));
            CHECK(cyc_rational(v) == (j <= s ? big_pow(BigInt(3), 3 - s) : BigInt(0)));
        }

    // z-characters are diagonal: p^{n+1-i} exactly at level i
    GroupSpec gz(2, 2);
    for (unsigned long i = 1; i <= 2; ++i)
        for (unsigned long j = 0; j <= 2; ++j) {
            CyclotomicValue v = char_value(z_as_ru(gz, i), j);
            REQUIRE(cyc_is_rational(v));
            CHECK(cyc_rational(v) == (j == i ? big_pow(BigInt(2), 3 - i) : BigInt(0)));
        }
}

TEST_CASE("w characters and aligned blocks") {
    GroupSpec g22(2, 2);
    RUElement w = w_character(2, g22);
    CHECK(w == ru_add(ru_L_power(g22, 1), ru_L_power(g22, 3)));

    CHECK(dseq_block_restriction_check(2, 3, 2, 0, 2));
    CHECK(dseq_block_restriction_check(3, 2, 2, 0, 6));
    CHECK(dseq_block_restriction_check(2, 3, 1, 5, 1));

    DSequence d2(2);
    long expect2[] = {1, -1, 3, -3, 5, -5, 7, -7};
    for (std::size_t m = 1; m <= 8; ++m) CHECK(d2.d(m) == expect2[m - 1]);
    DSequence d3(3);
    long expect3[] = {1, -1, 2, -2, 4, -4};
    for (std::size_t m = 1; m <= 6; ++m) CHECK(d3.d(m) == expect3[m - 1]);

    // blocks multiply
    GroupSpec g32(3, 2);
    CHECK(euler_block(g32, 0, 5) == ru_mul(euler_block(g32, 0, 2), euler_block(g32, 2, 5)));
    // the regular character annihilates any Euler factor
    CHECK(ru_is_zero(ru_mul(t_as_ru(g32, 0), euler_block(g32, 0, 1))));
}

TEST_CASE("bott multipliers") {
    GroupSpec g21(2, 1);
    CHECK(bott_multiplier(g21, 1, 3) == ru_add(ru_scalar(g21, 2), ru_L_power(g21, 1)));

    // telescope: (1 - L^d) m(d, ell) = 1 - L^{ell d} for either sign of ell
    for (const GroupSpec& g : {GroupSpec(2, 3), GroupSpec(3, 2)}) {
        for (long d : {1L, -1L, 3L, 5L})
            for (long ell : {3L, -1L, 2L, 5L, -2L}) {
                RUElement lhs = ru_mul(ru_sub(ru_one(g), ru_L_power(g, d)),
                                       bott_multiplier_single(g, d, ell));
                CHECK(lhs == ru_sub(ru_one(g), ru_L_power(g, ell * d)));
            }
        // cocycle: B_m(ell^2) = psi^ell(B_m(ell)) B_m(ell)
        for (std::size_t m = 1; m <= 3; ++m)
            for (long ell : {3L, -1L}) {
                RUElement b = bott_multiplier(g, m, ell);
                CHECK(bott_multiplier(g, m, ell * ell) == ru_mul(adams(b, ell), b));
            }
    }

    GroupSpec g23(2, 3);
    BottMultiplierCache cache(g23, 3);
    for (std::size_t m = 0; m <= 4; ++m) CHECK(cache.at(m) == bott_multiplier(g23, m, 3));
}

TEST_CASE("adams fixes w powers") {
    CHECK(verify_adams_on_w_power(2, 1, 3, 1));
    CHECK(verify_adams_on_w_power(3, 1, 2, 1));
    CHECK(verify_adams_on_w_power(2, 3, 3, 1));
    CHECK(verify_adams_on_w_power(2, 3, -1, 1));
    CHECK(verify_adams_on_w_power(5, 2, 2, 1));
}

TEST_CASE("fixed values and power degrees") {
    CHECK(bott_fixed_value(GroupSpec(2, 2), 1, 2) == 2);
    CHECK(bott_fixed_value(GroupSpec(2, 3), 1, 1) == 16);
    CHECK(bott_fixed_value(GroupSpec(3, 1), 2, 1) == 9);

    auto pm = power_map_degrees(4, GroupSpec(2, 2));
    REQUIRE(pm.size() == 3);
    CHECK(pm[0] == 4);
    CHECK(pm[1] == 0);
    CHECK(pm[2] == 0);
    auto pm2 = power_map_degrees(3, GroupSpec(3, 2));
    CHECK(pm2[0] == 3);
    CHECK(pm2[1] == 0);
    CHECK(pm2[2] == 1);

    CHECK(canonical_adams_base(3) == 2);
    CHECK(canonical_adams_base(5) == 2);
    CHECK(canonical_adams_base(7) == 3);
}
