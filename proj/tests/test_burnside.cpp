#include <spoke/burnside.hpp>

#include <catch2/catch_amalgamated.hpp>

using namespace spoke;

namespace {

BurnsideElement from_t(unsigned long p, unsigned long m, std::vector<long> t) {
    GroupSpec g(p, m);
    std::vector<BigInt> c(t.begin(), t.end());
    return BurnsideElement(g, std::move(c));
}

}  // namespace

TEST_CASE("marks of the orbit basis") {
    GroupSpec g(2, 2);
    // rows phi_j(t_i): p^{m-i} for j <= i, else 0
    MarksVector t0 = to_marks(burnside_t(g, 0));
    MarksVector t1 = to_marks(burnside_t(g, 1));
    MarksVector t2 = to_marks(burnside_t(g, 2));
    CHECK(t0 == MarksVector{4, 0, 0});
    CHECK(t1 == MarksVector{2, 2, 0});
    CHECK(t2 == MarksVector{1, 1, 1});

    GroupSpec h(3, 1);
    CHECK(to_marks(burnside_t(h, 0)) == MarksVector{3, 0});
    CHECK(to_marks(burnside_t(h, 1)) == MarksVector{1, 1});

    CHECK(burnside_degree(from_t(2, 2, {1, 2, 3})) == 11);
}

TEST_CASE("z basis") {
    GroupSpec g(2, 2);
    CHECK(burnside_z(g, 0) == from_t(2, 2, {2, 0, 0}));
    CHECK(burnside_z(g, 1) == from_t(2, 2, {-1, 2, 0}));
    CHECK(to_marks(burnside_z(g, 1)) == MarksVector{0, 4, 0});
    CHECK(burnside_from_z_coeffs(g, {BigInt(0), BigInt(1), BigInt(0)}) == burnside_z(g, 1));
}

TEST_CASE("marks round trip and image test") {
    GroupSpec g(2, 1);
    BurnsideElement x = from_t(2, 1, {3, -2});
    CHECK(from_marks(g, to_marks(x)) == x);
    CHECK_THROWS_AS(from_marks(g, MarksVector{1, 0}), SpokeError);
    try {
        from_marks(g, MarksVector{1, 0});
    } catch (const SpokeError& e) {
        CHECK(e.kind() == ErrorKind::NotInBurnsideImage);
    }
}

TEST_CASE("multiplication through marks") {
    GroupSpec g(2, 1);
    // the free orbit squares to p copies of itself
    BurnsideElement free_orbit = burnside_t(g, 0);
    CHECK(multiply(free_orbit, free_orbit) == burnside_scaled(free_orbit, BigInt(2)));
    // the point is the unit
    BurnsideElement pt = burnside_one(g);
    CHECK(multiply(pt, from_t(2, 1, {5, -1})) == from_t(2, 1, {5, -1}));
}

TEST_CASE("mackey operations") {
    GroupSpec g(2, 2);
    BurnsideElement u = from_t(2, 1, {1, 2});
    BurnsideElement tu = transfer(u, 2);
    CHECK(tu == from_t(2, 2, {1, 2, 0}));
    CHECK(restriction(tu) == burnside_scaled(u, BigInt(2)));
    CHECK(to_marks(tu)[2] == 0);

    // restriction truncates marks
    BurnsideElement x = from_t(2, 2, {1, 1, 1});
    MarksVector mx = to_marks(x);
    MarksVector mr = to_marks(restriction(x));
    REQUIRE(mr.size() == 2);
    CHECK(mr[0] == mx[0]);
    CHECK(mr[1] == mx[1]);

    // geometric fixed points shift marks down
    MarksVector mg = to_marks(geometric_fixed(x));
    CHECK(mg[0] == mx[1]);
    CHECK(mg[1] == mx[2]);
}

TEST_CASE("norms") {
    GroupSpec g(2, 1);
    BurnsideElement n3 = norm_from_trivial(BigInt(3), g);
    CHECK(to_marks(n3) == MarksVector{9, 3});
    CHECK(n3 == from_t(2, 1, {3, 3}));
    GroupSpec h(3, 2);
    CHECK(to_marks(norm_from_trivial(BigInt(2), h)) == MarksVector{512, 8, 2});
}

TEST_CASE("lift through geometric fixed points") {
    // |x| = 4 at m = 1 lifts to an augmentation-zero element one level up
    BurnsideElement x = from_t(2, 1, {1, 2});
    BurnsideElement lifted = lift_through_phi(x);
    CHECK(lifted.group == GroupSpec(2, 2));
    CHECK(burnside_degree(lifted) == 0);
    CHECK(geometric_fixed(lifted) == x);

    BurnsideElement bad = from_t(2, 1, {1, 1});
    CHECK_THROWS_AS(lift_through_phi(bad), SpokeError);
    try {
        lift_through_phi(bad);
    } catch (const SpokeError& e) {
        CHECK(e.kind() == ErrorKind::AugmentationObstruction);
    }
}
