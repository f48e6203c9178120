#include "picard/gaussian.hpp"

#include "test_helpers.hpp"

#include "doctest.h"

using namespace picard;

TEST_CASE("gaussian integer products") {
    CHECK(GaussInt(1, 1) * GaussInt(1, -1) == GaussInt(2));
    CHECK(gauss_i() * gauss_i() == GaussInt(-1, 0));
    CHECK(GaussInt(2, 3) * GaussInt(4, 5) == GaussInt(-7, 22));
}

TEST_CASE("norms") {
    CHECK(GaussInt(1, 1).norm() == 2);
    CHECK(GaussInt(0, 0).norm() == 0);
    CHECK(GaussInt(3, 4).norm() == 25);
}

TEST_CASE("units") {
    CHECK(gauss_i().is_unit());
    CHECK(GaussInt(-1, 0).is_unit());
    CHECK_FALSE(GaussInt(1, 1).is_unit());
    // exactly 1, i, -1, -i
    int count = 0;
    for (long re = -2; re <= 2; ++re)
        for (long im = -2; im <= 2; ++im)
            if (GaussInt(re, im).is_unit()) ++count;
    CHECK(count == 4);
}

TEST_CASE("ring identities on random elements") {
    testing::Rng rng(7001);
    for (int k = 0; k < 300; ++k) {
        GaussInt a = rng.pick_gauss(50), b = rng.pick_gauss(50), c = rng.pick_gauss(50);
        CHECK((a + b) + c == a + (b + c));
        CHECK(a * (b + c) == a * b + a * c);
        CHECK((a * b).conj() == a.conj() * b.conj());
        CHECK((a * b).norm() == a.norm() * b.norm());
    }
}

TEST_CASE("gaussian rational canonical form") {
    GaussRat z(GaussInt(2, 4), Int(6));
    CHECK(z.num == GaussInt(1, 2));
    CHECK(z.den == 3);

    // negative denominators normalize away
    GaussRat w(GaussInt(1, 0), Int(-2));
    CHECK(w.num == GaussInt(-1, 0));
    CHECK(w.den == 2);

    // zero has a unique form
    CHECK(GaussRat(GaussInt(0), Int(17)) == GaussRat());

    // canonicalization is idempotent: rebuilding from components changes nothing
    testing::Rng rng(7002);
    for (int k = 0; k < 200; ++k) {
        GaussRat x = rng.pick_gauss_rat(40);
        CHECK(GaussRat(x.num, x.den) == x);
        CHECK(GaussRat(x.re(), x.im()) == x);
    }
}

TEST_CASE("gaussian rational field identities") {
    testing::Rng rng(7003);
    for (int k = 0; k < 200; ++k) {
        GaussRat a = rng.pick_gauss_rat(20), b = rng.pick_gauss_rat(20), c = rng.pick_gauss_rat(20);
        CHECK((a + b) * c == a * c + b * c);
        CHECK((a * b).conj() == a.conj() * b.conj());
        if (!b.is_zero()) CHECK((a / b) * b == a);
    }
    CHECK_THROWS_AS(GaussRat(GaussInt(1)) / GaussRat(), std::domain_error);
}

TEST_CASE("rational order is total and exact") {
    testing::Rng rng(7004);
    for (int k = 0; k < 300; ++k) {
        Rat a = rng.pick_rat(100), b = rng.pick_rat(100), c = rng.pick_rat(100);
        if (a < b && b < c) CHECK(a < c);
        CHECK(((a < b) + (a == b) + (b < a)) == 1);
    }
}

TEST_CASE("rational string round trip") {
    CHECK(to_string(make_rat(Int(3), Int(-6))) == "-1/2");
    CHECK(parse_rat("-1/2") == make_rat(Int(-1), Int(2)));
    CHECK(parse_rat("7") == Rat(7));
    CHECK_THROWS_AS(parse_rat("x/2"), std::invalid_argument);
    CHECK_THROWS_AS(make_rat(Int(1), Int(0)), std::domain_error);
}

TEST_CASE("big values survive exactly") {
    Int big = parse_int("123456789012345678901234567890");
    GaussInt z(big, big + 1);
    CHECK(z.norm() == big * big + (big + 1) * (big + 1));
    CHECK(parse_int(to_string(big)) == big);
}
