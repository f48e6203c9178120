#include "picard/langlands.hpp"

#include "picard/generators.hpp"
#include "picard/u2.hpp"
#include "test_helpers.hpp"

#include "doctest.h"

using namespace picard;

TEST_CASE("decompose golden values") {
    LanglandsParams p = decompose(GroupElement(gen_matrix(Gen::T1)));
    CHECK(p.scalar_unit == GaussInt(1));
    CHECK(p.tau1 == GaussRat(1, 0));
    CHECK(p.tau2 == GaussRat(1, 0));
    CHECK(p.t == 0);
    CHECK(p.r == 1);
    CHECK(p.U == Mat2q::identity());

    LanglandsParams rot = decompose(GroupElement(gen_matrix(Gen::M1)));
    CHECK(rot.tau1.is_zero());
    CHECK(rot.tau2.is_zero());
    CHECK(rot.t == 0);
    CHECK(rot.r == 1);
    CHECK(rot.U == widen(u2_gen_u1()));

    LanglandsParams mix = decompose(GroupElement(gen_matrix(Gen::T1) * gen_matrix(Gen::M2)));
    CHECK(mix.tau1 == GaussRat(1, 0));
    CHECK(mix.tau2 == GaussRat(1, 0));
    CHECK(mix.t == 0);
    CHECK(mix.U == widen(u2_gen_u2()));
}

TEST_CASE("recompose golden values") {
    LanglandsParams p = LanglandsParams::identity();
    p.t = Rat(2);
    CHECK(recompose(p) == widen(gen_matrix(Gen::T2)));
    CHECK(recompose(LanglandsParams::identity()) == Mat4q::identity());

    // recompose agrees with the three-factor product
    testing::Rng rng(7301);
    for (int k = 0; k < 50; ++k) {
        LanglandsParams q = LanglandsParams::identity();
        q.tau1 = rng.pick_gauss_rat(6);
        q.tau2 = rng.pick_gauss_rat(6);
        q.t = rng.pick_rat(6);
        q.r = abs(rng.pick_rat(6)) + 1;
        q.U = widen(enumerate_u2()[static_cast<std::size_t>(rng.pick(0, 31))]);
        Mat4q trip = translation({q.tau1, q.tau2, q.t}).mat() * dilation(q.r).mat() *
                     rotation(q.U).mat();
        CHECK(recompose(q) == trip);
    }
}

TEST_CASE("roundtrip on random stabilizer words") {
    testing::Rng rng(7302);
    for (int k = 0; k < 100; ++k) {
        Mat4z m = testing::evaluate_word_naive(rng.word(12, false));
        LanglandsParams p = decompose(GroupElement(m));
        CHECK(recompose(p) == widen(m));
        CHECK(p.scalar_unit == GaussInt(1));
        CHECK(p.r == 1);
        CHECK(is_even_integer(p.t));
        CHECK(is_even_integer(p.tau1.norm() + p.tau2.norm()));
    }
}

TEST_CASE("decompose after recompose recovers the parameters") {
    testing::Rng rng(7303);
    const GaussInt* units = gauss_units();
    for (int k = 0; k < 100; ++k) {
        LanglandsParams p = LanglandsParams::identity();
        p.scalar_unit = units[rng.pick(0, 3)];
        p.tau1 = rng.pick_gauss_rat(5);
        p.tau2 = rng.pick_gauss_rat(5);
        p.t = rng.pick_rat(5);
        p.r = abs(rng.pick_rat(5)) + Rat(1, 3);
        p.U = widen(enumerate_u2()[static_cast<std::size_t>(rng.pick(0, 31))]);
        LanglandsParams q = decompose(GroupElement(recompose(p)));
        CHECK(q.scalar_unit == p.scalar_unit);
        CHECK(q.tau1 == p.tau1);
        CHECK(q.tau2 == p.tau2);
        CHECK(q.t == p.t);
        CHECK(q.r == p.r);
        CHECK(q.U == p.U);
    }
}

TEST_CASE("scalar units are factored out, not dropped") {
    // i * T1 is integral, J-unitary, and needs the scalar parameter
    Mat4q m = widen(gen_matrix(Gen::T1));
    for (auto& x : m.e) x = GaussRat(gauss_i()) * x;
    LanglandsParams p = decompose(GroupElement(m));
    CHECK(p.scalar_unit == gauss_i());
    CHECK(p.tau1 == GaussRat(1, 0));
    CHECK(p.r == 1);
    CHECK(recompose(p) == m);
}

TEST_CASE("decompose error cases") {
    CHECK_THROWS_AS(decompose(GroupElement(gen_matrix(Gen::R))), NotInStabilizer);

    // J-unitary with corner 1+i: no unit times a positive rational fits
    Mat4q m;
    m(0, 0) = GaussRat(1, 1);
    m(1, 1) = GaussRat(1, 0);
    m(2, 2) = GaussRat(1, 0);
    m(3, 3) = GaussRat(GaussInt(1, 1), Int(2));
    CHECK(is_j_unitary(m));
    CHECK_THROWS_AS(decompose(GroupElement(m)), UnitNormalizationNeeded);
}
