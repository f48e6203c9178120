#include "picard/heisenberg.hpp"

#include "picard/generators.hpp"
#include "test_helpers.hpp"

#include "doctest.h"

using namespace picard;

namespace {

HeisPoint pt(long x1re, long x1im, long x2re, long x2im, Rat nu) {
    return {GaussRat(x1re, x1im), GaussRat(x2re, x2im), std::move(nu)};
}

HeisPoint random_point(testing::Rng& rng) {
    return {rng.pick_gauss_rat(8), rng.pick_gauss_rat(8), rng.pick_rat(8)};
}

} // namespace

TEST_CASE("group law golden values") {
    HeisPoint e = pt(0, 0, 0, 0, Rat(0));
    HeisPoint z = pt(0, 1, 0, 0, Rat(0));
    CHECK(heis_mul(e, z) == z);
    CHECK(heis_mul(z, e) == z);

    // ((1,0),0)*((i,0),0): pairing conj(i)*1 = -i, so the center picks up -2.
    HeisPoint a = pt(1, 0, 0, 0, Rat(0));
    CHECK(heis_mul(a, z) == pt(1, 1, 0, 0, Rat(-2)));

    HeisPoint p = pt(2, -1, 0, 3, Rat(5));
    CHECK(heis_mul(p, heis_inverse(p)) == e);
    CHECK(heis_mul(heis_inverse(p), p) == e);
}

TEST_CASE("group law is associative") {
    testing::Rng rng(7201);
    for (int k = 0; k < 150; ++k) {
        HeisPoint a = random_point(rng), b = random_point(rng), c = random_point(rng);
        CHECK(heis_mul(heis_mul(a, b), c) == heis_mul(a, heis_mul(b, c)));
    }
}

TEST_CASE("psi golden values") {
    Vec4q origin = psi(pt(0, 0, 0, 0, Rat(0)));
    CHECK(origin[0] == GaussRat());
    CHECK(origin[3] == GaussRat(GaussInt(1)));

    Vec4q v = psi(pt(1, 0, 1, 0, Rat(0)));
    CHECK(v[0] == GaussRat(-1, 0));
    CHECK(v[1] == GaussRat(1, 0));
    CHECK(v[2] == GaussRat(1, 0));
    CHECK(v[3] == GaussRat(1, 0));
}

TEST_CASE("psi lands on the cone: <psi,psi> = -u") {
    testing::Rng rng(7202);
    for (int k = 0; k < 100; ++k) {
        Rat u = abs(rng.pick_rat(9));
        HoroPoint p(rng.pick_gauss_rat(9), rng.pick_gauss_rat(9), rng.pick_rat(9), u);
        GaussRat val = hermitian_product(psi(p), psi(p));
        CHECK(val.im() == 0);
        CHECK(val.re() == -u);
    }
    CHECK_THROWS_AS(HoroPoint(GaussRat(), GaussRat(), Rat(0), Rat(-1)), std::domain_error);
}

TEST_CASE("translation golden matrices") {
    CHECK(translation({GaussRat(1, 0), GaussRat(1, 0), Rat(0)}).mat() ==
          widen(gen_matrix(Gen::T1)));
    CHECK(translation({GaussRat(), GaussRat(), Rat(2)}).mat() == widen(gen_matrix(Gen::T2)));
    CHECK(translation({GaussRat(), GaussRat(), Rat(0)}).mat() == Mat4q::identity());
    // corner of the vertical translation is i
    CHECK(translation({GaussRat(), GaussRat(), Rat(2)}).mat()(0, 3) == GaussRat(0, 1));
}

TEST_CASE("rational and integral translation builders agree") {
    testing::Rng rng(7205);
    for (int k = 0; k < 60; ++k) {
        GaussInt a = rng.pick_gauss(6), b = rng.pick_gauss(6);
        if (mpz_odd_p(Int(a.norm() + b.norm()).get_mpz_t())) a += GaussInt(1, 0);
        Int t = 2 * rng.pick_int(-5, 5);
        Mat4q from_rat =
            translation({GaussRat(a), GaussRat(b), Rat(t)}).mat();
        CHECK(from_rat == widen(integral_translation(a, b, t)));
    }
}

TEST_CASE("rotation golden matrices") {
    CHECK(rotation(u2_gen_u1()).mat() == widen(gen_matrix(Gen::M1)));
    CHECK(rotation(u2_gen_u2()).mat() == widen(gen_matrix(Gen::M2)));
    CHECK(rotation(Mat2z::identity()).mat() == Mat4q::identity());

    Mat2q bad;
    bad(0, 0) = GaussRat(2, 0);
    bad(1, 1) = GaussRat(1, 0);
    CHECK_THROWS_AS(rotation(bad), std::invalid_argument);
}

TEST_CASE("dilations form a one-parameter subgroup") {
    CHECK(dilation(Rat(1)).mat() == Mat4q::identity());

    GroupElement a2 = dilation(Rat(2));
    CHECK(is_j_unitary(a2.mat()));
    CHECK_FALSE(is_integral(a2.mat()));
    CHECK(a2.mat()(3, 3) == GaussRat(GaussInt(1), Int(2)));

    Rat r(3, 2), s(5, 7);
    CHECK((dilation(r) * dilation(s)).mat() == dilation(r * s).mat());
    CHECK_THROWS_AS(dilation(Rat(0)), std::invalid_argument);
    CHECK_THROWS_AS(dilation(Rat(-2)), std::invalid_argument);
}

TEST_CASE("inversion golden facts") {
    GroupElement r = inversion();
    CHECK(r.mat() == widen(gen_matrix(Gen::R)));
    CHECK((r * r).mat() == Mat4q::identity());
    CHECK(is_member(r.mat()));
    // swaps 0 and infinity
    CHECK(r.mat() * psi(pt(0, 0, 0, 0, Rat(0))) == psi_infinity());
    CHECK_THROWS_AS(boundary_action(r, pt(0, 0, 0, 0, Rat(0))), MapsToInfinity);
}

TEST_CASE("boundary action golden values") {
    GroupElement n = translation({GaussRat(1, 0), GaussRat(1, 0), Rat(0)});
    CHECK(boundary_action(n, pt(0, 0, 0, 0, Rat(0))) == pt(1, 0, 1, 0, Rat(0)));

    // inversion on the center axis: nu = 2 goes to nu = -2
    GroupElement r = inversion();
    CHECK(boundary_action(r, pt(0, 0, 0, 0, Rat(2))) == pt(0, 0, 0, 0, Rat(-2)));

    GroupElement m2 = rotation(u2_gen_u2());
    CHECK(boundary_action(m2, pt(1, 0, 1, 0, Rat(0))) == pt(0, 1, 1, 0, Rat(0)));
}

TEST_CASE("boundary action is a group action") {
    testing::Rng rng(7203);
    for (int k = 0; k < 60; ++k) {
        GroupElement g{testing::evaluate_word_naive(rng.word(5, true))};
        GroupElement h{testing::evaluate_word_naive(rng.word(5, true))};
        HeisPoint p = random_point(rng);
        try {
            HeisPoint via_h = boundary_action(h, p);
            CHECK(boundary_action(g * h, p) == boundary_action(g, via_h));
        } catch (const MapsToInfinity&) {
            // fine: the composite may pass through infinity
        }
    }
}

TEST_CASE("matrix action of translations agrees with the group law") {
    testing::Rng rng(7204);
    for (int k = 0; k < 120; ++k) {
        HeisTranslationParams params{rng.pick_gauss_rat(7), rng.pick_gauss_rat(7),
                                     rng.pick_rat(7)};
        HeisPoint p = random_point(rng);
        HeisPoint lhs = boundary_action(translation(params), p);
        HeisPoint rhs = heis_mul({params.tau1, params.tau2, params.t}, p);
        CHECK(lhs == rhs);
    }
}
