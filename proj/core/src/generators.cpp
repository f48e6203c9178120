#include "picard/generators.hpp"

#include <stdexcept>

namespace picard {

namespace {

Mat4z make_t1() { return integral_translation(GaussInt(1), GaussInt(1), Int(0)); }
Mat4z make_t2() { return integral_translation(GaussInt(0), GaussInt(0), Int(2)); }

Mat4z make_rotation(const Mat2z& u) {
    Mat4z m = Mat4z::identity();
    m(1, 1) = u(0, 0);
    m(1, 2) = u(0, 1);
    m(2, 1) = u(1, 0);
    m(2, 2) = u(1, 1);
    return m;
}

Mat4z make_r() {
    Mat4z m;
    m(0, 3) = GaussInt(1);
    m(3, 0) = GaussInt(1);
    m(1, 1) = GaussInt(-1);
    m(2, 2) = GaussInt(-1);
    return m;
}

} // namespace

const Mat2z& u2_gen_u1() {
    static const Mat2z u = [] {
        Mat2z m;
        m(0, 1) = GaussInt(1);
        m(1, 0) = GaussInt(1);
        return m;
    }();
    return u;
}

const Mat2z& u2_gen_u2() {
    static const Mat2z u = [] {
        Mat2z m;
        m(0, 0) = gauss_i();
        m(1, 1) = GaussInt(1);
        return m;
    }();
    return u;
}

const Mat4z& gen_matrix(Gen g) {
    static const Mat4z t1 = make_t1();
    static const Mat4z t2 = make_t2();
    static const Mat4z m1 = make_rotation(u2_gen_u1());
    static const Mat4z m2 = make_rotation(u2_gen_u2());
    static const Mat4z r = make_r();
    switch (g) {
        case Gen::T1: return t1;
        case Gen::T2: return t2;
        case Gen::M1: return m1;
        case Gen::M2: return m2;
        case Gen::R: return r;
    }
    throw std::logic_error("bad generator tag");
}

const Mat4z& gen_inverse(Gen g) {
    static const Mat4z t1i = integral_translation(GaussInt(-1), GaussInt(-1), Int(0));
    static const Mat4z t2i = integral_translation(GaussInt(0), GaussInt(0), Int(-2));
    static const Mat4z m2i = [] {
        Mat2z u;
        u(0, 0) = GaussInt(0, -1);
        u(1, 1) = GaussInt(1);
        return make_rotation(u);
    }();
    switch (g) {
        case Gen::T1: return t1i;
        case Gen::T2: return t2i;
        case Gen::M1: return gen_matrix(Gen::M1);
        case Gen::M2: return m2i;
        case Gen::R: return gen_matrix(Gen::R);
    }
    throw std::logic_error("bad generator tag");
}

std::string_view gen_name(Gen g) {
    switch (g) {
        case Gen::T1: return "T1";
        case Gen::T2: return "T2";
        case Gen::M1: return "M1";
        case Gen::M2: return "M2";
        case Gen::R: return "R";
    }
    throw std::logic_error("bad generator tag");
}

std::optional<Gen> gen_from_name(std::string_view name) {
    for (Gen g : kAllGens)
        if (gen_name(g) == name) return g;
    return std::nullopt;
}

Mat4z integral_translation(const GaussInt& tau1, const GaussInt& tau2, const Int& t) {
    Int norm_sq = tau1.norm() + tau2.norm();
    if (mpz_odd_p(norm_sq.get_mpz_t()) || mpz_odd_p(t.get_mpz_t()))
        throw std::invalid_argument("translation parameters leave Z[i]: need |tau|^2 and t even");
    Mat4z m = Mat4z::identity();
    m(0, 1) = -tau1.conj();
    m(0, 2) = -tau2.conj();
    m(0, 3) = GaussInt(-norm_sq / 2, t / 2);
    m(1, 3) = tau1;
    m(2, 3) = tau2;
    return m;
}

Mat4z gen_power(Gen g, const Int& e) {
    switch (g) {
        case Gen::T1: return integral_translation(GaussInt(e), GaussInt(e), Int(0));
        case Gen::T2: return integral_translation(GaussInt(0), GaussInt(0), Int(2 * e));
        case Gen::M1:
        case Gen::R: {
            bool odd = mpz_odd_p(e.get_mpz_t());
            return odd ? gen_matrix(g) : Mat4z::identity();
        }
        case Gen::M2: {
            Int rem = e % 4;
            if (rem < 0) rem += 4;
            Mat4z m = Mat4z::identity();
            for (Int k = 0; k < rem; ++k) m = m * gen_matrix(Gen::M2);
            return m;
        }
    }
    throw std::logic_error("bad generator tag");
}

} // namespace picard
