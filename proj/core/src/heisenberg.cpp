#include "picard/heisenberg.hpp"

#include <stdexcept>

namespace picard {

namespace {

Rat imag_part(const GaussRat& z) { return z.im(); }

} // namespace

HoroPoint::HoroPoint(GaussRat x1, GaussRat x2, Rat n, Rat height)
    : xi1(std::move(x1)), xi2(std::move(x2)), nu(std::move(n)), u(std::move(height)) {
    if (u < 0) throw std::domain_error("horospherical height must be nonnegative");
}

HeisPoint heis_mul(const HeisPoint& p, const HeisPoint& q) {
    GaussRat pairing = q.xi1.conj() * p.xi1 + q.xi2.conj() * p.xi2;
    return {p.xi1 + q.xi1, p.xi2 + q.xi2, p.nu + q.nu + 2 * imag_part(pairing)};
}

HeisPoint heis_inverse(const HeisPoint& p) { return {-p.xi1, -p.xi2, -p.nu}; }

Vec4q psi(const HoroPoint& p) {
    Rat norm_sq = p.xi1.norm() + p.xi2.norm();
    Rat re = (-norm_sq - p.u) / 2;
    Vec4q v;
    v[0] = GaussRat(re, p.nu / 2);
    v[1] = p.xi1;
    v[2] = p.xi2;
    v[3] = GaussRat(GaussInt(1));
    return v;
}

Vec4q psi_infinity() {
    Vec4q v;
    v[0] = GaussRat(GaussInt(1));
    return v;
}

GroupElement translation(const HeisTranslationParams& params) {
    Rat norm_sq = params.tau1.norm() + params.tau2.norm();
    Mat4q m = Mat4q::identity();
    m(0, 1) = -params.tau1.conj();
    m(0, 2) = -params.tau2.conj();
    m(0, 3) = GaussRat(-norm_sq / 2, params.t / 2);
    m(1, 3) = params.tau1;
    m(2, 3) = params.tau2;
    return GroupElement(std::move(m));
}

GroupElement rotation(const Mat2q& U) {
    if (U.conj_transpose() * U != Mat2q::identity())
        throw std::invalid_argument("rotation block is not unitary");
    Mat4q m = Mat4q::identity();
    m(1, 1) = U(0, 0);
    m(1, 2) = U(0, 1);
    m(2, 1) = U(1, 0);
    m(2, 2) = U(1, 1);
    return GroupElement(std::move(m));
}

GroupElement rotation(const Mat2z& U) { return rotation(widen(U)); }

GroupElement dilation(const Rat& r) {
    if (r <= 0) throw std::invalid_argument("dilation factor must be positive");
    Mat4q m = Mat4q::identity();
    m(0, 0) = GaussRat(r, Rat(0));
    m(3, 3) = GaussRat(Rat(1) / r, Rat(0));
    return GroupElement(std::move(m));
}

GroupElement inversion() {
    Mat4q m;
    m(0, 3) = GaussRat(GaussInt(1));
    m(3, 0) = GaussRat(GaussInt(1));
    m(1, 1) = GaussRat(GaussInt(-1));
    m(2, 2) = GaussRat(GaussInt(-1));
    return GroupElement(std::move(m));
}

HeisPoint boundary_action(const GroupElement& g, const HeisPoint& p) {
    Vec4q v = g.mat() * psi(p);
    if (v[3].is_zero()) throw MapsToInfinity();
    GaussRat first = v[0] / v[3];
    HeisPoint q{v[1] / v[3], v[2] / v[3], 2 * imag_part(first)};
    // Image of a null vector is null, so Re(first) must be -|xi|^2/2.
    if (2 * first.re() != -(q.xi1.norm() + q.xi2.norm()))
        throw std::logic_error("boundary action left the null cone");
    return q;
}

} // namespace picard
