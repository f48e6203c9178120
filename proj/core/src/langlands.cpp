#include "picard/langlands.hpp"

#include <sstream>

namespace picard {

LanglandsParams LanglandsParams::identity() {
    LanglandsParams p;
    p.scalar_unit = GaussInt(1);
    p.t = Rat(0);
    p.r = Rat(1);
    p.U = Mat2q::identity();
    return p;
}

LanglandsParams decompose(const Mat4q& m) {
    if (!is_j_unitary(m)) throw std::invalid_argument("decompose requires a J-unitary matrix");
    return decompose(GroupElement(m));
}

LanglandsParams decompose(const GroupElement& g) {
    const Mat4q& m = g.mat();
    if (!m(3, 0).is_zero()) throw NotInStabilizer();

    // P11 = lambda * r with lambda a fourth root of unity and r > 0 rational.
    const GaussRat& corner = m(0, 0);
    GaussInt lambda;
    Rat r;
    if (corner.im() == 0) {
        Rat re = corner.re();
        lambda = re > 0 ? GaussInt(1) : GaussInt(-1);
        r = abs(re);
    } else if (corner.re() == 0) {
        Rat im = corner.im();
        lambda = im > 0 ? gauss_i() : -gauss_i();
        r = abs(im);
    } else {
        throw UnitNormalizationNeeded();
    }
    if (r == 0) throw UnitNormalizationNeeded();

    GaussRat inv_lambda(lambda.conj());
    LanglandsParams p;
    p.scalar_unit = lambda;
    p.r = r;
    p.U(0, 0) = inv_lambda * m(1, 1);
    p.U(0, 1) = inv_lambda * m(1, 2);
    p.U(1, 0) = inv_lambda * m(2, 1);
    p.U(1, 1) = inv_lambda * m(2, 2);
    GaussRat rq(r, Rat(0));
    p.tau1 = inv_lambda * m(1, 3) * rq;
    p.tau2 = inv_lambda * m(2, 3) * rq;
    // corner entry of N A M is (-|tau|^2 + i t) / 2r
    GaussRat two_r_corner = inv_lambda * m(0, 3) * GaussRat(2 * r, Rat(0));
    p.t = two_r_corner.im();

    if (recompose(p) != m) {
        std::ostringstream os;
        os << "stabilizer element does not factor as translation*dilation*rotation:\n" << m;
        throw std::invalid_argument(os.str());
    }
    return p;
}

Mat4q recompose(const LanglandsParams& params) {
    if (!params.scalar_unit.is_unit())
        throw std::invalid_argument("scalar_unit must be a unit of Z[i]");
    if (params.r <= 0) throw std::invalid_argument("dilation parameter must be positive");
    if (params.U.conj_transpose() * params.U != Mat2q::identity())
        throw std::invalid_argument("rotation block is not unitary");

    GaussRat lambda(params.scalar_unit);
    GaussRat r(params.r, Rat(0));
    GaussRat inv_r(Rat(1) / params.r, Rat(0));
    Rat norm_sq = params.tau1.norm() + params.tau2.norm();
    GaussRat corner = GaussRat(-norm_sq / 2, params.t / 2) * inv_r;

    Mat4q m;
    m(0, 0) = lambda * r;
    m(0, 1) = lambda * -(params.tau1.conj() * params.U(0, 0) + params.tau2.conj() * params.U(1, 0));
    m(0, 2) = lambda * -(params.tau1.conj() * params.U(0, 1) + params.tau2.conj() * params.U(1, 1));
    m(0, 3) = lambda * corner;
    m(1, 1) = lambda * params.U(0, 0);
    m(1, 2) = lambda * params.U(0, 1);
    m(2, 1) = lambda * params.U(1, 0);
    m(2, 2) = lambda * params.U(1, 1);
    m(1, 3) = lambda * params.tau1 * inv_r;
    m(2, 3) = lambda * params.tau2 * inv_r;
    m(3, 3) = lambda * inv_r;
    return m;
}

GroupElement recompose_element(const LanglandsParams& params) {
    return GroupElement(recompose(params));
}

} // namespace picard
