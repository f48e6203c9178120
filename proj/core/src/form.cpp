#include "picard/form.hpp"

#include <sstream>
#include <stdexcept>

namespace picard {

const Mat4z& form_matrix() {
    static const Mat4z j = [] {
        Mat4z m;
        m(0, 3) = GaussInt(1);
        m(1, 1) = GaussInt(1);
        m(2, 2) = GaussInt(1);
        m(3, 0) = GaussInt(1);
        return m;
    }();
    return j;
}

const Mat4q& form_matrix_q() {
    static const Mat4q j = widen(form_matrix());
    return j;
}

GaussRat hermitian_product(const Vec4q& w, const Vec4q& z) {
    // z* J w with the antidiagonal J: conj(z1) w4 + conj(z2) w2 + conj(z3) w3 + conj(z4) w1
    return z[0].conj() * w[3] + z[1].conj() * w[1] + z[2].conj() * w[2] + z[3].conj() * w[0];
}

bool is_integral(const Mat4q& m) {
    for (const auto& x : m.e)
        if (!x.is_integral()) return false;
    return true;
}

bool is_j_unitary(const Mat4q& m) {
    return m.conj_transpose() * form_matrix_q() * m == form_matrix_q();
}

bool is_j_unitary(const Mat4z& m) {
    return m.conj_transpose() * form_matrix() * m == form_matrix();
}

bool is_member(const Mat4q& m) { return is_integral(m) && is_j_unitary(m); }

bool is_member(const Mat4z& m) { return is_j_unitary(m); }

GroupElement::GroupElement(Mat4q m) : m_(std::move(m)) {
    if (!is_j_unitary(m_)) {
        std::ostringstream os;
        os << "matrix is not J-unitary:\n" << m_;
        throw std::invalid_argument(os.str());
    }
}

GroupElement GroupElement::inverse() const {
    return unchecked(form_matrix_q() * m_.conj_transpose() * form_matrix_q());
}

Mat4z j_inverse(const Mat4z& m) { return form_matrix() * m.conj_transpose() * form_matrix(); }

Mat4q j_inverse(const Mat4q& m) {
    return form_matrix_q() * m.conj_transpose() * form_matrix_q();
}

bool stabilizes_infinity(const Mat4q& m) { return m(3, 0).is_zero(); }

} // namespace picard
