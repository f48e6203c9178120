#pragma once

#include "picard/matrix.hpp"

namespace picard {

/// The Hermitian form matrix J of signature (3,1): ones at the (1,4) and
/// (4,1) corners, the 2x2 identity in the middle block.
const Mat4z& form_matrix();
const Mat4q& form_matrix_q();

/// <w,z> = z* J w. Linear in w, conjugate-linear in z.
GaussRat hermitian_product(const Vec4q& w, const Vec4q& z);

bool is_integral(const Mat4q& m);
bool is_j_unitary(const Mat4q& m); // G* J G == J exactly
bool is_j_unitary(const Mat4z& m);

/// Membership in U(3,1;Z[i]): J-unitary with all entries in Z[i].
bool is_member(const Mat4q& m);
bool is_member(const Mat4z& m);

/// A J-unitary 4x4 matrix. Construction validates the form identity, so a
/// live GroupElement always satisfies G* J G = J.
class GroupElement {
public:
    explicit GroupElement(Mat4q m);
    explicit GroupElement(const Mat4z& m) : GroupElement(widen(m)) {}

    const Mat4q& mat() const { return m_; }
    bool integral_entries() const { return is_integral(m_); }

    /// Inverse via J G* J: exact and division-free, so integral elements
    /// keep integral inverses.
    GroupElement inverse() const;

    friend GroupElement operator*(const GroupElement& a, const GroupElement& b) {
        return GroupElement(unchecked(a.m_ * b.m_));
    }
    friend bool operator==(const GroupElement& a, const GroupElement& b) {
        return a.m_ == b.m_;
    }

private:
    struct Unchecked {};
    GroupElement(Mat4q m, Unchecked) : m_(std::move(m)) {}
    static GroupElement unchecked(Mat4q m) { return GroupElement(std::move(m), Unchecked{}); }
    Mat4q m_;
};

/// J G* J; equals the matrix inverse whenever G is J-unitary.
Mat4z j_inverse(const Mat4z& m);
Mat4q j_inverse(const Mat4q& m);

/// Entry (4,1) vanishes; together with J-unitarity this pins the whole
/// lower-triangular part, so the element fixes the point at infinity.
bool stabilizes_infinity(const Mat4q& m);
inline bool stabilizes_infinity(const GroupElement& g) { return stabilizes_infinity(g.mat()); }

} // namespace picard
