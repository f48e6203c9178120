#pragma once

#include "picard/form.hpp"

namespace picard {

/// Point of the Heisenberg group C^2 x R in coordinates (xi, nu).
struct HeisPoint {
    GaussRat xi1, xi2;
    Rat nu;

    friend bool operator==(const HeisPoint& a, const HeisPoint& b) {
        return a.xi1 == b.xi1 && a.xi2 == b.xi2 && a.nu == b.nu;
    }
};

/// Horospherical point (xi, nu, u); u = 0 on the boundary, u > 0 inside.
struct HoroPoint {
    GaussRat xi1, xi2;
    Rat nu;
    Rat u;

    HoroPoint(GaussRat x1, GaussRat x2, Rat n, Rat height);
    HoroPoint(const HeisPoint& p) : HoroPoint(p.xi1, p.xi2, p.nu, Rat(0)) {}
};

struct HeisTranslationParams {
    GaussRat tau1, tau2;
    Rat t;
};

/// Group law (xi,nu)(z,u) = (xi+z, nu+u+2 Im(z* xi)). The sign of the Im
/// term is pinned by requiring that left multiplication agree with the
/// matrix action of translation(); tests lock it.
HeisPoint heis_mul(const HeisPoint& p, const HeisPoint& q);
HeisPoint heis_inverse(const HeisPoint& p);

/// Lift to the null/negative cone: ((-|xi|^2 - u + i nu)/2, xi1, xi2, 1).
Vec4q psi(const HoroPoint& p);
inline Vec4q psi(const HeisPoint& p) { return psi(HoroPoint(p)); }
/// The flag vector e1 representing the point at infinity.
Vec4q psi_infinity();

GroupElement translation(const HeisTranslationParams& params);
/// Block-diagonal rotation diag(1, U, 1); U must be unitary exactly.
GroupElement rotation(const Mat2q& U);
GroupElement rotation(const Mat2z& U);
/// diag(r, 1, 1, 1/r) for r > 0.
GroupElement dilation(const Rat& r);
/// The involution swapping 0 and infinity, with middle block -I.
GroupElement inversion();

struct MapsToInfinity : std::domain_error {
    MapsToInfinity() : std::domain_error("group element maps the point to infinity") {}
};

/// Projective action on the Heisenberg boundary: normalize G psi(p) to last
/// coordinate 1 and read horospherical coordinates back off.
HeisPoint boundary_action(const GroupElement& g, const HeisPoint& p);

} // namespace picard
