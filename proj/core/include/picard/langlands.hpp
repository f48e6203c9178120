#pragma once

#include "picard/heisenberg.hpp"

namespace picard {

/// Factorization of a stabilizer element as lambda * N_(tau,t) * A_r * M_U.
/// The scalar unit lambda is not part of the classical translation-dilation-
/// rotation product; it absorbs the unit top-left entry that integral
/// elements may carry, making the factorization total on the stabilizer.
struct LanglandsParams {
    GaussInt scalar_unit; // one of 1, i, -1, -i
    GaussRat tau1, tau2;
    Rat t;
    Rat r; // positive
    Mat2q U;

    static LanglandsParams identity();
};

struct NotInStabilizer : std::domain_error {
    NotInStabilizer() : std::domain_error("not in the stabilizer of infinity: entry (4,1) is nonzero") {}
};

struct UnitNormalizationNeeded : std::domain_error {
    UnitNormalizationNeeded()
        : std::domain_error("unit-normalization needed: entry (1,1) is not a unit multiple "
                            "of a positive rational") {}
};

/// Reads the parameters off the matrix and certifies them by recomposition;
/// throws NotInStabilizer / UnitNormalizationNeeded per the failure.
LanglandsParams decompose(const GroupElement& g);
LanglandsParams decompose(const Mat4q& m);

/// lambda * translation(tau,t) * dilation(r) * rotation(U), in closed form.
Mat4q recompose(const LanglandsParams& params);
GroupElement recompose_element(const LanglandsParams& params);

} // namespace picard
