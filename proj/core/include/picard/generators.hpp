#pragma once

#include "picard/matrix.hpp"

#include <optional>
#include <string_view>

namespace picard {

/// The five generators: the Heisenberg translations T1 = N((1,1),0) and
/// T2 = N((0,0),2), the rotations M1 = M_{U1} and M2 = M_{U2}, and the
/// involution R.
enum class Gen { T1, T2, M1, M2, R };

inline constexpr Gen kAllGens[5] = {Gen::T1, Gen::T2, Gen::M1, Gen::M2, Gen::R};

const Mat4z& gen_matrix(Gen g);
const Mat4z& gen_inverse(Gen g);
std::string_view gen_name(Gen g);
std::optional<Gen> gen_from_name(std::string_view name);

const Mat2z& u2_gen_u1();
const Mat2z& u2_gen_u2();

/// Integral Heisenberg translation N((tau1,tau2), t). Requires |tau|^2 and t
/// even, otherwise the corner entry leaves Z[i].
Mat4z integral_translation(const GaussInt& tau1, const GaussInt& tau2, const Int& t);

/// g^e in closed form: translation powers scale parameters, rotation powers
/// reduce mod the letter order, R^e reduces mod 2.
Mat4z gen_power(Gen g, const Int& e);

} // namespace picard
