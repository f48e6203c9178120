#pragma once

#include "picard/matrix.hpp"

#include <span>
#include <string_view>
#include <vector>

namespace picard {

/// Elements of the finite group U(2;Z[i]): 16 diagonal and 16 antidiagonal
/// matrices with unit entries.
using U2Element = Mat2z;

enum class U2Letter { U1, U2, U1Inv, U2Inv };

inline constexpr U2Letter kU2Letters[4] = {U2Letter::U1, U2Letter::U2, U2Letter::U1Inv,
                                           U2Letter::U2Inv};

std::string_view u2_letter_name(U2Letter l);
U2Letter u2_letter_inverse(U2Letter l);

using U2Word = std::vector<U2Letter>;

/// All 32 elements, enumeration order fixed: diagonals first, units cycling
/// through 1, i, -1, -i.
const std::vector<U2Element>& enumerate_u2();

struct NotInU2 : std::domain_error {
    NotInU2() : std::domain_error("matrix is not an element of U(2;Z[i])") {}
};

/// Shortest word in U1, U2 and inverses evaluating to U, BFS over the Cayley
/// graph with letter order U1 < U2 < U1^-1 < U2^-1 breaking ties.
const U2Word& u2_word(const U2Element& u);

U2Element evaluate_u2_word(std::span<const U2Letter> word);

} // namespace picard
