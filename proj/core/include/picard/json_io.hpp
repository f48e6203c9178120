#pragma once

#include "picard/cover.hpp"
#include "picard/langlands.hpp"
#include "picard/words.hpp"

#include <nlohmann/json.hpp>

namespace picard::io {

using json = nlohmann::json;

// Wire formats:
//   Int       number when it fits in 53 bits, decimal string otherwise
//   Rat       "p/q" string
//   GaussInt  [re, im]
//   GaussRat  {"num": [re, im], "den": q}
//   matrices  {"rows": [[entry, ...], ...]}
//   HeisPoint {"xi": [GaussRat, GaussRat], "nu": Rat}
// Decoding is liberal: matrix entries may be GaussRat objects, [re, im]
// pairs, plain integers, or rational strings.

json encode(const Int& n);
json encode(const Rat& q);
json encode(const GaussInt& z);
json encode(const GaussRat& z);
json encode(const Mat2q& m);
json encode(const Mat4q& m);
json encode(const Mat4z& m);
json encode(const HeisPoint& p);
json encode(const LanglandsParams& p);
json encode(const GeneratorWord& w);
json encode(const U2Word& w);
json encode(const Region& r);
json encode(const PieceCertificate& c);

Int decode_int(const json& j);
Rat decode_rat(const json& j);
GaussInt decode_gauss_int(const json& j);
GaussRat decode_gauss_rat(const json& j);
Mat4q decode_mat4(const json& j);
Mat2q decode_mat2(const json& j);
HeisPoint decode_heis_point(const json& j);
GeneratorWord decode_word(const json& j);

/// "1", "i", "-1", "-i"
std::string unit_to_string(const GaussInt& u);
GaussInt unit_from_string(const std::string& s);

} // namespace picard::io
