#include "picard/json_io.hpp"

#include <stdexcept>

namespace picard::io {

namespace {

constexpr long kSafeBits = 53;

bool fits_json_number(const Int& n) { return mpz_sizeinbase(n.get_mpz_t(), 2) <= kSafeBits; }

[[noreturn]] void bad(const std::string& what, const json& j) {
    throw std::invalid_argument("cannot parse " + what + " from " + j.dump());
}

} // namespace

json encode(const Int& n) {
    if (fits_json_number(n)) return json(n.get_si());
    return json(n.get_str());
}

json encode(const Rat& q) { return json(to_string(q)); }

json encode(const GaussInt& z) { return json::array({encode(z.re), encode(z.im)}); }

json encode(const GaussRat& z) {
    return json{{"num", encode(z.num)}, {"den", encode(z.den)}};
}

template <class M>
static json encode_matrix(const M& m, int n) {
    json rows = json::array();
    for (int i = 0; i < n; ++i) {
        json row = json::array();
        for (int j = 0; j < n; ++j) row.push_back(encode(GaussRat(m(i, j))));
        rows.push_back(std::move(row));
    }
    return json{{"rows", std::move(rows)}};
}

json encode(const Mat2q& m) { return encode_matrix(m, 2); }
json encode(const Mat4q& m) { return encode_matrix(m, 4); }
json encode(const Mat4z& m) { return encode_matrix(widen(m), 4); }

json encode(const HeisPoint& p) {
    return json{{"xi", json::array({encode(p.xi1), encode(p.xi2)})}, {"nu", encode(p.nu)}};
}

json encode(const LanglandsParams& p) {
    return json{{"scalar_unit", unit_to_string(p.scalar_unit)},
                {"tau", json::array({encode(p.tau1), encode(p.tau2)})},
                {"t", encode(p.t)},
                {"r", encode(p.r)},
                {"U", encode(p.U)}};
}

json encode(const GeneratorWord& w) {
    json out = json::array();
    for (const auto& l : w)
        out.push_back(json::array({std::string(gen_name(l.gen)), encode(l.exp)}));
    return out;
}

json encode(const U2Word& w) {
    json out = json::array();
    for (U2Letter l : w) out.push_back(std::string(u2_letter_name(l)));
    return out;
}

json encode(const Region& r) {
    auto poly = [](const ConvexPolygon& p) {
        json verts = json::array();
        for (const auto& v : p.verts) verts.push_back(json::array({encode(v[0]), encode(v[1])}));
        return verts;
    };
    return json{{"xi1", poly(r.xi1)},
                {"xi2", poly(r.xi2)},
                {"t", json::array({encode(r.t_lo), encode(r.t_hi)})}};
}

json encode(const PieceCertificate& c) {
    json leaves = json::array();
    for (const CoverLeaf& l : c.leaves)
        leaves.push_back(
            json{{"box", encode(l.box)}, {"sphere", l.sphere}, {"margin", encode(l.margin)}});
    json uncovered = json::array();
    for (const Region& r : c.uncovered) uncovered.push_back(encode(r));
    return json{{"piece", c.piece},
                {"depth", c.depth_limit},
                {"leaf_count", c.leaves.size()},
                {"leaves", std::move(leaves)},
                {"uncovered", std::move(uncovered)}};
}

Int decode_int(const json& j) {
    if (j.is_number_integer()) return Int(static_cast<long>(j.get<std::int64_t>()));
    if (j.is_string()) return parse_int(j.get<std::string>());
    bad("integer", j);
}

Rat decode_rat(const json& j) {
    if (j.is_number_integer()) return Rat(decode_int(j));
    if (j.is_string()) return parse_rat(j.get<std::string>());
    bad("rational", j);
}

GaussInt decode_gauss_int(const json& j) {
    if (j.is_array() && j.size() == 2) return GaussInt(decode_int(j[0]), decode_int(j[1]));
    if (j.is_number_integer() || j.is_string()) return GaussInt(decode_int(j));
    bad("Gaussian integer", j);
}

GaussRat decode_gauss_rat(const json& j) {
    if (j.is_object()) {
        if (!j.contains("num") || !j.contains("den")) bad("Gaussian rational", j);
        return GaussRat(decode_gauss_int(j.at("num")), decode_int(j.at("den")));
    }
    if (j.is_array()) return GaussRat(decode_gauss_int(j));
    if (j.is_number_integer()) return GaussRat(GaussInt(decode_int(j)));
    if (j.is_string()) {
        Rat q = parse_rat(j.get<std::string>());
        return GaussRat(q, Rat(0));
    }
    bad("Gaussian rational", j);
}

namespace {

template <class M>
M decode_matrix(const json& j, int n, const char* what) {
    if (!j.is_object() || !j.contains("rows")) throw std::invalid_argument(
        std::string("expected {\"rows\": ...} for ") + what + ", got " + j.dump());
    const json& rows = j.at("rows");
    if (!rows.is_array() || rows.size() != static_cast<std::size_t>(n))
        throw std::invalid_argument(std::string(what) + ": wrong row count");
    M m;
    for (int i = 0; i < n; ++i) {
        const json& row = rows[static_cast<std::size_t>(i)];
        if (!row.is_array() || row.size() != static_cast<std::size_t>(n))
            throw std::invalid_argument(std::string(what) + ": row " + std::to_string(i + 1) +
                                        " has wrong length");
        for (int k = 0; k < n; ++k) {
            try {
                m(i, k) = decode_gauss_rat(row[static_cast<std::size_t>(k)]);
            } catch (const std::invalid_argument& e) {
                throw std::invalid_argument(std::string(what) + ": entry (" +
                                            std::to_string(i + 1) + "," + std::to_string(k + 1) +
                                            "): " + e.what());
            }
        }
    }
    return m;
}

} // namespace

Mat4q decode_mat4(const json& j) { return decode_matrix<Mat4q>(j, 4, "4x4 matrix"); }
Mat2q decode_mat2(const json& j) { return decode_matrix<Mat2q>(j, 2, "2x2 matrix"); }

HeisPoint decode_heis_point(const json& j) {
    if (!j.is_object() || !j.contains("xi") || !j.contains("nu")) bad("Heisenberg point", j);
    const json& xi = j.at("xi");
    if (!xi.is_array() || xi.size() != 2) bad("Heisenberg point", j);
    return HeisPoint{decode_gauss_rat(xi[0]), decode_gauss_rat(xi[1]), decode_rat(j.at("nu"))};
}

GeneratorWord decode_word(const json& j) {
    if (!j.is_array()) bad("generator word", j);
    GeneratorWord w;
    for (const json& l : j) {
        if (!l.is_array() || l.size() != 2 || !l[0].is_string()) bad("word letter", l);
        auto g = gen_from_name(l[0].get<std::string>());
        if (!g) bad("generator name", l[0]);
        w.push_back({*g, decode_int(l[1])});
    }
    return w;
}

std::string unit_to_string(const GaussInt& u) {
    if (u == GaussInt(1)) return "1";
    if (u == GaussInt(-1, 0)) return "-1";
    if (u == GaussInt(0, 1)) return "i";
    if (u == GaussInt(0, -1)) return "-i";
    throw std::invalid_argument("not a unit of Z[i]: " + to_string(u));
}

GaussInt unit_from_string(const std::string& s) {
    if (s == "1") return GaussInt(1);
    if (s == "-1") return GaussInt(-1, 0);
    if (s == "i") return GaussInt(0, 1);
    if (s == "-i") return GaussInt(0, -1);
    throw std::invalid_argument("not a unit of Z[i]: " + s);
}

} // namespace picard::io
