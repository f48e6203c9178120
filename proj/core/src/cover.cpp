#include "picard/cover.hpp"

#include "picard/generators.hpp"

#include <algorithm>
#include <stdexcept>

namespace picard {

namespace {

Rat rat(long num, long den = 1) { return make_rat(Int(num), Int(den)); }

/// Exact square root of a rational that is a perfect square; nullopt-style
/// via bool return.
bool exact_sqrt(const Rat& q, Rat& out) {
    if (q < 0) return false;
    Int num = q.get_num(), den = q.get_den();
    if (!mpz_perfect_square_p(num.get_mpz_t()) || !mpz_perfect_square_p(den.get_mpz_t()))
        return false;
    Int rn, rd;
    mpz_sqrt(rn.get_mpz_t(), num.get_mpz_t());
    mpz_sqrt(rd.get_mpz_t(), den.get_mpz_t());
    out = make_rat(rn, rd);
    return true;
}

} // namespace

SpinalSphere isometric_sphere(const GroupElement& g, std::string id) {
    const Mat4q& m = g.mat();
    const GaussRat& a41 = m(3, 0);
    if (a41.is_zero()) throw StabilizesInfinityError();
    Rat mod;
    if (!exact_sqrt(a41.norm(), mod))
        throw std::domain_error("isometric sphere radius is irrational: |a41|^2 = " +
                                to_string(a41.norm()));
    SpinalSphere s;
    s.id = std::move(id);
    s.radius_sq = Rat(2) / mod;
    // center = g^-1(infinity): first column of J g* J, normalized
    GaussRat d = a41.conj();
    s.center1 = m(3, 1).conj() / d;
    s.center2 = m(3, 2).conj() / d;
    s.center_t = 2 * (m(3, 3).conj() / d).im();
    return s;
}

Rat sphere_value(const HeisPoint& p, const SpinalSphere& s) {
    GaussRat d1 = p.xi1 - s.center1;
    GaussRat d2 = p.xi2 - s.center2;
    Rat a = d1.norm() + d2.norm();
    Rat b = p.nu - s.center_t +
            2 * ((p.xi1 * s.center1.conj()).im() + (p.xi2 * s.center2.conj()).im());
    return a * a + b * b;
}

Rat ConvexPolygon::area() const {
    Rat twice(0);
    std::size_t n = verts.size();
    for (std::size_t i = 0; i < n; ++i) {
        const auto& p = verts[i];
        const auto& q = verts[(i + 1) % n];
        twice += p[0] * q[1] - q[0] * p[1];
    }
    return abs(twice) / 2;
}

Rat ConvexPolygon::longest_edge_sq() const {
    Rat best(0);
    std::size_t n = verts.size();
    for (std::size_t i = 0; i < n; ++i) {
        const auto& p = verts[i];
        const auto& q = verts[(i + 1) % n];
        Rat dx = p[0] - q[0], dy = p[1] - q[1];
        Rat l = dx * dx + dy * dy;
        if (l > best) best = l;
    }
    return best;
}

bool ConvexPolygon::contains(const Rat& x, const Rat& y) const {
    // CCW orientation: inside iff never strictly right of an edge
    std::size_t n = verts.size();
    for (std::size_t i = 0; i < n; ++i) {
        const auto& p = verts[i];
        const auto& q = verts[(i + 1) % n];
        Rat cross = (q[0] - p[0]) * (y - p[1]) - (q[1] - p[1]) * (x - p[0]);
        if (cross < 0) return false;
    }
    return true;
}

std::array<ConvexPolygon, 2> ConvexPolygon::split() const {
    if (verts.size() == 3) {
        // bisect the longest edge (first longest wins)
        std::size_t best = 0;
        Rat best_len(-1);
        for (std::size_t i = 0; i < 3; ++i) {
            const auto& p = verts[i];
            const auto& q = verts[(i + 1) % 3];
            Rat dx = p[0] - q[0], dy = p[1] - q[1];
            Rat l = dx * dx + dy * dy;
            if (l > best_len) {
                best_len = l;
                best = i;
            }
        }
        const auto& a = verts[best];
        const auto& b = verts[(best + 1) % 3];
        const auto& c = verts[(best + 2) % 3];
        std::array<Rat, 2> mid{(a[0] + b[0]) / 2, (a[1] + b[1]) / 2};
        return {ConvexPolygon{{a, mid, c}}, ConvexPolygon{{mid, b, c}}};
    }
    if (verts.size() == 4) {
        // axis-aligned rectangle: halve the longer dimension
        Rat x0 = verts[0][0], x1 = x0, y0 = verts[0][1], y1 = y0;
        for (const auto& v : verts) {
            x0 = std::min(x0, v[0]);
            x1 = std::max(x1, v[0]);
            y0 = std::min(y0, v[1]);
            y1 = std::max(y1, v[1]);
        }
        if (x1 - x0 >= y1 - y0) {
            Rat xm = (x0 + x1) / 2;
            return {ConvexPolygon{{{x0, y0}, {xm, y0}, {xm, y1}, {x0, y1}}},
                    ConvexPolygon{{{xm, y0}, {x1, y0}, {x1, y1}, {xm, y1}}}};
        }
        Rat ym = (y0 + y1) / 2;
        return {ConvexPolygon{{{x0, y0}, {x1, y0}, {x1, ym}, {x0, ym}}},
                ConvexPolygon{{{x0, ym}, {x1, ym}, {x1, y1}, {x0, y1}}}};
    }
    throw std::logic_error("subdivision handles triangles and rectangles only");
}

std::array<Region, 2> Region::split() const {
    Rat e1 = xi1.longest_edge_sq();
    Rat e2 = xi2.longest_edge_sq();
    Rat dt = t_hi - t_lo;
    Rat et = dt * dt;
    if (e1 >= e2 && e1 >= et) {
        auto [p, q] = xi1.split();
        return {Region{p, xi2, t_lo, t_hi}, Region{q, xi2, t_lo, t_hi}};
    }
    if (e2 >= et) {
        auto [p, q] = xi2.split();
        return {Region{xi1, p, t_lo, t_hi}, Region{xi1, q, t_lo, t_hi}};
    }
    Rat tm = (t_lo + t_hi) / 2;
    return {Region{xi1, xi2, t_lo, tm}, Region{xi1, xi2, tm, t_hi}};
}

Rat region_max_bound(const Region& reg, const SpinalSphere& s) {
    // cache A/B contributions per polygon vertex
    Rat c1x = s.center1.re(), c1y = s.center1.im();
    Rat c2x = s.center2.re(), c2y = s.center2.im();
    auto per_vertex = [](const ConvexPolygon& poly, const Rat& cx, const Rat& cy,
                         std::vector<std::array<Rat, 2>>& out) {
        out.clear();
        for (const auto& v : poly.verts) {
            Rat dx = v[0] - cx, dy = v[1] - cy;
            // Im((x+iy) * conj(cx+icy)) = y*cx - x*cy
            out.push_back({dx * dx + dy * dy, 2 * (v[1] * cx - v[0] * cy)});
        }
    };
    std::vector<std::array<Rat, 2>> ab1, ab2;
    per_vertex(reg.xi1, c1x, c1y, ab1);
    per_vertex(reg.xi2, c2x, c2y, ab2);

    Rat best(0);
    bool first = true;
    for (const auto& [a1, b1] : ab1)
        for (const auto& [a2, b2] : ab2)
            for (const Rat& t : {reg.t_lo, reg.t_hi}) {
                Rat a = a1 + a2;
                Rat b = t - s.center_t + b1 + b2;
                Rat v = a * a + b * b;
                if (first || v > best) {
                    best = v;
                    first = false;
                }
            }
    return best;
}

ConvexPolygon fundamental_triangle() {
    return ConvexPolygon{{{rat(0), rat(0)}, {rat(1), rat(0)}, {rat(0), rat(1)}}};
}

std::array<ConvexPolygon, 3> triangle_parts() {
    ConvexPolygon s1{{{rat(0), rat(1)}, {rat(0), rat(1, 2)}, {rat(1, 2), rat(1, 2)}}};
    ConvexPolygon s2{{{rat(0), rat(0)}, {rat(1, 2), rat(0)}, {rat(1, 2), rat(1, 2)},
                      {rat(0), rat(1, 2)}}};
    ConvexPolygon s3{{{rat(0), rat(0)}, {rat(1), rat(0)}, {rat(1, 2), rat(1, 2)}}};
    return {s1, s2, s3};
}

std::array<Region, 9> sigma_pieces() {
    auto parts = triangle_parts();
    std::array<Region, 9> out;
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j)
            out[static_cast<std::size_t>(3 * i + j)] =
                Region{parts[static_cast<std::size_t>(i)], parts[static_cast<std::size_t>(j)],
                       rat(-1), rat(1)};
    return out;
}

std::vector<SpinalSphere> covering_spheres() {
    std::vector<SpinalSphere> out;
    GroupElement r = inversion();
    out.push_back(isometric_sphere(r, "S0"));

    struct Base {
        const char* name;
        long a_re, a_im, b_re, b_im;
    };
    const Base bases[4] = {{"S1", 1, 0, 1, 0}, {"S2", 1, 0, 0, 1}, {"S3", 0, 1, 0, 1},
                           {"S4", 0, 1, 1, 0}};
    GroupElement t2{gen_matrix(Gen::T2)};
    GroupElement t2i{gen_inverse(Gen::T2)};
    for (const Base& b : bases) {
        GroupElement n{integral_translation(GaussInt(b.a_re, b.a_im), GaussInt(b.b_re, b.b_im),
                                            Int(0))};
        GroupElement base = n * r * n.inverse();
        out.push_back(isometric_sphere(base, b.name));
        out.push_back(isometric_sphere(t2 * base * t2i, std::string("T(") + b.name + ")"));
        out.push_back(isometric_sphere(t2i * base * t2, std::string("T^-1(") + b.name + ")"));
    }
    return out;
}

namespace {

void cover_rec(const Region& reg, int depth, std::span<const SpinalSphere> spheres,
               int max_depth, PieceCertificate& cert) {
    cert.max_depth_used = std::max(cert.max_depth_used, depth);
    for (const SpinalSphere& s : spheres) {
        Rat bound = region_max_bound(reg, s);
        if (bound < s.threshold()) {
            cert.leaves.push_back({reg, s.id, s.threshold() - bound});
            return;
        }
    }
    if (depth >= max_depth) {
        cert.uncovered.push_back(reg);
        return;
    }
    auto [lo, hi] = reg.split();
    cover_rec(lo, depth + 1, spheres, max_depth, cert);
    cover_rec(hi, depth + 1, spheres, max_depth, cert);
}

} // namespace

PieceCertificate cover_piece(const Region& piece, int piece_id,
                             std::span<const SpinalSphere> spheres, int max_depth) {
    if (max_depth < 0) throw std::invalid_argument("max_depth must be nonnegative");
    PieceCertificate cert;
    cert.piece = piece_id;
    cert.depth_limit = max_depth;
    cover_rec(piece, 0, spheres, max_depth, cert);

    // the leaves (plus any uncovered boxes) must tile the piece exactly
    Rat total(0);
    for (const CoverLeaf& l : cert.leaves) total += l.box.volume();
    for (const Region& r : cert.uncovered) total += r.volume();
    if (total != piece.volume())
        throw std::logic_error("certificate leaves do not tile the piece");
    return cert;
}

std::vector<PieceCertificate> verify_covering(std::span<const Region> pieces,
                                              std::span<const SpinalSphere> spheres,
                                              int max_depth) {
    std::vector<PieceCertificate> out;
    int id = 1;
    for (const Region& piece : pieces) out.push_back(cover_piece(piece, id++, spheres, max_depth));
    return out;
}

} // namespace picard
