#pragma once

#include "picard/heisenberg.hpp"

#include <array>
#include <span>
#include <string>
#include <vector>

namespace picard {

/// Spinal sphere in the Heisenberg group: center (zeta1, zeta2, t0) and
/// squared Cygan radius. Membership is decided on the squared scale
/// (A^2 + B^2 against radius_sq^2), so no square roots ever appear.
struct SpinalSphere {
    std::string id;
    GaussRat center1, center2;
    Rat center_t;
    Rat radius_sq;

    Rat threshold() const { return radius_sq * radius_sq; }
};

struct StabilizesInfinityError : std::domain_error {
    StabilizesInfinityError()
        : std::domain_error("element stabilizes infinity: no isometric sphere") {}
};

/// Isometric sphere of g: radius_sq = 2/|a41|, center = g^-1(infinity) read
/// off the fourth row. Throws StabilizesInfinityError when a41 = 0, and
/// domain_error when |a41| is irrational (norm not a perfect square).
SpinalSphere isometric_sphere(const GroupElement& g, std::string id = "");

/// Exact A^2 + B^2 at a boundary point, where A is the squared horizontal
/// offset from the center and B the twisted vertical offset. Strictly inside
/// iff the value is below threshold().
Rat sphere_value(const HeisPoint& p, const SpinalSphere& s);

/// Convex polygon in one complex coordinate plane, CCW rational vertices.
/// The pieces used here are axis-aligned rectangles and triangles, and
/// subdivision keeps those families closed.
struct ConvexPolygon {
    std::vector<std::array<Rat, 2>> verts;

    Rat area() const;
    Rat longest_edge_sq() const;
    std::array<ConvexPolygon, 2> split() const;
    /// Exact membership, boundary included.
    bool contains(const Rat& x, const Rat& y) const;
};

/// Product region (polygon) x (polygon) x [t_lo, t_hi].
struct Region {
    ConvexPolygon xi1, xi2;
    Rat t_lo, t_hi;

    Rat volume() const { return xi1.area() * xi2.area() * (t_hi - t_lo); }
    /// Bisect the factor with the largest squared extent (ties: xi1, xi2, t).
    std::array<Region, 2> split() const;
};

/// Exact maximum of sphere_value over the region. A is convex and B affine
/// in the five real coordinates, so A^2 + B^2 is convex and the maximum is
/// attained at a vertex of the product polytope.
Rat region_max_bound(const Region& reg, const SpinalSphere& s);

/// The base triangle with vertices 0, 1, i.
ConvexPolygon fundamental_triangle();
/// Its three parts: S1 (triangle i, i/2, (1+i)/2), S2 (square 0, 1/2, (1+i)/2,
/// i/2), S3 (triangle 0, 1, (1+i)/2).
std::array<ConvexPolygon, 3> triangle_parts();
/// The nine product pieces Sigma_1..Sigma_9 with t in [-1,1].
std::array<Region, 9> sigma_pieces();

/// The covering list: the sphere of R plus the four conjugate families
/// centered at (1,1), (1,i), (i,i), (i,1), each with vertical translates
/// t0 in {-2, 0, 2}. Thirteen spheres, ids "S0", "S1", "T(S1)", "T^-1(S1)", ...
std::vector<SpinalSphere> covering_spheres();

struct CoverLeaf {
    Region box;
    std::string sphere;
    Rat margin; // threshold minus the exact bound; strictly positive
};

/// Certificate for one piece: every leaf is verified strictly inside its
/// assigned sphere; uncovered boxes localize any failure.
struct PieceCertificate {
    int piece = 0; // 1-based index
    int depth_limit = 0;
    int max_depth_used = 0;
    std::vector<CoverLeaf> leaves;
    std::vector<Region> uncovered;

    bool complete() const { return uncovered.empty(); }
};

PieceCertificate cover_piece(const Region& piece, int piece_id,
                             std::span<const SpinalSphere> spheres, int max_depth);

/// Runs cover_piece over a list; piece ids are 1-based positions.
std::vector<PieceCertificate> verify_covering(std::span<const Region> pieces,
                                              std::span<const SpinalSphere> spheres,
                                              int max_depth);

} // namespace picard
