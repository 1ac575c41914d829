#ifndef GFC_GEOMETRY_HPP
#define GFC_GEOMETRY_HPP

/**
 * Exact rational 2D polyhedral kernel.
 *
 * Every operation is exact over GMP rationals: half-plane intersection with
 * full empty/degenerate/unbounded classification, V- and H-representations,
 * Minkowski sums with a cone (for the greatest-Ricci-bound construction),
 * ray shooting, Weyl-orbit toric polytopes, and the Delzant vertex test.
 *
 * Points are rational vectors in M-lattice coordinates; half-plane normals
 * are primitive integer vectors in N-lattice coordinates, so the pairing is
 * the plain dot product.
 */

#include "gfc/vec.hpp"

#include <optional>
#include <vector>

namespace gfc::exactgeom {

/// Closed half-plane { p : normal . p <= rhs }.
struct HalfPlane {
    Vec2I normal;
    Rat rhs;

    friend bool operator==(const HalfPlane& a, const HalfPlane& b) {
        return a.normal == b.normal && a.rhs == b.rhs;
    }
};

/// Divide out the gcd of the normal; the same half-plane, primitive form.
HalfPlane normalized(const HalfPlane& hp);

/// Bounded convex polygon with positive area.
struct Polygon {
    /// CCW boundary order, starting at the lexicographically smallest vertex.
    std::vector<Vec2Q> vertices;
    /// facets[i] supports the edge vertices[i] -> vertices[(i+1) % n];
    /// outward primitive normals.
    std::vector<HalfPlane> facets;

    Rat area() const;
    Vec2Q centroid() const;
    bool contains(const Vec2Q& p) const;
    bool strictly_contains(const Vec2Q& p) const;

    friend bool operator==(const Polygon& a, const Polygon& b) { return a.vertices == b.vertices; }
};

/// Pointed, full-dimensional convex region, possibly unbounded.
struct Region {
    std::vector<Vec2Q> vertices;  // convex position (CCW for bounded regions)
    std::vector<Vec2I> rays;      // 0..2 primitive recession directions
    std::vector<HalfPlane> facets;

    bool bounded() const { return rays.empty(); }
    bool strictly_contains(const Vec2Q& p) const;
    Polygon to_polygon() const;  // requires bounded()
};

enum class BuildKind {
    Empty,             // no feasible point
    Degenerate,        // nonempty but area zero (point/segment/ray/line)
    Unpointed,         // full-dimensional, contains a line (no vertex)
    Bounded,           // polygon
    UnboundedPointed,  // full-dimensional with vertices and recession rays
};

struct BuiltRegion {
    BuildKind kind{BuildKind::Empty};
    Region region;  // meaningful for Bounded / UnboundedPointed

    bool full_dim() const {
        return kind == BuildKind::Bounded || kind == BuildKind::UnboundedPointed ||
               kind == BuildKind::Unpointed;
    }
};

/// Exact H-to-V conversion with full classification.  An empty constraint
/// list describes the whole plane (Unpointed).
BuiltRegion build_region(const std::vector<HalfPlane>& constraints);

/// Does this constraint of the region support a one-dimensional face?
/// (Facets touching the region in a single point do not count.)
bool supports_edge(const Region& region, const HalfPlane& hp);

enum class RegionKind { Empty, Bounded, Unbounded };

struct IntersectionResult {
    RegionKind kind{RegionKind::Empty};
    std::optional<Polygon> polygon;  // engaged iff kind == Bounded
};

/// Public half-plane intersection: degenerate (area-zero) results are
/// reported as Empty, unbounded full-dimensional ones as Unbounded.
IntersectionResult intersect_halfplanes(const std::vector<HalfPlane>& constraints);

/// Convex hull of the points (monotone chain); throws std::invalid_argument
/// if the hull is not full-dimensional (fewer than 3 distinct extreme points
/// or all collinear).
Polygon polygon_from_vertices(const std::vector<Vec2Q>& points);

/// conv(vertices(p)) + cone(rays).  Rays must be pairwise non-opposite
/// (the sum stays pointed); an empty ray list returns p itself as a Region.
Region minkowski_sum_with_cone(const Polygon& p, const std::vector<Vec2I>& rays);

/// Smallest s > 0 with origin + s*dir on the boundary of the region;
/// std::nullopt if the ray never exits (dir in the recession cone).
/// Throws std::domain_error if origin is not strictly interior.
std::optional<Rat> ray_exit(const Region& region, const Vec2Q& origin, const Vec2Q& dir);

/// Convex hull of the Weyl orbit of p (p must lie in the closed positive
/// chamber).  Validates area(hull) == |W| * area(p), i.e. that the orbit
/// tiles the hull; throws std::runtime_error otherwise.
Polygon toric_polytope(const Polygon& p, const std::vector<Mat2I>& weyl);

struct VertexDelzant {
    Vec2Q vertex;
    Vec2I edge_dir_1;  // primitive directions of the two incident edges,
    Vec2I edge_dir_2;  // expressed in the given M-basis
    std::int64_t det;
};

/// Primitive incident-edge directions and their determinant at every vertex,
/// in the coordinates of m_basis (which must be unimodular).  The polygon is
/// Delzant iff every |det| == 1.
std::vector<VertexDelzant> delzant_at_vertices(const Polygon& p,
                                               const Mat2I& m_basis = Mat2I::identity());

}  // namespace gfc::exactgeom

#endif
