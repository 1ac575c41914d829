#ifndef GFC_ORACLE_HPP
#define GFC_ORACLE_HPP

/**
 * Independent floating-point and brute-force cross-checks.
 *
 * Nothing here shares algorithmic machinery with the exact kernel: the
 * numeric barycenter is a plain midpoint-rule quadrature in doubles, and the
 * brute-force hull is the definitional extreme-point test.  Tests compare the
 * exact results against these within tolerance so that a systematic mistake
 * would have to be made twice, in two different ways, to go unnoticed.
 */

#include "gfc/geometry.hpp"
#include "gfc/rootdata.hpp"

#include <vector>

namespace gfc::oracle {

struct NumericBarycenter {
    double mass;
    double x;
    double y;
};

/// Midpoint-rule quadrature of the Duistermaat-Heckman integrals on an
/// n-by-n grid.  Each grid row is clipped exactly to the polygon's facet
/// half-planes, and partial end cells enter with their true width, so the
/// error decays like O(1/n^2).
NumericBarycenter numeric_dh_barycenter(const rootdata::RootDatum& datum,
                                        const exactgeom::Polygon& polygon, int subdivisions);

/// Definitional convex hull: a point is kept iff it is not contained in a
/// triangle or segment spanned by the other points.  Exact rational
/// arithmetic; returns the extreme points CCW from the lexicographic minimum.
std::vector<Vec2Q> brute_force_hull(const std::vector<Vec2Q>& points);

}  // namespace gfc::oracle

#endif
