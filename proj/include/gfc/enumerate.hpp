#ifndef GFC_ENUMERATE_HPP
#define GFC_ENUMERATE_HPP

/**
 * Exhaustive enumeration of Gorenstein Fano moment polytopes.
 *
 * A candidate polytope is the positive chamber cut by half-planes
 * <nu, m> <= <nu, 2rho> + 1, one per chosen primitive normal nu pairing
 * non-negatively with both simple roots.  A chosen set is accepted when the
 * region is bounded, every chosen normal supports an edge, and the associated
 * toric polytope (convex Weyl-orbit hull) has lattice vertices — the
 * Gorenstein condition.
 *
 * Search strategy: sort candidates by angle.  In an accepted polytope two
 * angularly consecutive non-wall facets share a vertex; if that vertex is
 * interior to the chamber it is a vertex of the toric polytope and therefore
 * a lattice point.  Chains in the resulting "lattice meet" DAG are the only
 * facet sets that can survive, so the search walks exactly those chains and
 * runs the full exact validation on each one.  Support pruning is sound
 * because shrinking a region never turns a vertex-touching constraint back
 * into an edge.
 */

#include "gfc/geometry.hpp"
#include "gfc/rootdata.hpp"

#include <string>
#include <vector>

namespace gfc::enumerate {

/// One Gorenstein Fano moment polytope found by the search.
struct FanoPolytope {
    exactgeom::Polygon polygon;                // chamber part, M-lattice coordinates
    std::vector<exactgeom::HalfPlane> chosen;  // its non-wall facets
    std::string key;                           // canonical fingerprint (dedup/meta lookup)
};

struct EnumerationResult {
    /// Deduplicated polytopes, sorted by (vertex count, key).
    std::vector<FanoPolytope> polytopes;
    int bound;
    /// True when some accepted facet normal has a coordinate within 2 of the
    /// search bound — the census may then be clipped; rerun with a larger bound.
    bool bound_too_small;
};

/// Primitive normals with max(|x|,|y|) <= bound pairing non-negatively with
/// both simple roots, sorted CCW by angle.
std::vector<Vec2I> candidate_normals(const rootdata::RootDatum& datum, int bound);

/// Canonical vertex-set fingerprint, minimized over the group's lattice
/// automorphisms: equal keys <=> the same case up to symmetry.
std::string canonical_key(const rootdata::RootDatum& datum, const exactgeom::Polygon& polygon);

EnumerationResult enumerate_polytopes(const rootdata::RootDatum& datum, int bound);

}  // namespace gfc::enumerate

#endif
