#ifndef GFC_SVG_HPP
#define GFC_SVG_HPP

/**
 * SVG renderings of moment polytopes in the Euclidean realization.
 *
 * Each figure shows the Weyl walls, the moment polytope, the positive roots,
 * the point 2rho with the dashed translated cone 2rho + cone(-alpha1,
 * -alpha2), and the Duistermaat-Heckman barycenter; K-stability is visible as
 * the barycenter marker lying inside the dashed cone.  Layer group ids are
 * stable: "polytope", "cone2rho", "barycenter", "roots" (plus "walls").
 */

#include "gfc/classify.hpp"
#include "gfc/rootdata.hpp"

#include <string>

namespace gfc::svg {

/// Render one classified case as a standalone SVG document.  The barycenter
/// layer contains exactly one circle marker.
std::string render_case(const rootdata::RootDatum& datum,
                        const classify::ClassificationRecord& record);

/// Render the group's index-th case in enumeration order (0-based); throws
/// std::out_of_range when the index is outside the census at this bound.
std::string render_indexed(const rootdata::RootDatum& datum, int index, int bound);

}  // namespace gfc::svg

#endif
