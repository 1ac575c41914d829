#ifndef GFC_CATALOG_HPP
#define GFC_CATALOG_HPP

/**
 * Catalog of the sixty Gorenstein Fano moment polytopes of bi-equivariant
 * compactifications of the rank-two semisimple groups, together with their
 * published invariants: classification-walk case label, vertex list,
 * smoothness, existence of a Kaehler--Einstein metric, the exact
 * Duistermaat--Heckman barycenter in Euclidean coordinates (where published),
 * and the greatest Ricci lower bound for the K-unstable smooth cases.
 *
 * Vertices are stored in weight-lattice coordinates (the same frame the
 * enumeration uses) and include the origin.  Barycenters are stored in the
 * Euclidean frame so they can be compared directly against to_euclidean() of
 * a computed lattice barycenter.
 */

#include "gfc/quadext.hpp"
#include "gfc/rootdata.hpp"
#include "gfc/vec.hpp"

#include <optional>
#include <string>
#include <vector>

namespace gfc::catalog {

/// One catalogued polytope and its published invariants.
struct CaseEntry {
    rootdata::Group group;
    int index;               ///< 1-based position within the group's table.
    std::string case_label;  ///< classification-walk branch, e.g. "I.2.1.a".
    std::vector<Vec2Q> vertices;  ///< weight-lattice coordinates, origin included.
    bool smooth;
    bool kstable;  ///< true iff the compactification admits a Kaehler--Einstein metric.
    /// Exact Duistermaat--Heckman barycenter, Euclidean frame; absent for the
    /// three homogeneous cases whose barycenter the tables omit.
    std::optional<Vec2E> barycenter_euclid;
    /// Greatest Ricci lower bound; present exactly for the six K-unstable
    /// smooth cases (all other smooth cases have bound 1).
    std::optional<Rat> ricci;
};

/// All sixty entries: groups in kAllGroups order, table order within a group.
const std::vector<CaseEntry>& entries();

/// The entries of one group, in table order.
std::vector<const CaseEntry*> entries_for(rootdata::Group group);

/// Entry whose polytope has the given canonical key, or nullptr.  Keys are
/// computed with enumerate::canonical_key, so lookup is symmetry-invariant.
const CaseEntry* find_by_key(const rootdata::RootDatum& datum, const std::string& key);

}  // namespace gfc::catalog

#endif
