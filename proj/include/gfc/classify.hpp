#ifndef GFC_CLASSIFY_HPP
#define GFC_CLASSIFY_HPP

/**
 * K-stability and smoothness classification of the enumerated Gorenstein
 * Fano moment polytopes.
 *
 * K-stability is decided by the Duistermaat--Heckman barycenter criterion:
 * the compactification admits a Kaehler--Einstein metric iff the barycenter
 * lies in 2rho + (relative interior of the positive root cone).  For the
 * K-unstable cases the greatest Ricci lower bound is the exact ratio cut out
 * by the ray from the barycenter through 2rho across the polytope widened by
 * the negative root cone.
 *
 * Smoothness uses the Delzant analysis of the toric polytope (the Weyl-orbit
 * hull): a failed vertex test certifies a singularity, a passed test with no
 * toric vertex on a Weyl wall certifies smoothness, and the remaining cases
 * are decided by a curated override table of identification-backed verdicts
 * (homogeneous and blow-up cases), each flagged in the record's notes.
 */

#include "gfc/geometry.hpp"
#include "gfc/rootdata.hpp"
#include "gfc/vec.hpp"

#include <optional>
#include <string>
#include <vector>

namespace gfc::classify {

enum class KStability { Stable, SemistableBoundary, Unstable };
enum class Smoothness { Smooth, Singular, Undetermined };
enum class SmoothnessBasis { DelzantFail, DelzantPassNoWallVertex, CriterionSilent };

std::string to_string(KStability v);
std::string to_string(Smoothness v);
std::string to_string(SmoothnessBasis v);

/// Full verdict for one moment polytope.
struct ClassificationRecord {
    rootdata::Group group;
    int index = 0;            ///< position in the group's table; 0 if uncatalogued.
    std::string case_label;   ///< classification-walk branch, "" if uncatalogued.
    exactgeom::Polygon polygon;  ///< lattice frame, catalog orientation when matched.
    Vec2Q barycenter;            ///< Duistermaat--Heckman barycenter, lattice frame.
    KStability kstability = KStability::Unstable;
    Smoothness smoothness = Smoothness::Undetermined;
    SmoothnessBasis smoothness_basis = SmoothnessBasis::CriterionSilent;
    Rat r_invariant;                 ///< greatest Ricci lower bound, in (0, 1].
    std::optional<Vec2Q> q_witness;  ///< ray exit point; present iff Unstable.
    std::string notes;
};

/// Barycenter criterion: Stable iff barycenter - 2rho has both simple-root
/// coordinates > 0; SemistableBoundary iff both >= 0 with a zero; Unstable
/// otherwise.
KStability kstability_verdict(const rootdata::RootDatum& datum, const Vec2Q& barycenter);

/// Convenience overload computing the barycenter from the polygon.
KStability kstability_verdict(const rootdata::RootDatum& datum,
                              const exactgeom::Polygon& polygon);

struct RicciBound {
    Rat r;     ///< greatest Ricci lower bound, in (0, 1).
    Vec2Q q;   ///< exit point of the ray, lattice frame (the boundary witness).
};

/// Exact greatest Ricci lower bound for an unstable case: widen the polygon
/// by the cone spanned by the negative simple roots, shoot the ray from
/// C = barycenter through A = 2rho, and let s be the exit parameter; then
/// R = (s - 1)/s and Q = C + s(A - C).  Throws std::domain_error when the
/// barycenter equals 2rho (the ray is degenerate; never happens when the
/// verdict is Unstable).
RicciBound greatest_ricci_lower_bound(const rootdata::RootDatum& datum,
                                      const exactgeom::Polygon& polygon,
                                      const Vec2Q& barycenter);

struct SmoothnessResult {
    Smoothness verdict = Smoothness::Undetermined;
    SmoothnessBasis basis = SmoothnessBasis::CriterionSilent;
    std::string note;  ///< non-empty exactly when the verdict is override-based.
};

/// Delzant analysis of the toric polytope, then the override table.
SmoothnessResult smoothness_verdict(const rootdata::RootDatum& datum,
                                    const exactgeom::Polygon& polygon);

/// Enumerate at the given bound and classify every polytope, ordered by the
/// published tables (catalog order); uncatalogued polytopes, which a correct
/// enumeration never produces, would sort last with index 0.  When
/// bound_too_small is non-null it receives the enumeration's clipping flag.
std::vector<ClassificationRecord> classify_group(const rootdata::RootDatum& datum, int bound,
                                                 bool* bound_too_small = nullptr);

}  // namespace gfc::classify

#endif
