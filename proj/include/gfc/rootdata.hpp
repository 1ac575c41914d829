#ifndef GFC_ROOTDATA_HPP
#define GFC_ROOTDATA_HPP

/**
 * Root data for the nine rank-two semisimple complex Lie groups, in the
 * coordinates every other module computes with:
 *
 *  - points of the character space live in M-lattice coordinates (the group's
 *    own weight lattice M is exactly Z^2 there);
 *  - linear functionals (facet normals, wall functionals) live in N-lattice
 *    coordinates, so the canonical pairing <nu, m> is the plain dot product
 *    of coordinate vectors;
 *  - the fixed ambient reference basis is the pair of fundamental weights of
 *    the simply-connected form, and basis_M records M's generators there.
 *
 * The Euclidean presentation (the coordinates the classical tables print,
 * with sqrt(3) showing up for A2 and G2) is a per-group linear map applied
 * only when reporting.
 */

#include "gfc/quadext.hpp"
#include "gfc/vec.hpp"

#include <array>
#include <optional>
#include <string>
#include <vector>

namespace gfc::rootdata {

enum class RootSystem { A1xA1, A2, B2, G2 };

enum class Group { SL2xSL2, PSL2xPSL2, SL2xPSL2, SO4, SL3, PSL3, Sp4, SO5, G2 };

/// The nine groups in canonical reporting order.
inline constexpr std::array<Group, 9> kAllGroups = {
    Group::SL2xSL2, Group::PSL2xPSL2, Group::SL2xPSL2, Group::SO4, Group::SL3,
    Group::PSL3,    Group::Sp4,       Group::SO5,      Group::G2};

std::string group_name(Group g);
std::optional<Group> group_from_name(const std::string& name);

struct RootDatum {
    Group group;
    RootSystem system;
    std::string name;

    /// Generators of M as columns, written in the ambient fundamental-weight
    /// basis of the simply-connected form.  Integer entries.
    Mat2Q basis_M;
    /// Generators of N as columns, written in the dual reference basis (the
    /// fundamental coweights of the adjoint form).  Integer entries; satisfies
    /// the perfect pairing with basis_M.
    Mat2Q basis_N;

    /// Positive roots in M-lattice coordinates (integer entries; roots lie in
    /// the root lattice which is contained in every M here).
    std::vector<Vec2Q> positive_roots;
    /// The two simple roots, M-lattice coordinates.
    std::array<Vec2Q, 2> simple_roots;
    /// Simple coroots as N-lattice functionals: the positive Weyl chamber is
    /// { m : <wall_normals[i], m> >= 0 }.
    std::array<Vec2I, 2> wall_normals;
    /// Sum of the positive roots, M-lattice coordinates.
    Vec2Q two_rho;

    /// kappa pulled back to M-lattice coordinates: kappa(u, v) = u^T gram v.
    /// Symmetric positive definite, rational.  The absolute scale is a free
    /// normalization (every downstream quantity is scale-invariant); it is
    /// pinned to the classical Euclidean realization so the one printed
    /// Duistermaat-Heckman volume matches with a pure coordinate Jacobian.
    Mat2Q gram;

    /// Simple reflections acting on M-lattice coordinates.
    std::array<Mat2I, 2> simple_reflections;
    /// Full Weyl group (identity first), M-lattice coordinates.
    std::vector<Mat2I> weyl;

    /// Lattice automorphisms used to deduplicate enumeration output
    /// (factor swap / diagram flip); identity excluded.
    std::vector<Mat2I> automorphisms;

    /// M-lattice coordinates -> Euclidean presentation coordinates.
    Mat2E euclid_embed;

    /// kappa(u, v) in M-lattice coordinates.
    Rat kappa(const Vec2Q& u, const Vec2Q& v) const;
};

/// Construct (and internally validate) the datum for a group.
const RootDatum& root_datum(Group g);

/// Generate the Weyl group from the simple reflections by closure.
/// Identity first, then breadth-first products; throws if the closure exceeds
/// 48 elements (corrupt input), which cannot happen for valid data.
std::vector<Mat2I> weyl_group(const RootDatum& datum);

/// Euclidean presentation of an M-lattice point.
Vec2E to_euclidean(const RootDatum& datum, const Vec2Q& lattice_point);

/// Coordinates of v in the basis of simple roots: v = c1 a1 + c2 a2.
std::array<Rat, 2> positive_cone_coords(const RootDatum& datum, const Vec2Q& v);

/// A copy of the datum with gram (and nothing else) scaled by c > 0;
/// used by the scale-invariance property tests.
RootDatum with_scaled_gram(const RootDatum& datum, const Rat& c);

}  // namespace gfc::rootdata

#endif
