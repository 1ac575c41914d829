#ifndef GFC_DH_MEASURE_HPP
#define GFC_DH_MEASURE_HPP

/**
 * Exact Duistermaat-Heckman integrals over moment polytopes.
 *
 * On the positive chamber the DH density of a bi-equivariant compactification
 * is the product over positive roots of kappa(alpha, p)^2 — a polynomial of
 * degree twice the number of positive roots.  Masses and barycenters are
 * computed exactly: fan-triangulate the polygon, pull each linear factor back
 * to the standard simplex, expand the product, and integrate monomials with
 * the closed form  int_simplex u^p v^q du dv = p! q! / (p+q+2)!.
 *
 * The absolute normalization of kappa cancels in the barycenter; masses are
 * reported in M-lattice coordinates (Lebesgue measure of the lattice plane).
 */

#include "gfc/geometry.hpp"
#include "gfc/rootdata.hpp"
#include "gfc/vec.hpp"

#include <map>
#include <utility>
#include <vector>

namespace gfc::dhmeasure {

/// Sparse exact bivariate polynomial in (u, v).
class BivarPoly {
  public:
    static BivarPoly one();

    /// Multiply in place by (c0 + cu*u + cv*v).
    void mul_affine(const Rat& c0, const Rat& cu, const Rat& cv);

    /// Integral over the standard simplex { u, v >= 0, u + v <= 1 }.
    Rat integral_over_simplex() const;

    const std::map<std::pair<int, int>, Rat>& terms() const { return terms_; }

  private:
    std::map<std::pair<int, int>, Rat> terms_;
};

/// Coefficient vectors of the linear forms kappa(alpha, .), one per positive
/// root: form f represents p -> f.x * p.x + f.y * p.y.
std::vector<Vec2Q> linear_forms(const rootdata::RootDatum& datum);

struct Integrals {
    Rat mass;      // int_P prod kappa(alpha, p)^2 dp
    Vec2Q moment;  // int_P p * density dp
};

Integrals integrals(const rootdata::RootDatum& datum, const exactgeom::Polygon& polygon);

Rat mass(const rootdata::RootDatum& datum, const exactgeom::Polygon& polygon);

/// moment / mass; throws std::domain_error if the mass vanishes (which cannot
/// happen for a full-dimensional polygon: the density vanishes only on walls).
Vec2Q barycenter(const rootdata::RootDatum& datum, const exactgeom::Polygon& polygon);

}  // namespace gfc::dhmeasure

#endif
