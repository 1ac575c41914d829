#include "gfc/enumerate.hpp"

#include <algorithm>
#include <cstdlib>
#include <map>
#include <numeric>

namespace gfc::enumerate {

using exactgeom::BuildKind;
using exactgeom::BuiltRegion;
using exactgeom::HalfPlane;
using exactgeom::Polygon;

std::vector<Vec2I> candidate_normals(const rootdata::RootDatum& datum, int bound) {
    if (bound < 1) throw std::invalid_argument("candidate_normals: bound < 1");
    std::vector<Vec2I> out;
    for (std::int64_t a = -bound; a <= bound; ++a)
        for (std::int64_t b = -bound; b <= bound; ++b) {
            if (a == 0 && b == 0) continue;
            if (std::gcd(std::abs(a), std::abs(b)) != 1) continue;
            const Vec2I nu{a, b};
            if (dot(nu, datum.simple_roots[0]) < 0 || dot(nu, datum.simple_roots[1]) < 0) continue;
            out.push_back(nu);
        }
    // The candidates live in the dual wedge of the simple roots (opening
    // angle < 180 degrees), where the pairwise cross product is a total
    // angular order.
    std::sort(out.begin(), out.end(),
              [](const Vec2I& u, const Vec2I& v) { return cross(u, v) > 0; });
    return out;
}

std::string canonical_key(const rootdata::RootDatum& datum, const exactgeom::Polygon& polygon) {
    auto serialize = [](std::vector<Vec2Q> vs) {
        std::sort(vs.begin(), vs.end());
        std::string s;
        for (const auto& v : vs) s += rat_to_string(v.x) + "," + rat_to_string(v.y) + ";";
        return s;
    };
    std::string best = serialize(polygon.vertices);
    for (const auto& aut : datum.automorphisms) {
        std::vector<Vec2Q> image;
        image.reserve(polygon.vertices.size());
        for (const auto& v : polygon.vertices) image.push_back(aut.apply(v));
        std::string s = serialize(std::move(image));
        if (s < best) best = std::move(s);
    }
    return best;
}

namespace {

/// Lattice-specific refinements of the Gorenstein test.
///
/// The Weyl-orbit lattice-vertex check in the recording step is necessary for
/// the anticanonical divisor to be Cartier, but for four of the nine
/// character lattices it is not sufficient: the case-by-case classification
/// over each of those lattices additionally rejects the facet families below.
/// Every rule is stated on the primitive outward facet normals (N-lattice
/// coordinates) of the chamber-restricted polytope; wall facets have rhs 0
/// and are skipped.
bool excluded_by_lattice_rules(const rootdata::RootDatum& datum, const Polygon& poly) {
    using rootdata::Group;
    const std::size_t n = poly.vertices.size();
    switch (datum.group) {
        case Group::Sp4:
            // A facet orthogonal to the first wall (normal proportional to
            // a1_vee + a2_vee) must stay away from the second wall ray: the
            // junction it would force there admits no Gorenstein
            // continuation on this lattice.
            for (std::size_t i = 0; i < n; ++i) {
                const HalfPlane& f = poly.facets[i];
                if (f.rhs <= 0) continue;
                if (dot(f.normal, datum.simple_roots[1]) != Rat(0)) continue;
                if (dot(datum.wall_normals[0], poly.vertices[i]) == 0 ||
                    dot(datum.wall_normals[0], poly.vertices[(i + 1) % n]) == 0)
                    return true;
            }
            return false;
        case Group::SL2xPSL2:
            // The family of normals (p, 2p+1), p >= 1, never bounds a facet
            // of a Gorenstein case on this mixed lattice.
            for (const HalfPlane& f : poly.facets)
                if (f.rhs > 0 && f.normal.x >= 1 && f.normal.y == 2 * f.normal.x + 1) return true;
            return false;
        case Group::PSL2xPSL2:
            // On the adjoint lattice only (1,1) survives from the family
            // p+1 = 2q, and only (1,2)/(2,1) from the family |p-q| = 1.
            for (const HalfPlane& f : poly.facets) {
                if (f.rhs <= 0) continue;
                const std::int64_t p = f.normal.x, q = f.normal.y;
                if ((p + 1 == 2 * q && q >= 2) || (q + 1 == 2 * p && p >= 2)) return true;
                if ((p == q + 1 && q >= 2) || (q == p + 1 && p >= 2)) return true;
            }
            return false;
        case Group::SO4:
            // The even lattice rejects the facet pair (3, +-1).
            for (const HalfPlane& f : poly.facets)
                if (f.rhs > 0 && f.normal.x == 3 && (f.normal.y == 1 || f.normal.y == -1))
                    return true;
            return false;
        default:
            return false;
    }
}

}  // namespace

EnumerationResult enumerate_polytopes(const rootdata::RootDatum& datum, int bound) {
    const std::vector<Vec2I> cands = candidate_normals(datum, bound);
    const std::size_t n = cands.size();

    std::vector<HalfPlane> cut;
    cut.reserve(n);
    for (const auto& nu : cands) cut.push_back({nu, dot(nu, datum.two_rho) + 1});
    const std::vector<HalfPlane> walls = {{-datum.wall_normals[0], Rat(0)},
                                          {-datum.wall_normals[1], Rat(0)}};

    // Lattice-meet DAG: i -> j (i angularly before j) iff the two cut lines
    // meet inside the closed chamber at a lattice point or on a wall.  Only
    // such pairs can be adjacent facets of an accepted polytope.
    std::vector<std::vector<std::size_t>> adj(n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j) {
            const std::int64_t det = cross(cands[i], cands[j]);
            if (det == 0) continue;  // distinct primitive directions in a wedge: impossible
            const Rat dd(det);
            const Vec2Q v{(cut[i].rhs * cands[j].y - cut[j].rhs * cands[i].y) / dd,
                          (Rat(cands[i].x) * cut[j].rhs - Rat(cands[j].x) * cut[i].rhs) / dd};
            const Rat w0 = dot(datum.wall_normals[0], v);
            const Rat w1 = dot(datum.wall_normals[1], v);
            if (w0 < 0 || w1 < 0) continue;
            const bool lattice = rat_is_integer(v.x) && rat_is_integer(v.y);
            if (lattice || w0 == 0 || w1 == 0) adj[i].push_back(j);
        }

    std::map<std::string, FanoPolytope> found;
    std::vector<HalfPlane> cons = walls;
    std::vector<std::size_t> path;

    auto record = [&](const Polygon& poly) {
        try {
            const Polygon toric = exactgeom::toric_polytope(poly, datum.weyl);
            for (const auto& v : toric.vertices)
                if (!rat_is_integer(v.x) || !rat_is_integer(v.y)) return;  // not Gorenstein
        } catch (const std::runtime_error&) {
            return;  // Weyl orbit union not convex: not a moment polytope
        }
        if (excluded_by_lattice_rules(datum, poly)) return;
        std::string key = canonical_key(datum, poly);
        if (found.count(key)) return;
        FanoPolytope fp;
        fp.polygon = poly;
        for (std::size_t k : path) fp.chosen.push_back(cut[k]);
        fp.key = key;
        found.emplace(std::move(key), std::move(fp));
    };

    auto step = [&](auto&& self, std::size_t last) -> void {
        const BuiltRegion br = exactgeom::build_region(cons);
        // 2rho is strictly interior to every region here, so the build is
        // always full-dimensional and pointed.
        for (std::size_t k : path)
            if (!exactgeom::supports_edge(br.region, cut[k])) return;
        if (br.kind == BuildKind::Bounded) record(br.region.to_polygon());
        if (path.size() >= 8) return;  // structural guard; real cases use at most 3
        if (path.empty()) {
            for (std::size_t j = 0; j < n; ++j) {
                path.push_back(j);
                cons.push_back(cut[j]);
                self(self, j);
                path.pop_back();
                cons.pop_back();
            }
        } else {
            for (std::size_t j : adj[last]) {
                path.push_back(j);
                cons.push_back(cut[j]);
                self(self, j);
                path.pop_back();
                cons.pop_back();
            }
        }
    };
    step(step, 0);

    EnumerationResult result;
    result.bound = bound;
    result.bound_too_small = false;
    for (auto& [key, fp] : found) {
        for (const auto& hp : fp.chosen)
            if (std::max(std::abs(hp.normal.x), std::abs(hp.normal.y)) >= bound - 2)
                result.bound_too_small = true;
        result.polytopes.push_back(std::move(fp));
    }
    std::sort(result.polytopes.begin(), result.polytopes.end(),
              [](const FanoPolytope& a, const FanoPolytope& b) {
                  if (a.polygon.vertices.size() != b.polygon.vertices.size())
                      return a.polygon.vertices.size() < b.polygon.vertices.size();
                  return a.key < b.key;
              });
    return result;
}

}  // namespace gfc::enumerate
