#include "doctest.h"

#include "gfc/enumerate.hpp"
#include "gfc/geometry.hpp"
#include "gfc/rootdata.hpp"

#include <algorithm>
#include <cstdint>
#include <cstdlib>
#include <map>
#include <set>
#include <string>
#include <vector>

using namespace gfc;
using rootdata::RootDatum;

namespace {

const std::map<rootdata::Group, std::size_t>& expected_counts() {
    static const std::map<rootdata::Group, std::size_t> counts = {
        {rootdata::Group::SL2xSL2, 15}, {rootdata::Group::PSL2xPSL2, 7},
        {rootdata::Group::SL2xPSL2, 14}, {rootdata::Group::SO4, 6},
        {rootdata::Group::SL3, 5},       {rootdata::Group::PSL3, 3},
        {rootdata::Group::Sp4, 4},       {rootdata::Group::SO5, 4},
        {rootdata::Group::G2, 2},
    };
    return counts;
}

}  // namespace

TEST_CASE("candidate normals are primitive, dominant-paired, and bounded") {
    for (rootdata::Group g : rootdata::kAllGroups) {
        const RootDatum& d = rootdata::root_datum(g);
        const std::vector<Vec2I> candidates = enumerate::candidate_normals(d, 10);
        CHECK(!candidates.empty());
        std::set<Vec2I> seen;
        for (const Vec2I& nu : candidates) {
            CHECK(primitive(nu) == nu);
            CHECK(seen.insert(nu).second);
            // Candidates live in the dual wedge of the simple roots, which
            // forces a strictly positive pairing against 2rho; coordinates
            // stay within the search bound.
            CHECK((std::max(std::abs(nu.x), std::abs(nu.y)) <= 10));
            CHECK(dot(nu, d.simple_roots[0]) >= 0);
            CHECK(dot(nu, d.simple_roots[1]) >= 0);
            CHECK(dot(nu.to_rational(), d.two_rho) > 0);
        }
        // Sorted strictly by angle (a total order inside the wedge).
        for (std::size_t i = 0; i + 1 < candidates.size(); ++i)
            CHECK(cross(candidates[i], candidates[i + 1]) > 0);
    }
}

TEST_CASE("census counts at bound 10") {
    std::size_t total = 0;
    for (rootdata::Group g : rootdata::kAllGroups) {
        const RootDatum& d = rootdata::root_datum(g);
        const enumerate::EnumerationResult res = enumerate::enumerate_polytopes(d, 10);
        CHECK(res.bound == 10);
        CHECK_FALSE(res.bound_too_small);
        CHECK(res.polytopes.size() == expected_counts().at(g));
        total += res.polytopes.size();
    }
    CHECK(total == 60);
}

TEST_CASE("census is stable between bounds 10 and 14") {
    for (rootdata::Group g : rootdata::kAllGroups) {
        const RootDatum& d = rootdata::root_datum(g);
        std::set<std::string> at10, at14;
        for (const auto& fp : enumerate::enumerate_polytopes(d, 10).polytopes)
            at10.insert(fp.key);
        for (const auto& fp : enumerate::enumerate_polytopes(d, 14).polytopes)
            at14.insert(fp.key);
        CHECK(at10 == at14);
    }
}

TEST_CASE("a too-small bound reports clipping") {
    const RootDatum& d = rootdata::root_datum(rootdata::Group::SL2xSL2);
    const enumerate::EnumerationResult res = enumerate::enumerate_polytopes(d, 3);
    CHECK(res.bound_too_small);
    CHECK(res.polytopes.size() < expected_counts().at(rootdata::Group::SL2xSL2));
}

TEST_CASE("every census polytope satisfies the defining invariants") {
    for (rootdata::Group g : rootdata::kAllGroups) {
        const RootDatum& d = rootdata::root_datum(g);
        const enumerate::EnumerationResult res = enumerate::enumerate_polytopes(d, 10);
        std::set<std::string> keys;
        for (const enumerate::FanoPolytope& fp : res.polytopes) {
            CHECK(keys.insert(fp.key).second);  // keys are distinct
            CHECK(fp.key == enumerate::canonical_key(d, fp.polygon));

            const exactgeom::Polygon& p = fp.polygon;
            // The origin is a vertex and 2rho is strictly inside.
            bool has_origin = false;
            for (const Vec2Q& v : p.vertices)
                if (v == Vec2Q{0, 0}) has_origin = true;
            CHECK(has_origin);
            CHECK(p.strictly_contains(d.two_rho));

            // Chosen cut half-planes are exactly the non-wall facets, each at
            // height <pairing with 2rho> + 1.
            std::size_t cut_facets = 0;
            for (const exactgeom::HalfPlane& f : p.facets)
                if (f.rhs > 0) ++cut_facets;
            CHECK(cut_facets == fp.chosen.size());
            for (const exactgeom::HalfPlane& hp : fp.chosen) {
                CHECK(hp.rhs == dot(hp.normal, d.two_rho) + 1);
                bool is_facet = false;
                for (const exactgeom::HalfPlane& f : p.facets)
                    if (f.normal == hp.normal && f.rhs == hp.rhs) is_facet = true;
                CHECK(is_facet);
            }

            // The Weyl orbit closure is a reflexive-style lattice object: all
            // toric vertices are lattice points, and its area is |W| times
            // the chamber piece's.
            const exactgeom::Polygon toric = exactgeom::toric_polytope(p, d.weyl);
            CHECK(toric.area() == Rat(static_cast<int>(d.weyl.size())) * p.area());
            for (const Vec2Q& v : toric.vertices) {
                CHECK(rat_is_integer(v.x));
                CHECK(rat_is_integer(v.y));
            }
        }
    }
}

TEST_CASE("canonical keys are invariant under lattice automorphisms") {
    for (rootdata::Group g : rootdata::kAllGroups) {
        const RootDatum& d = rootdata::root_datum(g);
        for (const enumerate::FanoPolytope& fp :
             enumerate::enumerate_polytopes(d, 10).polytopes) {
            for (const Mat2I& a : d.automorphisms) {
                std::vector<Vec2Q> image;
                for (const Vec2Q& v : fp.polygon.vertices) image.push_back(a.apply(v));
                const exactgeom::Polygon moved = exactgeom::polygon_from_vertices(image);
                CHECK(enumerate::canonical_key(d, moved) == fp.key);
            }
        }
    }
}
