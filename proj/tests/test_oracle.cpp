#include "doctest.h"

#include "gfc/catalog.hpp"
#include "gfc/dh_measure.hpp"
#include "gfc/geometry.hpp"
#include "gfc/oracle.hpp"
#include "gfc/rootdata.hpp"

#include <cmath>
#include <random>
#include <stdexcept>
#include <vector>

using namespace gfc;

TEST_CASE("brute-force hull agrees with the incremental hull") {
    std::mt19937 rng(911003u);
    std::uniform_int_distribution<int> coord(-12, 12);
    std::uniform_int_distribution<int> den(1, 3);
    std::uniform_int_distribution<int> count(3, 10);
    int checked = 0;
    while (checked < 120) {
        std::vector<Vec2Q> pts;
        const int n = count(rng);
        for (int i = 0; i < n; ++i) pts.push_back({Rat(coord(rng), den(rng)), Rat(coord(rng), den(rng))});
        const std::vector<Vec2Q> reference = oracle::brute_force_hull(pts);
        if (reference.size() < 3) {
            CHECK_THROWS_AS(exactgeom::polygon_from_vertices(pts), std::invalid_argument);
            continue;  // degenerate sets don't count toward the quota
        }
        const exactgeom::Polygon hull = exactgeom::polygon_from_vertices(pts);
        CHECK(hull.vertices == reference);
        ++checked;
    }
}

TEST_CASE("quadrature barycenter tracks the exact barycenter on the census") {
    for (const catalog::CaseEntry& entry : catalog::entries()) {
        const rootdata::RootDatum& d = rootdata::root_datum(entry.group);
        const exactgeom::Polygon p = exactgeom::polygon_from_vertices(entry.vertices);
        const Vec2Q exact = dhmeasure::barycenter(d, p);
        const oracle::NumericBarycenter num = oracle::numeric_dh_barycenter(d, p, 2000);
        CHECK(num.mass > 0);
        CHECK(std::abs(num.x - exact.x.convert_to<double>()) <= 1e-4);
        CHECK(std::abs(num.y - exact.y.convert_to<double>()) <= 1e-4);
    }
}

TEST_CASE("quadrature mass converges to the exact mass") {
    // One representative per lattice family keeps this quick.
    const std::vector<std::pair<rootdata::Group, int>> picks = {
        {rootdata::Group::SL2xSL2, 1}, {rootdata::Group::SL3, 1}, {rootdata::Group::G2, 1}};
    for (const auto& [g, index] : picks) {
        const rootdata::RootDatum& d = rootdata::root_datum(g);
        for (const catalog::CaseEntry* e : catalog::entries_for(g)) {
            if (e->index != index) continue;
            const exactgeom::Polygon p = exactgeom::polygon_from_vertices(e->vertices);
            const double exact = dhmeasure::mass(d, p).convert_to<double>();
            const double err500 =
                std::abs(oracle::numeric_dh_barycenter(d, p, 500).mass - exact);
            const double err2000 =
                std::abs(oracle::numeric_dh_barycenter(d, p, 2000).mass - exact);
            CHECK(err2000 <= exact * 1e-4);
            CHECK(err2000 < err500);  // finer grids do better
        }
    }
}

TEST_CASE("quadrature rejects bad inputs") {
    const rootdata::RootDatum& d = rootdata::root_datum(rootdata::Group::SL2xSL2);
    const exactgeom::Polygon p = exactgeom::polygon_from_vertices(
        {Vec2Q{Rat(0), Rat(0)}, Vec2Q{Rat(1), Rat(0)}, Vec2Q{Rat(0), Rat(1)}});
    CHECK_THROWS_AS(oracle::numeric_dh_barycenter(d, p, 0), std::invalid_argument);
}
