#include "doctest.h"

#include "gfc/catalog.hpp"
#include "gfc/dh_measure.hpp"
#include "gfc/enumerate.hpp"
#include "gfc/geometry.hpp"
#include "gfc/rootdata.hpp"

#include <map>
#include <set>
#include <string>
#include <vector>

using namespace gfc;
using rootdata::Group;

namespace {

QuadExt rational_quad(const Rat& q) { return QuadExt{q, Rat(0)}; }
QuadExt sqrt3_quad(const Rat& q) { return QuadExt{Rat(0), q}; }

Vec2E engine_barycenter_euclid(const catalog::CaseEntry& entry) {
    const rootdata::RootDatum& d = rootdata::root_datum(entry.group);
    const exactgeom::Polygon p = exactgeom::polygon_from_vertices(entry.vertices);
    return rootdata::to_euclidean(d, dhmeasure::barycenter(d, p));
}

}  // namespace

TEST_CASE("catalog shape: counts, indices, labels") {
    CHECK(catalog::entries().size() == 60);
    const std::map<Group, std::size_t> expected_count = {
        {Group::SL2xSL2, 15}, {Group::PSL2xPSL2, 7}, {Group::SL2xPSL2, 14},
        {Group::SO4, 6},      {Group::SL3, 5},       {Group::PSL3, 3},
        {Group::Sp4, 4},      {Group::SO5, 4},       {Group::G2, 2},
    };
    for (const auto& [g, n] : expected_count) {
        const auto list = catalog::entries_for(g);
        REQUIRE(list.size() == n);
        std::set<std::string> labels;
        for (std::size_t i = 0; i < list.size(); ++i) {
            CHECK(list[i]->group == g);
            CHECK(list[i]->index == static_cast<int>(i) + 1);
            CHECK(labels.insert(list[i]->case_label).second);
            CHECK(!list[i]->case_label.empty());
        }
    }
}

TEST_CASE("catalog flag tallies match the classification totals") {
    const std::map<Group, int> expected_smooth = {
        {Group::SL2xSL2, 2}, {Group::PSL2xPSL2, 2}, {Group::SL2xPSL2, 2},
        {Group::SO4, 3},     {Group::SL3, 3},       {Group::PSL3, 3},
        {Group::Sp4, 3},     {Group::SO5, 2},       {Group::G2, 2},
    };
    const std::map<Group, int> expected_stable = {
        {Group::SL2xSL2, 3}, {Group::PSL2xPSL2, 5}, {Group::SL2xPSL2, 4},
        {Group::SO4, 2},     {Group::SL3, 2},       {Group::PSL3, 3},
        {Group::Sp4, 2},     {Group::SO5, 4},       {Group::G2, 2},
    };
    int smooth_total = 0, stable_total = 0;
    for (Group g : rootdata::kAllGroups) {
        int smooth = 0, stable = 0;
        for (const catalog::CaseEntry* e : catalog::entries_for(g)) {
            smooth += e->smooth ? 1 : 0;
            stable += e->kstable ? 1 : 0;
        }
        CHECK(smooth == expected_smooth.at(g));
        CHECK(stable == expected_stable.at(g));
        smooth_total += smooth;
        stable_total += stable;
    }
    CHECK(smooth_total == 22);
    CHECK(stable_total == 27);
}

TEST_CASE("catalog and census are in bijection through canonical keys") {
    for (Group g : rootdata::kAllGroups) {
        const rootdata::RootDatum& d = rootdata::root_datum(g);
        const auto census = enumerate::enumerate_polytopes(d, 10);
        std::set<int> hit;
        for (const enumerate::FanoPolytope& fp : census.polytopes) {
            const catalog::CaseEntry* entry = catalog::find_by_key(d, fp.key);
            REQUIRE(entry != nullptr);
            CHECK(hit.insert(entry->index).second);
            // The stored vertices describe the same polytope (same key).
            const exactgeom::Polygon stored =
                exactgeom::polygon_from_vertices(entry->vertices);
            CHECK(enumerate::canonical_key(d, stored) == fp.key);
        }
        CHECK(hit.size() == catalog::entries_for(g).size());
    }
}

TEST_CASE("every published barycenter is reproduced exactly") {
    std::size_t published = 0;
    for (const catalog::CaseEntry& entry : catalog::entries()) {
        if (!entry.barycenter_euclid) continue;
        ++published;
        CHECK(engine_barycenter_euclid(entry) == *entry.barycenter_euclid);
    }
    CHECK(published == 57);  // all but PSL3(1), Sp4(1), SO5(1)
}

TEST_CASE("the three unpublished barycenters match independently derived pins") {
    struct Pin {
        Group group;
        int index;
        Vec2E value;
    };
    const std::vector<Pin> pins = {
        {Group::PSL3, 1, {rational_quad(Rat(169, 32)), sqrt3_quad(Rat(29, 32))}},
        {Group::Sp4, 1, {rational_quad(Rat(1225, 704)), rational_quad(Rat(35, 11))}},
        {Group::SO5, 1, {rational_quad(Rat(175, 88)), rational_quad(Rat(40, 11))}},
    };
    for (const Pin& pin : pins) {
        const catalog::CaseEntry* entry = nullptr;
        for (const catalog::CaseEntry* e : catalog::entries_for(pin.group))
            if (e->index == pin.index) entry = e;
        REQUIRE(entry != nullptr);
        CHECK_FALSE(entry->barycenter_euclid.has_value());
        CHECK(engine_barycenter_euclid(*entry) == pin.value);
    }
}

TEST_CASE("exactly six entries carry a Ricci bound, with the exact values") {
    const std::map<std::pair<Group, int>, Rat> expected = {
        {{Group::SL2xPSL2, 6}, Rat(8869, 9333)},
        {{Group::SO4, 2}, Rat(75257, 99843)},
        {{Group::SO4, 4}, Rat(49, 51)},
        {{Group::SL3, 2}, Rat(1419621, 1493483)},
        {{Group::SL3, 3}, Rat(21100419, 28437901)},
        {{Group::Sp4, 3}, Rat(1046175339, 1236719713)},
    };
    std::size_t found = 0;
    for (const catalog::CaseEntry& entry : catalog::entries()) {
        const auto it = expected.find({entry.group, entry.index});
        if (entry.ricci) {
            ++found;
            REQUIRE(it != expected.end());
            CHECK(*entry.ricci == it->second);
            // A published bound < 1 only appears on K-unstable smooth cases.
            CHECK(entry.smooth);
            CHECK_FALSE(entry.kstable);
        } else {
            CHECK(it == expected.end());
        }
    }
    CHECK(found == expected.size());
}
