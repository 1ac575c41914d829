#include "doctest.h"

#include "gfc/rootdata.hpp"

#include <map>
#include <set>
#include <vector>

using namespace gfc;
using rootdata::Group;
using rootdata::RootDatum;
using rootdata::kAllGroups;

namespace {

/// Euclidean inner product of two embedded points; rational in every frame.
Rat euclid_dot(const Vec2E& u, const Vec2E& v) {
    const QuadExt d = u.x * v.x + u.y * v.y;
    REQUIRE(d.is_rational());
    return d.a;
}

std::set<std::pair<Rat, Rat>> root_set(const std::vector<Vec2Q>& roots) {
    std::set<std::pair<Rat, Rat>> s;
    for (const Vec2Q& r : roots) s.insert({r.x, r.y});
    return s;
}

}  // namespace

TEST_CASE("group names round-trip") {
    for (Group g : kAllGroups) {
        const auto back = rootdata::group_from_name(rootdata::group_name(g));
        REQUIRE(back.has_value());
        CHECK(*back == g);
        CHECK(rootdata::root_datum(g).group == g);
        CHECK(rootdata::root_datum(g).name == rootdata::group_name(g));
    }
    CHECK_FALSE(rootdata::group_from_name("SL17").has_value());
}

TEST_CASE("Weyl group orders and positive root counts") {
    const std::map<Group, std::pair<std::size_t, std::size_t>> expected = {
        {Group::SL2xSL2, {4, 2}},  {Group::PSL2xPSL2, {4, 2}}, {Group::SL2xPSL2, {4, 2}},
        {Group::SO4, {4, 2}},      {Group::SL3, {6, 3}},       {Group::PSL3, {6, 3}},
        {Group::Sp4, {8, 4}},      {Group::SO5, {8, 4}},       {Group::G2, {12, 6}},
    };
    for (Group g : kAllGroups) {
        const RootDatum& d = rootdata::root_datum(g);
        CHECK(d.weyl.size() == expected.at(g).first);
        CHECK(d.positive_roots.size() == expected.at(g).second);
        CHECK(rootdata::weyl_group(d).size() == d.weyl.size());
    }
}

TEST_CASE("two_rho is the positive-root sum with the pinned lattice coordinates") {
    const std::map<Group, Vec2Q> pinned = {
        {Group::SL2xSL2, {2, 2}}, {Group::PSL2xPSL2, {1, 1}}, {Group::SL2xPSL2, {2, 1}},
        {Group::SO4, {2, 0}},     {Group::SL3, {2, 2}},       {Group::PSL3, {2, 2}},
        {Group::Sp4, {2, 2}},     {Group::SO5, {4, 3}},       {Group::G2, {2, 2}},
    };
    for (Group g : kAllGroups) {
        const RootDatum& d = rootdata::root_datum(g);
        Vec2Q sum{0, 0};
        for (const Vec2Q& alpha : d.positive_roots) sum = sum + alpha;
        CHECK(sum == d.two_rho);
        CHECK(d.two_rho == pinned.at(g));
    }
}

TEST_CASE("simple reflections negate their root and permute the rest") {
    for (Group g : kAllGroups) {
        const RootDatum& d = rootdata::root_datum(g);
        const auto positives = root_set(d.positive_roots);
        for (int i = 0; i < 2; ++i) {
            const Mat2I& s = d.simple_reflections[i];
            CHECK(s.apply(d.simple_roots[i]) == Rat(-1) * d.simple_roots[i]);
            for (const Vec2Q& alpha : d.positive_roots) {
                if (alpha == d.simple_roots[i]) continue;
                const Vec2Q image = s.apply(alpha);
                CHECK(positives.count({image.x, image.y}) == 1);
            }
        }
    }
}

TEST_CASE("Weyl elements are unimodular kappa isometries") {
    for (Group g : kAllGroups) {
        const RootDatum& d = rootdata::root_datum(g);
        const Vec2Q e1{1, 0}, e2{0, 1};
        for (const Mat2I& w : d.weyl) {
            const std::int64_t det = w.det();
            CHECK((det == 1 || det == -1));
            CHECK(d.kappa(w.apply(e1), w.apply(e1)) == d.kappa(e1, e1));
            CHECK(d.kappa(w.apply(e1), w.apply(e2)) == d.kappa(e1, e2));
            CHECK(d.kappa(w.apply(e2), w.apply(e2)) == d.kappa(e2, e2));
        }
    }
}

TEST_CASE("Euclidean embedding is a kappa isometry") {
    for (Group g : kAllGroups) {
        const RootDatum& d = rootdata::root_datum(g);
        std::vector<Vec2Q> sample = {d.simple_roots[0], d.simple_roots[1], d.two_rho, {1, 0}};
        for (const Vec2Q& u : sample) {
            for (const Vec2Q& v : sample) {
                const Rat lhs =
                    euclid_dot(rootdata::to_euclidean(d, u), rootdata::to_euclidean(d, v));
                CHECK(lhs == d.kappa(u, v));
            }
        }
    }
}

TEST_CASE("chamber walls and positive cone coordinates") {
    for (Group g : kAllGroups) {
        const RootDatum& d = rootdata::root_datum(g);
        for (int i = 0; i < 2; ++i) CHECK(dot(d.wall_normals[i], d.two_rho) > 0);
        const auto c1 = rootdata::positive_cone_coords(d, d.simple_roots[0]);
        const auto c2 = rootdata::positive_cone_coords(d, d.simple_roots[1]);
        CHECK(c1[0] == 1);
        CHECK(c1[1] == 0);
        CHECK(c2[0] == 0);
        CHECK(c2[1] == 1);
        const Vec2Q mix = Rat(3) * d.simple_roots[0] + Rat(7, 2) * d.simple_roots[1];
        const auto cm = rootdata::positive_cone_coords(d, mix);
        CHECK(cm[0] == 3);
        CHECK(cm[1] == Rat(7, 2));
    }
}

TEST_CASE("with_scaled_gram scales kappa and nothing else") {
    for (Group g : kAllGroups) {
        const RootDatum& d = rootdata::root_datum(g);
        const RootDatum scaled = rootdata::with_scaled_gram(d, Rat(7, 3));
        const Vec2Q u{1, 0}, v{2, -1};
        CHECK(scaled.kappa(u, v) == Rat(7, 3) * d.kappa(u, v));
        CHECK(scaled.two_rho == d.two_rho);
        CHECK(scaled.simple_roots == d.simple_roots);
        CHECK(scaled.wall_normals == d.wall_normals);
        CHECK(scaled.positive_roots.size() == d.positive_roots.size());
    }
}

TEST_CASE("lattice automorphisms preserve the root data") {
    for (Group g : kAllGroups) {
        const RootDatum& d = rootdata::root_datum(g);
        const auto positives = root_set(d.positive_roots);
        for (const Mat2I& a : d.automorphisms) {
            CHECK_FALSE(a == Mat2I::identity());
            const std::int64_t det = a.det();
            CHECK((det == 1 || det == -1));
            CHECK(a.apply(d.two_rho) == d.two_rho);
            for (const Vec2Q& alpha : d.positive_roots) {
                const Vec2Q image = a.apply(alpha);
                CHECK(positives.count({image.x, image.y}) == 1);
            }
        }
    }
}
