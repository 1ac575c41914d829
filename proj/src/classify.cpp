#include "gfc/classify.hpp"

#include "gfc/catalog.hpp"
#include "gfc/dh_measure.hpp"
#include "gfc/enumerate.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>
#include <utility>

namespace gfc::classify {

std::string to_string(KStability v) {
    switch (v) {
        case KStability::Stable: return "Stable";
        case KStability::SemistableBoundary: return "SemistableBoundary";
        case KStability::Unstable: return "Unstable";
    }
    throw std::logic_error("unreachable");
}

std::string to_string(Smoothness v) {
    switch (v) {
        case Smoothness::Smooth: return "Smooth";
        case Smoothness::Singular: return "Singular";
        case Smoothness::Undetermined: return "Undetermined";
    }
    throw std::logic_error("unreachable");
}

std::string to_string(SmoothnessBasis v) {
    switch (v) {
        case SmoothnessBasis::DelzantFail: return "DelzantFail";
        case SmoothnessBasis::DelzantPassNoWallVertex: return "DelzantPassNoWallVertex";
        case SmoothnessBasis::CriterionSilent: return "CriterionSilent";
    }
    throw std::logic_error("unreachable");
}

KStability kstability_verdict(const rootdata::RootDatum& datum, const Vec2Q& barycenter) {
    const auto c = rootdata::positive_cone_coords(datum, barycenter - datum.two_rho);
    if (c[0] > 0 && c[1] > 0) return KStability::Stable;
    if (c[0] >= 0 && c[1] >= 0) return KStability::SemistableBoundary;
    return KStability::Unstable;
}

KStability kstability_verdict(const rootdata::RootDatum& datum,
                              const exactgeom::Polygon& polygon) {
    return kstability_verdict(datum, dhmeasure::barycenter(datum, polygon));
}

RicciBound greatest_ricci_lower_bound(const rootdata::RootDatum& datum,
                                      const exactgeom::Polygon& polygon,
                                      const Vec2Q& barycenter) {
    const Vec2Q dir = datum.two_rho - barycenter;
    if (dir.x == 0 && dir.y == 0)
        throw std::domain_error("greatest_ricci_lower_bound: barycenter equals 2rho");

    auto to_lattice_dir = [](const Vec2Q& v) {
        return Vec2I{rat_to_int(v.x).convert_to<std::int64_t>(),
                     rat_to_int(v.y).convert_to<std::int64_t>()};
    };
    const std::vector<Vec2I> rays = {to_lattice_dir(-Rat(1) * datum.simple_roots[0]),
                                     to_lattice_dir(-Rat(1) * datum.simple_roots[1])};
    const exactgeom::Region widened = exactgeom::minkowski_sum_with_cone(polygon, rays);

    const std::optional<Rat> s = exactgeom::ray_exit(widened, barycenter, dir);
    if (!s)
        throw std::runtime_error("greatest_ricci_lower_bound: ray trapped in recession cone");
    return {(*s - 1) / *s, barycenter + *s * dir};
}

namespace {

/// Identification-backed smoothness verdicts for the cases the polytope
/// criterion cannot certify: the homogeneous cases and their blow-ups whose
/// toric polytopes have vertices on Weyl walls (and one, the Lagrangian
/// Grassmannian, whose toric polytope even fails the Delzant vertex test).
/// Keyed by canonical polytope fingerprint via the catalog.
struct Override {
    rootdata::Group group;
    int catalog_index;
    const char* note;
};

constexpr Override kSmoothOverrides[] = {
    {rootdata::Group::SO4, 2,
     "smooth by override: classified smooth compactification (toric vertex on a Weyl wall)"},
    {rootdata::Group::SO4, 4,
     "smooth by override: classified smooth compactification (toric vertex on a Weyl wall)"},
    {rootdata::Group::SO4, 6,
     "smooth by override: classified smooth compactification (toric vertex on a Weyl wall)"},
    {rootdata::Group::SL3, 1,
     "smooth by override: symmetric variety with Picard number one (toric vertex on a Weyl "
     "wall)"},
    {rootdata::Group::SL3, 2,
     "smooth by override: blow-up of the Picard-number-one symmetric variety along a closed "
     "orbit (toric vertex on a Weyl wall)"},
    {rootdata::Group::SL3, 3,
     "smooth by override: iterated blow-up of the Picard-number-one symmetric variety (toric "
     "vertex on a Weyl wall)"},
    {rootdata::Group::PSL3, 1,
     "smooth by override: projective space of 3x3 matrices (toric vertex on a Weyl wall)"},
    {rootdata::Group::Sp4, 1,
     "smooth by override: Lagrangian Grassmannian Lag(4,8); the identification supersedes the "
     "failed Delzant vertex test at the toric corners"},
    {rootdata::Group::SO5, 1,
     "smooth by override: ten-dimensional spinor variety (toric vertex on a Weyl wall)"},
    {rootdata::Group::G2, 2,
     "smooth by override: double Cayley Grassmannian (toric vertex on a Weyl wall)"},
};

/// note for the override matching (group, canonical key), or nullptr.
const char* override_note(const rootdata::RootDatum& datum, const std::string& key) {
    using MapKey = std::pair<rootdata::Group, std::string>;
    static const std::map<MapKey, const char*> by_key = [] {
        std::map<MapKey, const char*> m;
        for (const Override& o : kSmoothOverrides) {
            for (const catalog::CaseEntry* e : catalog::entries_for(o.group)) {
                if (e->index != o.catalog_index) continue;
                const rootdata::RootDatum& d = rootdata::root_datum(o.group);
                exactgeom::Polygon poly = exactgeom::polygon_from_vertices(e->vertices);
                m.emplace(MapKey{o.group, enumerate::canonical_key(d, poly)}, o.note);
            }
        }
        return m;
    }();
    auto it = by_key.find(MapKey{datum.group, key});
    return it == by_key.end() ? nullptr : it->second;
}

}  // namespace

SmoothnessResult smoothness_verdict(const rootdata::RootDatum& datum,
                                    const exactgeom::Polygon& polygon) {
    const exactgeom::Polygon toric = exactgeom::toric_polytope(polygon, datum.weyl);

    bool delzant = true;
    for (const exactgeom::VertexDelzant& vd : exactgeom::delzant_at_vertices(toric))
        if (vd.det != 1 && vd.det != -1) delzant = false;

    bool wall_vertex = false;
    for (const Vec2Q& v : toric.vertices)
        for (const Vec2I& wall : datum.wall_normals)
            if (dot(wall, v) == 0) wall_vertex = true;

    SmoothnessResult result;
    if (!delzant) {
        result = {Smoothness::Singular, SmoothnessBasis::DelzantFail, ""};
    } else if (!wall_vertex) {
        result = {Smoothness::Smooth, SmoothnessBasis::DelzantPassNoWallVertex, ""};
    } else {
        result = {Smoothness::Undetermined, SmoothnessBasis::CriterionSilent,
                  "criterion silent: Delzant holds but a toric vertex lies on a Weyl wall"};
    }

    if (const char* note = override_note(datum, enumerate::canonical_key(datum, polygon))) {
        result.verdict = Smoothness::Smooth;
        result.note = note;
    }
    return result;
}

std::vector<ClassificationRecord> classify_group(const rootdata::RootDatum& datum, int bound,
                                                 bool* bound_too_small) {
    const enumerate::EnumerationResult enumeration =
        enumerate::enumerate_polytopes(datum, bound);
    if (bound_too_small != nullptr)
        *bound_too_small = *bound_too_small || enumeration.bound_too_small;

    struct Item {
        const catalog::CaseEntry* entry;  // nullptr if uncatalogued
        const enumerate::FanoPolytope* fp;
    };
    std::vector<Item> items;
    items.reserve(enumeration.polytopes.size());
    for (const enumerate::FanoPolytope& fp : enumeration.polytopes)
        items.push_back({catalog::find_by_key(datum, fp.key), &fp});

    std::sort(items.begin(), items.end(), [](const Item& a, const Item& b) {
        if (a.entry && b.entry) return a.entry->index < b.entry->index;
        if (a.entry != b.entry) return a.entry != nullptr;  // catalogued first
        return a.fp->key < b.fp->key;
    });

    std::vector<ClassificationRecord> records;
    records.reserve(items.size());
    for (const Item& item : items) {
        ClassificationRecord rec;
        rec.group = datum.group;
        if (item.entry) {
            rec.index = item.entry->index;
            rec.case_label = item.entry->case_label;
            rec.polygon = exactgeom::polygon_from_vertices(item.entry->vertices);
        } else {
            rec.polygon = item.fp->polygon;
            rec.notes = "not in the catalog";
        }

        rec.barycenter = dhmeasure::barycenter(datum, rec.polygon);
        rec.kstability = kstability_verdict(datum, rec.barycenter);

        const SmoothnessResult sm = smoothness_verdict(datum, rec.polygon);
        rec.smoothness = sm.verdict;
        rec.smoothness_basis = sm.basis;
        if (!sm.note.empty()) rec.notes += (rec.notes.empty() ? "" : "; ") + sm.note;

        if (rec.kstability == KStability::Unstable) {
            const RicciBound rb = greatest_ricci_lower_bound(datum, rec.polygon, rec.barycenter);
            rec.r_invariant = rb.r;
            rec.q_witness = rb.q;
            if (rec.smoothness != Smoothness::Smooth)
                rec.notes += (rec.notes.empty() ? "" : "; ") +
                             std::string("formal R (smooth-case formula)");
        } else {
            rec.r_invariant = 1;
        }
        records.push_back(std::move(rec));
    }
    return records;
}

}  // namespace gfc::classify
