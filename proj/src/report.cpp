#include "gfc/report.hpp"

#include "gfc/catalog.hpp"
#include "gfc/enumerate.hpp"
#include "gfc/numeric.hpp"
#include "gfc/quadext.hpp"

#include "json.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>
#include <vector>

namespace gfc::report {
namespace {

using nlohmann::ordered_json;
using rootdata::Group;
using rootdata::RootDatum;

// ---------------------------------------------------------------------------
// Scalar and point serialization.

ordered_json quad_json(const QuadExt& v) {
    return ordered_json{{"a", v.a.str()}, {"b", v.b.str()}};
}

ordered_json lattice_point_json(const Vec2Q& p) {
    return ordered_json::array({p.x.str(), p.y.str()});
}

ordered_json euclid_point_json(const Vec2E& p) {
    return ordered_json{{"x", quad_json(p.x)}, {"y", quad_json(p.y)}};
}

bool quad_is_zero(const QuadExt& v) { return v.a == 0 && v.b == 0; }

/// Sign of a "pure" element (rational or a pure multiple of sqrt3).
bool quad_is_negative(const QuadExt& v) { return v.a < 0 || (v.a == 0 && v.b < 0); }

// ---------------------------------------------------------------------------
// Edge equations.

/// Positive t such that { t*q : q in values, q != 0 } are coprime integers.
Rat integer_primitive_scale(const std::vector<Rat>& values) {
    using boost::multiprecision::gcd;
    using boost::multiprecision::lcm;
    Int lcm_den(1), gcd_num(0);
    for (const Rat& q : values)
        if (q != 0) lcm_den = lcm(lcm_den, Int(denominator(q)));
    for (const Rat& q : values)
        if (q != 0) gcd_num = gcd(gcd_num, Int(numerator(q) * (lcm_den / denominator(q))));
    if (gcd_num == 0) return Rat(1);
    return Rat(lcm_den) / Rat(gcd_num);
}

}  // namespace

std::string edge_equation(const RootDatum& datum, const exactgeom::HalfPlane& facet) {
    // Transport <nu, m> = c to the Euclidean frame: with e = E m the equation
    // becomes <E^{-T} nu, e> = c.
    const Mat2E inv = datum.euclid_embed.inverse();
    const QuadExt n1{Rat(facet.normal.x)}, n2{Rat(facet.normal.y)};
    const QuadExt cx = inv.a * n1 + inv.c * n2;
    const QuadExt cy = inv.b * n1 + inv.d * n2;

    if (quad_is_zero(cx) && quad_is_zero(cy))
        throw std::invalid_argument("edge_equation: zero facet normal");
    // Lines parallel to an axis normalize by plain division.
    if (quad_is_zero(cx)) return "y=" + (QuadExt(facet.rhs) / cy).str();
    if (quad_is_zero(cy)) return "x=" + (QuadExt(facet.rhs) / cx).str();

    // Both coefficients present: scale to the smallest integer form.  In every
    // Euclidean frame here the coefficients are rational or pure sqrt3
    // multiples, so the rendering "3x+√3y=15" needs no parenthesized sums.
    if ((cx.a != 0 && cx.b != 0) || (cy.a != 0 && cy.b != 0))
        throw std::logic_error("edge_equation: mixed-radical coefficient");
    const Rat t = integer_primitive_scale({cx.a, cx.b, cy.a, cy.b});
    QuadExt sx = t * cx, sy = t * cy;
    Rat rhs = t * facet.rhs;
    if (quad_is_negative(sx)) {
        sx = -sx;
        sy = -sy;
        rhs = -rhs;
    }

    const auto term = [](const QuadExt& coeff, const char* var) -> std::string {
        if (coeff.a == 1 && coeff.b == 0) return var;
        return coeff.str() + var;
    };
    std::string out = term(sx, "x");
    out += quad_is_negative(sy) ? "-" + term(-sy, "y") : "+" + term(sy, "y");
    out += "=" + rhs.str();
    return out;
}

namespace {

/// Cut-facet equations in the table's presentation order (walls have rhs 0).
std::vector<std::string> edge_equations(const RootDatum& datum, const exactgeom::Polygon& p) {
    std::vector<std::string> out;
    for (std::size_t i = p.facets.size(); i-- > 0;)
        if (p.facets[i].rhs > 0) out.push_back(edge_equation(datum, p.facets[i]));
    return out;
}

/// Non-origin vertices in the table's presentation order (reverse boundary
/// order, so the vertex on the first wall comes first).
std::vector<Vec2E> presentation_vertices(const RootDatum& datum, const exactgeom::Polygon& p) {
    std::vector<Vec2E> out;
    for (std::size_t i = p.vertices.size(); i-- > 0;) {
        const Vec2Q& v = p.vertices[i];
        if (v.x == 0 && v.y == 0) continue;
        out.push_back(rootdata::to_euclidean(datum, v));
    }
    return out;
}

std::string euclid_point_str(const Vec2E& p) {
    return "(" + p.x.str() + ", " + p.y.str() + ")";
}

std::string join(const std::vector<std::string>& parts, const std::string& sep) {
    std::string out;
    for (std::size_t i = 0; i < parts.size(); ++i) {
        if (i != 0) out += sep;
        out += parts[i];
    }
    return out;
}

// ---------------------------------------------------------------------------
// Shared per-group evaluation.

struct GroupClassification {
    const RootDatum* datum;
    std::vector<classify::ClassificationRecord> records;
};

std::vector<GroupClassification> classify_groups(const std::vector<Group>& groups, int bound,
                                                 bool* bound_too_small) {
    std::vector<GroupClassification> out;
    out.reserve(groups.size());
    for (Group g : groups) {
        const RootDatum& datum = rootdata::root_datum(g);
        out.push_back({&datum, classify::classify_group(datum, bound, bound_too_small)});
    }
    return out;
}

struct GroupEnumeration {
    const RootDatum* datum;
    enumerate::EnumerationResult result;
};

std::vector<GroupEnumeration> enumerate_groups(const std::vector<Group>& groups, int bound,
                                               bool* bound_too_small) {
    std::vector<GroupEnumeration> out;
    out.reserve(groups.size());
    for (Group g : groups) {
        const RootDatum& datum = rootdata::root_datum(g);
        enumerate::EnumerationResult r = enumerate::enumerate_polytopes(datum, bound);
        if (bound_too_small != nullptr) *bound_too_small = *bound_too_small || r.bound_too_small;
        out.push_back({&datum, std::move(r)});
    }
    return out;
}

/// Catalog label for an enumerated polytope, "-" when unmatched.
std::string label_for(const RootDatum& datum, const enumerate::FanoPolytope& fp) {
    const catalog::CaseEntry* entry = catalog::find_by_key(datum, fp.key);
    return entry != nullptr ? entry->case_label : "-";
}

// ---------------------------------------------------------------------------
// JSON.

ordered_json bundle_header(const char* kind, const std::vector<Group>& groups, int bound) {
    ordered_json j;
    j["schema_version"] = "1";
    j["kind"] = kind;
    ordered_json gen = ordered_json::array();
    for (Group g : groups) gen.push_back(rootdata::group_name(g));
    j["generated_for"] = std::move(gen);
    j["bound"] = bound;
    return j;
}

ordered_json geometry_json(const RootDatum& datum, const exactgeom::Polygon& polygon) {
    ordered_json j;
    ordered_json vl = ordered_json::array(), ve = ordered_json::array();
    for (const Vec2Q& v : polygon.vertices) {
        vl.push_back(lattice_point_json(v));
        ve.push_back(euclid_point_json(rootdata::to_euclidean(datum, v)));
    }
    j["vertices_lattice"] = std::move(vl);
    j["vertices_euclid"] = std::move(ve);
    ordered_json edges = ordered_json::array();
    for (const std::string& e : edge_equations(datum, polygon)) edges.push_back(e);
    j["edges_euclid"] = std::move(edges);
    return j;
}

ordered_json classification_record_json(const RootDatum& datum,
                                        const classify::ClassificationRecord& rec) {
    ordered_json j;
    j["group"] = rootdata::group_name(rec.group);
    j["index"] = rec.index;
    j["case_label"] = rec.case_label.empty() ? "-" : rec.case_label;
    j.update(geometry_json(datum, rec.polygon));
    j["barycenter_lattice"] = lattice_point_json(rec.barycenter);
    j["barycenter_euclid"] = euclid_point_json(rootdata::to_euclidean(datum, rec.barycenter));
    j["kstability"] = classify::to_string(rec.kstability);
    j["smoothness"] = classify::to_string(rec.smoothness);
    j["smoothness_basis"] = classify::to_string(rec.smoothness_basis);
    j["r_invariant"] = rec.r_invariant.str();
    j["r_approx"] = rat_to_decimal(rec.r_invariant, 4);
    if (rec.q_witness.has_value()) {
        j["q_witness_lattice"] = lattice_point_json(*rec.q_witness);
        j["q_witness_euclid"] = euclid_point_json(rootdata::to_euclidean(datum, *rec.q_witness));
    } else {
        j["q_witness_lattice"] = nullptr;
        j["q_witness_euclid"] = nullptr;
    }
    j["notes"] = rec.notes;
    return j;
}

std::string classification_json(const std::vector<Group>& groups, int bound,
                                const std::vector<GroupClassification>& classified) {
    ordered_json j = bundle_header("classification", groups, bound);
    ordered_json records = ordered_json::array();
    int total = 0, smooth = 0, kstable = 0;
    ordered_json by_group = ordered_json::array();
    for (const GroupClassification& gc : classified) {
        int g_total = 0, g_smooth = 0, g_kstable = 0;
        for (const classify::ClassificationRecord& rec : gc.records) {
            records.push_back(classification_record_json(*gc.datum, rec));
            ++g_total;
            if (rec.smoothness == classify::Smoothness::Smooth) ++g_smooth;
            if (rec.kstability == classify::KStability::Stable) ++g_kstable;
        }
        by_group.push_back(ordered_json{{"group", gc.datum->name},
                                        {"count", g_total},
                                        {"smooth", g_smooth},
                                        {"kstable", g_kstable}});
        total += g_total;
        smooth += g_smooth;
        kstable += g_kstable;
    }
    j["records"] = std::move(records);
    j["census"] = ordered_json{{"total", total},
                               {"smooth", smooth},
                               {"singular", total - smooth},
                               {"kstable", kstable},
                               {"by_group", std::move(by_group)}};
    return j.dump(2) + "\n";
}

std::string enumeration_json(const std::vector<Group>& groups, int bound,
                             const std::vector<GroupEnumeration>& enumerated) {
    ordered_json j = bundle_header("enumeration", groups, bound);
    ordered_json records = ordered_json::array();
    int total = 0;
    ordered_json by_group = ordered_json::array();
    for (const GroupEnumeration& ge : enumerated) {
        int index = 0;
        for (const enumerate::FanoPolytope& fp : ge.result.polytopes) {
            ordered_json r;
            r["group"] = ge.datum->name;
            r["index"] = ++index;
            r["case_label"] = label_for(*ge.datum, fp);
            r.update(geometry_json(*ge.datum, fp.polygon));
            records.push_back(std::move(r));
        }
        by_group.push_back(ordered_json{{"group", ge.datum->name}, {"count", index}});
        total += index;
    }
    j["records"] = std::move(records);
    j["census"] = ordered_json{{"total", total}, {"by_group", std::move(by_group)}};
    return j.dump(2) + "\n";
}

// ---------------------------------------------------------------------------
// CSV.

/// Euclidean barycenter x-coordinate: rational in every frame here.
std::string csv_euclid_x(const Vec2E& p) {
    if (p.x.b != 0) throw std::logic_error("csv: irrational Euclidean x");
    return p.x.a.str();
}

/// Euclidean barycenter y-coordinate: the sqrt3 coefficient in the A2/G2
/// frames (where the rational part is zero), the plain value elsewhere.
std::string csv_euclid_y(const Vec2E& p) {
    if (p.y.b != 0) {
        if (p.y.a != 0) throw std::logic_error("csv: mixed-radical Euclidean y");
        return p.y.b.str();
    }
    return p.y.a.str();
}

std::string classification_csv(const std::vector<GroupClassification>& classified) {
    std::ostringstream out;
    out << kCsvHeader << "\n";
    for (const GroupClassification& gc : classified) {
        for (const classify::ClassificationRecord& rec : gc.records) {
            const Vec2E be = rootdata::to_euclidean(*gc.datum, rec.barycenter);
            out << gc.datum->name << ',' << rec.index << ','
                << (rec.case_label.empty() ? "-" : rec.case_label) << ','
                << classify::to_string(rec.kstability) << ','
                << classify::to_string(rec.smoothness) << ','
                << classify::to_string(rec.smoothness_basis) << ','
                << rec.barycenter.x.str() << ',' << rec.barycenter.y.str() << ','
                << csv_euclid_x(be) << ',' << csv_euclid_y(be) << ','
                << rec.r_invariant.str() << ',' << rat_to_decimal(rec.r_invariant, 4) << "\n";
        }
    }
    return out.str();
}

std::string enumeration_csv(const std::vector<GroupEnumeration>& enumerated) {
    std::ostringstream out;
    out << kCsvHeader << "\n";
    for (const GroupEnumeration& ge : enumerated) {
        int index = 0;
        for (const enumerate::FanoPolytope& fp : ge.result.polytopes)
            out << ge.datum->name << ',' << ++index << ',' << label_for(*ge.datum, fp)
                << ",-,-,-,-,-,-,-,-,-\n";
    }
    return out.str();
}

// ---------------------------------------------------------------------------
// Markdown.

std::string md_vertices_cell(const RootDatum& datum, const exactgeom::Polygon& polygon) {
    std::vector<std::string> parts;
    for (const Vec2E& v : presentation_vertices(datum, polygon)) parts.push_back(euclid_point_str(v));
    return join(parts, ", ");
}

std::string classification_md(const std::vector<GroupClassification>& classified) {
    std::ostringstream out;
    int total = 0, smooth = 0, kstable = 0;
    for (const GroupClassification& gc : classified) {
        out << "## " << gc.datum->name << "\n\n";
        out << "| Case | Edges (except Weyl walls) | Vertices | Smooth? | KE |\n";
        out << "| --- | --- | --- | --- | --- |\n";
        for (const classify::ClassificationRecord& rec : gc.records) {
            out << "| " << (rec.case_label.empty() ? "-" : rec.case_label) << " | "
                << join(edge_equations(*gc.datum, rec.polygon), ", ") << " | "
                << md_vertices_cell(*gc.datum, rec.polygon) << " | "
                << (rec.smoothness == classify::Smoothness::Smooth ? "smooth" : "singular")
                << " | " << (rec.kstability == classify::KStability::Stable ? "Yes" : "No")
                << " |\n";
            ++total;
            if (rec.smoothness == classify::Smoothness::Smooth) ++smooth;
            if (rec.kstability == classify::KStability::Stable) ++kstable;
        }
        out << "\n";
    }
    out << total << " cases: " << smooth << " smooth, " << kstable << " K-stable.\n";
    return out.str();
}

std::string enumeration_md(const std::vector<GroupEnumeration>& enumerated) {
    std::ostringstream out;
    int total = 0;
    for (const GroupEnumeration& ge : enumerated) {
        out << "## " << ge.datum->name << "\n\n";
        out << "| Case | Edges (except Weyl walls) | Vertices |\n";
        out << "| --- | --- | --- |\n";
        for (const enumerate::FanoPolytope& fp : ge.result.polytopes) {
            out << "| " << label_for(*ge.datum, fp) << " | "
                << join(edge_equations(*ge.datum, fp.polygon), ", ") << " | "
                << md_vertices_cell(*ge.datum, fp.polygon) << " |\n";
            ++total;
        }
        out << "\n";
    }
    out << total << " cases.\n";
    return out.str();
}

// ---------------------------------------------------------------------------
// Verification.

void json_diff(const ordered_json& expected, const ordered_json& actual, const std::string& path,
               std::vector<std::string>& out) {
    if (expected == actual) return;
    if (expected.is_object() && actual.is_object()) {
        const std::size_t before = out.size();
        for (const auto& item : expected.items()) {
            if (!actual.contains(item.key()))
                out.push_back(path + "/" + item.key() + ": missing in fresh run");
            else
                json_diff(item.value(), actual[item.key()], path + "/" + item.key(), out);
        }
        for (const auto& item : actual.items())
            if (!expected.contains(item.key()))
                out.push_back(path + "/" + item.key() + ": not in expected file");
        if (out.size() == before) out.push_back(path + ": object key order differs");
        return;
    }
    if (expected.is_array() && actual.is_array()) {
        const std::size_t n = std::min(expected.size(), actual.size());
        for (std::size_t i = 0; i < n; ++i)
            json_diff(expected[i], actual[i], path + "/" + std::to_string(i), out);
        for (std::size_t i = n; i < expected.size(); ++i)
            out.push_back(path + "/" + std::to_string(i) + ": missing in fresh run");
        for (std::size_t i = n; i < actual.size(); ++i)
            out.push_back(path + "/" + std::to_string(i) + ": not in expected file");
        return;
    }
    out.push_back(path + ": expected " + expected.dump() + ", fresh run has " + actual.dump());
}

}  // namespace

const char* const kCsvHeader =
    "group,index,case_label,kstable,smooth,smooth_basis,barycenter_lattice_x,"
    "barycenter_lattice_y,barycenter_euclid_x,barycenter_euclid_y_sqrt3coeff,"
    "r_invariant,r_approx";

std::optional<Format> format_from_name(const std::string& name) {
    if (name == "json") return Format::Json;
    if (name == "csv") return Format::Csv;
    if (name == "md") return Format::Md;
    return std::nullopt;
}

std::string enumeration_report(const std::vector<Group>& groups, int bound, Format format,
                               bool* bound_too_small) {
    const std::vector<GroupEnumeration> enumerated =
        enumerate_groups(groups, bound, bound_too_small);
    switch (format) {
        case Format::Json: return enumeration_json(groups, bound, enumerated);
        case Format::Csv: return enumeration_csv(enumerated);
        case Format::Md: return enumeration_md(enumerated);
    }
    throw std::logic_error("unreachable");
}

std::string classification_report(const std::vector<Group>& groups, int bound, Format format,
                                  bool* bound_too_small) {
    const std::vector<GroupClassification> classified =
        classify_groups(groups, bound, bound_too_small);
    switch (format) {
        case Format::Json: return classification_json(groups, bound, classified);
        case Format::Csv: return classification_csv(classified);
        case Format::Md: return classification_md(classified);
    }
    throw std::logic_error("unreachable");
}

int verify_classification(const std::string& expected_json_text, std::string& diagnostics) {
    const ordered_json expected = ordered_json::parse(expected_json_text, nullptr, false);
    if (expected.is_discarded()) {
        diagnostics = "expected file is not valid JSON";
        return 1;
    }
    if (!expected.is_object() || expected.value("schema_version", "") != "1" ||
        expected.value("kind", "") != "classification" || !expected.contains("generated_for") ||
        !expected["generated_for"].is_array() || !expected.contains("bound") ||
        !expected["bound"].is_number_integer() || !expected.contains("records")) {
        diagnostics = "expected file is not a schema-version-1 classification report";
        return 1;
    }
    std::vector<Group> groups;
    for (const ordered_json& name : expected["generated_for"]) {
        if (!name.is_string()) {
            diagnostics = "generated_for entries must be group names";
            return 1;
        }
        const std::optional<Group> g = rootdata::group_from_name(name.get<std::string>());
        if (!g.has_value()) {
            diagnostics = "unknown group in generated_for: " + name.get<std::string>();
            return 1;
        }
        groups.push_back(*g);
    }
    const int bound = expected["bound"].get<int>();
    if (bound < 1) {
        diagnostics = "bound must be a positive integer";
        return 1;
    }

    const ordered_json actual =
        ordered_json::parse(classification_report(groups, bound, Format::Json));
    if (expected == actual) {
        diagnostics.clear();
        return 0;
    }
    std::vector<std::string> diffs;
    json_diff(expected, actual, "", diffs);
    constexpr std::size_t kMaxLines = 50;
    std::ostringstream out;
    for (std::size_t i = 0; i < diffs.size() && i < kMaxLines; ++i) out << diffs[i] << "\n";
    if (diffs.size() > kMaxLines)
        out << "... and " << diffs.size() - kMaxLines << " more differences\n";
    diagnostics = out.str();
    return 3;
}

}  // namespace gfc::report
