#include "doctest.h"

#include "gfc/catalog.hpp"
#include "gfc/classify.hpp"
#include "gfc/report.hpp"
#include "gfc/rootdata.hpp"
#include "gfc/svg.hpp"

#include "json.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

using namespace gfc;
using ojson = nlohmann::ordered_json;
using report::Format;
using rootdata::Group;

namespace {

std::vector<Group> all_groups() {
    return {rootdata::kAllGroups.begin(), rootdata::kAllGroups.end()};
}

std::vector<std::string> lines_of(const std::string& text) {
    std::vector<std::string> lines;
    std::istringstream in(text);
    std::string line;
    while (std::getline(in, line)) lines.push_back(line);
    return lines;
}

std::size_t count_of(const std::string& text, const std::string& needle) {
    std::size_t n = 0;
    for (std::size_t pos = text.find(needle); pos != std::string::npos;
         pos = text.find(needle, pos + needle.size()))
        ++n;
    return n;
}

}  // namespace

TEST_CASE("format names") {
    CHECK(report::format_from_name("json") == Format::Json);
    CHECK(report::format_from_name("csv") == Format::Csv);
    CHECK(report::format_from_name("md") == Format::Md);
    CHECK_FALSE(report::format_from_name("yaml").has_value());
    CHECK_FALSE(report::format_from_name("JSON").has_value());
}

TEST_CASE("CSV: header, shape, and pinned rows") {
    CHECK(std::string(report::kCsvHeader) ==
          "group,index,case_label,kstable,smooth,smooth_basis,barycenter_lattice_x,"
          "barycenter_lattice_y,barycenter_euclid_x,barycenter_euclid_y_sqrt3coeff,"
          "r_invariant,r_approx");

    const std::string csv = report::classification_report(all_groups(), 10, Format::Csv);
    const std::vector<std::string> lines = lines_of(csv);
    REQUIRE(lines.size() == 61);  // header + 60 records
    CHECK(lines[0] == report::kCsvHeader);
    for (std::size_t i = 1; i < lines.size(); ++i)
        CHECK(std::count(lines[i].begin(), lines[i].end(), ',') == 11);

    const std::vector<std::string> pinned = {
        "SL3,1,II,Stable,Smooth,CriterionSilent,20/9,20/9,10/3,10/9,1,1.0000",
        "SO4,2,I.1.2,Unstable,Smooth,CriterionSilent,102741/43004,-16575/23156,"
        "467331/150514,125928/75257,75257/99843,0.7538",
        "SO4,4,I.2.1,Unstable,Smooth,CriterionSilent,489/196,-15/28,297/98,96/49,"
        "49/51,0.9608",
    };
    for (const std::string& row : pinned)
        CHECK(std::find(lines.begin(), lines.end(), row) != lines.end());

    // Enumeration rows reuse the header and dash out the verdict columns.
    const std::string ecsv =
        report::enumeration_report({Group::G2}, 10, Format::Csv);
    const std::vector<std::string> elines = lines_of(ecsv);
    REQUIRE(elines.size() == 3);
    CHECK(elines[0] == report::kCsvHeader);
    CHECK(elines[1] == "G2,1,I.2,-,-,-,-,-,-,-,-,-");
    CHECK(elines[2] == "G2,2,I.1,-,-,-,-,-,-,-,-,-");
}

TEST_CASE("Markdown: the published table shape, exactly") {
    const std::string md = report::classification_report({Group::G2}, 10, Format::Md);
    CHECK(md ==
          "## G2\n"
          "\n"
          "| Case | Edges (except Weyl walls) | Vertices | Smooth? | KE |\n"
          "| --- | --- | --- | --- | --- |\n"
          "| I.1 | y=(7/2)√3, x+√3y=11 | (0, (7/2)√3), (1/2, (7/2)√3), (11/4, (11/4)√3) "
          "| smooth | Yes |\n"
          "| I.2 | y=(7/2)√3 | (0, (7/2)√3), (7/2, (7/2)√3) | smooth | Yes |\n"
          "\n"
          "2 cases: 2 smooth, 2 K-stable.\n");

    const std::string emd = report::enumeration_report({Group::G2}, 10, Format::Md);
    CHECK(emd ==
          "## G2\n"
          "\n"
          "| Case | Edges (except Weyl walls) | Vertices |\n"
          "| --- | --- | --- |\n"
          "| I.2 | y=(7/2)√3 | (0, (7/2)√3), (7/2, (7/2)√3) |\n"
          "| I.1 | y=(7/2)√3, x+√3y=11 | (0, (7/2)√3), (1/2, (7/2)√3), (11/4, (11/4)√3) |\n"
          "\n"
          "2 cases.\n");

    const std::string full = report::classification_report(all_groups(), 10, Format::Md);
    CHECK(count_of(full, "## ") == 9);
    CHECK(full.find("60 cases: 22 smooth, 27 K-stable.\n") != std::string::npos);
}

TEST_CASE("JSON: schema, census, and pinned exact values") {
    const std::string text = report::classification_report(all_groups(), 10, Format::Json);
    const ojson j = ojson::parse(text);

    CHECK(j["schema_version"] == "1");
    CHECK(j["kind"] == "classification");
    CHECK(j["bound"] == 10);
    REQUIRE(j["generated_for"].size() == 9);
    CHECK(j["generated_for"][0] == "SL2xSL2");
    REQUIRE(j["records"].size() == 60);
    CHECK(j["census"]["total"] == 60);
    CHECK(j["census"]["smooth"] == 22);
    CHECK(j["census"]["singular"] == 38);
    CHECK(j["census"]["kstable"] == 27);
    REQUIRE(j["census"]["by_group"].size() == 9);
    CHECK(j["census"]["by_group"][8]["group"] == "G2");
    CHECK(j["census"]["by_group"][8]["count"] == 2);

    // Record key order is part of the byte-stable contract.
    const std::vector<std::string> expected_keys = {
        "group",          "index",           "case_label",       "vertices_lattice",
        "vertices_euclid", "edges_euclid",   "barycenter_lattice", "barycenter_euclid",
        "kstability",     "smoothness",      "smoothness_basis", "r_invariant",
        "r_approx",       "q_witness_lattice", "q_witness_euclid", "notes"};
    std::vector<std::string> seen;
    for (const auto& item : j["records"][0].items()) seen.push_back(item.key());
    CHECK(seen == expected_keys);

    // Acceptance barycenter pins, straight from the serialized exact strings.
    struct Pin {
        const char* group;
        int index;
        const char* ax;  // euclid x, rational part
        const char* by;  // euclid y: "b" when sqrt3, "a" when rational
        bool y_sqrt3;
    };
    const std::vector<Pin> pins = {
        {"SL3", 1, "10/3", "10/9", true},
        {"SL3", 2, "156038947/45427872", "16309243/19469088", true},
        {"Sp4", 3, "27756440595/22318407232", "3043253830/1046175339", false},
        {"SO5", 3, "725/704", "225/64", false},
        {"G2", 2, "139601/79360", "49/15", true},
        {"SL2xSL2", 7, "28779/14035", "28779/14035", false},
    };
    for (const Pin& pin : pins) {
        bool seen_pin = false;
        for (const ojson& rec : j["records"]) {
            if (rec["group"] != pin.group || rec["index"] != pin.index) continue;
            seen_pin = true;
            const ojson& bc = rec["barycenter_euclid"];
            CHECK(bc["x"]["a"] == pin.ax);
            CHECK(bc["x"]["b"] == "0");
            CHECK(bc["y"][pin.y_sqrt3 ? "b" : "a"] == pin.by);
            CHECK(bc["y"][pin.y_sqrt3 ? "a" : "b"] == "0");
        }
        CHECK(seen_pin);
    }

    // Stable records carry no witness and r = 1.
    for (const ojson& rec : j["records"]) {
        if (rec["kstability"] == "Stable") {
            CHECK(rec["r_invariant"] == "1");
            CHECK(rec["q_witness_lattice"].is_null());
            CHECK(rec["q_witness_euclid"].is_null());
        } else {
            CHECK_FALSE(rec["q_witness_lattice"].is_null());
        }
    }

    const ojson e = ojson::parse(report::enumeration_report({Group::SL3}, 10, Format::Json));
    CHECK(e["kind"] == "enumeration");
    CHECK(e["records"].size() == 5);
    CHECK(e["census"]["total"] == 5);
}

TEST_CASE("reports are byte-deterministic") {
    const auto groups = all_groups();
    for (Format f : {Format::Json, Format::Csv, Format::Md}) {
        CHECK(report::classification_report(groups, 10, f) ==
              report::classification_report(groups, 10, f));
        CHECK(report::enumeration_report(groups, 10, f) ==
              report::enumeration_report(groups, 10, f));
    }
}

TEST_CASE("verification: match, mismatch, malformed") {
    const std::string text =
        report::classification_report({Group::G2, Group::SL3}, 10, Format::Json);
    std::string diagnostics;

    CHECK(report::verify_classification(text, diagnostics) == 0);
    CHECK(diagnostics.empty());

    ojson tampered = ojson::parse(text);
    tampered["records"][0]["r_invariant"] = "41/42";
    diagnostics.clear();
    CHECK(report::verify_classification(tampered.dump(2) + "\n", diagnostics) == 3);
    CHECK(count_of(diagnostics, "r_invariant") == 1);
    CHECK(lines_of(diagnostics).size() == 1);  // one perturbation, one line

    diagnostics.clear();
    CHECK(report::verify_classification("", diagnostics) == 1);
    ojson wrong_kind = ojson::parse(text);
    wrong_kind["kind"] = "enumeration";
    diagnostics.clear();
    CHECK(report::verify_classification(wrong_kind.dump(2) + "\n", diagnostics) == 1);
}

TEST_CASE("SVG rendering") {
    const rootdata::RootDatum& sl3 = rootdata::root_datum(Group::SL3);
    const std::string doc = svg::render_indexed(sl3, 0, 10);
    CHECK(doc.find("<svg") != std::string::npos);
    CHECK(doc.rfind("</svg>\n") != std::string::npos);
    CHECK(count_of(doc, "<circle") == 1);  // the barycenter marker only
    for (const char* id : {"id=\"walls\"", "id=\"polytope\"", "id=\"roots\"",
                           "id=\"cone2rho\"", "id=\"barycenter\""})
        CHECK(doc.find(id) != std::string::npos);
    CHECK(doc.find("<title>SL3 II moment polytope</title>") != std::string::npos);

    const rootdata::RootDatum& g2 = rootdata::root_datum(Group::G2);
    CHECK_THROWS_AS(svg::render_indexed(g2, 2, 10), std::out_of_range);
    CHECK_THROWS_AS(svg::render_indexed(g2, -1, 10), std::out_of_range);
}
