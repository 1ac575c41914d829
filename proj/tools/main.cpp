#include "CLI11.hpp"

#include "gfc/report.hpp"
#include "gfc/rootdata.hpp"
#include "gfc/svg.hpp"

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

namespace {

using gfc::report::Format;
using gfc::rootdata::Group;

std::optional<std::vector<Group>> parse_groups(const std::string& name) {
    if (name == "all")
        return std::vector<Group>(gfc::rootdata::kAllGroups.begin(),
                                  gfc::rootdata::kAllGroups.end());
    const std::optional<Group> g = gfc::rootdata::group_from_name(name);
    if (!g.has_value()) return std::nullopt;
    return std::vector<Group>{*g};
}

std::string group_names_help() {
    std::string s = "all";
    for (Group g : gfc::rootdata::kAllGroups) s += ", " + gfc::rootdata::group_name(g);
    return s;
}

/// Default search bound: 10, overridable through RANK2_KSTAB_BOUND.  An
/// explicit --bound always wins over the environment.
bool resolve_default_bound(int& bound, std::string& error) {
    const char* env = std::getenv("RANK2_KSTAB_BOUND");
    if (env == nullptr || *env == '\0') {
        bound = 10;
        return true;
    }
    char* end = nullptr;
    const long v = std::strtol(env, &end, 10);
    if (end == env || *end != '\0' || v < 1 || v > 1000000) {
        error = "RANK2_KSTAB_BOUND must be a positive integer, got \"" + std::string(env) + "\"";
        return false;
    }
    bound = static_cast<int>(v);
    return true;
}

int write_output(const std::string& text, const std::string& out_path) {
    if (out_path.empty()) {
        std::cout << text;
        return 0;
    }
    std::ofstream out(out_path, std::ios::binary);
    if (!out) {
        std::cerr << "error: cannot open output file: " << out_path << "\n";
        return 1;
    }
    out << text;
    out.close();
    if (!out) {
        std::cerr << "error: failed writing output file: " << out_path << "\n";
        return 1;
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    int default_bound = 10;
    {
        std::string env_error;
        if (!resolve_default_bound(default_bound, env_error)) {
            std::cerr << "error: " << env_error << "\n";
            return 1;
        }
    }

    CLI::App app{"Gorenstein Fano moment polytopes of the rank-two semisimple groups: "
                 "census, equivariant K-stability, and greatest Ricci lower bounds"};
    app.require_subcommand(1);

    std::string group_name = "all";
    int bound = default_bound;
    std::string format_name = "md";
    bool strict = false;
    std::string out_path;
    int index = 0;
    std::string expected_path;

    const std::string group_help = "Group (" + group_names_help() + ")";
    const auto add_group = [&](CLI::App* cmd) {
        cmd->add_option("--group", group_name, group_help)->capture_default_str();
    };
    const auto add_bound = [&](CLI::App* cmd) {
        cmd->add_option("--bound", bound, "Facet-normal search bound")
            ->capture_default_str()
            ->check(CLI::PositiveNumber);
    };
    const auto add_out = [&](CLI::App* cmd) {
        cmd->add_option("--out", out_path, "Write output to this file instead of stdout");
    };

    CLI::App* cmd_enumerate =
        app.add_subcommand("enumerate", "Census of Gorenstein Fano moment polytopes");
    CLI::App* cmd_classify = app.add_subcommand(
        "classify", "Census with K-stability, smoothness, and greatest Ricci lower bounds");
    for (CLI::App* cmd : {cmd_enumerate, cmd_classify}) {
        add_group(cmd);
        add_bound(cmd);
        cmd->add_option("--format", format_name, "Output format: json, csv, md")
            ->capture_default_str();
        cmd->add_flag("--strict", strict,
                      "Exit 2 when the census may be clipped at this bound");
        add_out(cmd);
    }

    CLI::App* cmd_render =
        app.add_subcommand("render", "SVG figure of one case, chosen by enumeration order");
    add_group(cmd_render);
    add_bound(cmd_render);
    cmd_render->add_option("--index", index, "0-based case index in enumeration order")
        ->required();
    add_out(cmd_render);

    CLI::App* cmd_verify = app.add_subcommand(
        "verify", "Compare an expected JSON classification report against a fresh run");
    cmd_verify->add_option("expected", expected_path, "Expected JSON report file")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 1;
    }

    try {
        if (app.got_subcommand(cmd_verify)) {
            std::ifstream in(expected_path, std::ios::binary);
            if (!in) {
                std::cerr << "error: cannot read " << expected_path << "\n";
                return 1;
            }
            std::ostringstream buf;
            buf << in.rdbuf();
            std::string diagnostics;
            const int code = gfc::report::verify_classification(buf.str(), diagnostics);
            if (code == 0)
                std::cout << "match\n";
            else if (code == 3)
                std::cout << diagnostics;
            else
                std::cerr << "error: " << diagnostics << "\n";
            return code;
        }

        const std::optional<std::vector<Group>> groups = parse_groups(group_name);
        if (!groups.has_value()) {
            std::cerr << "error: unknown group \"" << group_name << "\" (expected "
                      << group_names_help() << ")\n";
            return 1;
        }

        if (app.got_subcommand(cmd_render)) {
            if (groups->size() != 1) {
                std::cerr << "error: render needs a single group, not \"all\"\n";
                return 1;
            }
            std::string figure;
            try {
                figure = gfc::svg::render_indexed(gfc::rootdata::root_datum(groups->front()),
                                                  index, bound);
            } catch (const std::out_of_range& e) {
                std::cerr << "error: " << e.what() << "\n";
                return 1;
            }
            return write_output(figure, out_path);
        }

        const std::optional<Format> format = gfc::report::format_from_name(format_name);
        if (!format.has_value()) {
            std::cerr << "error: unknown format \"" << format_name
                      << "\" (expected json, csv, or md)\n";
            return 1;
        }

        bool clipped = false;
        const std::string text =
            app.got_subcommand(cmd_enumerate)
                ? gfc::report::enumeration_report(*groups, bound, *format, &clipped)
                : gfc::report::classification_report(*groups, bound, *format, &clipped);
        const int write_code = write_output(text, out_path);
        if (write_code != 0) return write_code;
        if (clipped) {
            std::cerr << "warning: census may be clipped at bound " << bound
                      << "; rerun with a larger bound\n";
            if (strict) return 2;
        }
        return 0;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
}
