#include "cli.hpp"

#include <convexgeo/colored.hpp>
#include <convexgeo/enumerate.hpp>
#include <convexgeo/error.hpp>
#include <convexgeo/obstructions.hpp>
#include <convexgeo/representation.hpp>
#include <convexgeo/svg.hpp>

#include <CLI11.hpp>

#include <algorithm>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

namespace convexgeo {

namespace {

// Unreadable input is a usage problem, reported like a parse error.
class FileError : public Error {
public:
    using Error::Error;
};

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw FileError("cannot read " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

RepresentationFile load_representation(const std::string& path) {
    try {
        return parse_representation(read_file(path));
    } catch (const ParseError& e) {
        throw ParseError(e.line(), path + ": " + e.what());
    }
}

ImplicationBasis load_basis(const std::string& path) {
    try {
        return parse_basis_file(read_file(path));
    } catch (const Error& e) {
        if (dynamic_cast<const FileError*>(&e)) throw;
        throw ParseError(0, path + ": " + e.what());
    }
}

int cmd_verify(std::vector<std::string> files, std::ostream& out) {
    std::sort(files.begin(), files.end());
    int code = 0;
    for (const auto& path : files) {
        const RepresentationFile file = load_representation(path);
        if (files.size() > 1) out << "== " << path << "\n";
        try {
            const VerifyReport report = verify(file);
            out << format_report(file.ground, report);
            if (!report.pass) code = std::max(code, 1);
        } catch (const DegeneracyError& e) {
            out << "degenerate " << e.what() << "\nFAIL\n";
            code = std::max(code, 1);
        }
    }
    return code;
}

int cmd_induce(const std::string& path, std::ostream& out) {
    const RepresentationFile file = load_representation(path);
    const LabeledConfig config = to_config(file, resolve_tolerance(file));
    if (file.colors) {
        const ColoredInduction r = colored_induction(config, *file.colors);
        if (r.failure) throw AntiExchangeFailure(file.ground, *r.failure);
        out << format_tight(file.ground, tight_implications(r.table)) << "\n";
    } else {
        const InducedGeometry g = induced_geometry(config);
        out << format_tight(file.ground, tight_implications(g.geometry.closure_table())) << "\n";
    }
    return 0;
}

int cmd_enumerate(int n, bool count_only, int max_n, std::ostream& out) {
    EnumerateOptions options;
    options.max_n = max_n;
    const auto gs = enumerate_geometries(n, options);
    if (count_only) {
        out << gs.size() << "\n";
        return 0;
    }
    for (const Geometry& g : gs) out << canonical_id(canonical_form(g)) << "\n";
    return 0;
}

int cmd_detect(const std::vector<std::string>& files, int catalog_n, std::ostream& out) {
    std::vector<Geometry> gs;
    if (catalog_n > 0) gs = enumerate_geometries(catalog_n);
    for (const auto& path : files) gs.push_back(Geometry::from_basis(load_basis(path)));
    const CatalogReport report = classify_catalog(gs);
    out << format_catalog(gs, report);
    if (catalog_n > 0) {
        for (std::size_t k = 0; k < kAllObstructions.size(); ++k)
            out << "# " << to_string(kAllObstructions[k]) << " " << report.counts[k] << "\n";
        out << "# none " << report.unobstructed << "\n";
    }
    return 0;
}

int cmd_render(const std::string& path, const std::string& output, std::ostream& out) {
    const std::string svg = render_svg(load_representation(path));
    if (output.empty() || output == "-") {
        out << svg;
        return 0;
    }
    std::ofstream f(output, std::ios::binary);
    if (!f) throw FileError("cannot write " + output);
    f << svg;
    return 0;
}

int cmd_color_search(const std::string& path, const std::string& target, int k, std::ostream& out) {
    const RepresentationFile file = load_representation(path);
    const ImplicationBasis basis = load_basis(target);
    const LabeledConfig config = to_config(file, resolve_tolerance(file));
    const auto found = color_search(config, Geometry::from_basis(basis), k);
    if (!found) {
        out << "none\n";
        return 0;
    }
    out << found->format() << "\n";
    return 0;
}

}  // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    CLI::App app{"Finite convex geometries, circle and ellipse representations, obstructions.", "convexgeo"};
    app.require_subcommand(1);

    std::vector<std::string> verify_files;
    auto* verify_cmd = app.add_subcommand("verify", "Check representation files against their expected implications");
    verify_cmd->add_option("files", verify_files, "Representation files")->required();

    std::string induce_file;
    auto* induce_cmd = app.add_subcommand("induce", "Print the tight implications a representation induces");
    induce_cmd->add_option("file", induce_file, "Representation file")->required();

    int enum_n = 0;
    bool count_only = false;
    int max_n = EnumerateOptions{}.max_n;
    auto* enum_cmd = app.add_subcommand("enumerate", "List convex geometries up to isomorphism");
    enum_cmd->add_option("n", enum_n, "Ground set size")->required();
    enum_cmd->add_flag("--count-only", count_only, "Print only the number of classes");
    enum_cmd->add_option("--max-n", max_n, "Resource guard on n");

    std::vector<std::string> detect_files;
    int catalog_n = 0;
    auto* detect_cmd = app.add_subcommand("detect", "Run the obstruction detectors on basis files");
    detect_cmd->add_option("files", detect_files, "Basis files");
    detect_cmd->add_option("--catalog", catalog_n, "Also classify every geometry on this many elements");

    std::string render_file;
    std::string render_out;
    auto* render_cmd = app.add_subcommand("render", "Draw a representation as SVG");
    render_cmd->add_option("file", render_file, "Representation file")->required();
    render_cmd->add_option("-o,--output", render_out, "Output path, stdout when omitted");

    std::string search_file;
    std::string search_target;
    int search_k = 0;
    auto* search_cmd = app.add_subcommand("color-search", "Search color assignments realizing a target geometry");
    search_cmd->add_option("file", search_file, "Representation file (colors ignored)")->required();
    search_cmd->add_option("--target", search_target, "Basis file of the target geometry")->required();
    search_cmd->add_option("-k", search_k, "Number of colors")->required()->check(CLI::Range(0, kMaxColors));

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return 0;
    } catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return 0;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << "\n" << app.help();
        return 2;
    }

    try {
        if (*verify_cmd) return cmd_verify(verify_files, out);
        if (*induce_cmd) return cmd_induce(induce_file, out);
        if (*enum_cmd) return cmd_enumerate(enum_n, count_only, max_n, out);
        if (*detect_cmd) {
            if (detect_files.empty() && catalog_n == 0) {
                err << "error: detect needs basis files or --catalog\n";
                return 2;
            }
            return cmd_detect(detect_files, catalog_n, out);
        }
        if (*render_cmd) return cmd_render(render_file, render_out, out);
        if (*search_cmd) return cmd_color_search(search_file, search_target, search_k, out);
    } catch (const ParseError& e) {
        err << "parse error: " << e.what() << "\n";
        return 2;
    } catch (const FileError& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    } catch (const Error& e) {
        err << "error: " << e.what() << "\n";
        return 1;
    }
    return 2;
}

}  // namespace convexgeo
