#include <convexgeo/colored.hpp>
#include <convexgeo/enumerate.hpp>
#include <convexgeo/error.hpp>
#include <convexgeo/obstructions.hpp>
#include <convexgeo/representation.hpp>

#include "cli.hpp"
#include "oracles.hpp"
#include "support/corpus.hpp"
#include "support/properties.hpp"

#include <chrono>
#include <filesystem>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

using namespace convexgeo;

namespace {

struct Outcome {
    bool pass;
    std::string detail;
};

double seconds_since(std::chrono::steady_clock::time_point t0) {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

std::string fmt_seconds(double s) {
    std::ostringstream out;
    out.precision(2);
    out << std::fixed << s << "s";
    return out.str();
}

Outcome enumeration_count() {
    const auto t0 = std::chrono::steady_clock::now();
    const char* argv[] = {"convexgeo", "enumerate", "5", "--count-only"};
    std::ostringstream out, err;
    const int code = run_cli(4, argv, out, err);
    const double t5 = seconds_since(t0);
    bool pass = code == 0 && out.str() == "672\n" && t5 < 60;
    std::string detail = "n=5: " + out.str().substr(0, out.str().find('\n')) + " in " + fmt_seconds(t5);
    const auto t1 = std::chrono::steady_clock::now();
    for (int n = 1; n <= 4; ++n) {
        const auto lib = enumerate_geometries(n).size();
        const auto ref = oracle::brute_geometry_counts(n).classes;
        pass = pass && lib == ref;
        detail += "; n=" + std::to_string(n) + ": " + std::to_string(lib) + " vs oracle " + std::to_string(ref);
    }
    const double to = seconds_since(t1);
    pass = pass && to < 60;
    detail += " (" + fmt_seconds(to) + ")";
    return {pass, detail};
}

Outcome obstruction_catalog() {
    struct List {
        const char* dir;
        std::optional<ObstructionKind> kind;
        std::size_t expected;
    };
    const std::vector<List> lists{{"opposite", ObstructionKind::Opposite, 7},
                                  {"nested", ObstructionKind::NestedTriangle, 18},
                                  {"area_q", ObstructionKind::AreaQ, 8},
                                  {"separation", ObstructionKind::Separation, 5},
                                  {"unproven", std::nullopt, 11}};
    bool pass = true;
    std::string detail;
    for (const List& l : lists) {
        const auto files = corpus::files(std::string("bases/") + l.dir, ".basis");
        std::size_t good = 0;
        for (const auto& path : files) {
            const Geometry g = Geometry::from_basis(corpus::basis(path));
            const bool ok = l.kind ? detect(g, *l.kind).has_value() : detect_all(g).empty();
            good += ok;
            if (!ok) detail += " [" + path.filename().string() + " wrong]";
        }
        pass = pass && files.size() == l.expected && good == files.size();
        detail += std::string(detail.empty() ? "" : ", ") + l.dir + " " + std::to_string(good) + "/" +
                  std::to_string(files.size());
    }
    return {pass, detail};
}

Outcome cdim_g18() {
    const Geometry g = Geometry::from_basis(corpus::basis(corpus::root() / "bases/g18.basis"));
    const int d = convex_dimension(g);
    return {d == 6, "cdim " + std::to_string(d)};
}

Outcome corpus_verification() {
    bool pass = true;
    std::string detail;
    for (const auto& [dir, required] :
         std::vector<std::pair<std::string, std::vector<std::string>>>{{"colored", {"18", "134", "4", "23", "26"}},
                                                                       {"ellipses", {"7", "12", "74", "147", "351"}}}) {
        int passing = 0;
        for (const auto& path : corpus::files(dir, ".rep")) {
            const VerifyReport r = verify(parse_representation(corpus::read(path)));
            passing += r.pass && r.stable;
        }
        detail += std::string(detail.empty() ? "" : "; ") + dir + " " + std::to_string(passing) + " passing";
        pass = pass && passing >= 10;
        for (const std::string& id : required) {
            const std::string name = "g" + id + ".rep";
            std::filesystem::path path = corpus::root() / dir / name;
            if (!std::filesystem::exists(path)) path = corpus::root() / "failing" / dir / name;
            if (!std::filesystem::exists(path)) {
                pass = false;
                detail += ", G" + id + " absent";
                continue;
            }
            const RepresentationFile f = parse_representation(corpus::read(path));
            try {
                const VerifyReport r = verify(f);
                if (r.pass && r.stable) continue;
                pass = false;
                detail += ", G" + id + " fails (";
                if (!r.missing.empty()) detail += "missing " + format_tight(f.ground, r.missing);
                if (!r.missing.empty() && !r.extra.empty()) detail += "; ";
                if (!r.extra.empty()) detail += "extra " + format_tight(f.ground, r.extra);
                if (!r.stable) detail += " unstable";
                detail += ")";
            } catch (const DegeneracyError& e) {
                pass = false;
                detail += ", G" + id + " degenerate: " + e.what();
            }
        }
    }
    return {pass, detail};
}

Outcome suite(const props::SuiteResult& r, int required) { return {r.ok(required), r.summary()}; }

Outcome theorem_suites() {
    bool pass = true;
    std::string detail;
    for (const auto& r : {props::opposite_suite(101, 500, 200000), props::separation_suite(102, 500, 200000),
                          props::nested_suite(103, 500, 200000), props::area_q_suite(104, 500, 200000),
                          props::three_config_suite(105, 500, 200000)}) {
        pass = pass && r.ok(500);
        detail += (detail.empty() ? "" : " | ") + r.summary();
    }
    return {pass, detail};
}

ColorAssignment paint(const GroundSet& g, const std::vector<std::string>& sets) {
    ColorAssignment asg(g, Palette::numbered(static_cast<int>(sets.size())));
    for (std::size_t i = 0; i < sets.size(); ++i) asg.paint(static_cast<int>(i), g.parse(sets[i]));
    return asg;
}

std::vector<ESet> sorted_sets(const GroundSet& g, const std::vector<std::string>& sets) {
    std::vector<ESet> out;
    for (const auto& s : sets) out.push_back(g.parse(s));
    std::sort(out.begin(), out.end());
    return out;
}

Outcome colored_facts() {
    std::vector<std::string> fails;
    // Two-color example on x, z, y1, y2, w, with y1, y2 written p, q.
    const GroundSet ops("xzpqw");
    const auto ops_asg = paint(ops, {"xzq", "zp"});
    if (s_closure_table(ops_asg).closed_sets().sets() != sorted_sets(ops, {"w", "pw", "xqw", "xzpqw"}))
        fails.push_back("two-color example S-closed sets");

    const GroundSet g("abcde");
    const auto g134 = paint(g, {"abce", "ad"});
    if (s_closure_table(g134).closed_sets().sets() != sorted_sets(g, {"", "d", "bce", "abcde"}))
        fails.push_back("G134 S-closed sets");
    const AepVerdict v134 = suff_aep_check(parse_implication_list(g, "bc->de, a->e"), g134);
    if (v134 != AepVerdict::Guaranteed) fails.push_back("G134 verdict " + to_string(v134));

    const AepVerdict v7 = suff_aep_check(parse_implication_list(g, "cd->e, bd->e, bc->e"), paint(g, {"ae", "bcd"}));
    if (v7 != AepVerdict::ExtendedGuaranteed) fails.push_back("G7 verdict " + to_string(v7));

    std::string detail = "example {w, y1w, xy2w, X}; G134 {0, d, bce, X}; G134 " + to_string(v134) + "; G7 " +
                         to_string(v7);
    for (const auto& f : fails) detail += "; wrong: " + f;
    return {fails.empty(), detail};
}

Outcome two_color_impossibility() {
    const RepresentationFile f = parse_representation(corpus::read(corpus::root() / "colored/g18.rep"));
    const LabeledConfig config = to_config(f, resolve_tolerance(f));
    const Geometry target = Geometry::from_basis(corpus::basis(corpus::root() / "bases/g18.basis"));
    const auto two = color_search(config, target, 2);
    const auto three = color_search(config, target, 3);
    bool iso = false;
    if (three) iso = canonical_form(colored_induced_geometry(config, *three)) == canonical_form(target);
    std::string detail = std::string("k=2: ") + (two ? two->format() : "none") + "; k=3: " +
                         (three ? three->format() : "none") + (iso ? " (isomorphic to G18)" : "");
    return {!two && three && iso, detail};
}

}  // namespace

int main() {
    const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria{
        {"enumeration count", enumeration_count},
        {"obstruction catalog", obstruction_catalog},
        {"cdim of G18", cdim_g18},
        {"corpus verification", corpus_verification},
        {"point order suite", [] { return suite(props::point_order_suite(100, 1000, 100000), 1000); }},
        {"theorem suites", theorem_suites},
        {"hull predicate oracle", [] { return suite(props::hull_oracle_suite(106, 10000, 100000), 10000); }},
        {"colored operator facts", colored_facts},
        {"two-color impossibility", two_color_impossibility},
    };
    int failed = 0;
    for (std::size_t i = 0; i < criteria.size(); ++i) {
        const auto t0 = std::chrono::steady_clock::now();
        Outcome o;
        try {
            o = criteria[i].second();
        } catch (const std::exception& e) {
            o = {false, std::string("exception: ") + e.what()};
        }
        failed += !o.pass;
        std::cout << "criterion " << i + 1 << " " << (o.pass ? "PASS" : "FAIL") << " " << criteria[i].first << " ("
                  << fmt_seconds(seconds_since(t0)) << "): " << o.detail << std::endl;
    }
    std::cout << (failed == 0 ? "all criteria pass" : std::to_string(failed) + " criteria fail") << std::endl;
    return failed == 0 ? 0 : 1;
}
