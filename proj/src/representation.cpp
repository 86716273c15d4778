#include <convexgeo/representation.hpp>

#include <charconv>
#include <cmath>
#include <cstdlib>
#include <sstream>

namespace convexgeo {

namespace {

std::vector<std::string> split_words(std::string_view line) {
    std::vector<std::string> out;
    std::istringstream in{std::string(line)};
    std::string w;
    while (in >> w) out.push_back(w);
    return out;
}

std::string_view trim(std::string_view s) {
    const auto b = s.find_first_not_of(" \t\r");
    if (b == std::string_view::npos) return {};
    const auto e = s.find_last_not_of(" \t\r");
    return s.substr(b, e - b + 1);
}

std::optional<double> to_number(std::string_view s) {
    double v = 0;
    const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (ec != std::errc() || ptr != s.data() + s.size() || !std::isfinite(v)) return std::nullopt;
    return v;
}

std::string number(double v) {
    char buf[64];
    const auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, v);
    (void)ec;
    return std::string(buf, ptr);
}

struct Parser {
    int line = 0;

    [[noreturn]] void fail(const std::string& message) const { throw ParseError(line, message); }

    double num(const std::string& s) const {
        const auto v = to_number(s);
        if (!v) fail("bad number '" + s + "'");
        return *v;
    }

    Element label(const GroundSet& g, const std::string& s) const {
        if (s.size() != 1 || g.find(s[0]) < 0) fail("unknown label '" + s + "'");
        return g.find(s[0]);
    }
};

}  // namespace

SupportBody BodySpec::body() const {
    if (kind == Kind::Disk) return Disk{cx, cy, rx};
    return EllipseBody{cx, cy, rx, ry, rot_deg * kPi / 180.0};
}

RepresentationFile parse_representation(std::string_view text) {
    Parser p;
    RepresentationFile file;
    bool have_ground = false;
    int ground_line = 0;
    std::vector<std::optional<BodySpec>> bodies;
    std::vector<std::pair<std::string, ESet>> colors;

    std::size_t pos = 0;
    while (pos <= text.size()) {
        const std::size_t end = std::min(text.find('\n', pos), text.size());
        ++p.line;
        std::string_view raw = text.substr(pos, end - pos);
        pos = end + 1;
        if (const auto hash = raw.find('#'); hash != std::string_view::npos) raw = raw.substr(0, hash);
        const std::string_view line = trim(raw);
        if (line.empty()) continue;

        if (line.rfind("ground:", 0) == 0) {
            if (have_ground) p.fail("duplicate ground line");
            const auto words = split_words(line.substr(7));
            if (words.size() != 1) p.fail("ground expects one word of labels");
            try {
                file.ground = GroundSet(words[0]);
            } catch (const InputError& e) {
                p.fail(e.what());
            }
            have_ground = true;
            ground_line = p.line;
            bodies.assign(static_cast<std::size_t>(file.ground.size()), std::nullopt);
            continue;
        }
        const auto words = split_words(line);
        const std::string& key = words[0];
        if (!have_ground) p.fail("'" + key + "' before the ground line");

        if (key == "disk" || key == "ellipse") {
            const bool disk = key == "disk";
            if (words.size() != (disk ? 5u : 7u))
                p.fail(disk ? "disk expects: label cx cy r" : "ellipse expects: label cx cy rx ry rot_deg");
            const Element e = p.label(file.ground, words[1]);
            if (bodies[static_cast<std::size_t>(e)]) p.fail("duplicate body for '" + words[1] + "'");
            BodySpec b;
            b.kind = disk ? BodySpec::Kind::Disk : BodySpec::Kind::Ellipse;
            b.cx = p.num(words[2]);
            b.cy = p.num(words[3]);
            b.rx = p.num(words[4]);
            if (disk) {
                b.ry = b.rx;
                if (b.rx < 0) p.fail("negative radius");
            } else {
                b.ry = p.num(words[5]);
                b.rot_deg = p.num(words[6]);
                if (!(b.ry > 0)) p.fail("ellipse radii must be positive");
                if (b.rx < b.ry) p.fail("ellipse needs rx >= ry");
            }
            bodies[static_cast<std::size_t>(e)] = b;
        } else if (key == "color") {
            if (words.size() < 2) p.fail("color expects: name label...");
            for (const auto& c : colors)
                if (c.first == words[1]) p.fail("duplicate color '" + words[1] + "'");
            if (static_cast<int>(colors.size()) >= kMaxColors) p.fail("too many colors");
            ESet members;
            for (std::size_t i = 2; i < words.size(); ++i) {
                const Element e = p.label(file.ground, words[i]);
                if (members.contains(e)) p.fail("label '" + words[i] + "' repeated in color");
                members = members.with(e);
            }
            colors.emplace_back(words[1], members);
        } else if (key == "expect") {
            const std::string_view rest = trim(line.substr(6));
            if (rest.empty()) p.fail("expect needs an implication");
            try {
                for (const auto& imp : parse_implication_list(file.ground, rest).implications())
                    file.expected.push_back(imp);
            } catch (const Error& e) {
                p.fail(e.what());
            }
        } else if (key == "tol") {
            if (words.size() != 2) p.fail("tol expects one number");
            if (file.tol) p.fail("duplicate tol line");
            const double t = p.num(words[1]);
            if (!(t > 0)) p.fail("tol must be positive");
            file.tol = t;
        } else {
            p.fail("unknown statement '" + key + "'");
        }
    }
    if (!have_ground) throw ParseError(0, "missing ground line");
    for (std::size_t e = 0; e < bodies.size(); ++e) {
        if (!bodies[e])
            throw ParseError(ground_line, std::string("no body for label '") + file.ground.label(static_cast<Element>(e)) + "'");
        file.bodies.push_back(*bodies[e]);
    }
    if (!colors.empty()) {
        std::vector<std::string> names;
        for (const auto& c : colors) names.push_back(c.first);
        ColorAssignment asg(file.ground, Palette(names));
        for (std::size_t i = 0; i < colors.size(); ++i) asg.paint(static_cast<int>(i), colors[i].second);
        file.colors = std::move(asg);
    }
    return file;
}

std::string serialize(const RepresentationFile& file) {
    std::string out = "ground: " + file.ground.labels() + "\n";
    for (std::size_t e = 0; e < file.bodies.size(); ++e) {
        const BodySpec& b = file.bodies[e];
        const std::string label(1, file.ground.label(static_cast<Element>(e)));
        if (b.kind == BodySpec::Kind::Disk) {
            out += "disk " + label + " " + number(b.cx) + " " + number(b.cy) + " " + number(b.rx) + "\n";
        } else {
            out += "ellipse " + label + " " + number(b.cx) + " " + number(b.cy) + " " + number(b.rx) + " " +
                   number(b.ry) + " " + number(b.rot_deg) + "\n";
        }
    }
    if (file.colors) {
        for (int c = 0; c < file.colors->palette().size(); ++c) {
            out += "color " + file.colors->palette().name(c);
            for (Element e : file.colors->members(c)) out += std::string(" ") + file.ground.label(e);
            out += "\n";
        }
    }
    for (const auto& imp : file.expected) out += "expect " + format_implication(file.ground, imp) + "\n";
    if (file.tol) out += "tol " + number(*file.tol) + "\n";
    return out;
}

double resolve_tolerance(const RepresentationFile& file) {
    if (file.tol) return *file.tol;
    if (const char* env = std::getenv("CONVEXGEO_TOL")) {
        const auto v = to_number(trim(env));
        if (!v || !(*v > 0)) throw InputError(std::string("CONVEXGEO_TOL is not a positive number: ") + env);
        return *v;
    }
    return kDefaultTol;
}

LabeledConfig to_config(const RepresentationFile& file, double tol) {
    LabeledConfig c{file.ground, {}, tol};
    for (const auto& b : file.bodies) c.bodies.push_back(b.body());
    validate(c);
    return c;
}

namespace {

struct Induced {
    ClosureTable table;
    std::string note;  // anti-exchange failure
};

Induced induce(const RepresentationFile& file, double tol) {
    const LabeledConfig config = to_config(file, tol);
    if (!file.colors) {
        ClosureTable table = ch_c_table(config);
        checked_geometry(table);
        return {std::move(table), {}};
    }
    ColoredInduction r = colored_induction(config, *file.colors);
    std::string note;
    if (r.failure) note = AntiExchangeFailure(file.ground, *r.failure).what();
    return {std::move(r.table), note};
}

}  // namespace

VerifyReport verify(const RepresentationFile& file) {
    VerifyReport report;
    report.tol = resolve_tolerance(file);
    Induced main;
    try {
        main = induce(file, report.tol);
    } catch (const DegeneracyError& e) {
        throw DegeneracyError("at tol " + number(report.tol) + ": " + e.what());
    }
    report.note = main.note;
    const ClosureTable expected(file.expected_basis());
    report.induced = tight_implications(main.table);
    for (const auto& [p, u] : tight_implications(expected))
        if (!main.table.implies(p, u)) report.missing.emplace_back(p, u);
    for (const auto& [p, u] : report.induced)
        if (!expected.implies(p, u)) report.extra.emplace_back(p, u);
    const ClosedFamily family = main.table.closed_sets();

    report.stable = true;
    for (double t : {report.tol / 10, report.tol * 10}) {
        SweepPoint point{t, false, {}};
        try {
            const Induced other = induce(file, t);
            point.matches = other.table.closed_sets() == family;
            point.note = other.note;
        } catch (const DegeneracyError& e) {
            point.note = e.what();
        }
        report.stable = report.stable && point.matches;
        report.sweep.push_back(point);
    }
    const bool same = family == expected.closed_sets();
    report.pass = same && report.note.empty() && report.stable;
    return report;
}

std::string format_report(const GroundSet& ground, const VerifyReport& r) {
    std::ostringstream out;
    out << "tol " << number(r.tol) << "\n";
    out << "induced: " << (r.induced.empty() ? "(none)" : format_tight(ground, r.induced)) << "\n";
    if (!r.missing.empty()) out << "missing: " << format_tight(ground, r.missing) << "\n";
    if (!r.extra.empty()) out << "extra: " << format_tight(ground, r.extra) << "\n";
    if (!r.note.empty()) out << "note: " << r.note << "\n";
    for (const auto& s : r.sweep) {
        out << "sweep tol " << number(s.tol) << ": " << (s.matches ? "same" : "differs");
        if (!s.note.empty()) out << " (" << s.note << ")";
        out << "\n";
    }
    out << (r.pass ? "PASS" : "FAIL") << "\n";
    return out.str();
}

}  // namespace convexgeo
