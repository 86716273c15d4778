#include <convexgeo/obstructions.hpp>

#include <convexgeo/error.hpp>

namespace convexgeo {

namespace {

ESet set_of(std::initializer_list<Element> es) {
    ESet s;
    for (Element e : es) s = s.with(e);
    return s;
}

bool tight(const ClosureTable& t, ESet premise, Element u) {
    return t.implies(premise, u) && is_tight(t, premise, u);
}

}  // namespace

std::string to_string(ObstructionKind kind) {
    switch (kind) {
        case ObstructionKind::Opposite: return "Opposite";
        case ObstructionKind::Separation: return "Separation";
        case ObstructionKind::NestedTriangle: return "NestedTriangle";
        case ObstructionKind::AreaQ: return "AreaQ";
    }
    return "?";
}

std::string format_witness(const GroundSet& ground, const Obstruction& ob) {
    std::string out;
    for (int i = 0; i < 5; ++i) {
        if (i > 0) out += ' ';
        out += static_cast<char>('a' + i);
        out += '=';
        out += ground.label(ob.witness[static_cast<std::size_t>(i)]);
    }
    return out;
}

bool matches(const ClosureTable& t, ObstructionKind kind, const std::array<Element, 5>& r) {
    const int n = t.ground().size();
    ESet seen;
    for (Element e : r) {
        if (e < 0 || e >= n || seen.contains(e)) throw InputError("roles must be distinct ground elements");
        seen = seen.with(e);
    }
    const auto [a, b, c, d, e] = r;
    const auto imp = [&](std::initializer_list<Element> p, Element u) { return t.implies(set_of(p), u); };
    switch (kind) {
        case ObstructionKind::Opposite:
            return tight(t, set_of({b, c, d}), e) && imp({a, b}, e) && imp({a, c}, e) && imp({a, d}, e) &&
                   !imp({a}, e);
        case ObstructionKind::Separation:
            return tight(t, set_of({a, c, d}), e) && tight(t, set_of({b, c, d}), e) && imp({a, b}, e);
        case ObstructionKind::NestedTriangle:
            return tight(t, set_of({a, b, c}), d) && imp({a, b, d}, e) && imp({c, b, d}, e) && !imp({b, d}, e) &&
                   !(imp({a, d}, e) && imp({c, d}, e));
        case ObstructionKind::AreaQ:
            return tight(t, set_of({a, b, c}), d) && imp({a, d}, e) && imp({b, d}, e) && imp({c, d}, e) &&
                   !imp({d}, e);
    }
    return false;
}

std::optional<Obstruction> detect(const ClosureTable& t, ObstructionKind kind) {
    const int n = t.ground().size();
    std::array<Element, 5> r{};
    // Depth-first over injective assignments in lexicographic order.
    const auto search = [&](auto&& self, int depth, ESet used) -> bool {
        if (depth == 5) return matches(t, kind, r);
        for (Element e = 0; e < n; ++e) {
            if (used.contains(e)) continue;
            r[static_cast<std::size_t>(depth)] = e;
            if (self(self, depth + 1, used.with(e))) return true;
        }
        return false;
    };
    if (n >= 5 && search(search, 0, ESet())) return Obstruction{kind, r};
    return std::nullopt;
}

std::optional<Obstruction> detect(const Geometry& g, ObstructionKind kind) {
    return detect(g.closure_table(), kind);
}

std::optional<Obstruction> detect_opposite(const Geometry& g) { return detect(g, ObstructionKind::Opposite); }
std::optional<Obstruction> detect_separation(const Geometry& g) { return detect(g, ObstructionKind::Separation); }
std::optional<Obstruction> detect_nested(const Geometry& g) { return detect(g, ObstructionKind::NestedTriangle); }
std::optional<Obstruction> detect_area_q(const Geometry& g) { return detect(g, ObstructionKind::AreaQ); }

std::vector<Obstruction> detect_all(const Geometry& g) {
    const ClosureTable t = g.closure_table();
    std::vector<Obstruction> out;
    for (ObstructionKind k : kAllObstructions)
        if (auto ob = detect(t, k)) out.push_back(*ob);
    return out;
}

CatalogReport classify_catalog(const std::vector<Geometry>& gs) {
    CatalogReport report;
    for (const Geometry& g : gs) {
        CatalogEntry entry{canonical_id(canonical_form(g)), detect_all(g)};
        if (entry.fired.empty()) ++report.unobstructed;
        for (const Obstruction& ob : entry.fired) ++report.counts[static_cast<std::size_t>(ob.kind)];
        report.entries.push_back(std::move(entry));
    }
    return report;
}

std::string format_catalog(const std::vector<Geometry>& gs, const CatalogReport& report) {
    std::string out;
    for (std::size_t i = 0; i < report.entries.size(); ++i) {
        const CatalogEntry& entry = report.entries[i];
        if (entry.fired.empty()) {
            out += entry.id + " no obstruction found\n";
            continue;
        }
        for (const Obstruction& ob : entry.fired)
            out += entry.id + " " + to_string(ob.kind) + " " + format_witness(gs.at(i).ground(), ob) + "\n";
    }
    return out;
}

}  // namespace convexgeo
