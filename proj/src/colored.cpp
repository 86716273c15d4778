#include <convexgeo/colored.hpp>

#include <convexgeo/enumerate.hpp>

#include <algorithm>
#include <set>

namespace convexgeo {

namespace {

ColorMask union_of(const std::vector<ColorMask>& colors, ESet y) {
    ColorMask u = 0;
    for (Element e : y) u |= colors[static_cast<std::size_t>(e)];
    return u;
}

ESet covered_by(const std::vector<ColorMask>& colors, ColorMask u) {
    ESet out;
    for (std::size_t z = 0; z < colors.size(); ++z)
        if ((colors[z] & ~u) == 0) out = out.with(static_cast<Element>(z));
    return out;
}

bool has_phi_extension(const ClosureTable& phi, ESet y) {
    for (Element z : phi.ground().full() - y)
        if (phi.is_closed(y.with(z))) return true;
    return false;
}

// Next assignment with element a as the most significant digit; false after
// the last one.
bool advance(std::vector<ColorMask>& colors, unsigned base) {
    for (std::size_t pos = colors.size(); pos-- > 0;) {
        if (colors[pos] + 1u < base) {
            ++colors[pos];
            return true;
        }
        colors[pos] = 0;
    }
    return false;
}

void require_geometry(const ClosureTable& phi) {
    if (!phi.is_closed(ESet()) || !has_anti_exchange(phi))
        throw PreconditionError("phi must be a convex geometry");
}

}  // namespace

Palette::Palette(std::vector<std::string> names) : names_(std::move(names)) {
    if (size() > kMaxColors) throw InputError("at most " + std::to_string(kMaxColors) + " colors");
    std::set<std::string> seen;
    for (const auto& n : names_) {
        if (n.empty()) throw InputError("empty color name");
        if (!seen.insert(n).second) throw InputError("duplicate color " + n);
    }
}

Palette Palette::numbered(int k) {
    std::vector<std::string> names;
    for (int i = 1; i <= k; ++i) names.push_back("C" + std::to_string(i));
    return Palette(std::move(names));
}

int Palette::find(const std::string& name) const {
    const auto it = std::find(names_.begin(), names_.end(), name);
    return it == names_.end() ? -1 : static_cast<int>(it - names_.begin());
}

ColorAssignment::ColorAssignment(GroundSet ground, Palette palette)
    : ground_(std::move(ground)), palette_(std::move(palette)),
      colors_(static_cast<std::size_t>(ground_.size()), 0) {}

ColorAssignment::ColorAssignment(GroundSet ground, Palette palette, std::vector<ColorMask> colors)
    : ground_(std::move(ground)), palette_(std::move(palette)), colors_(std::move(colors)) {
    if (static_cast<int>(colors_.size()) != ground_.size()) throw InputError("one color mask per element");
    const unsigned limit = 1u << palette_.size();
    for (ColorMask m : colors_)
        if (m >= limit) throw InputError("color index outside the palette");
}

ESet ColorAssignment::members(int color) const {
    ESet out;
    for (std::size_t z = 0; z < colors_.size(); ++z)
        if ((colors_[z] >> color) & 1u) out = out.with(static_cast<Element>(z));
    return out;
}

void ColorAssignment::paint(int color, ESet members) {
    if (color < 0 || color >= palette_.size()) throw InputError("color index outside the palette");
    if (!ground_.contains(members)) throw InputError("colored element outside the ground set");
    for (Element e : members) colors_[static_cast<std::size_t>(e)] |= static_cast<ColorMask>(1u << color);
}

std::string ColorAssignment::format() const {
    std::string out;
    for (int c = 0; c < palette_.size(); ++c) {
        if (c > 0) out += ' ';
        out += palette_.name(c) + "={";
        const ESet m = members(c);
        bool first = true;
        for (Element e : m) {
            if (!first) out += ',';
            out += ground_.label(e);
            first = false;
        }
        out += '}';
    }
    return out;
}

ESet s_closure(const ColorAssignment& asg, ESet y) {
    if (!asg.ground().contains(y)) throw InputError("subset has elements outside the ground set");
    return covered_by(asg.colors(), union_of(asg.colors(), y));
}

ClosureTable s_closure_table(const ColorAssignment& asg) {
    std::vector<ESet> table(asg.ground().subset_count());
    for (std::uint32_t m = 0; m < table.size(); ++m) table[m] = s_closure(asg, ESet(m));
    return ClosureTable(asg.ground(), std::move(table));
}

ESet phi_s_closure(const ImplicationBasis& basis, const ColorAssignment& asg, ESet y) {
    if (basis.ground() != asg.ground()) throw InputError("basis and colors use different ground sets");
    return closure(basis, y) & s_closure(asg, y);
}

ClosureTable phi_s_table(const ClosureTable& phi, const ColorAssignment& asg) {
    if (phi.ground() != asg.ground()) throw InputError("operator and colors use different ground sets");
    std::vector<ESet> table(phi.table());
    for (std::uint32_t m = 0; m < table.size(); ++m) table[m] &= s_closure(asg, ESet(m));
    return ClosureTable(phi.ground(), std::move(table));
}

bool is_quasi_closed(const ClosedFamily& fam, ESet y) {
    if (fam.contains(y)) throw PreconditionError("{" + fam.ground().format(y) + "} is closed, not quasi-closed");
    for (ESet z : fam.sets()) {
        const ESet meet = z & y;
        if (meet != y && !fam.contains(meet)) return false;
    }
    return true;
}

std::string to_string(AepVerdict v) {
    switch (v) {
        case AepVerdict::Guaranteed: return "guaranteed";
        case AepVerdict::ExtendedGuaranteed: return "extended-guaranteed";
        case AepVerdict::Unknown: return "unknown";
    }
    return "?";
}

AepVerdict suff_aep_check(const ImplicationBasis& basis, const ColorAssignment& asg) {
    return suff_aep_check(ClosureTable(basis), asg);
}

AepVerdict suff_aep_check(const ClosureTable& phi, const ColorAssignment& asg) {
    if (phi.ground() != asg.ground()) throw InputError("operator and colors use different ground sets");
    require_geometry(phi);
    const ClosedFamily cphi = phi.closed_sets();
    const ClosedFamily cs = s_closure_table(asg).closed_sets();

    bool guaranteed = true;
    for (ESet l : cs.sets()) {
        if (cphi.contains(l)) continue;
        if (!is_quasi_closed(cphi, l) || !has_phi_extension(phi, l)) {
            guaranteed = false;
            break;
        }
    }
    if (guaranteed) return AepVerdict::Guaranteed;

    std::set<ESet> fresh;
    for (ESet l : cs.sets())
        for (ESet c : cphi.sets())
            if (!cphi.contains(l & c)) fresh.insert(l & c);
    std::vector<ESet> order(fresh.begin(), fresh.end());
    std::stable_sort(order.begin(), order.end(), [](ESet a, ESet b) { return a.size() < b.size(); });

    std::vector<ESet> grown = cphi.sets();
    for (ESet y : order) {
        if (!is_quasi_closed(ClosedFamily(phi.ground(), grown), y) || !has_phi_extension(phi, y))
            return AepVerdict::Unknown;
        grown.push_back(y);
    }
    return AepVerdict::ExtendedGuaranteed;
}

AntiExchangeFailure::AntiExchangeFailure(const GroundSet& ground, ExchangeWitness witness)
    : Error("anti-exchange fails: {" + ground.format(witness.closed) + "} is closed while " +
            ground.label(witness.x) + " and " + ground.label(witness.y) + " each lie in the closure with the other"),
      witness_(witness) {}

ColoredInduction colored_induction(const LabeledConfig& config, const ColorAssignment& asg) {
    if (config.ground != asg.ground()) throw InputError("configuration and colors use different ground sets");
    const ClosureTable phi = ch_c_table(config);
    checked_geometry(phi);
    ClosureTable table = phi_s_table(phi, asg);
    auto failure = find_exchange(table);
    return {std::move(table), failure};
}

Geometry colored_induced_geometry(const LabeledConfig& config, const ColorAssignment& asg) {
    const ColoredInduction r = colored_induction(config, asg);
    if (r.failure) throw AntiExchangeFailure(config.ground, *r.failure);
    return Geometry(r.table.closed_sets());
}

std::optional<ColorAssignment> color_search(const LabeledConfig& config, const Geometry& target, int k,
                                            const ColorSearchOptions& options) {
    if (k < 0 || k > std::min(options.max_colors, kMaxColors)) throw InputError("color count out of range");
    if (target.ground().size() != config.ground.size()) return std::nullopt;
    const ClosureTable phi = ch_c_table(config);
    checked_geometry(phi);
    const CanonicalForm want = canonical_form(target);
    const std::size_t want_size = target.family().size();
    const std::size_t n = static_cast<std::size_t>(config.ground.size());
    const unsigned base = 1u << k;
    std::vector<ColorMask> colors(n, 0);
    const std::uint32_t subsets = config.ground.subset_count();
    while (true) {
        // Closed sets of phi_S without materializing the table.
        std::vector<ESet> closed;
        for (std::uint32_t m = 0; m < subsets; ++m) {
            const ESet y(m);
            if ((phi.close(y) & covered_by(colors, union_of(colors, y))) == y) closed.push_back(y);
        }
        if (closed.size() == want_size && canonical_form(ClosedFamily(config.ground, closed)) == want)
            return ColorAssignment(config.ground, Palette::numbered(k), colors);
        if (!advance(colors, base)) return std::nullopt;
    }
}

}  // namespace convexgeo
