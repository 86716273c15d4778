#include <convexgeo/closure.hpp>

#include <convexgeo/error.hpp>

#include <algorithm>
#include <cctype>
#include <sstream>

namespace convexgeo {

namespace {

std::string_view trim(std::string_view s) {
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
    return s;
}

void check_over(const GroundSet& ground, ESet y) {
    if (!ground.contains(y)) throw InputError("subset has elements outside the ground set");
}

}  // namespace

std::optional<Implication> Implication::make(ESet premise, ESet conclusion) {
    if (premise.empty()) throw InputError("implication premise must be nonempty");
    const ESet c = conclusion - premise;
    if (c.empty()) return std::nullopt;
    return Implication{premise, c};
}

ImplicationBasis::ImplicationBasis(GroundSet ground, std::vector<Implication> imps)
    : ground_(std::move(ground)) {
    for (const auto& imp : imps) add(imp.premise, imp.conclusion);
}

void ImplicationBasis::add(ESet premise, ESet conclusion) {
    check_over(ground_, premise);
    check_over(ground_, conclusion);
    if (auto imp = Implication::make(premise, conclusion)) imps_.push_back(*imp);
}

void ImplicationBasis::add(std::string_view text) {
    const Implication imp = parse_implication(ground_, text);
    add(imp.premise, imp.conclusion);
}

Implication parse_implication(const GroundSet& ground, std::string_view text) {
    text = trim(text);
    std::size_t arrow = text.find("->");
    std::size_t arrow_len = 2;
    if (arrow == std::string_view::npos) {
        arrow = text.find("\xE2\x86\x92");  // U+2192
        arrow_len = 3;
    }
    if (arrow == std::string_view::npos)
        throw InputError("implication '" + std::string(text) + "' has no '->'");
    const auto lhs = trim(text.substr(0, arrow));
    const auto rhs = trim(text.substr(arrow + arrow_len));
    if (lhs.empty() || rhs.empty())
        throw InputError("implication '" + std::string(text) + "' has an empty side");
    const ESet premise = ground.parse(lhs);
    const ESet conclusion = ground.parse(rhs);
    if (premise.empty() || conclusion.empty())
        throw InputError("implication '" + std::string(text) + "' has an empty side");
    // Keep the raw conclusion here; normalization happens when it joins a basis.
    return Implication{premise, conclusion};
}

std::string format_implication(const GroundSet& ground, const Implication& imp) {
    return ground.format(imp.premise) + "->" + ground.format(imp.conclusion);
}

ImplicationBasis parse_implication_list(const GroundSet& ground, std::string_view text) {
    // Squeeze whitespace around arrows, then split on commas and blanks.
    std::string s(text);
    for (std::size_t pos; (pos = s.find("\xE2\x86\x92")) != std::string::npos;) s.replace(pos, 3, "->");
    std::string squeezed;
    for (std::size_t i = 0; i < s.size(); ++i) {
        if (std::isspace(static_cast<unsigned char>(s[i]))) {
            std::size_t j = i;
            while (j < s.size() && std::isspace(static_cast<unsigned char>(s[j]))) ++j;
            const bool before_arrow = s.compare(j, 2, "->") == 0;
            const bool after_arrow = squeezed.size() >= 2 && squeezed.compare(squeezed.size() - 2, 2, "->") == 0;
            if (!before_arrow && !after_arrow) squeezed.push_back(' ');
            i = j - 1;
            continue;
        }
        squeezed.push_back(s[i] == ',' ? ' ' : s[i]);
    }
    ImplicationBasis basis(ground);
    std::istringstream tokens(squeezed);
    for (std::string token; tokens >> token;) basis.add(token);
    return basis;
}

ImplicationBasis parse_basis_file(std::string_view text) {
    std::istringstream in{std::string(text)};
    std::string raw;
    int line_no = 0;
    std::optional<ImplicationBasis> basis;
    while (std::getline(in, raw)) {
        ++line_no;
        std::string_view line = raw;
        if (auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
        line = trim(line);
        if (line.empty()) continue;
        try {
            if (!basis) {
                if (!line.starts_with("ground:"))
                    throw ParseError(line_no, "expected 'ground: <labels>' first");
                basis.emplace(GroundSet(std::string(trim(line.substr(7)))));
                continue;
            }
            const auto parsed = parse_implication_list(basis->ground(), line);
            for (const auto& imp : parsed.implications()) basis->add(imp.premise, imp.conclusion);
        } catch (const ParseError&) {
            throw;
        } catch (const Error& e) {
            throw ParseError(line_no, e.what());
        }
    }
    if (!basis) throw ParseError(0, "missing 'ground:' line");
    return *basis;
}

std::string serialize_basis_file(const ImplicationBasis& basis) {
    std::string out = "ground: " + basis.ground().labels() + "\n";
    for (const auto& imp : basis.implications()) out += format_implication(basis.ground(), imp) + "\n";
    return out;
}

ESet closure(const ImplicationBasis& basis, ESet y) {
    check_over(basis.ground(), y);
    ESet cur = y;
    bool changed = true;
    while (changed) {
        changed = false;
        for (const auto& imp : basis.implications()) {
            if (imp.premise.subset_of(cur) && !imp.conclusion.subset_of(cur)) {
                cur |= imp.conclusion;
                changed = true;
            }
        }
    }
    return cur;
}

ClosedFamily::ClosedFamily(GroundSet ground, std::vector<ESet> sets)
    : ground_(std::move(ground)), sets_(std::move(sets)) {
    for (ESet s : sets_) check_over(ground_, s);
    std::sort(sets_.begin(), sets_.end());
    sets_.erase(std::unique(sets_.begin(), sets_.end()), sets_.end());
}

bool ClosedFamily::contains(ESet s) const {
    return std::binary_search(sets_.begin(), sets_.end(), s);
}

ClosureTable::ClosureTable(const ImplicationBasis& basis) : ground_(basis.ground()) {
    table_.resize(ground_.subset_count());
    for (std::uint32_t m = 0; m < table_.size(); ++m) table_[m] = closure(basis, ESet(m));
}

ClosureTable::ClosureTable(const ClosedFamily& family) : ground_(family.ground()) {
    const ESet full = ground_.full();
    if (!family.contains(full)) throw PreconditionError("family does not contain the full set");
    const std::uint32_t count = ground_.subset_count();
    std::vector<char> member(count, 0);
    for (ESet s : family.sets()) member[s.bits()] = 1;
    table_.assign(count, full);
    // cl(Y) = intersection of cl(Y+a) over a outside Y, for non-closed Y.
    for (std::uint32_t m = count; m-- > 0;) {
        const ESet y(m);
        if (member[m]) {
            table_[m] = y;
            continue;
        }
        ESet acc = full;
        for (Element a : full - y) acc &= table_[y.with(a).bits()];
        table_[m] = acc;
    }
}

ClosureTable::ClosureTable(GroundSet ground, std::vector<ESet> table)
    : ground_(std::move(ground)), table_(std::move(table)) {
    if (table_.size() != ground_.subset_count()) throw InputError("closure table has the wrong size");
}

ClosedFamily ClosureTable::closed_sets() const {
    std::vector<ESet> sets;
    for (std::uint32_t m = 0; m < table_.size(); ++m)
        if (table_[m].bits() == m) sets.push_back(ESet(m));
    return ClosedFamily(ground_, std::move(sets));
}

Geometry::Geometry(ClosedFamily family) : family_(std::move(family)) {
    if (!is_alignment(family_)) throw PreconditionError("family is not an alignment");
    if (!is_convex_geometry(family_)) throw PreconditionError("family is not a convex geometry");
}

Geometry Geometry::from_basis(const ImplicationBasis& basis) { return Geometry(all_closed(basis)); }

ClosedFamily all_closed(const ImplicationBasis& basis) { return ClosureTable(basis).closed_sets(); }

bool is_alignment(const ClosedFamily& family) {
    const auto& sets = family.sets();
    if (!family.contains(family.ground().full())) return false;
    for (std::size_t i = 0; i < sets.size(); ++i)
        for (std::size_t j = i + 1; j < sets.size(); ++j)
            if (!family.contains(sets[i] & sets[j])) return false;
    return true;
}

bool is_convex_geometry(const ClosedFamily& family) {
    if (!is_alignment(family)) return false;
    if (!family.contains(ESet())) return false;
    const ESet full = family.ground().full();
    for (ESet y : family.sets()) {
        if (y == full) continue;
        bool extends = false;
        for (Element a : full - y) {
            if (family.contains(y.with(a))) {
                extends = true;
                break;
            }
        }
        if (!extends) return false;
    }
    return true;
}

std::optional<ExchangeWitness> find_exchange(const ClosureTable& table) {
    const ESet full = table.ground().full();
    for (std::uint32_t m = 0; m < table.table().size(); ++m) {
        const ESet y(m);
        if (!table.is_closed(y)) continue;
        const ESet outside = full - y;
        for (Element x : outside) {
            const ESet cx = table.close(y.with(x));
            for (Element z : outside) {
                if (z == x || !cx.contains(z)) continue;
                // z in cl(Y+x); exchange if x in cl(Y+z) too.
                if (table.close(y.with(z)).contains(x)) return ExchangeWitness{y, x, z};
            }
        }
    }
    return std::nullopt;
}

bool has_anti_exchange(const ClosureTable& table) {
    if (!table.close(ESet()).empty())
        throw PreconditionError("closure of the empty set is nonempty");
    return !find_exchange(table).has_value();
}

bool has_anti_exchange(const ImplicationBasis& basis) { return has_anti_exchange(ClosureTable(basis)); }

bool is_tight(const ClosureTable& table, ESet premise, Element u) {
    if (!table.ground().contains(premise) || u < 0 || u >= table.ground().size())
        throw InputError("element out of range");
    if (premise.contains(u) || !table.implies(premise, u))
        throw NotAnImplicationError(table.ground().format(premise) + "->" + table.ground().label(u) +
                                    " is not an implication");
    for (Element z : premise)
        if (table.implies(premise.without(z), u)) return false;
    return true;
}

bool is_tight(const ImplicationBasis& basis, ESet premise, Element u) {
    return is_tight(ClosureTable(basis), premise, u);
}

std::vector<TightPair> tight_implications(const ClosureTable& table) {
    std::vector<TightPair> out;
    for (std::uint32_t m = 1; m < table.table().size(); ++m) {
        const ESet y(m);
        const ESet gained = table.close(y) - y;
        for (Element u : gained) {
            bool minimal = true;
            for (Element z : y) {
                if (table.implies(y.without(z), u)) {
                    minimal = false;
                    break;
                }
            }
            if (minimal) out.emplace_back(y, u);
        }
    }
    std::sort(out.begin(), out.end(), [](const TightPair& a, const TightPair& b) {
        if (a.first.size() != b.first.size()) return a.first.size() < b.first.size();
        if (a.first != b.first) return a.first < b.first;
        return a.second < b.second;
    });
    return out;
}

std::vector<TightPair> tight_implications(const ImplicationBasis& basis) {
    return tight_implications(ClosureTable(basis));
}

ImplicationBasis tight_basis(const ClosureTable& table) {
    ImplicationBasis basis(table.ground());
    for (const auto& [premise, u] : tight_implications(table)) basis.add(premise, ESet::single(u));
    return basis;
}

std::string format_tight(const GroundSet& ground, const std::vector<TightPair>& pairs) {
    std::vector<std::pair<ESet, ESet>> merged;
    for (const auto& [premise, u] : pairs) {
        if (!merged.empty() && merged.back().first == premise)
            merged.back().second = merged.back().second.with(u);
        else
            merged.emplace_back(premise, ESet::single(u));
    }
    std::string out;
    for (const auto& [premise, concl] : merged) {
        if (!out.empty()) out += ", ";
        out += ground.format(premise) + "->" + ground.format(concl);
    }
    return out;
}

}  // namespace convexgeo
