#include <convexgeo/enumerate.hpp>

#include <convexgeo/error.hpp>

#include <algorithm>
#include <bit>
#include <numeric>
#include <set>

namespace convexgeo {

namespace {

using MaskList = std::vector<std::uint32_t>;

// Relabeling tables: for each permutation, mask -> permuted mask.
std::vector<std::vector<std::uint32_t>> permutation_tables(int n) {
    Permutation perm(static_cast<std::size_t>(n));
    std::iota(perm.begin(), perm.end(), 0);
    std::vector<std::vector<std::uint32_t>> tables;
    const std::uint32_t count = 1u << n;
    do {
        std::vector<std::uint32_t> map(count);
        for (std::uint32_t m = 0; m < count; ++m) map[m] = apply_permutation(perm, ESet(m)).bits();
        tables.push_back(std::move(map));
    } while (std::next_permutation(perm.begin(), perm.end()));
    return tables;
}

MaskList canonical_masks(const MaskList& sets, const std::vector<std::vector<std::uint32_t>>& tables) {
    MaskList best;
    MaskList cur(sets.size());
    for (const auto& map : tables) {
        for (std::size_t i = 0; i < sets.size(); ++i) cur[i] = map[sets[i]];
        std::sort(cur.begin(), cur.end());
        if (best.empty() || cur < best) best = cur;
    }
    return best;
}

MaskList masks_of(const ClosedFamily& family) {
    MaskList out;
    out.reserve(family.size());
    for (ESet s : family.sets()) out.push_back(s.bits());
    return out;
}

CanonicalForm serialize(int n, const MaskList& masks) {
    CanonicalForm form;
    form.reserve(1 + 2 * masks.size());
    form.push_back(static_cast<std::uint8_t>(n));
    for (std::uint32_t m : masks) {
        form.push_back(static_cast<std::uint8_t>(m & 0xffu));
        form.push_back(static_cast<std::uint8_t>((m >> 8) & 0xffu));
    }
    return form;
}

// Depth-first construction of labeled convex geometries. Subsets are decided
// from the full set downward; a subset may join only if one of its one-point
// extensions already has, and intersections with members are forced in.
class LabeledSearch {
public:
    explicit LabeledSearch(int n) : n_(n), full_((1u << n) - 1u) {
        for (std::uint32_t m = 0; m <= full_; ++m) order_.push_back(m);
        std::stable_sort(order_.begin(), order_.end(), [](std::uint32_t a, std::uint32_t b) {
            return std::popcount(a) > std::popcount(b);
        });
    }

    template <class Visit>
    void run(Visit&& visit) {
        members_.clear();
        members_.push_back(full_);
        included_ = bit(full_);
        step(1, 0, visit);
    }

private:
    static std::uint64_t bit(std::uint32_t m) { return std::uint64_t{1} << m; }

    bool has_extension(std::uint32_t y) const {
        for (std::uint32_t rest = full_ & ~y; rest; rest &= rest - 1)
            if (included_ & bit(y | (rest & (~rest + 1)))) return true;
        return false;
    }

    template <class Visit>
    void step(std::size_t pos, std::uint64_t forced, Visit& visit) {
        if (pos == order_.size()) {
            visit(members_);
            return;
        }
        const std::uint32_t y = order_[pos];
        const bool must = (forced & bit(y)) || y == 0;
        const bool can = has_extension(y);
        if (must && !can) return;
        if (!must) step(pos + 1, forced, visit);
        if (!can) return;

        std::uint64_t next_forced = forced;
        for (std::uint32_t z : members_) next_forced |= bit(z & y);
        members_.push_back(y);
        included_ |= bit(y);
        step(pos + 1, next_forced, visit);
        included_ &= ~bit(y);
        members_.pop_back();
    }

    int n_;
    std::uint32_t full_;
    MaskList order_;
    MaskList members_;
    std::uint64_t included_ = 0;
};

}  // namespace

ESet apply_permutation(const Permutation& perm, ESet s) {
    ESet out;
    for (Element e : s) out = out.with(perm.at(static_cast<std::size_t>(e)));
    return out;
}

ClosedFamily apply_permutation(const Permutation& perm, const ClosedFamily& family) {
    if (static_cast<int>(perm.size()) != family.ground().size())
        throw InputError("permutation size does not match the ground set");
    std::vector<ESet> sets;
    for (ESet s : family.sets()) sets.push_back(apply_permutation(perm, s));
    return ClosedFamily(family.ground(), std::move(sets));
}

CanonicalForm canonical_form(const ClosedFamily& family) {
    const int n = family.ground().size();
    if (n > 8) throw ResourceError("canonical form is limited to 8 elements");
    return serialize(n, canonical_masks(masks_of(family), permutation_tables(n)));
}

CanonicalForm canonical_form(const Geometry& g) { return canonical_form(g.family()); }

ClosedFamily canonical_family(const ClosedFamily& family) {
    const int n = family.ground().size();
    if (n > 8) throw ResourceError("canonical form is limited to 8 elements");
    std::vector<ESet> sets;
    for (std::uint32_t m : canonical_masks(masks_of(family), permutation_tables(n))) sets.push_back(ESet(m));
    return ClosedFamily(family.ground(), std::move(sets));
}

std::string canonical_id(const CanonicalForm& form) {
    static const char* hex = "0123456789abcdef";
    if (form.empty()) return "g?";
    const int n = form[0];
    const int digits = (n + 3) / 4;
    std::string out = "g" + std::to_string(n) + "-";
    for (std::size_t i = 1; i + 1 < form.size(); i += 2) {
        const unsigned m = form[i] | (static_cast<unsigned>(form[i + 1]) << 8);
        for (int d = digits - 1; d >= 0; --d) out.push_back(hex[(m >> (4 * d)) & 0xfu]);
    }
    return out;
}

EnumerationResult enumerate_geometries_with_stats(int n, const EnumerateOptions& options) {
    if (n < 1) throw InputError("n must be positive");
    if (n > options.max_n)
        throw ResourceError("enumeration for n = " + std::to_string(n) + " exceeds the guard max_n = " +
                            std::to_string(options.max_n));
    if (n > 6) throw ResourceError("enumeration supports at most 6 elements");

    const auto tables = permutation_tables(n);
    std::set<MaskList> classes;
    EnumerationResult result;
    LabeledSearch search(n);
    search.run([&](const MaskList& members) {
        ++result.labeled_count;
        MaskList sorted = members;
        std::sort(sorted.begin(), sorted.end());
        classes.insert(canonical_masks(sorted, tables));
    });

    const GroundSet ground = GroundSet::letters(n);
    std::vector<MaskList> ordered(classes.begin(), classes.end());
    std::stable_sort(ordered.begin(), ordered.end(),
                     [](const MaskList& a, const MaskList& b) { return a.size() < b.size(); });
    for (const auto& masks : ordered) {
        std::vector<ESet> sets;
        for (std::uint32_t m : masks) sets.push_back(ESet(m));
        result.geometries.emplace_back(ClosedFamily(ground, std::move(sets)));
    }
    return result;
}

std::vector<Geometry> enumerate_geometries(int n, const EnumerateOptions& options) {
    return enumerate_geometries_with_stats(n, options).geometries;
}

std::vector<ESet> meet_irreducibles(const ClosedFamily& family) {
    std::vector<ESet> out;
    const auto& sets = family.sets();
    for (ESet y : sets) {
        std::vector<ESet> above;
        for (ESet z : sets)
            if (y.proper_subset_of(z)) above.push_back(z);
        int covers = 0;
        for (ESet z : above) {
            const bool minimal = std::none_of(above.begin(), above.end(),
                                              [&](ESet w) { return w.proper_subset_of(z); });
            if (minimal) ++covers;
        }
        if (covers == 1) out.push_back(y);
    }
    return out;
}

int inclusion_width(const std::vector<ESet>& elements) {
    const std::size_t n = elements.size();
    std::vector<std::vector<std::size_t>> adj(n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            if (elements[i].proper_subset_of(elements[j])) adj[i].push_back(j);

    // Kuhn's augmenting paths; n is tiny.
    constexpr std::size_t kNone = static_cast<std::size_t>(-1);
    std::vector<std::size_t> match_right(n, kNone);
    std::vector<char> seen;
    auto augment = [&](auto&& self, std::size_t u) -> bool {
        for (std::size_t v : adj[u]) {
            if (seen[v]) continue;
            seen[v] = 1;
            if (match_right[v] == kNone || self(self, match_right[v])) {
                match_right[v] = u;
                return true;
            }
        }
        return false;
    };
    int matching = 0;
    for (std::size_t u = 0; u < n; ++u) {
        seen.assign(n, 0);
        if (augment(augment, u)) ++matching;
    }
    return static_cast<int>(n) - matching;
}

int convex_dimension(const Geometry& g) { return inclusion_width(meet_irreducibles(g.family())); }

}  // namespace convexgeo
