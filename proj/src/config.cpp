#include <convexgeo/config.hpp>

#include <convexgeo/error.hpp>

#include "sampling.hpp"

namespace convexgeo {

std::vector<SupportBody> LabeledConfig::bodies_of(ESet y) const {
    std::vector<SupportBody> out;
    for (Element e : y) out.push_back(body(e));
    return out;
}

void validate(const LabeledConfig& config) {
    if (static_cast<int>(config.bodies.size()) != config.ground.size())
        throw InputError("configuration needs exactly one body per label");
    for (const auto& b : config.bodies) validate(b);
    if (!(config.tol > 0)) throw InputError("tolerance must be positive");
}

ESet ch_c(const LabeledConfig& config, ESet y) {
    validate(config);
    if (!config.ground.contains(y)) throw InputError("subset has elements outside the ground set");
    const detail::HullTester tester(config.bodies);
    return tester.close(y, config.tol * config.scale());
}

ClosureTable ch_c_table(const LabeledConfig& config) {
    validate(config);
    const detail::HullTester tester(config.bodies);
    const double threshold = config.tol * config.scale();
    std::vector<ESet> table(config.ground.subset_count());
    for (std::uint32_t m = 0; m < table.size(); ++m) table[m] = tester.close(ESet(m), threshold);
    return ClosureTable(config.ground, std::move(table));
}

Geometry checked_geometry(const ClosureTable& table) {
    const GroundSet& g = table.ground();
    const ClosedFamily family = table.closed_sets();
    if (!family.contains(g.full())) throw DegeneracyError("the full set is not closed");
    const ClosureTable rebuilt(family);
    for (std::uint32_t m = 0; m < table.table().size(); ++m) {
        const ESet y(m);
        if (rebuilt.close(y) != table.close(y))
            throw DegeneracyError("operator is not a closure operator at {" + g.format(y) + "}: maps to {" +
                                  g.format(table.close(y)) + "} but its closed hull is {" +
                                  g.format(rebuilt.close(y)) + "}");
    }
    if (!family.contains(ESet())) throw DegeneracyError("the empty set is not closed");
    for (ESet y : family.sets()) {
        if (y == g.full()) continue;
        bool extends = false;
        for (Element a : g.full() - y)
            if (family.contains(y.with(a))) extends = true;
        if (!extends)
            throw DegeneracyError("closed set {" + g.format(y) + "} has no one-point closed extension");
    }
    return Geometry(family);
}

InducedGeometry induced_geometry(const LabeledConfig& config) {
    const ClosureTable table = ch_c_table(config);
    Geometry geometry = checked_geometry(table);
    return {std::move(geometry), tight_basis(table)};
}

}  // namespace convexgeo
