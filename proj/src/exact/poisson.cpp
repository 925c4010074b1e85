#include "frwgalois/exact/poisson.hpp"

#include <map>
#include <stdexcept>

namespace frwgalois {

std::vector<CanonicalPair> canonical_pairs(const PhasePoly& f, const PhasePoly& g)
{
    const auto u = unite_tables(f.table(), g.table());
    std::map<int, CanonicalPair> pairs;
    if (u.table) {
        for (const Symbol& s : u.table->symbols()) {
            if (s.kind == SymbolKind::Parameter) {
                continue;
            }
            CanonicalPair& slot = pairs[s.pair];
            std::string& field = s.kind == SymbolKind::Position ? slot.q : slot.p;
            if (!field.empty()) {
                throw std::invalid_argument("canonical pair " + std::to_string(s.pair) + " declared twice");
            }
            field = s.name;
        }
    }
    std::vector<CanonicalPair> out;
    for (auto& [_, pair] : pairs) {
        // A lone coordinate contributes nothing to the bracket.
        if (pair.q.empty() || pair.p.empty()) {
            continue;
        }
        out.push_back(std::move(pair));
    }
    return out;
}

PhasePoly poisson_bracket(const PhasePoly& f, const PhasePoly& g)
{
    PhasePoly out;
    for (const auto& [q, p] : canonical_pairs(f, g)) {
        out += f.derivative(q) * g.derivative(p) - f.derivative(p) * g.derivative(q);
    }
    return out;
}

} // namespace frwgalois
