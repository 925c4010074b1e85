#pragma once

#include "frwgalois/exact/param_poly.hpp"

#include <vector>

namespace frwgalois {

/// A ParamPoly whose table declares canonical pairs (q_i, p_i).
using PhasePoly = ParamPoly;

struct CanonicalPair {
    std::string q;
    std::string p;
};

/// Complete canonical pairs declared across the tables of `f` and `g`; throws
/// when a pair index is claimed by two positions or two momenta.
[[nodiscard]] std::vector<CanonicalPair> canonical_pairs(const PhasePoly& f, const PhasePoly& g);

/// {F, G} = sum_i dF/dq_i dG/dp_i - dF/dp_i dG/dq_i.
[[nodiscard]] PhasePoly poisson_bracket(const PhasePoly& f, const PhasePoly& g);

} // namespace frwgalois
