#pragma once

#include "frwgalois/exact/param_rational.hpp"
#include "frwgalois/exact/poisson.hpp"

#include <array>
#include <optional>
#include <string>
#include <vector>

namespace frwgalois {

enum class ModelId { Minimal, MinimalScaled, Conformal, ConformalRotated, ConformalPi3 };
enum class BranchId { EmptyUniverse, Pi1, Pi2, Pi3 };
enum class TransformId { SwapLambdas, FlipK, BlockB };

[[nodiscard]] std::string to_string(ModelId id);
[[nodiscard]] std::string to_string(BranchId id);
[[nodiscard]] std::string to_string(TransformId id);
[[nodiscard]] ModelId parse_model_id(std::string_view name);

/// Model constants; each is either a rational number or a formal symbol.
struct ModelParameters {
    ParamPoly k = ParamPoly::param("k");
    ParamPoly Lambda = ParamPoly::param("Lambda");
    ParamPoly lambda = ParamPoly::param("lambda");
    ParamPoly m2 = ParamPoly::param("m2");

    static ModelParameters symbolic() { return {}; }
    static ModelParameters numeric(long k, const Rational& Lambda, const Rational& lambda, const Rational& m2);
};

/// Canonical coordinates shared by every model: (q1, p1) and (q2, p2).
struct PhaseVariables {
    ParamPoly q1 = ParamPoly::position("q1", 1);
    ParamPoly q2 = ParamPoly::position("q2", 2);
    ParamPoly p1 = ParamPoly::momentum("p1", 1);
    ParamPoly p2 = ParamPoly::momentum("p2", 2);
};

[[nodiscard]] const PhaseVariables& phase_variables();

/// A formal symbol standing for a square root: symbol^2 = square.
struct RadicalSymbol {
    std::string name;
    ParamRational square;
};

struct ParticularBranch {
    BranchId id = BranchId::EmptyUniverse;
    /// Polynomials vanishing on the invariant manifold.
    std::vector<PhasePoly> constraints;
    /// The same manifold written as q2 = ..., p2 = ... (or q1, p1).
    std::map<std::string, PhasePoly> solved_form;
    /// Radicals that appear in the solved form.
    std::vector<RadicalSymbol> radicals;
    /// Coordinate moving along the branch.
    std::string coordinate;
    /// qdot^2 = F(q, E) along the branch, in the symbols "q" and "E".
    ParamRational velocity_squared;
    std::string energy_convention;
};

struct HamiltonianModel {
    ModelId id = ModelId::Minimal;
    ModelParameters parameters;
    /// H = hamiltonian_numerator / hamiltonian_denominator (the denominator
    /// is a parameter polynomial; it differs from 1 only after BlockB).
    PhasePoly hamiltonian_numerator;
    ParamPoly hamiltonian_denominator{1};
    std::vector<RadicalSymbol> radicals;
    std::vector<std::string> constraints;
    std::vector<std::string> flags;
    std::vector<ParticularBranch> branches;

    [[nodiscard]] ParamRational hamiltonian() const
    {
        return {hamiltonian_numerator, hamiltonian_denominator};
    }
    /// dx/dt = {x, H} for x in (q1, p1, q2, p2), each as numerator over the
    /// Hamiltonian denominator.
    [[nodiscard]] std::array<PhasePoly, 4> equations_of_motion() const;
    [[nodiscard]] const ParticularBranch& branch(BranchId id) const;
    [[nodiscard]] bool has_branch(BranchId id) const;
};

class ModelError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// Builds a model; omega is fixed to zero. Throws ModelError on violated
/// parameter constraints.
[[nodiscard]] HamiltonianModel build_model(ModelId id, const ModelParameters& params);

[[nodiscard]] HamiltonianModel canonical_transform(const HamiltonianModel& model, TransformId transform);

/// True when every constraint's time derivative vanishes on the branch
/// manifold (after radical reduction).
[[nodiscard]] bool branch_is_invariant(const HamiltonianModel& model, const ParticularBranch& branch);

/// Replaces even powers of the given radical symbols by their squares.
[[nodiscard]] ParamRational reduce_radicals(const ParamPoly& p, const std::vector<RadicalSymbol>& radicals);

struct AlphaQuantities {
    ParamPoly alpha1;
    ParamPoly alpha2;
    ParamPoly alpha3_squared;
    ParamPoly alpha4;
    ParamPoly alpha5;
    ParamRational a_squared;
    ParamRational b_squared;
};

/// Requires alpha1 != 0 for a^2 and b^2; they are left as 0 otherwise.
[[nodiscard]] AlphaQuantities alpha_quantities(const ModelParameters& params);

struct KnownIntegrableCase {
    int row = 0;
    /// True when the match is the Lambda <-> lambda mirror of the tabulated row.
    bool swapped = false;
    PhasePoly hamiltonian;
    PhasePoly first_integral;
    bool verified = false;
};

/// The tabulated integrable conformal families (original kinetic form).
[[nodiscard]] std::optional<KnownIntegrableCase> known_integrable_lookup(long k, const Rational& Lambda, const Rational& lambda,
                                                                         const Rational& m2);

/// First integrals of the four tabulated cases with symbolic k and m2.
[[nodiscard]] PhasePoly table_hamiltonian(int row);
[[nodiscard]] PhasePoly table_first_integral(int row);

} // namespace frwgalois
