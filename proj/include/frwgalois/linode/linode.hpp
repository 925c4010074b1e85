#pragma once

#include "frwgalois/models/models.hpp"

#include <array>
#include <optional>
#include <string>
#include <vector>

namespace frwgalois {

class LinodeError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// Linearized flow along a particular solution, in the branch symbols
/// "q" (moving coordinate) and "qd" (its velocity).
struct VariationalSystem {
    ModelId model = ModelId::Minimal;
    BranchId branch = BranchId::EmptyUniverse;
    /// Rows and columns ordered (tangential q, tangential p, normal q, normal p).
    std::array<std::array<ParamRational, 4>, 4> matrix;
    /// Names of the phase variables in matrix order.
    std::array<std::string, 4> variables;
    /// qd = velocity_factor * p for the tangential pair.
    ParamRational velocity_factor;
    /// qddot along the branch as a function of q.
    ParamRational acceleration;
    /// qd^2 = velocity_squared(q, E).
    ParamRational velocity_squared;

    [[nodiscard]] std::array<std::array<ParamRational, 2>, 2> normal_block() const;
};

/// Scalar normal variational equation xddot + P xdot + Q x = 0 in the
/// normal position variation x; P and Q are rational in q and qd.
struct NormalVariationalEquation {
    VariationalSystem system;
    ParamRational P;
    ParamRational Q;
};

[[nodiscard]] VariationalSystem variational_equations(const HamiltonianModel& model, BranchId branch);
[[nodiscard]] NormalVariationalEquation normal_variational_equation(const VariationalSystem& system);

enum class SubstitutionKind {
    /// z = scale * q
    Linear,
    /// z = scale * q^2
    Square,
};

struct Substitution {
    SubstitutionKind kind = SubstitutionKind::Linear;
    ParamRational scale{1};

    static Substitution identity() { return {}; }
    static Substitution square(ParamRational scale = ParamRational(1)) { return {SubstitutionKind::Square, std::move(scale)}; }
    [[nodiscard]] std::string to_string() const;
};

struct SingularPoint {
    /// Either a location (nullopt: infinity) or the defining factor for a group of roots.
    std::optional<ParamRational> location;
    std::optional<ParamPoly> factor;
    bool regular = true;
    [[nodiscard]] bool is_infinity() const { return !location && !factor; }
    [[nodiscard]] std::string to_string() const;
};

/// a2 x'' + a1 x' + a0 x = 0 in `variable`, with polynomial coefficients
/// free of common factors in the variable.
struct LinearODE2 {
    std::string variable = "z";
    ParamPoly a2;
    ParamPoly a1;
    ParamPoly a0;

    static LinearODE2 from_coefficients(ParamRational a2, ParamRational a1, ParamRational a0, std::string variable = "z");

    /// Monic form x'' + p x' + q x = 0.
    [[nodiscard]] ParamRational p() const { return ParamRational(a1, a2); }
    [[nodiscard]] ParamRational q() const { return ParamRational(a0, a2); }
    /// True when both equations have the same monic form.
    [[nodiscard]] bool equivalent(const LinearODE2& other) const;
    [[nodiscard]] LinearODE2 rescaled(const ParamRational& factor) const;
    [[nodiscard]] std::vector<SingularPoint> singular_points() const;
    [[nodiscard]] std::string to_string() const;
};

/// Rewrites the normal variational equation in z, eliminating qd^2 with the
/// branch energy relation. `energy` replaces the symbol E when given.
[[nodiscard]] LinearODE2 algebraize(const NormalVariationalEquation& nve, const Substitution& substitution,
                                    const std::optional<ParamPoly>& energy = std::nullopt);

/// rho = mean +- sqrt(discriminant) / 2, roots of rho^2 - sum rho + product.
struct ExponentPair {
    ParamRational sum;
    ParamRational product;

    [[nodiscard]] ParamRational mean() const;
    [[nodiscard]] ParamRational discriminant() const;
    /// Exponent difference squared.
    [[nodiscard]] ParamRational difference_squared() const { return discriminant(); }
    /// Both exponents when the discriminant is a rational square.
    [[nodiscard]] std::optional<std::pair<Rational, Rational>> rational_values() const;
    [[nodiscard]] std::string to_string() const;
};

/// Exponents at z0 (nullopt: infinity); throws LinodeError at an irregular point.
[[nodiscard]] ExponentPair indicial_exponents(const LinearODE2& ode, const std::optional<ParamRational>& point);

enum class CanonicalFamily { Whittaker, RiemannP, Lame, Bessel, Euler, Raw };

[[nodiscard]] std::string to_string(CanonicalFamily family);

struct CanonicalODE {
    CanonicalFamily family = CanonicalFamily::Raw;
    /// Exact family parameters, e.g. "kappa_squared", "mu_squared", "A", "B",
    /// "g2", "g3", "order_squared", "scale".
    std::map<std::string, ParamRational> parameters;
    /// Exponent pairs: Euler (one pair), RiemannP (at 0, 1, infinity).
    std::vector<ExponentPair> exponents;
    std::string change_of_variables;
    /// The canonical form pulled back through the change of variables
    /// reproduces the source equation.
    bool round_trip_verified = false;
};

[[nodiscard]] CanonicalODE recognize(const LinearODE2& ode);
/// Recognizes a Lame equation wddot = (A wp + B) w in the time variable.
[[nodiscard]] CanonicalODE recognize(const NormalVariationalEquation& nve, const std::optional<ParamPoly>& energy = std::nullopt);

/// Papperitz equation with singular points 0, 1, infinity.
[[nodiscard]] LinearODE2 riemann_p_equation(const ExponentPair& at0, const ExponentPair& at1, const ExponentPair& atinf,
                                            const std::string& variable = "z");

} // namespace frwgalois
