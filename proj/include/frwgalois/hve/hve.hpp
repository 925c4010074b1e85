#pragma once

#include "frwgalois/exact/laurent_series.hpp"

#include <array>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace frwgalois {

class HveError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// Values of k and the scaled energy E; unset means symbolic.
struct HveParameters {
    std::optional<Rational> k;
    std::optional<Rational> E;

    [[nodiscard]] ParamPoly k_poly() const { return k ? ParamPoly(*k) : ParamPoly::param("k"); }
    [[nodiscard]] ParamPoly E_poly() const { return E ? ParamPoly(*E) : ParamPoly::param("E"); }
};

/// Solutions at eta = 0 of the two Lame equations vddot = (A wp + B) v of the
/// scaled minimal model along q2 = 0, with (k, E) symbolic by default.
struct FundamentalSystem {
    long n = 0;
    /// A1 = 6, B1 = 2k: tangential pair; A2 = n(n+1), B2 = 2/3 k (n^2+n-3): normal pair.
    Rational A1, A2;
    ParamPoly B1, B2;
    LaurentSeries wp;
    /// v1 = eta^3 + ..., v2 = -1/(5 eta^2) + ..., v3 = eta^(n+1) + ..., v4 = -1/((2n+1) eta^n) + ...
    LaurentSeries v1, v2, v3, v4;
    /// Number of eta powers carried past each leading term.
    int truncation_order = 0;

    /// Lame residual vddot - (A wp + B) v for series index 1..4.
    [[nodiscard]] LaurentSeries lame_residual(int index) const;
    [[nodiscard]] LaurentSeries wronskian_tangential() const;
    [[nodiscard]] LaurentSeries wronskian_normal() const;
};

/// Frobenius solution of vddot = (A wp + B) v with leading term a0 eta^rho and
/// every odd-index coefficient set to zero.
[[nodiscard]] LaurentSeries lame_frobenius(const Rational& A, const ParamPoly& B, const LaurentSeries& wp, long rho,
                                           const Rational& a0, int relative_order);

[[nodiscard]] FundamentalSystem fundamental_series(long n, int order, const HveParameters& params = {});

enum class SeedChoice { V4, V3 };

/// Four series components, in the order (w1, w2, w3, w4).
using SeriesVector = std::array<LaurentSeries, 4>;

/// Step-by-step solution of the higher-order variational equations
/// wdot^(j) = W'(phi) w^(j) + f_j  by  w^(j) = X int X^-1 f_j.
///
/// Coordinates: q1 = w1 / sqrt(2), p1 = -w2 / sqrt(2), q2 = w3 sqrt(2) / w1,
/// p2 = (w1 w4 - w2 w3) / sqrt(2); the sqrt(2) keeps every series rational.
class HveSolver {
public:
    HveSolver(long n, int order, SeedChoice seed = SeedChoice::V4, const HveParameters& params = {});

    [[nodiscard]] const FundamentalSystem& fundamental() const { return fs_; }
    /// Particular solution (w1, w2, 0, 0) with w1^2 = wp + 2k/3.
    [[nodiscard]] const SeriesVector& particular() const { return phi_; }
    /// Solutions w^(1), ..., w^(order()) computed so far.
    [[nodiscard]] const std::vector<SeriesVector>& solutions() const { return w_; }
    [[nodiscard]] int order() const { return static_cast<int>(w_.size()); }

    /// f_j for j = order() + 1 from the Taylor expansion of W.
    [[nodiscard]] SeriesVector forcing() const;
    /// X^-1 f_j for j = order() + 1.
    [[nodiscard]] SeriesVector integrand() const;
    /// eta^-1 coefficients of the next integrand; throws HveError when the
    /// truncation window does not reach them.
    [[nodiscard]] std::array<ParamPoly, 4> residues() const;
    /// Integrates the next order; throws HveError when a residue is nonzero.
    void advance();
    /// Substitutes values into every stored series.
    void specialize(const std::map<std::string, ParamPoly>& values);

private:
    FundamentalSystem fs_;
    ParamPoly k_;
    Rational b_;
    SeriesVector phi_;
    std::vector<SeriesVector> w_;
};

/// X^-1 f_j with the lower orders integrated with zero homogeneous additions.
[[nodiscard]] SeriesVector hve_integrand(int j, long n, int order, SeedChoice seed = SeedChoice::V4,
                                         const HveParameters& params = {});

struct Obstruction {
    int order = 0;
    /// Component 1..4 of X^-1 f_j carrying the first nonzero residue.
    int component = 0;
    ParamPoly residue;
    std::array<ParamPoly, 4> residues;
    /// Integrands X^-1 f_2, ..., X^-1 f_order.
    std::vector<SeriesVector> trail;
};

/// First j <= max_order whose integrand has a nonzero eta^-1 coefficient.
/// Series are built symbolically; k and E values are applied to residues and,
/// when a symbolic residue vanishes under them, to the state before continuing.
[[nodiscard]] std::optional<Obstruction> log_obstruction(long n, const HveParameters& params, int max_order,
                                                         int order = 0);

/// Default relative truncation order for a scan up to max_order.
[[nodiscard]] int default_hve_order(long n, int max_order);

} // namespace frwgalois
