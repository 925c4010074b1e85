#pragma once

#include "frwgalois/elliptic/weierstrass.hpp"

#include <functional>
#include <map>
#include <string>

namespace frwgalois {

enum class ClosedFormKind { AppendixA, AppendixB };

/// Elementary or elliptic solution of a separable massless model.
/// AppendixA: first = a^2, second = phi^2. AppendixB: first = a^2, second = phi^2.
struct ClosedFormSolution {
    ClosedFormKind kind = ClosedFormKind::AppendixA;
    std::map<std::string, cplx> constants;
    /// Which branch each component uses: "weierstrass", "circular", "polynomial", "constant".
    std::string first_branch;
    std::string second_branch;
    std::function<cplx(double)> first;
    std::function<cplx(double)> first_derivative;
    std::function<cplx(double)> second;
    /// Exact for AppendixB; a central difference for AppendixA.
    std::function<cplx(double)> second_derivative;
    /// Residual of the first-order ODE of each component at eta.
    std::function<cplx(double)> first_residual;
    std::function<cplx(double)> second_residual;
};

/// Massless minimal field: (dv/deta)^2 = 8 (Lambda v^3 - k v^2 - E v + J),
/// v = a^2, and phi^2 from the quadrature fixed by `phi_constant`.
[[nodiscard]] ClosedFormSolution appendix_a_solve(double k, double Lambda, double E, double J, double omega, cplx eta0,
                                                  double phi_constant);

/// Massless conformal field: independent cubic equations for v1 = a^2 and
/// v2 = phi^2 with energies E1 and E2.
[[nodiscard]] ClosedFormSolution appendix_b_solve(double k, double Lambda, double lambda, double E1, double E2, double omega,
                                                  cplx eta1 = 0.0, cplx eta2 = 0.0);

/// Zeros of v in the Weierstrass branch of appendix_a_solve, relative to eta0:
/// the pair (eta_z, -eta_z) with 3 wp(eta_z) = -2k.
[[nodiscard]] cplx appendix_a_zero(double k, double Lambda, double E, double J);

} // namespace frwgalois
