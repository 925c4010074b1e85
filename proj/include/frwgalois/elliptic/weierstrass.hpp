#pragma once

#include "frwgalois/exact/param_poly.hpp"

#include <complex>
#include <stdexcept>

namespace frwgalois {

using cplx = std::complex<double>;

/// Raised when an argument lies within the pole threshold of a lattice point.
class PoleProximityError : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

/// Distance to the lattice below which evaluation is refused.
inline constexpr double kPoleThreshold = 1e-6;

struct WeierstrassData {
    cplx g2;
    cplx g3;

    [[nodiscard]] cplx discriminant() const { return g2 * g2 * g2 - 27.0 * g3 * g3; }
    /// Relative test |Delta| <= tol * max(|g2|^3, 27|g3|^2).
    [[nodiscard]] bool degenerate(double tol = 1e-12) const;
};

struct SymbolicWeierstrassData {
    ParamPoly g2;
    ParamPoly g3;

    [[nodiscard]] ParamPoly discriminant() const { return g2.pow(3) - (g3 * g3).scaled(Rational(27)); }
};

struct ExactInvariants {
    Rational g2;
    Rational g3;
    Rational discriminant;
    [[nodiscard]] bool degenerate() const { return discriminant.is_zero(); }
};

/// Invariants of the minimal-model empty-universe branch at scaled energy E.
[[nodiscard]] ExactInvariants invariants_minimal(long k, const Rational& energy);
[[nodiscard]] SymbolicWeierstrassData invariants_minimal_symbolic();

struct WeierstrassValues {
    cplx wp;
    cplx wp_prime;
    cplx zeta;
    /// log sigma on an unspecified branch; exp(log_sigma) is sigma.
    cplx log_sigma;

    [[nodiscard]] cplx sigma() const { return std::exp(log_sigma); }
};

/// Evaluates wp, wp', zeta and sigma by Laurent series near the origin and
/// repeated duplication. Degenerate invariants use the elementary closed forms.
[[nodiscard]] WeierstrassValues weierstrass(cplx z, cplx g2, cplx g3);

[[nodiscard]] cplx wp(cplx z, cplx g2, cplx g3);
[[nodiscard]] cplx wp_prime(cplx z, cplx g2, cplx g3);
[[nodiscard]] cplx wp_zeta(cplx z, cplx g2, cplx g3);
[[nodiscard]] cplx wp_sigma(cplx z, cplx g2, cplx g3);

/// Solves wp(z) = value by Newton iteration from several starting points.
/// Returns one root; the other in the period cell is -z.
[[nodiscard]] cplx wp_inverse(cplx value, cplx g2, cplx g3);

} // namespace frwgalois
