#include "frwgalois/elliptic/weierstrass.hpp"

#include <array>
#include <cmath>
#include <vector>

namespace frwgalois {

namespace {

using lcplx = std::complex<long double>;

struct Values {
    lcplx wp, wp_prime, zeta, log_sigma;
};

constexpr int kMaxSeriesTerms = 80;
constexpr double kSeriesRadius = 0.3;

double invariant_scale(cplx g2, cplx g3)
{
    return std::max(std::pow(std::abs(g2), 0.25), std::pow(std::abs(g3), 1.0 / 6.0));
}

void check_pole(const WeierstrassValues& v)
{
    const double limit = 1.0 / (kPoleThreshold * kPoleThreshold);
    if (!std::isfinite(std::abs(v.wp)) || !std::isfinite(std::abs(v.wp_prime)) || std::abs(v.wp) > limit) {
        throw PoleProximityError("argument within the pole threshold of a lattice point");
    }
}

WeierstrassValues to_double(const Values& v)
{
    return {cplx(v.wp), cplx(v.wp_prime), cplx(v.zeta), cplx(v.log_sigma)};
}

WeierstrassValues degenerate_values(cplx z, cplx g2, cplx g3)
{
    WeierstrassValues v;
    if (std::abs(g2) == 0.0 && std::abs(g3) == 0.0) {
        v.wp = 1.0 / (z * z);
        v.wp_prime = -2.0 / (z * z * z);
        v.zeta = 1.0 / z;
        v.log_sigma = std::log(z);
        return v;
    }
    // Double root e of 4x^3 - g2 x - g3, simple root -2e.
    const cplx e = -3.0 * g3 / (2.0 * g2);
    const cplx beta = std::sqrt(3.0 * e);
    const cplx s = std::sinh(beta * z);
    const cplx c = std::cosh(beta * z);
    v.wp = e + 3.0 * e / (s * s);
    v.wp_prime = -6.0 * e * beta * c / (s * s * s);
    v.zeta = -e * z + beta * c / s;
    v.log_sigma = -e * z * z / 2.0 + std::log(s / beta);
    return v;
}

std::vector<lcplx> laurent_coefficients(lcplx g2, lcplx g3, int count)
{
    // c[k] multiplies z^(2k-2) in wp - z^-2, k >= 2.
    std::vector<lcplx> c(static_cast<std::size_t>(count) + 2, 0.0L);
    c[2] = g2 / 20.0L;
    if (count >= 2) {
        c[3] = g3 / 28.0L;
    }
    for (int k = 4; k < count + 2; ++k) {
        lcplx acc = 0.0L;
        for (int m = 2; m <= k - 2; ++m) {
            acc += c[static_cast<std::size_t>(m)] * c[static_cast<std::size_t>(k - m)];
        }
        c[static_cast<std::size_t>(k)] = 3.0L * acc / static_cast<long double>((2 * k + 1) * (k - 3));
    }
    return c;
}

Values series_values(lcplx z, const std::vector<lcplx>& c)
{
    const lcplx z2 = z * z;
    Values v;
    v.wp = 1.0L / z2;
    v.wp_prime = -2.0L / (z2 * z);
    v.zeta = 1.0L / z;
    v.log_sigma = std::log(z);
    lcplx power = 1.0L; // z^(2k-4)
    const long double scale = std::abs(v.wp);
    // Stop after three consecutive negligible terms: with g2 = 0 only every third coefficient survives.
    int small = 0;
    for (std::size_t k = 2; k < c.size(); ++k) {
        const long double kk = static_cast<long double>(k);
        const lcplx t = c[k] * power * z2; // c_k z^(2k-2)
        v.wp += t;
        v.wp_prime += (2.0L * kk - 2.0L) * t / z;
        v.zeta -= t * z / (2.0L * kk - 1.0L);
        v.log_sigma -= t * z2 / ((2.0L * kk - 1.0L) * 2.0L * kk);
        power *= z2;
        small = std::abs(t) < 1e-21L * scale ? small + 1 : 0;
        if (k > 4 && small >= 3) {
            break;
        }
    }
    return v;
}

Values duplicate(const Values& v, lcplx g2)
{
    const lcplx second = 6.0L * v.wp * v.wp - g2 / 2.0L;
    const lcplx slope = second / v.wp_prime;
    Values d;
    d.wp = slope * slope / 4.0L - 2.0L * v.wp;
    d.wp_prime = -v.wp_prime - slope * (d.wp - v.wp);
    d.zeta = 2.0L * v.zeta + slope / 2.0L;
    d.log_sigma = std::log(-v.wp_prime) + 4.0L * v.log_sigma;
    return d;
}

} // namespace

bool WeierstrassData::degenerate(double tol) const
{
    const double scale = std::max(std::pow(std::abs(g2), 3.0), 27.0 * std::norm(g3));
    return scale == 0.0 || std::abs(discriminant()) <= tol * scale;
}

ExactInvariants invariants_minimal(long k, const Rational& energy)
{
    const Rational K(k);
    ExactInvariants inv;
    inv.g2 = Rational(16, 3) * (K * K - Rational(3) * energy);
    inv.g3 = Rational(32, 27) * K * (Rational(2) * K * K - Rational(9) * energy);
    inv.discriminant = inv.g2 * inv.g2 * inv.g2 - Rational(27) * inv.g3 * inv.g3;
    return inv;
}

SymbolicWeierstrassData invariants_minimal_symbolic()
{
    const ParamPoly k = ParamPoly::param("k");
    const ParamPoly E = ParamPoly::param("E");
    return {(k * k - E.scaled(Rational(3))).scaled(Rational(16, 3)),
            (k * ((k * k).scaled(Rational(2)) - E.scaled(Rational(9)))).scaled(Rational(32, 27))};
}

WeierstrassValues weierstrass(cplx z, cplx g2, cplx g3)
{
    if (std::abs(z) < kPoleThreshold) {
        throw PoleProximityError("argument within the pole threshold of the origin");
    }
    WeierstrassValues v;
    if (WeierstrassData{g2, g3}.degenerate()) {
        v = degenerate_values(z, g2, g3);
    } else {
        const double radius = kSeriesRadius / invariant_scale(g2, g3);
        int doublings = 0;
        cplx w = z;
        while (std::abs(w) > radius) {
            w /= 2.0;
            ++doublings;
        }
        Values x = series_values(lcplx(w), laurent_coefficients(lcplx(g2), lcplx(g3), kMaxSeriesTerms));
        for (int i = 0; i < doublings; ++i) {
            check_pole(to_double(x));
            x = duplicate(x, lcplx(g2));
        }
        v = to_double(x);
    }
    check_pole(v);
    return v;
}

cplx wp(cplx z, cplx g2, cplx g3) { return weierstrass(z, g2, g3).wp; }
cplx wp_prime(cplx z, cplx g2, cplx g3) { return weierstrass(z, g2, g3).wp_prime; }
cplx wp_zeta(cplx z, cplx g2, cplx g3) { return weierstrass(z, g2, g3).zeta; }
cplx wp_sigma(cplx z, cplx g2, cplx g3) { return weierstrass(z, g2, g3).sigma(); }

cplx wp_inverse(cplx value, cplx g2, cplx g3)
{
    const double scale = std::max(invariant_scale(g2, g3), 1e-3);
    std::vector<cplx> starts;
    if (std::abs(value) > 0.0) {
        starts.push_back(1.0 / std::sqrt(value));
        starts.push_back(1.0 / std::sqrt(-value) * cplx(0, 1));
    }
    for (double r : {0.3, 0.7, 1.2, 2.0}) {
        for (int j = 0; j < 8; ++j) {
            starts.push_back(std::polar(r / scale, (j + 0.5) * M_PI / 4.0));
        }
    }
    const double tol = 1e-12 * (1.0 + std::abs(value));
    cplx best = 0.0;
    double best_residual = INFINITY;
    for (cplx z : starts) {
        try {
            for (int it = 0; it < 100; ++it) {
                const WeierstrassValues v = weierstrass(z, g2, g3);
                const double residual = std::abs(v.wp - value);
                if (residual < best_residual) {
                    best_residual = residual;
                    best = z;
                }
                if (residual < tol) {
                    return z;
                }
                if (std::abs(v.wp_prime) == 0.0) {
                    break;
                }
                z -= (v.wp - value) / v.wp_prime;
            }
        } catch (const PoleProximityError&) {
            continue;
        }
    }
    // Half-period targets are double roots of wp - value; Newton converges linearly there.
    if (best_residual < 1e-8 * (1.0 + std::abs(value))) {
        return best;
    }
    throw std::runtime_error("wp_inverse did not converge");
}

} // namespace frwgalois
