#include "frwgalois/elliptic/closed_form.hpp"

#include <boost/math/quadrature/gauss_kronrod.hpp>

#include <cmath>

namespace frwgalois {

namespace {

constexpr double kFiniteDifferenceStep = 1e-5;

struct Component {
    std::string branch;
    std::function<cplx(double)> value;
    std::function<cplx(double)> derivative;
};

/// v = scale * wp(eta - shift) + offset.
Component weierstrass_component(cplx g2, cplx g3, cplx scale, cplx offset, cplx shift)
{
    Component c;
    c.branch = "weierstrass";
    c.value = [=](double eta) { return scale * wp(eta - shift, g2, g3) + offset; };
    c.derivative = [=](double eta) { return scale * wp_prime(eta - shift, g2, g3); };
    return c;
}

/// v = centre + amplitude * cos(freq (eta - shift)).
Component circular_component(cplx centre, cplx amplitude, cplx freq, cplx shift)
{
    Component c;
    c.branch = "circular";
    c.value = [=](double eta) { return centre + amplitude * std::cos(freq * (eta - shift)); };
    c.derivative = [=](double eta) { return -amplitude * freq * std::sin(freq * (eta - shift)); };
    return c;
}

/// v = c0 + c1 t + c2 t^2 with t = eta - shift.
Component polynomial_component(cplx c0, cplx c1, cplx c2, cplx shift)
{
    Component c;
    c.branch = "polynomial";
    c.value = [=](double eta) {
        const cplx t = eta - shift;
        return c0 + c1 * t + c2 * t * t;
    };
    c.derivative = [=](double eta) { return c1 + 2.0 * c2 * (eta - shift); };
    return c;
}

cplx central_difference(const std::function<cplx(double)>& f, double eta)
{
    const double h = kFiniteDifferenceStep;
    return (f(eta + h) - f(eta - h)) / (2.0 * h);
}

} // namespace

cplx appendix_a_zero(double k, double Lambda, double E, double J)
{
    const cplx g2 = 16.0 / 3.0 * k * k + 16.0 * Lambda * E;
    const cplx g3 = 32.0 / 3.0 * Lambda * k * E + 64.0 / 27.0 * k * k * k - 32.0 * Lambda * Lambda * J;
    return wp_inverse(-2.0 * k / 3.0, g2, g3);
}

ClosedFormSolution appendix_a_solve(double k, double Lambda, double E, double J, double omega, cplx eta0, double phi_constant)
{
    ClosedFormSolution s;
    s.kind = ClosedFormKind::AppendixA;
    const cplx g2 = 16.0 / 3.0 * k * k + 16.0 * Lambda * E;
    const cplx g3 = 32.0 / 3.0 * Lambda * k * E + 64.0 / 27.0 * k * k * k - 32.0 * Lambda * Lambda * J;
    s.constants = {{"k", k}, {"Lambda", Lambda}, {"E", E}, {"J", J}, {"omega", omega}, {"eta0", eta0},
                   {"phi_constant", phi_constant}, {"g2", g2}, {"g3", g3}};

    Component v;
    if (Lambda != 0.0) {
        v = weierstrass_component(g2, g3, 1.0 / (2.0 * Lambda), k / (3.0 * Lambda), eta0);
    } else if (k != 0.0) {
        const cplx amplitude = std::sqrt(cplx(E * E / (4.0 * k * k) + J / k));
        v = circular_component(-E / (2.0 * k), amplitude, std::sqrt(cplx(8.0 * k)), eta0);
    } else if (E != 0.0) {
        v = polynomial_component(J / E, 0.0, -2.0 * E, eta0);
    } else {
        v = polynomial_component(0.0, std::sqrt(cplx(8.0 * J)), 0.0, eta0);
    }
    s.first_branch = v.branch;
    s.first = v.value;
    s.first_derivative = v.derivative;
    s.first_residual = [v, k, Lambda, E, J](double eta) {
        const cplx x = v.value(eta);
        const cplx d = v.derivative(eta);
        return d * d - 8.0 * (Lambda * x * x * x - k * x * x - E * x + J);
    };

    if (J == 0.0) {
        if (omega != 0.0) {
            throw std::invalid_argument("J = 0 requires omega = 0 for a real field");
        }
        // phi is constant; phi_constant is its square.
        s.second_branch = "constant";
        s.second = [phi_constant](double) { return cplx(phi_constant); };
    } else {
        // u = sqrt(J phi^2 - omega^2) / (sqrt(2) J) satisfies du/deta = 1/v.
        std::function<double(double)> u;
        if (Lambda != 0.0) {
            const cplx zero = wp_inverse(-2.0 * k / 3.0, g2, g3);
            const WeierstrassValues at_zero = weierstrass(zero, g2, g3);
            const cplx factor = 2.0 * Lambda / at_zero.wp_prime;
            s.constants["eta_zero"] = zero;
            u = [=](double eta) {
                const cplx t = eta - eta0;
                const cplx x = 2.0 * at_zero.zeta * t + weierstrass(t - zero, g2, g3).log_sigma -
                               weierstrass(t + zero, g2, g3).log_sigma;
                return phi_constant + std::real(factor * x);
            };
            s.second_branch = "weierstrass";
        } else {
            // Quadrature of 1/v from eta = 0; requires v != 0 on the path.
            auto first = s.first;
            u = [=](double eta) {
                auto f = [&](double x) { return std::real(1.0 / first(x)); };
                return phi_constant + boost::math::quadrature::gauss_kronrod<double, 31>::integrate(f, 0.0, eta, 15, 1e-13);
            };
            s.second_branch = "quadrature";
        }
        s.second = [u, J, omega](double eta) {
            const double x = u(eta);
            return cplx((2.0 * J * J * x * x + omega * omega) / J);
        };
    }
    s.second_derivative = [second = s.second](double eta) { return central_difference(second, eta); };
    s.second_residual = [s, J, omega](double eta) {
        const cplx w = s.second(eta);
        const cplx v1 = s.first(eta);
        const cplx dw = central_difference(s.second, eta);
        return dw * dw - 8.0 * (J * w - omega * omega) / (v1 * v1);
    };
    return s;
}

ClosedFormSolution appendix_b_solve(double k, double Lambda, double lambda, double E1, double E2, double omega, cplx eta1,
                                    cplx eta2)
{
    ClosedFormSolution s;
    s.kind = ClosedFormKind::AppendixB;
    const cplx g2 = 4.0 / 3.0 * k * k + 4.0 * Lambda * E1;
    const cplx g3 = 8.0 / 27.0 * k * k * k + 4.0 / 3.0 * k * Lambda * E1;
    const cplx g4 = 4.0 / 3.0 * k * k + 4.0 * lambda * E2;
    const cplx g5 = 8.0 / 27.0 * k * k * k + 4.0 / 3.0 * k * lambda * E2 + lambda * lambda * omega * omega;
    s.constants = {{"k", k},   {"Lambda", Lambda}, {"lambda", lambda}, {"E1", E1}, {"E2", E2}, {"E", E1 + E2},
                   {"omega", omega}, {"eta1", eta1}, {"eta2", eta2}, {"g2", g2}, {"g3", g3}, {"g4", g4}, {"g5", g5}};

    Component v1;
    if (Lambda != 0.0) {
        v1 = weierstrass_component(g2, g3, 2.0 / Lambda, 2.0 * k / (3.0 * Lambda), eta1);
    } else if (k != 0.0) {
        v1 = circular_component(-E1 / k, E1 / k, 2.0 * std::sqrt(cplx(k)), eta1);
    } else {
        v1 = polynomial_component(0.0, 0.0, -2.0 * E1, eta1);
    }
    Component v2;
    if (lambda != 0.0) {
        v2 = weierstrass_component(g4, g5, -2.0 / lambda, -2.0 * k / (3.0 * lambda), eta2);
    } else if (k != 0.0) {
        const cplx amplitude = std::sqrt(cplx(E2 * E2 / (k * k) - omega * omega / k));
        v2 = circular_component(E2 / k, amplitude, 2.0 * std::sqrt(cplx(k)), eta2);
    } else if (E2 != 0.0) {
        v2 = polynomial_component(omega * omega / (2.0 * E2), 0.0, 2.0 * E2, eta2);
    } else {
        if (omega != 0.0) {
            throw std::invalid_argument("k = lambda = E2 = 0 requires omega = 0");
        }
        v2 = polynomial_component(0.0, 0.0, 0.0, eta2);
    }
    s.first_branch = v1.branch;
    s.second_branch = v2.branch;
    s.first = v1.value;
    s.first_derivative = v1.derivative;
    s.second = v2.value;
    s.second_derivative = v2.derivative;
    s.first_residual = [v1, k, Lambda, E1](double eta) {
        const cplx x = v1.value(eta);
        const cplx d = v1.derivative(eta);
        return d * d - (2.0 * Lambda * x * x * x - 4.0 * k * x * x - 8.0 * E1 * x);
    };
    s.second_residual = [v2, k, lambda, E2, omega](double eta) {
        const cplx x = v2.value(eta);
        const cplx d = v2.derivative(eta);
        return d * d - (-2.0 * lambda * x * x * x - 4.0 * k * x * x + 8.0 * E2 * x - 4.0 * omega * omega);
    };
    return s;
}

} // namespace frwgalois
