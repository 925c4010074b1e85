#include "frwgalois/elliptic/closed_form.hpp"
#include "frwgalois/exact/laurent_series.hpp"

#include <doctest.h>

#include <random>

using namespace frwgalois;

namespace {

double identity_residual(cplx z, cplx g2, cplx g3)
{
    const auto v = weierstrass(z, g2, g3);
    const cplx lhs = v.wp_prime * v.wp_prime;
    const cplx rhs = 4.0 * v.wp * v.wp * v.wp - g2 * v.wp - g3;
    return std::abs(lhs - rhs) / std::max(1.0, std::abs(lhs) + std::abs(4.0 * v.wp * v.wp * v.wp));
}

} // namespace

TEST_CASE("minimal-branch invariants")
{
    auto a = invariants_minimal(0, Rational(1));
    CHECK(a.g2 == Rational(-16));
    CHECK(a.g3 == Rational(0));
    CHECK(a.discriminant == Rational(-4096));
    CHECK(invariants_minimal(1, Rational(0)).degenerate());
    auto b = invariants_minimal(1, Rational(1));
    CHECK(b.g2 == Rational(-32, 3));
    CHECK(b.g3 == Rational(-224, 27));
    CHECK(b.discriminant == Rational(-3072));

    // Closed form of the discriminant, checked symbolically.
    const auto s = invariants_minimal_symbolic();
    const ParamPoly k = ParamPoly::param("k"), E = ParamPoly::param("E");
    CHECK(s.discriminant() == (E * E * (k * k - E.scaled(Rational(4)))).scaled(Rational(1024)));
}

TEST_CASE("degenerate lattice")
{
    CHECK(std::abs(wp(1.0, 0.0, 0.0) - 1.0) < 1e-15);
    CHECK(std::abs(wp_zeta(2.0, 0.0, 0.0) - 0.5) < 1e-15);
    // Delta = 0 with g3 != 0: g2 = 12 e^2, g3 = -8 e^3.
    const double e = 0.7;
    for (double z : {0.3, 0.9, 1.7}) {
        CHECK(identity_residual(z, 12 * e * e, -8 * e * e * e) < 1e-12);
    }
    CHECK_THROWS_AS(wp(0.0, 1.0, 2.0), PoleProximityError);
}

TEST_CASE("Weierstrass identity at random arguments")
{
    std::mt19937 rng(11);
    std::uniform_real_distribution<double> u(-2.0, 2.0);
    int checked = 0;
    for (int i = 0; i < 200; ++i) {
        const cplx g2(u(rng), u(rng)), g3(u(rng), u(rng)), z(u(rng), u(rng));
        try {
            CHECK(identity_residual(z, g2, g3) < 1e-12);
            ++checked;
        } catch (const PoleProximityError&) {
        }
    }
    CHECK(checked > 150);
}

TEST_CASE("duplication consistency")
{
    std::mt19937 rng(5);
    std::uniform_real_distribution<double> u(-1.5, 1.5);
    for (int i = 0; i < 50; ++i) {
        const cplx g2(u(rng), 0.3 * u(rng)), g3(u(rng), 0.3 * u(rng)), z(0.5 * u(rng), 0.5 * u(rng));
        const auto v = weierstrass(z, g2, g3);
        const cplx second = 6.0 * v.wp * v.wp - g2 / 2.0;
        const cplx doubled = std::pow(second / v.wp_prime, 2) / 4.0 - 2.0 * v.wp;
        const cplx direct = wp(2.0 * z, g2, g3);
        CHECK(std::abs(doubled - direct) < 1e-10 * std::max(1.0, std::abs(direct)));
    }
}

TEST_CASE("zeta and sigma derivatives by finite differences")
{
    const cplx g2(1.3, 0.2), g3(-0.4, 0.5);
    const double h = 1e-3;
    auto diff = [h](auto f, cplx z) { return (f(z - 2 * h) - 8.0 * f(z - h) + 8.0 * f(z + h) - f(z + 2 * h)) / (12 * h); };
    for (cplx z : {cplx(0.4, 0.1), cplx(1.1, -0.3), cplx(-0.7, 0.8)}) {
        const auto v = weierstrass(z, g2, g3);
        const cplx dzeta = diff([&](cplx x) { return wp_zeta(x, g2, g3); }, z);
        CHECK(std::abs(dzeta + v.wp) < 1e-9 * std::max(1.0, std::abs(v.wp)));
        const cplx dlogsigma = diff([&](cplx x) { return std::log(wp_sigma(x, g2, g3)); }, z);
        CHECK(std::abs(dlogsigma - v.zeta) < 1e-9 * std::max(1.0, std::abs(v.zeta)));
        const cplx dwp = diff([&](cplx x) { return wp(x, g2, g3); }, z);
        CHECK(std::abs(dwp - v.wp_prime) < 1e-9 * std::max(1.0, std::abs(v.wp_prime)));
    }
}

TEST_CASE("numeric wp agrees with the exact Laurent series")
{
    std::mt19937 rng(3);
    std::uniform_int_distribution<int> d(-9, 9);
    for (int i = 0; i < 10; ++i) {
        const Rational g2(d(rng), 4), g3(d(rng), 5);
        if ((g2 * g2 * g2 - Rational(27) * g3 * g3).is_zero()) {
            continue;
        }
        const LaurentSeries s = wp_series(ParamPoly(g2), ParamPoly(g3), 40);
        for (double eta : {0.1, -0.2, 0.29}) {
            const double exact = s.evaluate(eta, {});
            CHECK(std::abs(wp(eta, g2.to_double(), g3.to_double()).real() - exact) < 1e-10 * std::abs(exact));
        }
    }
}

TEST_CASE("homogeneity")
{
    const cplx g2(0.8, -0.3), g3(0.2, 0.6), z(0.9, 0.4);
    for (double t : {0.5, 2.0, 3.0}) {
        const cplx lhs = wp(t * z, g2 / std::pow(t, 4), g3 / std::pow(t, 6));
        const cplx rhs = wp(z, g2, g3) / (t * t);
        CHECK(std::abs(lhs - rhs) < 1e-10 * std::abs(rhs));
    }
}

TEST_CASE("wp_inverse")
{
    const cplx g2(2.0, 0.0), g3(-1.0, 0.5);
    for (cplx target : {cplx(0.3, 0.1), cplx(-2.0, 0.0), cplx(5.0, -1.0)}) {
        const cplx z = wp_inverse(target, g2, g3);
        CHECK(std::abs(wp(z, g2, g3) - target) < 1e-10);
    }
}

TEST_CASE("massless minimal closed form")
{
    const auto s = appendix_a_solve(1, 1, 1, 1, 0.0, 0.0, 0.3);
    CHECK(s.first_branch == "weierstrass");
    for (double eta = 0.1; eta <= 1.0; eta += 0.05) {
        CHECK(std::abs(s.first_residual(eta)) < 1e-9);
    }
    const cplx zero = appendix_a_zero(1, 1, 1, 1);
    const cplx g2 = s.constants.at("g2"), g3 = s.constants.at("g3");
    CHECK(std::abs(3.0 * wp(zero, g2, g3) + 2.0) < 1e-9);
    CHECK(std::abs(3.0 * wp(-zero, g2, g3) + 2.0) < 1e-9);
    for (double eta : {0.2, 0.4, 0.6}) {
        CHECK(std::abs(s.second_residual(eta)) < 1e-5 * std::max(1.0, std::abs(s.second(eta))));
    }

    const auto sw = appendix_a_solve(1, 1, 1, 1, 0.5, 0.0, 0.3);
    for (double eta : {0.2, 0.5}) {
        CHECK(std::abs(sw.second_residual(eta)) < 1e-5 * std::max(1.0, std::abs(sw.second(eta))));
    }

    for (double k : {-1.0, 0.0, 1.0}) {
        const auto c = appendix_a_solve(k, 0.0, 0.5, 1.0, 0.0, cplx(0.0, 0.0), 0.1);
        CHECK(c.first_branch != "weierstrass");
        for (double eta = 0.1; eta <= 1.0; eta += 0.1) {
            CHECK(std::abs(c.first_residual(eta)) < 1e-10);
        }
    }
}

TEST_CASE("massless conformal closed form")
{
    const auto s = appendix_b_solve(1, 1.5, -0.5, 0.7, 0.4, 0.3, 0.0, 0.0);
    CHECK(std::abs(s.constants.at("E") - (s.constants.at("E1") + s.constants.at("E2"))) == 0.0);
    for (double eta = 0.1; eta <= 1.0; eta += 0.05) {
        CHECK(std::abs(s.first_residual(eta)) < 1e-9 * std::max(1.0, std::norm(s.first_derivative(eta))));
        CHECK(std::abs(s.second_residual(eta)) < 1e-9 * std::max(1.0, std::norm(s.second(eta))));
    }
    for (double k : {-1.0, 0.0, 1.0}) {
        const auto t = appendix_b_solve(k, 0.0, 0.0, 0.6, 0.9, 0.2);
        CHECK(t.first_branch != "weierstrass");
        CHECK(t.second_branch != "weierstrass");
        for (double eta = 0.1; eta <= 1.0; eta += 0.1) {
            CHECK(std::abs(t.first_residual(eta)) < 1e-10);
            CHECK(std::abs(t.second_residual(eta)) < 1e-10);
        }
    }
}

TEST_CASE("wp satisfies its differential equation when one invariant vanishes")
{
    for (const auto& [g2, g3] : {std::pair<double, double>{4.0, 0.0}, {0.0, 4.0}, {-3.0, 0.0}}) {
        for (double z : {0.3, 0.9, 1.4}) {
            const cplx p = wp(z, g2, g3), d = wp_prime(z, g2, g3);
            CHECK(std::abs(d * d - 4.0 * p * p * p + g2 * p + g3) < 1e-9 * std::max(1.0, std::norm(d)));
        }
    }
}
