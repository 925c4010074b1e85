#include "frwgalois/dynamics/dynamics.hpp"
#include "frwgalois/elliptic/closed_form.hpp"
#include "frwgalois/models/models.hpp"

#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <random>

using namespace frwgalois;

namespace {

Rational R(long p, long q = 1) { return Rational(p, q); }

HamiltonianModel rotated(long k, const Rational& Lambda, const Rational& lambda, const Rational& m2)
{
    return build_model(ModelId::ConformalRotated, ModelParameters::numeric(k, Lambda, lambda, m2));
}

PhaseState random_state(std::mt19937& rng, double scale)
{
    std::uniform_real_distribution<double> u(-scale, scale);
    return {u(rng), u(rng), u(rng), u(rng)};
}

double max_deviation(const std::vector<double>& series)
{
    double out = 0.0;
    for (double v : series) {
        out = std::max(out, std::abs(v - series.front()));
    }
    return out;
}

} // namespace

TEST_CASE("Minimal massless trajectory follows the elliptic closed form")
{
    const double k = 1.0, Lambda = 0.05, E = 1.0, J = 0.5, eta0 = 0.1;
    const auto oracle = appendix_a_solve(k, Lambda, E, J, 0.0, 0.0, 0.0);
    const double v = std::real(oracle.first(eta0));
    const double dv = std::real(oracle.first_derivative(eta0));
    REQUIRE(v > 0.0);
    const double q1 = std::sqrt(v);
    const auto model = build_model(ModelId::Minimal, ModelParameters::numeric(1, R(1, 20), R(0), R(0)));
    IntegrationOptions options;
    options.samples = 40;
    const Trajectory tr = integrate(model, {q1, -dv / (2.0 * q1), 0.3, std::sqrt(2.0 * J)}, eta0, 2.0, options);
    CHECK(std::abs(tr.energy.front() - E) < 1e-9);
    REQUIRE(tr.times.size() == 41);
    for (std::size_t i = 0; i < tr.times.size(); ++i) {
        const double expected = std::real(oracle.first(tr.times[i]));
        CHECK(std::abs(tr.states[i][0] * tr.states[i][0] - expected) < 1e-8 * std::max(1.0, std::abs(expected)));
    }
}

TEST_CASE("Trajectory bookkeeping")
{
    const auto model = rotated(1, R(1), R(1), R(-1));
    IntegrationOptions options;
    options.samples = 10;
    const Trajectory tr = integrate(model, {0.3, 0.2, -0.4, 0.1}, 0.0, 10.0, options);
    CHECK(std::adjacent_find(tr.times.begin(), tr.times.end(), std::greater_equal<>()) == tr.times.end());
    const PhaseFlow flow(model);
    for (std::size_t i = 0; i < tr.states.size(); ++i) {
        CHECK(tr.energy[i] == flow.energy(tr.states[i]));
    }
    CHECK(tr.max_energy_drift() < 1e-10);
    CHECK(tr.steps.accepted > 0);

    const Trajectory dense = integrate(model, {0.3, 0.2, -0.4, 0.1}, 0.0, 1.0, {});
    CHECK(dense.times.size() == static_cast<std::size_t>(dense.steps.accepted) + 1);
}

TEST_CASE("Energy drift stays below 1e-10 at rel_tol 1e-12")
{
    std::mt19937 rng(7);
    for (const auto& model : {rotated(1, R(1), R(1), R(-1)), rotated(1, R(0), R(0), R(-1)),
                              build_model(ModelId::Conformal, ModelParameters::numeric(1, R(1), R(1), R(-1)))}) {
        for (int trial = 0; trial < 3; ++trial) {
            const Trajectory tr = integrate(model, random_state(rng, 0.5), 0.0, 10.0, {});
            CHECK(tr.max_energy_drift() < 1e-10);
        }
    }
}

TEST_CASE("Halving rel_tol does not increase the drift")
{
    const auto model = rotated(1, R(0), R(0), R(-1));
    const PhaseState x0 = {2.0, 0.1, 1.0, 0.2};
    for (double tol : {1e-6, 1e-8}) {
        IntegrationOptions coarse;
        coarse.rel_tol = coarse.abs_tol = tol;
        IntegrationOptions fine = coarse;
        fine.rel_tol = tol / 2.0;
        const double d_coarse = integrate(model, x0, 0.0, 20.0, coarse).max_energy_drift();
        const double d_fine = integrate(model, x0, 0.0, 20.0, fine).max_energy_drift();
        CHECK(d_fine <= d_coarse);
    }
}

TEST_CASE("Time reversal returns to the initial state")
{
    const auto model = rotated(1, R(1), R(1), R(-1));
    const PhaseState x0 = {0.3, 0.2, -0.4, 0.1};
    const Trajectory forward = integrate(model, x0, 0.0, 1.0, {});
    PhaseState back = forward.states.back();
    back[1] = -back[1];
    back[3] = -back[3];
    PhaseState end = integrate(model, back, 0.0, 1.0, {}).states.back();
    end[1] = -end[1];
    end[3] = -end[3];
    for (std::size_t i = 0; i < 4; ++i) {
        CHECK(std::abs(end[i] - x0[i]) < 1e-11);
    }
}

TEST_CASE("Tabulated first integrals are conserved numerically")
{
    std::mt19937 rng(11);
    // (k, Lambda, lambda, m2) hitting each tabulated row.
    const std::vector<std::array<Rational, 4>> rows = {
        {R(1), R(1), R(1), R(-3)}, {R(1), R(1), R(1), R(-1)}, {R(0), R(16), R(1), R(-6)}, {R(0), R(8), R(1), R(-3)}};
    for (const auto& row : rows) {
        const long k = *row[0].to_long();
        const auto known = known_integrable_lookup(k, row[1], row[2], row[3]);
        REQUIRE(known.has_value());
        const auto model = build_model(ModelId::Conformal, ModelParameters::numeric(k, row[1], row[2], row[3]));
        IntegrationOptions options;
        options.samples = 100;
        // Without the k terms the indefinite quartic escapes in finite time.
        const Trajectory tr = integrate(model, random_state(rng, 0.1), 0.0, k == 0 ? 1.0 : 10.0, options);
        CAPTURE(known->row);
        CHECK(max_deviation(integral_series(tr, known->first_integral)) < (known->row == 2 ? 1e-9 : 1e-8));
    }
}

TEST_CASE("Rotated case (2) conserves angular momentum")
{
    const auto& v = phase_variables();
    const auto L = v.q1 * v.p2 - v.q2 * v.p1;
    std::mt19937 rng(3);
    const auto model = rotated(1, R(1), R(1), R(-1));
    IntegrationOptions options;
    options.samples = 100;
    const Trajectory tr = integrate(model, random_state(rng, 1.0), 0.0, 10.0, options);
    CHECK(max_deviation(integral_series(tr, L)) < 1e-9);
}

TEST_CASE("Pole approach and invalid input are reported")
{
    const auto minimal = build_model(ModelId::Minimal, ModelParameters::numeric(1, R(1), R(0), R(0)));
    CHECK_THROWS_AS((void)integrate(minimal, {0.0, 1.0, 0.0, 0.0}, 0.0, 1.0, {}), PoleError);
    // Heading into a = 0: the v = a^2 closed form reaches its zero.
    const auto oracle = appendix_a_solve(1.0, 1.0 / 20.0, 1.0, 0.0, 0.0, 0.0, 0.0);
    const double v = std::real(oracle.first(0.1)), dv = std::real(oracle.first_derivative(0.1));
    const double q1 = std::sqrt(v);
    CHECK_THROWS_AS((void)integrate(minimal, {q1, -dv / (2.0 * q1), 0.0, 0.0}, 0.1, 50.0, {}), DynamicsError);

    IntegrationOptions bad;
    bad.rel_tol = 1e-2;
    CHECK_THROWS_AS((void)integrate(rotated(1, R(1), R(1), R(-1)), {0.1, 0.0, 0.1, 0.0}, 0.0, 1.0, bad), DynamicsError);
    CHECK_THROWS_AS((void)integrate(rotated(1, R(1), R(1), R(-1)), {0.1, 0.0, 0.1, 0.0}, 1.0, 0.0, {}), DynamicsError);
    CHECK_THROWS_AS((void)mle_estimate(rotated(1, R(1), R(1), R(-1)), {0.1, 0.0, 0.1, 0.0}, 10.0, 1.0, {0, 0, 0, 0}),
                    DynamicsError);
}

TEST_CASE("Reduced E = k = 0 system agrees with the full Minimal system")
{
    const double Lambda = 0.5, m2 = 1.0;
    const auto model = build_model(ModelId::Minimal, ModelParameters::numeric(0, R(1, 2), R(0), R(1)));
    const PhaseState x0 = minimal_zero_energy_state(Lambda, m2, 1.0, 0.3, 0.2, false);
    CHECK(std::abs(PhaseFlow(model).energy(x0)) < 1e-12);
    IntegrationOptions options;
    options.samples = 50;
    const auto full = integrate_with_cosmological_time(model, x0, 0.0, 1.0, options);
    const std::vector<double> ts(full.cosmological_time.begin() + 1, full.cosmological_time.end());
    const auto reduced = reduce_and_integrate(Lambda, m2, reduce_state(Lambda, m2, x0), 0.0, ts);
    REQUIRE(reduced.times.size() == full.cosmological_time.size());
    for (std::size_t i = 1; i < reduced.times.size(); ++i) {
        const ReducedPoint p = reduce_state(Lambda, m2, full.trajectory.states[i]);
        CHECK(std::abs(std::remainder(p.alpha - reduced.alpha[i], 2.0 * M_PI)) < 1e-6);
        CHECK(std::abs(p.h - reduced.h[i]) < 1e-6);
    }
}

TEST_CASE("Reduced system: monotone h at Lambda = 0 and the h = 0 rotation rate")
{
    std::vector<double> ts;
    for (int i = 1; i <= 200; ++i) {
        ts.push_back(0.05 * i);
    }
    const auto r = reduce_and_integrate(0.0, 2.0, {0.4, 1.5}, 0.0, ts);
    for (std::size_t i = 1; i < r.h.size(); ++i) {
        CHECK(r.h[i] <= r.h[i - 1]);
        CHECK(r.h[i] > 0.0);
    }
    for (double m2 : {0.5, 2.0, 9.0}) {
        const double dt = 1e-6;
        const auto s = reduce_and_integrate(-0.5, m2, {0.7, 0.0}, 0.0, {dt});
        CHECK(std::abs((s.alpha.back() - 0.7) / dt - std::sqrt(2.0 * m2)) < 1e-5);
        CHECK(s.h.back() == doctest::Approx(0.0));
    }
    CHECK_THROWS_AS((void)reduce_and_integrate(1.0, 1.0, {0.0, 1.0}, 0.0, {1.0}), DynamicsError);
}

TEST_CASE("MLE: integrable flow decays, quartic coupling stays positive")
{
    const auto integrable = rotated(1, R(1), R(1), R(-1));
    double previous = 1.0;
    for (double span : {50.0, 200.0, 800.0}) {
        const double mle = mle_estimate(integrable, {0.3, 0.2, -0.4, 0.1}, span, 1.0).exponent;
        CHECK(mle < previous);
        previous = mle;
    }
    CHECK(previous <= 1e-2);

    const auto coupled = rotated(1, R(0), R(0), R(-1));
    const PhaseState x0 = {5.0, 0.1, 2.5, 0.2};
    std::vector<double> estimates;
    for (const PhaseState& seed : {PhaseState{1, 0, 0, 0}, PhaseState{0, 0, 1, 1}, PhaseState{0.3, -0.5, 0.2, 0.7}}) {
        const auto est = mle_estimate(coupled, x0, 800.0, 1.0, seed);
        CHECK(est.trace.size() == 800);
        estimates.push_back(est.exponent);
    }
    const auto [lo, hi] = std::minmax_element(estimates.begin(), estimates.end());
    CHECK(*lo > 0.2);
    CHECK(*hi - *lo < 0.15 * *hi);
}

TEST_CASE("Conformal massless trajectories follow the elliptic closed forms")
{
    IntegrationOptions options;
    options.samples = 40;
    // (k, Lambda, lambda, E1, E2)
    for (const auto& p : std::vector<std::array<double, 5>>{
             {1, 1, -1, 0.5, 0.5}, {1, 0.5, -2, -0.3, 0.7}, {0, 1, -1, 1, 1}, {-1, 1, -1, 0.2, 1}}) {
        const auto c = compare_appendix_b(p[0], p[1], p[2], p[3], p[4], 0.1, 2.0, options);
        CHECK(c.max_error < 1e-8);
        CHECK(std::abs(c.trajectory.energy.front() - (p[3] + p[4])) < 1e-9);
    }
    const auto a = compare_appendix_a(1, 0.05, 1, 0.5, 0.3, 0.1, 2.0, options);
    CHECK(a.max_error < 1e-8);
    CHECK_THROWS_AS((void)compare_appendix_b(1, 1, 1, 0.5, 0.5, 0.1, 2.0, options), DynamicsError);
}
