#include "frwgalois/dynamics/dynamics.hpp"

#include "frwgalois/elliptic/closed_form.hpp"

#include <boost/numeric/odeint.hpp>

#include <algorithm>
#include <cmath>

namespace frwgalois {

namespace odeint = boost::numeric::odeint;

namespace {

const std::array<std::string, 4> kPhaseNames = {"q1", "p1", "q2", "p2"};

/// Output times: `samples` equal intervals, or just the end point when 0.
std::vector<double> output_grid(double t0, double t1, int samples)
{
    std::vector<double> out;
    if (samples <= 0) {
        out.push_back(t1);
        return out;
    }
    for (int i = 1; i <= samples; ++i) {
        out.push_back(i == samples ? t1 : t0 + (t1 - t0) * i / samples);
    }
    return out;
}

/// Adaptive RKF78 integration through the given output times. `record` is
/// called at t0, at every output time and, when `every_step` is set, after
/// every accepted step.
template <std::size_t N, class System, class Record>
StepStatistics adaptive(const System& system, std::array<double, N>& x, double t0, const std::vector<double>& outputs,
                        const IntegrationOptions& options, bool every_step, Record record)
{
    using State = std::array<double, N>;
    auto stepper = odeint::make_controlled(options.abs_tol, options.rel_tol, odeint::runge_kutta_fehlberg78<State>());
    StepStatistics stats;
    stats.min_step = std::numeric_limits<double>::infinity();
    double t = t0;
    double dt = options.initial_step;
    record(t, x);
    for (const double target : outputs) {
        if (target < t) {
            throw DynamicsError("output times must increase");
        }
        while (t < target) {
            const bool clamped = t + dt >= target;
            const double saved = dt;
            if (clamped) {
                dt = target - t;
            }
            const double attempted = dt;
            const auto result = stepper.try_step(system, x, t, dt);
            if (result == odeint::success) {
                if (!std::all_of(x.begin(), x.end(), [](double v) { return std::isfinite(v); })) {
                    throw DynamicsError("solution blew up at t = " + std::to_string(t));
                }
                ++stats.accepted;
                stats.min_step = std::min(stats.min_step, attempted);
                stats.max_step = std::max(stats.max_step, attempted);
                if (clamped && t >= target) {
                    t = target;
                    dt = std::max(saved, dt);
                }
                if (every_step && t < target) {
                    record(t, x);
                }
            } else {
                ++stats.rejected;
                if (dt < options.min_step) {
                    throw DynamicsError("step size underflow at t = " + std::to_string(t));
                }
            }
        }
        record(t, x);
    }
    if (stats.accepted == 0) {
        stats.min_step = 0.0;
    }
    return stats;
}

void check_options(const IntegrationOptions& o)
{
    for (double tol : {o.rel_tol, o.abs_tol}) {
        if (!(tol > 0.0) || tol > 1e-3) {
            throw DynamicsError("tolerances must lie in (0, 1e-3]");
        }
    }
}

} // namespace

double Trajectory::max_energy_drift() const
{
    double drift = 0.0;
    for (double e : energy) {
        drift = std::max(drift, std::abs(e - energy.front()));
    }
    return drift;
}

PhaseFlow::Compiled PhaseFlow::compile(const PhasePoly& f, double scale)
{
    Compiled out;
    const SymbolTablePtr& table = f.table();
    for (const auto& [exps, c] : f.terms()) {
        Monomial m{c.to_double() * scale, {0, 0, 0, 0}};
        for (std::size_t i = 0; i < exps.size(); ++i) {
            if (exps[i] == 0) {
                continue;
            }
            const std::string& name = (*table)[i].name;
            const auto it = std::find(kPhaseNames.begin(), kPhaseNames.end(), name);
            if (it == kPhaseNames.end()) {
                throw DynamicsError("symbol " + name + " must have a numeric value");
            }
            m.exponents[static_cast<std::size_t>(it - kPhaseNames.begin())] = exps[i];
        }
        out.push_back(m);
    }
    return out;
}

double PhaseFlow::eval(const Compiled& f, const PhaseState& x)
{
    double sum = 0.0;
    for (const auto& m : f) {
        double term = m.coefficient;
        for (std::size_t i = 0; i < 4; ++i) {
            const int e = m.exponents[i];
            if (e != 0) {
                term *= e == 1 ? x[i] : std::pow(x[i], e);
            }
        }
        sum += term;
    }
    return sum;
}

PhaseFlow::PhaseFlow(const HamiltonianModel& model)
{
    const auto denominator = model.hamiltonian_denominator.constant_value();
    if (!denominator || denominator->is_zero()) {
        throw DynamicsError("Hamiltonian denominator must be a nonzero number");
    }
    const double scale = 1.0 / denominator->to_double();
    const auto eom = model.equations_of_motion();
    for (std::size_t i = 0; i < 4; ++i) {
        field_[i] = compile(eom[i], scale);
        for (std::size_t j = 0; j < 4; ++j) {
            jacobian_[i][j] = compile(eom[i].derivative(kPhaseNames[j]), scale);
        }
        for (const auto& m : field_[i]) {
            for (std::size_t j = 0; j < 4; ++j) {
                pole_[j] = pole_[j] || m.exponents[j] < 0;
            }
        }
    }
    hamiltonian_ = compile(model.hamiltonian_numerator, scale);
}

void PhaseFlow::check_poles(const PhaseState& x) const
{
    for (std::size_t i = 0; i < 4; ++i) {
        if (pole_[i] && std::abs(x[i]) < kScaleFactorThreshold) {
            throw PoleError(kPhaseNames[i] + " reached the pole threshold");
        }
    }
}

void PhaseFlow::rhs(const PhaseState& x, PhaseState& dx) const
{
    check_poles(x);
    for (std::size_t i = 0; i < 4; ++i) {
        dx[i] = eval(field_[i], x);
    }
}

double PhaseFlow::energy(const PhaseState& x) const { return eval(hamiltonian_, x); }

std::array<std::array<double, 4>, 4> PhaseFlow::jacobian(const PhaseState& x) const
{
    std::array<std::array<double, 4>, 4> out{};
    for (std::size_t i = 0; i < 4; ++i) {
        for (std::size_t j = 0; j < 4; ++j) {
            out[i][j] = eval(jacobian_[i][j], x);
        }
    }
    return out;
}

double PhaseFlow::evaluate(const PhasePoly& f, const PhaseState& x) { return eval(compile(f, 1.0), x); }

Trajectory integrate(const HamiltonianModel& model, const PhaseState& state0, double eta0, double eta1,
                     const IntegrationOptions& options)
{
    check_options(options);
    if (!(eta1 > eta0)) {
        throw DynamicsError("eta span must be increasing");
    }
    const PhaseFlow flow(model);
    flow.check_poles(state0);
    Trajectory tr;
    tr.options = options;
    PhaseState x = state0;
    auto system = [&flow](const PhaseState& s, PhaseState& ds, double) { flow.rhs(s, ds); };
    tr.steps = adaptive<4>(system, x, eta0, output_grid(eta0, eta1, options.samples), options, options.samples == 0,
                           [&](double t, const PhaseState& s) {
                               if (!tr.times.empty() && t <= tr.times.back()) {
                                   return;
                               }
                               tr.times.push_back(t);
                               tr.states.push_back(s);
                               tr.energy.push_back(flow.energy(s));
                           });
    return tr;
}

std::vector<double> integral_series(const Trajectory& trajectory, const PhasePoly& integral)
{
    std::vector<double> out;
    out.reserve(trajectory.states.size());
    for (const auto& s : trajectory.states) {
        out.push_back(PhaseFlow::evaluate(integral, s));
    }
    return out;
}

ReducedTrajectory reduce_and_integrate(double Lambda, double m2, const ReducedPoint& state0, double t0,
                                       const std::vector<double>& output_times, double tol)
{
    if (!(m2 > 0.0)) {
        throw DynamicsError("the reduction needs m2 > 0");
    }
    if (state0.h * state0.h <= 2.0 * Lambda) {
        throw DynamicsError("branch violation: h^2 <= 2 Lambda");
    }
    const double root2m = std::sqrt(2.0 * m2);
    using State = std::array<double, 2>;
    auto system = [&](const State& s, State& ds, double) {
        const double sa = std::sin(s[0]), ca = std::cos(s[0]);
        ds[0] = root2m + 3.0 * s[1] * sa * ca;
        ds[1] = -3.0 * (s[1] * s[1] - 2.0 * Lambda) * ca * ca;
    };
    IntegrationOptions options;
    options.rel_tol = tol;
    options.abs_tol = tol;
    check_options(options);
    ReducedTrajectory out;
    State x = {state0.alpha, state0.h};
    out.steps = adaptive<2>(system, x, t0, output_times, options, false, [&](double t, const State& s) {
        if (!out.times.empty() && t <= out.times.back()) {
            return;
        }
        out.times.push_back(t);
        out.alpha.push_back(s[0]);
        out.h.push_back(s[1]);
    });
    return out;
}

ReducedPoint reduce_state(double Lambda, double m2, const PhaseState& x)
{
    const double a = x[0];
    const double h = -x[1] / (a * a);
    const double omega = x[3] / (a * a * a);
    const double r2 = h * h - 2.0 * Lambda;
    if (r2 <= 0.0) {
        throw DynamicsError("branch violation: h^2 <= 2 Lambda");
    }
    return {std::atan2(std::sqrt(2.0 * m2) * x[2], omega), h};
}

PhaseState minimal_zero_energy_state(double Lambda, double m2, double a, double phi, double omega, bool expanding)
{
    const double h2 = 2.0 * Lambda + omega * omega + 2.0 * m2 * phi * phi;
    if (h2 < 0.0) {
        throw DynamicsError("no real h on the zero-energy level");
    }
    const double h = (expanding ? 1.0 : -1.0) * std::sqrt(h2);
    return {a, -h * a * a, phi, omega * a * a * a};
}

CosmologicalTrajectory integrate_with_cosmological_time(const HamiltonianModel& model, const PhaseState& state0,
                                                        double eta0, double eta1, const IntegrationOptions& options)
{
    if (model.id != ModelId::Minimal) {
        throw DynamicsError("cosmological time is defined for the Minimal model");
    }
    check_options(options);
    const PhaseFlow flow(model);
    using State = std::array<double, 5>;
    auto system = [&flow](const State& s, State& ds, double) {
        PhaseState x = {s[0], s[1], s[2], s[3]};
        PhaseState dx;
        flow.rhs(x, dx);
        std::copy(dx.begin(), dx.end(), ds.begin());
        ds[4] = s[0];
    };
    CosmologicalTrajectory out;
    out.trajectory.options = options;
    State x = {state0[0], state0[1], state0[2], state0[3], 0.0};
    out.trajectory.steps = adaptive<5>(system, x, eta0, output_grid(eta0, eta1, options.samples), options,
                                       options.samples == 0, [&](double t, const State& s) {
                                           if (!out.trajectory.times.empty() && t <= out.trajectory.times.back()) {
                                               return;
                                           }
                                           const PhaseState p = {s[0], s[1], s[2], s[3]};
                                           out.trajectory.times.push_back(t);
                                           out.trajectory.states.push_back(p);
                                           out.trajectory.energy.push_back(flow.energy(p));
                                           out.cosmological_time.push_back(s[4]);
                                       });
    return out;
}

namespace {

double real_part(cplx z, const char* what)
{
    if (std::abs(z.imag()) > 1e-8 * std::max(1.0, std::abs(z.real()))) {
        throw DynamicsError(std::string(what) + " is not real on the requested window");
    }
    return z.real();
}

double positive_root(double v, const char* what)
{
    if (!(v > 0.0)) {
        throw DynamicsError(std::string(what) + " is not positive at the initial time");
    }
    return std::sqrt(v);
}

double relative_gap(double numeric, double exact) { return std::abs(numeric - exact) / std::max(1.0, std::abs(exact)); }

Rational to_rational(double x)
{
    return Rational(mpq_class(x));
}

} // namespace

OracleComparison compare_appendix_a(double k, double Lambda, double E, double J, double q2, double eta0, double eta1,
                                    const IntegrationOptions& options)
{
    const ClosedFormSolution oracle = appendix_a_solve(k, Lambda, E, J, 0.0, 0.0, 0.0);
    const double v = real_part(oracle.first(eta0), "a^2");
    const double q1 = positive_root(v, "a^2");
    const double dv = real_part(oracle.first_derivative(eta0), "da^2/deta");
    if (J < 0.0) {
        throw DynamicsError("J must be non-negative");
    }
    const auto model = build_model(ModelId::Minimal, ModelParameters::numeric(static_cast<long>(k), to_rational(Lambda),
                                                                              Rational(0), Rational(0)));
    OracleComparison out;
    out.trajectory = integrate(model, {q1, -dv / (2.0 * q1), q2, std::sqrt(2.0 * J)}, eta0, eta1, options);
    for (std::size_t i = 0; i < out.trajectory.times.size(); ++i) {
        const double a2 = real_part(oracle.first(out.trajectory.times[i]), "a^2");
        const double x = out.trajectory.states[i][0];
        out.first_oracle.push_back(a2);
        out.max_error = std::max(out.max_error, relative_gap(x * x, a2));
    }
    return out;
}

OracleComparison compare_appendix_b(double k, double Lambda, double lambda, double E1, double E2, double eta0,
                                    double eta1, const IntegrationOptions& options)
{
    const ClosedFormSolution oracle = appendix_b_solve(k, Lambda, lambda, E1, E2, 0.0);
    const double v1 = real_part(oracle.first(eta0), "a^2");
    const double v2 = real_part(oracle.second(eta0), "phi^2");
    const double q1 = positive_root(v1, "a^2");
    const double q2 = positive_root(v2, "phi^2");
    const double dv1 = real_part(oracle.first_derivative(eta0), "da^2/deta");
    const double dv2 = real_part(oracle.second_derivative(eta0), "dphi^2/deta");
    const auto model = build_model(ModelId::Conformal, ModelParameters::numeric(static_cast<long>(k), to_rational(Lambda),
                                                                                to_rational(lambda), Rational(0)));
    OracleComparison out;
    // qdot1 = -p1, qdot2 = p2.
    out.trajectory = integrate(model, {q1, -dv1 / (2.0 * q1), q2, dv2 / (2.0 * q2)}, eta0, eta1, options);
    for (std::size_t i = 0; i < out.trajectory.times.size(); ++i) {
        const double t = out.trajectory.times[i];
        const double a2 = real_part(oracle.first(t), "a^2");
        const double phi2 = real_part(oracle.second(t), "phi^2");
        const auto& x = out.trajectory.states[i];
        out.first_oracle.push_back(a2);
        out.second_oracle.push_back(phi2);
        out.max_error = std::max({out.max_error, relative_gap(x[0] * x[0], a2), relative_gap(x[2] * x[2], phi2)});
    }
    return out;
}

LyapunovEstimate mle_estimate(const HamiltonianModel& model, const PhaseState& state0, double eta_span,
                              double renorm_interval, const PhaseState& tangent0, const IntegrationOptions& options)
{
    check_options(options);
    if (!(eta_span > 0.0) || !(renorm_interval > 0.0)) {
        throw DynamicsError("eta span and renormalization interval must be positive");
    }
    double norm0 = 0.0;
    for (double v : tangent0) {
        norm0 += v * v;
    }
    if (norm0 == 0.0) {
        throw DynamicsError("tangent seed must be nonzero");
    }
    const PhaseFlow flow(model);
    using State = std::array<double, 8>;
    auto system = [&flow](const State& s, State& ds, double) {
        const PhaseState x = {s[0], s[1], s[2], s[3]};
        PhaseState dx;
        flow.rhs(x, dx);
        const auto J = flow.jacobian(x);
        for (std::size_t i = 0; i < 4; ++i) {
            ds[i] = dx[i];
            double acc = 0.0;
            for (std::size_t j = 0; j < 4; ++j) {
                acc += J[i][j] * s[4 + j];
            }
            ds[4 + i] = acc;
        }
    };
    State x;
    const double inv = 1.0 / std::sqrt(norm0);
    for (std::size_t i = 0; i < 4; ++i) {
        x[i] = state0[i];
        x[4 + i] = tangent0[i] * inv;
    }
    LyapunovEstimate out;
    double log_sum = 0.0;
    double t = 0.0;
    while (t < eta_span) {
        const double next = std::min(eta_span, t + renorm_interval);
        adaptive<8>(system, x, t, {next}, options, false, [](double, const State&) {});
        double norm = 0.0;
        for (std::size_t i = 4; i < 8; ++i) {
            norm += x[i] * x[i];
        }
        norm = std::sqrt(norm);
        log_sum += std::log(norm);
        for (std::size_t i = 4; i < 8; ++i) {
            x[i] /= norm;
        }
        t = next;
        out.trace.emplace_back(t, log_sum / t);
    }
    out.exponent = log_sum / eta_span;
    return out;
}

} // namespace frwgalois
