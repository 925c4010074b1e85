#pragma once

#include "frwgalois/models/models.hpp"

#include <array>
#include <stdexcept>
#include <string>
#include <vector>

namespace frwgalois {

/// (q1, p1, q2, p2).
using PhaseState = std::array<double, 4>;

class DynamicsError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// The trajectory approached a pole of the vector field (|q| below threshold).
class PoleError : public DynamicsError {
public:
    using DynamicsError::DynamicsError;
};

inline constexpr double kScaleFactorThreshold = 1e-8;

struct IntegrationOptions {
    double rel_tol = 1e-12;
    double abs_tol = 1e-12;
    /// Number of equally spaced output intervals; 0 records every accepted step.
    int samples = 0;
    double initial_step = 1e-3;
    /// Steps below this size abort with DynamicsError.
    double min_step = 1e-14;
};

struct StepStatistics {
    long accepted = 0;
    long rejected = 0;
    double min_step = 0.0;
    double max_step = 0.0;
};

struct Trajectory {
    std::vector<double> times;
    std::vector<PhaseState> states;
    /// H evaluated on each stored state.
    std::vector<double> energy;
    IntegrationOptions options;
    StepStatistics steps;

    [[nodiscard]] double max_energy_drift() const;
};

/// Hamiltonian vector field of a model with numeric parameters, compiled to
/// monomial lists over (q1, p1, q2, p2).
class PhaseFlow {
public:
    explicit PhaseFlow(const HamiltonianModel& model);

    void rhs(const PhaseState& x, PhaseState& dx) const;
    [[nodiscard]] double energy(const PhaseState& x) const;
    /// d(rhs_i)/d(x_j).
    [[nodiscard]] std::array<std::array<double, 4>, 4> jacobian(const PhaseState& x) const;
    /// Throws PoleError when a coordinate that appears in a denominator is below the threshold.
    void check_poles(const PhaseState& x) const;

    /// Evaluates a polynomial in the phase variables (numeric parameters only).
    [[nodiscard]] static double evaluate(const PhasePoly& f, const PhaseState& x);

private:
    struct Monomial {
        double coefficient;
        std::array<int, 4> exponents;
    };
    using Compiled = std::vector<Monomial>;

    static Compiled compile(const PhasePoly& f, double scale);
    static double eval(const Compiled& f, const PhaseState& x);

    std::array<Compiled, 4> field_;
    std::array<std::array<Compiled, 4>, 4> jacobian_;
    Compiled hamiltonian_;
    std::array<bool, 4> pole_ = {false, false, false, false};
};

[[nodiscard]] Trajectory integrate(const HamiltonianModel& model, const PhaseState& state0, double eta0, double eta1,
                                   const IntegrationOptions& options = {});

/// Values of a first integral along a trajectory.
[[nodiscard]] std::vector<double> integral_series(const Trajectory& trajectory, const PhasePoly& integral);

/// Reduced E = k = 0 minimal dynamics in cosmological time:
/// dalpha/dt = sqrt(2) m + 3 h sin(alpha) cos(alpha), dh/dt = -3 (h^2 - 2 Lambda) cos(alpha)^2.
struct ReducedTrajectory {
    std::vector<double> times;
    std::vector<double> alpha;
    std::vector<double> h;
    StepStatistics steps;
};

struct ReducedPoint {
    double alpha = 0.0;
    double h = 0.0;
};

/// Integrates the reduced system and reports the state at every entry of `output_times`
/// (increasing, starting at t0); throws DynamicsError when h^2 <= 2 Lambda initially.
[[nodiscard]] ReducedTrajectory reduce_and_integrate(double Lambda, double m2, const ReducedPoint& state0, double t0,
                                                     const std::vector<double>& output_times, double tol = 1e-12);

/// (alpha, h) of a full Minimal state with k = 0 on the zero-energy level.
[[nodiscard]] ReducedPoint reduce_state(double Lambda, double m2, const PhaseState& x);

/// Full Minimal state (q1, p1, q2, p2) from a, phi, omega and the sign of h on E = 0.
[[nodiscard]] PhaseState minimal_zero_energy_state(double Lambda, double m2, double a, double phi, double omega,
                                                   bool expanding);

/// Full Minimal trajectory together with cosmological time t(eta) = t0 + int a deta.
struct CosmologicalTrajectory {
    Trajectory trajectory;
    std::vector<double> cosmological_time;
};

[[nodiscard]] CosmologicalTrajectory integrate_with_cosmological_time(const HamiltonianModel& model, const PhaseState& state0,
                                                                      double eta0, double eta1, const IntegrationOptions& options);

/// A massless trajectory started on a closed-form solution and compared with it:
/// q1^2 against a^2 and, for AppendixB, q2^2 against phi^2.
struct OracleComparison {
    Trajectory trajectory;
    std::vector<double> first_oracle;
    std::vector<double> second_oracle;
    /// max |q^2 - v| / max(1, |v|) over the stored states.
    double max_error = 0.0;
};

/// Minimal model, m2 = 0: energy E = H, J = p2^2 / 2, q2(eta0) = `q2`.
[[nodiscard]] OracleComparison compare_appendix_a(double k, double Lambda, double E, double J, double q2, double eta0,
                                                  double eta1, const IntegrationOptions& options = {});

/// Conformal model, m2 = 0: E1 and E2 are the energies of the (q1, p1) and (q2, p2) parts.
[[nodiscard]] OracleComparison compare_appendix_b(double k, double Lambda, double lambda, double E1, double E2,
                                                  double eta0, double eta1, const IntegrationOptions& options = {});

struct LyapunovEstimate {
    double exponent = 0.0;
    /// (eta, running estimate) after each renormalization.
    std::vector<std::pair<double, double>> trace;
};

/// Maximal Lyapunov exponent by tangent-vector renormalization every `renorm_interval`.
[[nodiscard]] LyapunovEstimate mle_estimate(const HamiltonianModel& model, const PhaseState& state0, double eta_span,
                                            double renorm_interval, const PhaseState& tangent0 = {1.0, 0.0, 0.0, 0.0},
                                            const IntegrationOptions& options = {});

} // namespace frwgalois
