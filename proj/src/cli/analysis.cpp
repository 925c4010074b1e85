#include "frwgalois/cli/analysis.hpp"

#include "frwgalois/elliptic/weierstrass.hpp"
#include "frwgalois/linode/linode.hpp"
#include "frwgalois/models/models.hpp"

namespace frwgalois {

namespace {

std::string str(const Rational& r) { return r.to_string(); }

Rational constant_of(const ParamRational& r, const char* what)
{
    const auto c = r.constant_value();
    if (!c) {
        throw std::logic_error(std::string(what) + " is not a number: " + r.to_string());
    }
    return *c;
}

CanonicalSummary summarize(const CanonicalODE& c)
{
    CanonicalSummary s;
    s.family = to_string(c.family);
    for (const auto& [name, value] : c.parameters) {
        s.parameters[name] = value.to_string();
    }
    for (const auto& e : c.exponents) {
        s.exponents.push_back(e.to_string());
    }
    if (!c.change_of_variables.empty()) {
        s.parameters["change_of_variables"] = c.change_of_variables;
    }
    return s;
}

void check_k(long k)
{
    if (k < -1 || k > 1) {
        throw AnalysisInputError("k must be -1, 0 or 1");
    }
}

std::string scope_of(const EnergySpec& energy, long k)
{
    switch (energy.kind) {
    case EnergySpec::Kind::Generic: return scope::kGenericEnergy;
    case EnergySpec::Kind::Zero: return k == 0 ? "E=k=0" : scope::kZeroEnergy;
    case EnergySpec::Kind::Value: return "E=" + energy.value.to_string();
    }
    return scope::kAll;
}

Verdict reduction_notice(const EnergySpec& energy, const char* theorem_id)
{
    Verdict v;
    v.status = VerdictStatus::CandidateOpen;
    v.scope = scope_of(energy, 0);
    v.criterion = "E = k = 0: reduces to the planar (alpha, h) system";
    v.theorem = theorem_id;
    return v;
}

/// Lambda = 0: Whittaker at E = 0, Kovacic necessary conditions otherwise.
Verdict minimal_lambda_zero(AnalysisReport& report, const HamiltonianModel& model, long k, const EnergySpec& energy)
{
    const auto nve = normal_variational_equation(variational_equations(model, BranchId::EmptyUniverse));
    Verdict v;
    v.scope = scope_of(energy, k);
    v.theorem = theorem::kMinimalLambdaZero;
    v.integral_class = "rational";
    if (energy.is_zero() && k == 0) {
        report.flags.emplace_back("the particular solution is an equilibrium");
        return reduction_notice(energy, theorem::kMinimalLambdaZero);
    }
    report.trail.emplace_back("z = q");
    if (energy.is_zero()) {
        const LinearODE2 ode = algebraize(nve, Substitution::identity(), ParamPoly(0));
        const CanonicalODE c = recognize(ode);
        report.canonical = summarize(c);
        if (c.family != CanonicalFamily::Whittaker) {
            throw std::logic_error("expected a Whittaker equation, got " + to_string(c.family));
        }
        report.trail.emplace_back("w = z^(3/2) x, s = 2 m z / sqrt(k)");
        const Rational kappa2 = constant_of(c.parameters.at("kappa_squared"), "kappa^2");
        const Rational mu2 = constant_of(c.parameters.at("mu_squared"), "mu^2");
        v.certificate["kappa_squared"] = str(kappa2);
        v.certificate["mu_squared"] = str(mu2);
        if (whittaker_solvable_squares(kappa2, mu2)) {
            v.status = VerdictStatus::CandidateOpen;
            v.criterion = "Whittaker equation with Liouvillian solutions";
        } else {
            v.status = VerdictStatus::NonIntegrable;
            v.criterion = "Whittaker: kappa + mu - 1/2 and kappa - mu - 1/2 are not integers of opposite sign";
        }
        return v;
    }
    std::optional<ParamPoly> value;
    if (energy.kind == EnergySpec::Kind::Value) {
        value = ParamPoly(energy.value);
    }
    const LinearODE2 ode = algebraize(nve, Substitution::identity(), value);
    report.canonical = CanonicalSummary{"Raw", {{"equation", ode.to_string()}}, {}};
    const KovacicReport kovacic = kovacic_necessary(ode);
    bool any = false;
    for (const auto& c : kovacic.cases) {
        v.certificate["kovacic_case_" + std::to_string(c.id)] = c.possible ? "possible" : c.reason;
        any = any || c.possible;
    }
    if (any) {
        v.status = VerdictStatus::CandidateOpen;
        v.criterion = "a Kovacic case survives the necessary conditions";
    } else {
        v.status = VerdictStatus::NonIntegrable;
        v.criterion = "Kovacic: no case admits a Liouvillian solution";
    }
    return v;
}

Verdict minimal_zero_energy(AnalysisReport& report, const HamiltonianModel& scaled, long k, const EnergySpec& energy)
{
    if (k == 0) {
        return reduction_notice(energy, theorem::kMinimalZero);
    }
    const auto nve = normal_variational_equation(variational_equations(scaled, BranchId::EmptyUniverse));
    report.trail.emplace_back("z = q^2 / k");
    const LinearODE2 ode = algebraize(nve, Substitution::square(ParamRational(Rational(1, k))), ParamPoly(0));
    const CanonicalODE c = recognize(ode);
    report.canonical = summarize(c);
    if (c.family != CanonicalFamily::RiemannP || c.exponents.size() != 3) {
        throw std::logic_error("expected a Riemann P equation, got " + to_string(c.family));
    }
    Verdict v;
    v.scope = scope_of(energy, k);
    v.theorem = theorem::kMinimalZero;
    std::array<Surd, 3> diffs;
    for (std::size_t i = 0; i < 3; ++i) {
        const auto d = exponent_difference(c.exponents[i]);
        if (!d) {
            throw std::logic_error("non-numeric exponent difference");
        }
        diffs[i] = *d;
        v.certificate["exponent_difference_" + std::to_string(i)] = d->to_string();
    }
    const KimuraResult kimura = kimura_solvable(diffs[0], diffs[1], diffs[2]);
    if (kimura.solvable) {
        v.status = VerdictStatus::CandidateOpen;
        v.criterion = "Kimura conditions met";
        v.certificate["kimura"] = kimura.detail;
    } else {
        v.status = VerdictStatus::NonIntegrable;
        v.criterion = "Kimura: 9 - 4b is not an odd square";
    }
    return v;
}

Verdict minimal_lame(AnalysisReport& report, const HamiltonianModel& scaled, long k, const Rational& Lambda,
                     const EnergySpec& energy, const MinimalOptions& options)
{
    Verdict v;
    v.scope = scope_of(energy, k);
    v.theorem = theorem::kMinimalGeneric;
    // Scaled energy E Lambda of the rescaled particular solution.
    std::optional<Rational> scaled_energy;
    if (energy.kind == EnergySpec::Kind::Value) {
        scaled_energy = energy.value * Lambda;
    }
    const ParamPoly E = scaled_energy ? ParamPoly(*scaled_energy) : ParamPoly::param("E");
    const auto inv = invariants_minimal_symbolic();
    const std::map<std::string, ParamPoly> values = {{"k", ParamPoly(k)}, {"E", E}};
    const ParamPoly g2 = inv.g2.substitute(values);
    const ParamPoly g3 = inv.g3.substitute(values);
    report.trail.emplace_back("q^2 = wp/2 + k/3");
    if ((g2.pow(3) - (g3 * g3).scaled(Rational(27))).is_zero()) {
        v.status = VerdictStatus::Degenerate;
        v.criterion = "vanishing discriminant: the particular solution is not elliptic";
        return v;
    }
    const auto nve = normal_variational_equation(variational_equations(scaled, BranchId::EmptyUniverse));
    const CanonicalODE c = recognize(nve, E);
    report.canonical = summarize(c);
    if (c.family != CanonicalFamily::Lame) {
        throw std::logic_error("expected a Lame equation, got " + to_string(c.family));
    }
    const Rational A = constant_of(c.parameters.at("A"), "A");
    const ParamPoly B(constant_of(c.parameters.at("B"), "B"));
    report.canonical->parameters["g2"] = g2.to_string();
    report.canonical->parameters["g3"] = g3.to_string();
    const LameClassification lame = lame_classify(A, B, g2, g3);
    v.certificate["lame_case"] = to_string(lame.kind);
    if (lame.n) {
        v.certificate["n"] = str(*lame.n);
    }
    switch (lame.kind) {
    case LameKind::NotSolvable:
        v.status = VerdictStatus::NonIntegrable;
        v.criterion = "Lame equation outside the Hermite, Brioschi and Baldassarri cases";
        return v;
    case LameKind::Hermite: {
        const long n = *lame.n->to_long();
        if (!options.hve) {
            v.status = VerdictStatus::CandidateOpen;
            v.criterion = "Lame-Hermite case; higher variational equations not run";
            v.theorem = theorem::kMinimalConjecture;
            return v;
        }
        HveParameters params;
        params.k = Rational(k);
        params.E = scaled_energy;
        report.trail.emplace_back("higher variational equations, w1 = (0, 0, v4, v4')");
        const auto obstruction = log_obstruction(n, params, options.hve_max_order);
        if (!obstruction) {
            v.status = VerdictStatus::CandidateOpen;
            v.criterion = "no logarithm up to order " + std::to_string(options.hve_max_order);
            v.theorem = theorem::kMinimalConjecture;
            return v;
        }
        v.status = VerdictStatus::NonIntegrable;
        v.criterion = "logarithm in w^(" + std::to_string(obstruction->order) + ")";
        v.certificate["hve_order"] = std::to_string(obstruction->order);
        v.certificate["hve_component"] = std::to_string(obstruction->component);
        v.certificate["hve_residue"] = obstruction->residue.to_string();
        v.theorem = theorem::kMinimalConjecture;
        return v;
    }
    case LameKind::Brioschi:
        v.certificate["l"] = std::to_string(lame.l);
        v.certificate["brioschi_determinant"] = lame.brioschi_value.to_string();
        if (lame.brioschi_value.is_zero()) {
            v.status = VerdictStatus::CandidateOpen;
            v.criterion = "Brioschi determinant vanishes";
        } else {
            v.status = VerdictStatus::NonIntegrable;
            v.criterion = scaled_energy ? "Brioschi determinant is nonzero at this energy"
                                        : "Brioschi determinant vanishes at finitely many energies only";
        }
        return v;
    case LameKind::BaldassarriCandidate:
        if (lame.j) {
            v.certificate["j"] = lame.j->to_string();
        }
        if (k != 0 && !scaled_energy) {
            v.status = VerdictStatus::NonIntegrable;
            v.criterion = "Dwork: j varies with the energy, finitely many (j, B) pairs";
        } else {
            v.status = VerdictStatus::CandidateOpen;
            v.criterion = "Baldassarri case candidate";
        }
        return v;
    }
    return v;
}

} // namespace

EnergySpec EnergySpec::parse(std::string_view text)
{
    EnergySpec e;
    if (text == "generic") {
        return e;
    }
    try {
        e.value = Rational::parse(text);
    } catch (const std::exception&) {
        throw AnalysisInputError("energy must be 'generic', '0' or a rational p/q, got '" + std::string(text) + "'");
    }
    e.kind = e.value.is_zero() ? Kind::Zero : Kind::Value;
    return e;
}

std::string EnergySpec::to_string() const
{
    switch (kind) {
    case Kind::Generic: return "generic";
    case Kind::Zero: return "0";
    case Kind::Value: return value.to_string();
    }
    return "generic";
}

AnalysisReport analyze_minimal(long k, const Rational& Lambda, const Rational& m2, const EnergySpec& energy,
                               const MinimalOptions& options)
{
    check_k(k);
    AnalysisReport report;
    report.command = "analyze-minimal";
    report.model = to_string(ModelId::Minimal);
    report.parameters = {{"k", std::to_string(k)}, {"Lambda", str(Lambda)}, {"m2", str(m2)}};
    report.energy = energy.to_string();
    const ModelParameters params = ModelParameters::numeric(k, Lambda, Rational(0), m2);
    const HamiltonianModel model = build_model(ModelId::Minimal, params);
    report.trail.emplace_back("particular solution " + to_string(BranchId::EmptyUniverse) + ": q2 = p2 = 0");
    report.flags = model.flags;

    if (m2.is_zero()) {
        Verdict v;
        v.status = VerdictStatus::Integrable;
        v.scope = scope::kAll;
        v.criterion = "massless field: separable, p2 is a first integral";
        report.verdicts.push_back(v);
        return report;
    }
    if (Lambda.is_zero()) {
        report.verdicts.push_back(minimal_lambda_zero(report, model, k, energy));
        return report;
    }
    const HamiltonianModel scaled = build_model(ModelId::MinimalScaled, params);
    report.trail.emplace_back("rescaling by Lambda, b = m2 / Lambda = " + str(m2 / Lambda));
    if (energy.is_zero()) {
        report.verdicts.push_back(minimal_zero_energy(report, scaled, k, energy));
    } else {
        report.verdicts.push_back(minimal_lame(report, scaled, k, Lambda, energy, options));
    }
    return report;
}

AnalysisReport analyze_conformal(long k, const Rational& Lambda, const Rational& lambda, const Rational& m2,
                                 const EnergySpec& energy)
{
    check_k(k);
    AnalysisReport report;
    report.command = "analyze-conformal";
    report.model = to_string(ModelId::Conformal);
    report.parameters = {{"k", std::to_string(k)}, {"Lambda", str(Lambda)}, {"lambda", str(lambda)}, {"m2", str(m2)}};
    report.energy = energy.to_string();
    const HamiltonianModel model = build_model(ModelId::Conformal, ModelParameters::numeric(k, Lambda, lambda, m2));
    report.flags = model.flags;

    if (m2.is_zero()) {
        Verdict v;
        v.status = VerdictStatus::Integrable;
        v.scope = scope::kAll;
        v.criterion = "massless field: two decoupled one-dimensional systems";
        report.verdicts.push_back(v);
        return report;
    }
    if (energy.is_zero()) {
        report.trail.emplace_back("invariant planes Pi1, Pi2, Pi3 of the rotated model");
        report.trail.emplace_back("z = q^2");
        Verdict v = zero_energy_verdict(k, Lambda, lambda, m2);
        v.scope = scope_of(energy, k);
        v.theorem = theorem::kConformalZero;
        report.verdicts.push_back(v);
        return report;
    }
    if (energy.kind == EnergySpec::Kind::Value) {
        report.flags.emplace_back("fixed nonzero energy analysed through the generic-energy criteria");
    }
    report.trail.emplace_back("Darboux points of the quartic part");
    Verdict v = homogeneous_verdict(Lambda, lambda, m2);
    v.scope = scope_of(energy, k);
    v.theorem = theorem::kConformalGeneric;
    v.integral_class = k == 0 ? "meromorphic" : "rational";
    const auto known = known_integrable_lookup(k, Lambda, lambda, m2);
    if (known) {
        v.certificate["table_case"] = std::to_string(known->row);
        v.certificate["integral_verified"] = known->verified ? "true" : "false";
    }
    if (v.status == VerdictStatus::Integrable && k != 0 && !(known && known->row <= 2)) {
        v.status = VerdictStatus::NonIntegrable;
        v.criterion = "the V5 and V6 families forbid integrability for k^2 = 1";
    } else if (v.status == VerdictStatus::Integrable) {
        v.criterion = "known first integral";
    }
    report.verdicts.push_back(v);
    return report;
}

std::optional<IntegralCheck> verify_integral(long k, const Rational& Lambda, const Rational& lambda, const Rational& m2)
{
    check_k(k);
    const auto known = known_integrable_lookup(k, Lambda, lambda, m2);
    if (!known) {
        return std::nullopt;
    }
    IntegralCheck c;
    c.row = known->row;
    c.swapped = known->swapped;
    c.parameters = {{"k", std::to_string(k)}, {"Lambda", str(Lambda)}, {"lambda", str(lambda)}, {"m2", str(m2)}};
    const HamiltonianModel model = build_model(ModelId::Conformal, ModelParameters::numeric(k, Lambda, lambda, m2));
    c.hamiltonian_matches = known->hamiltonian == model.hamiltonian_numerator;
    c.bracket_vanishes = verify_first_integral(model.hamiltonian_numerator, known->first_integral);
    const HamiltonianModel perturbed =
        build_model(ModelId::Conformal, ModelParameters::numeric(k, Lambda, lambda, m2 + Rational(1)));
    c.perturbed_bracket_vanishes = verify_first_integral(perturbed.hamiltonian_numerator, known->first_integral);
    return c;
}

std::vector<IntegralCheck> verify_table_integrals()
{
    const std::array<std::array<long, 4>, 4> rows = {{{1, 1, 1, -3}, {1, 1, 1, -1}, {0, 16, 1, -6}, {0, 8, 1, -3}}};
    std::vector<IntegralCheck> out;
    for (const auto& r : rows) {
        out.push_back(*verify_integral(r[0], Rational(r[1]), Rational(r[2]), Rational(r[3])));
    }
    return out;
}

} // namespace frwgalois
