#include "frwgalois/models/models.hpp"

#include <complex>

namespace frwgalois {

namespace {

ParamPoly half(const ParamPoly& p) { return p.scaled(Rational(1, 2)); }
ParamPoly quarter(const ParamPoly& p) { return p.scaled(Rational(1, 4)); }

bool is_numeric_zero(const ParamPoly& p) { return p.is_zero(); }

void check_k(const ParamPoly& k)
{
    if (auto v = k.constant_value()) {
        if (!(*v == Rational(-1) || v->is_zero() || *v == Rational(1))) {
            throw ModelError("k must be -1, 0 or 1, got " + v->to_string());
        }
    }
}

/// Substitution x -> i^phase * target for each phase variable.
struct PhasedTarget {
    std::string target;
    int phase = 0;
};

PhasePoly phased_substitution(const PhasePoly& h, const std::map<std::string, PhasedTarget>& map)
{
    const auto& table = h.table();
    PhasePoly out;
    std::vector<std::pair<int, PhasePoly>> phases;
    for (const auto& [e, c] : h.terms()) {
        int phase = 0;
        PhasePoly term(c);
        for (std::size_t i = 0; i < e.size(); ++i) {
            if (e[i] == 0) {
                continue;
            }
            const Symbol& s = (*table)[i];
            auto it = map.find(s.name);
            ParamPoly base = ParamPoly::symbol(s.name, s.kind, s.pair);
            if (it != map.end()) {
                const Symbol target = [&] {
                    const auto& v = phase_variables();
                    for (const ParamPoly* cand : {&v.q1, &v.q2, &v.p1, &v.p2}) {
                        const Symbol& cs = (*cand->table())[0];
                        if (cs.name == it->second.target) {
                            return cs;
                        }
                    }
                    throw std::logic_error("unknown substitution target " + it->second.target);
                }();
                base = ParamPoly::symbol(target.name, target.kind, target.pair);
                phase += it->second.phase * e[i];
            }
            term *= e[i] > 0 ? base.pow(static_cast<unsigned>(e[i])) : base.monomial_inverse().pow(static_cast<unsigned>(-e[i]));
        }
        phases.emplace_back(((phase % 4) + 4) % 4, std::move(term));
    }
    // A common factor of i is dropped: first integrals are defined up to scale.
    const int parity = phases.empty() ? 0 : phases.front().first % 2;
    for (auto& [phase, term] : phases) {
        if (phase % 2 != parity) {
            throw std::logic_error("phased substitution produced a complex polynomial");
        }
        out += phase - parity == 2 ? -term : term;
    }
    return out;
}

ParamRational velocity(const ParamPoly& c0E, const ParamPoly& c2, const ParamRational& c4)
{
    const ParamPoly q = ParamPoly::param("q");
    const ParamPoly E = ParamPoly::param("E");
    return ParamRational(c0E * E + c2 * q * q) + c4 * ParamRational(q.pow(4));
}

ParticularBranch axis_branch(BranchId id, int moving, ParamRational velocity_squared, std::string convention)
{
    const auto& v = phase_variables();
    ParticularBranch b;
    b.id = id;
    const ParamPoly& q_other = moving == 1 ? v.q2 : v.q1;
    const ParamPoly& p_other = moving == 1 ? v.p2 : v.p1;
    b.constraints = {q_other, p_other};
    b.solved_form = {{moving == 1 ? "q2" : "q1", ParamPoly()}, {moving == 1 ? "p2" : "p1", ParamPoly()}};
    b.coordinate = moving == 1 ? "q1" : "q2";
    b.velocity_squared = std::move(velocity_squared);
    b.energy_convention = std::move(convention);
    return b;
}

} // namespace

std::string to_string(ModelId id)
{
    switch (id) {
    case ModelId::Minimal: return "Minimal";
    case ModelId::MinimalScaled: return "MinimalScaled";
    case ModelId::Conformal: return "Conformal";
    case ModelId::ConformalRotated: return "ConformalRotated";
    case ModelId::ConformalPi3: return "ConformalPi3";
    }
    return "?";
}

std::string to_string(BranchId id)
{
    switch (id) {
    case BranchId::EmptyUniverse: return "EmptyUniverse";
    case BranchId::Pi1: return "Pi1";
    case BranchId::Pi2: return "Pi2";
    case BranchId::Pi3: return "Pi3";
    }
    return "?";
}

std::string to_string(TransformId id)
{
    switch (id) {
    case TransformId::SwapLambdas: return "SwapLambdas";
    case TransformId::FlipK: return "FlipK";
    case TransformId::BlockB: return "BlockB";
    }
    return "?";
}

ModelId parse_model_id(std::string_view name)
{
    for (ModelId id : {ModelId::Minimal, ModelId::MinimalScaled, ModelId::Conformal, ModelId::ConformalRotated,
                       ModelId::ConformalPi3}) {
        if (to_string(id) == name) {
            return id;
        }
    }
    throw ModelError("unknown model " + std::string(name));
}

ModelParameters ModelParameters::numeric(long k, const Rational& Lambda, const Rational& lambda, const Rational& m2)
{
    ModelParameters p;
    p.k = ParamPoly(k);
    p.Lambda = ParamPoly(Lambda);
    p.lambda = ParamPoly(lambda);
    p.m2 = ParamPoly(m2);
    return p;
}

const PhaseVariables& phase_variables()
{
    static const PhaseVariables vars;
    return vars;
}

std::array<PhasePoly, 4> HamiltonianModel::equations_of_motion() const
{
    const auto& v = phase_variables();
    return {poisson_bracket(v.q1, hamiltonian_numerator), poisson_bracket(v.p1, hamiltonian_numerator),
            poisson_bracket(v.q2, hamiltonian_numerator), poisson_bracket(v.p2, hamiltonian_numerator)};
}

const ParticularBranch& HamiltonianModel::branch(BranchId id) const
{
    for (const auto& b : branches) {
        if (b.id == id) {
            return b;
        }
    }
    throw ModelError("model " + to_string(this->id) + " has no branch " + to_string(id));
}

bool HamiltonianModel::has_branch(BranchId id) const
{
    for (const auto& b : branches) {
        if (b.id == id) {
            return true;
        }
    }
    return false;
}

ParamRational reduce_radicals(const ParamPoly& p, const std::vector<RadicalSymbol>& radicals)
{
    ParamRational out(p);
    for (const auto& r : radicals) {
        const ParamRational num = [&] {
            ParamRational acc;
            for (const auto& [e, c] : out.numerator().coefficients_in(r.name)) {
                const int half_e = e >= 0 ? e / 2 : -((-e + 1) / 2);
                const int rest = e - 2 * half_e;
                ParamRational term = ParamRational(c) * r.square.pow(half_e);
                if (rest == 1) {
                    term *= ParamRational(ParamPoly::param(r.name));
                }
                acc += term;
            }
            return acc;
        }();
        out = num / ParamRational(out.denominator());
    }
    return out;
}

HamiltonianModel build_model(ModelId id, const ModelParameters& params)
{
    check_k(params.k);
    const auto& v = phase_variables();
    const ParamPoly& k = params.k;
    HamiltonianModel m;
    m.id = id;
    m.parameters = params;
    m.constraints.emplace_back("k in {-1, 0, 1}");
    m.constraints.emplace_back("omega = 0");

    switch (id) {
    case ModelId::Minimal: {
        m.hamiltonian_numerator = half(-v.p1 * v.p1 + v.p2 * v.p2 * v.q1.monomial_inverse().pow(2)) - k * v.q1 * v.q1 +
                                  params.Lambda * v.q1.pow(4) + params.m2 * v.q2 * v.q2 * v.q1.pow(4);
        m.constraints.emplace_back("q1 != 0 (pole of the kinetic term)");
        if (is_numeric_zero(params.m2)) {
            m.flags.emplace_back("massless: separable, solved by Weierstrass quadrature");
        }
        m.branches.push_back(axis_branch(BranchId::EmptyUniverse, 1,
                                         velocity(ParamPoly(2), k.scaled(Rational(-2)), ParamRational(params.Lambda.scaled(Rational(2)))),
                                         "E = qdot^2/2 + k q^2 - Lambda q^4, equal to -H on the branch"));
        break;
    }
    case ModelId::MinimalScaled: {
        if (auto L = params.Lambda.constant_value(); L && L->is_zero()) {
            throw ModelError("MinimalScaled requires Lambda != 0");
        }
        const ParamPoly b = [&] {
            auto L = params.Lambda.constant_value();
            auto M = params.m2.constant_value();
            if (L && M) {
                return ParamPoly(*M / *L);
            }
            return ParamPoly::param("b");
        }();
        m.constraints.emplace_back("Lambda != 0");
        m.constraints.emplace_back("q1 != 0 (pole of the kinetic term)");
        m.hamiltonian_numerator = half(-v.p1 * v.p1 + v.p2 * v.p2 * v.q1.monomial_inverse().pow(2)) - k * v.q1 * v.q1 + v.q1.pow(4) +
                                  b * v.q1.pow(4) * v.q2 * v.q2;
        if (is_numeric_zero(b)) {
            m.flags.emplace_back("massless: separable, solved by Weierstrass quadrature");
        }
        m.branches.push_back(axis_branch(BranchId::EmptyUniverse, 1,
                                         velocity(ParamPoly(2), k.scaled(Rational(-2)), ParamRational(2)),
                                         "E = qdot^2/2 + k q^2 - q^4 (scaled), equal to -H on the branch"));
        break;
    }
    case ModelId::Conformal: {
        m.hamiltonian_numerator = half(-v.p1 * v.p1 + v.p2 * v.p2) + half(k * (-v.q1 * v.q1 + v.q2 * v.q2) + params.m2 * v.q1 * v.q1 * v.q2 * v.q2) +
                                  quarter(params.Lambda * v.q1.pow(4) + params.lambda * v.q2.pow(4));
        if (is_numeric_zero(params.m2)) {
            m.flags.emplace_back("massless: decouples into two one-dimensional systems");
        }
        m.branches.push_back(axis_branch(BranchId::Pi1, 1, velocity(ParamPoly(-2), -k, ParamRational(half(params.Lambda))),
                                         "E = H = -qdot^2/2 - k q^2/2 + Lambda q^4/4"));
        m.branches.push_back(axis_branch(BranchId::Pi2, 2, velocity(ParamPoly(2), -k, ParamRational(-half(params.lambda))),
                                         "E = H = qdot^2/2 + k q^2/2 + lambda q^4/4"));
        break;
    }
    case ModelId::ConformalRotated: {
        m.hamiltonian_numerator = half(v.p1 * v.p1 + v.p2 * v.p2) + half(k * (v.q1 * v.q1 + v.q2 * v.q2) - params.m2 * v.q1 * v.q1 * v.q2 * v.q2) +
                                  quarter(params.Lambda * v.q1.pow(4) + params.lambda * v.q2.pow(4));
        if (is_numeric_zero(params.m2)) {
            m.flags.emplace_back("massless: decouples into two one-dimensional systems");
        }
        m.branches.push_back(axis_branch(BranchId::Pi1, 1, velocity(ParamPoly(2), -k, ParamRational(-half(params.Lambda))),
                                         "E = H = qdot^2/2 + k q^2/2 + Lambda q^4/4"));
        m.branches.push_back(axis_branch(BranchId::Pi2, 2, velocity(ParamPoly(2), -k, ParamRational(-half(params.lambda))),
                                         "E = H = qdot^2/2 + k q^2/2 + lambda q^4/4"));
        const ParamPoly den = params.m2 + params.lambda;
        const AlphaQuantities aq = alpha_quantities(params);
        if (!den.is_zero() && !aq.alpha1.is_zero()) {
            ParticularBranch b;
            b.id = BranchId::Pi3;
            const ParamPoly alpha = ParamPoly::param("alpha");
            b.radicals.push_back({"alpha", ParamRational(params.m2 + params.Lambda, den)});
            b.constraints = {v.q2 - alpha * v.q1, v.p2 - alpha * v.p1};
            b.solved_form = {{"q2", alpha * v.q1}, {"p2", alpha * v.p1}};
            b.coordinate = "Q1";
            b.velocity_squared = velocity(ParamPoly(2), -k, -ParamRational(aq.alpha5, aq.alpha1.scaled(Rational(2))));
            b.energy_convention = "E = H; Q1 = -q1/b is the coordinate after the BlockB transform";
            m.branches.push_back(std::move(b));
        }
        break;
    }
    case ModelId::ConformalPi3: {
        HamiltonianModel rotated = build_model(ModelId::ConformalRotated, params);
        return canonical_transform(rotated, TransformId::BlockB);
    }
    }
    return m;
}

AlphaQuantities alpha_quantities(const ModelParameters& params)
{
    const ParamPoly& L = params.Lambda;
    const ParamPoly& l = params.lambda;
    const ParamPoly& m2 = params.m2;
    AlphaQuantities a;
    a.alpha1 = m2.scaled(Rational(2)) + l + L;
    a.alpha2 = (l * L).scaled(Rational(3)) + (m2 * (l + L)).scaled(Rational(2)) + m2 * m2;
    a.alpha3_squared = (l + m2) * (L + m2);
    a.alpha4 = l * l + L * L - l * L - m2 * m2;
    a.alpha5 = l * L - m2 * m2;
    if (!a.alpha1.is_zero()) {
        a.a_squared = ParamRational(m2 + L, a.alpha1);
        a.b_squared = ParamRational(m2 + l, a.alpha1);
    }
    return a;
}

namespace {

HamiltonianModel block_b(const HamiltonianModel& model)
{
    if (model.id != ModelId::ConformalRotated) {
        throw ModelError("BlockB applies to the ConformalRotated model");
    }
    const AlphaQuantities aq = alpha_quantities(model.parameters);
    if (aq.alpha1.is_zero()) {
        throw ModelError("BlockB requires alpha1 = 2 m2 + lambda + Lambda != 0");
    }
    const auto& v = phase_variables();
    const ParamPoly a = ParamPoly::param("a_B");
    const ParamPoly b = ParamPoly::param("b_B");
    // q = A Q, p = A P with A = [[-b, -a], [-a, b]] (A symmetric, A^2 = 1).
    const std::map<std::string, ParamPoly> sub = {
        {"q1", -b * v.q1 - a * v.q2},
        {"q2", -a * v.q1 + b * v.q2},
        {"p1", -b * v.p1 - a * v.p2},
        {"p2", -a * v.p1 + b * v.p2},
    };
    const PhasePoly h = model.hamiltonian_numerator.substitute(sub);
    const ParamPoly& L = model.parameters.Lambda;
    const ParamPoly& l = model.parameters.lambda;
    const ParamPoly& m2 = model.parameters.m2;
    const ParamPoly alpha3 = ParamPoly::param("alpha3");
    const ParamPoly A2 = m2 + L;
    const ParamPoly B2 = m2 + l;
    // alpha1^2 * H: a^i b^j -> A2^(i/2) B2^(j/2) alpha1^(2-(i+j)/2), odd-odd pairs carry alpha3.
    PhasePoly scaled;
    for (const auto& [i, ci] : h.coefficients_in("a_B")) {
        for (const auto& [j, cij] : ci.coefficients_in("b_B")) {
            if ((i + j) % 2 != 0 || (i % 2) != (j % 2) || i + j > 4) {
                throw std::logic_error("unexpected a/b monomial in BlockB expansion");
            }
            ParamPoly factor = aq.alpha1.pow(static_cast<unsigned>(2 - (i + j) / 2));
            if (i % 2 == 0) {
                factor *= A2.pow(static_cast<unsigned>(i / 2)) * B2.pow(static_cast<unsigned>(j / 2));
            } else {
                factor *= alpha3 * A2.pow(static_cast<unsigned>((i - 1) / 2)) * B2.pow(static_cast<unsigned>((j - 1) / 2));
            }
            scaled += cij * factor;
        }
    }
    auto reduced = scaled.divide_exact(aq.alpha1);
    HamiltonianModel out;
    out.id = ModelId::ConformalPi3;
    out.parameters = model.parameters;
    out.hamiltonian_numerator = reduced ? *reduced : scaled;
    out.hamiltonian_denominator = reduced ? aq.alpha1 : aq.alpha1 * aq.alpha1;
    out.radicals.push_back({"alpha3", ParamRational(aq.alpha3_squared)});
    out.constraints = model.constraints;
    out.constraints.emplace_back("alpha1 != 0");
    out.flags = model.flags;
    out.flags.emplace_back("coordinates (q1, q2, p1, p2) denote (Q1, Q2, P1, P2) after BlockB");
    ParticularBranch pi3 = axis_branch(BranchId::Pi3, 1,
                                       velocity(ParamPoly(2), -model.parameters.k,
                                                -ParamRational(aq.alpha5, aq.alpha1.scaled(Rational(2)))),
                                       "E = H = P1^2/2 + k Q1^2/2 + alpha5 Q1^4/(4 alpha1)");
    out.branches.push_back(std::move(pi3));
    return out;
}

} // namespace

HamiltonianModel canonical_transform(const HamiltonianModel& model, TransformId transform)
{
    switch (transform) {
    case TransformId::BlockB: return block_b(model);
    case TransformId::FlipK: {
        ModelParameters p = model.parameters;
        p.k = -p.k;
        HamiltonianModel out = build_model(model.id, p);
        out.flags.emplace_back("k sign flipped; equivalent up to q -> e^{i pi/4} q, p -> e^{-i pi/4} p with "
                               "(Lambda, lambda, m2) scaled by a common factor");
        return out;
    }
    case TransformId::SwapLambdas: {
        ModelParameters p = model.parameters;
        std::swap(p.Lambda, p.lambda);
        HamiltonianModel out = build_model(model.id, p);
        std::map<std::string, PhasedTarget> map;
        if (model.id == ModelId::Conformal) {
            map = {{"q1", {"q2", 1}}, {"q2", {"q1", 1}}, {"p1", {"p2", 3}}, {"p2", {"p1", 3}}};
        } else if (model.id == ModelId::ConformalRotated) {
            map = {{"q1", {"q2", 0}}, {"q2", {"q1", 0}}, {"p1", {"p2", 0}}, {"p2", {"p1", 0}}};
        } else {
            throw ModelError("SwapLambdas applies to the Conformal and ConformalRotated models");
        }
        const PhasePoly transformed = phased_substitution(model.hamiltonian_numerator, map);
        if (!(transformed == out.hamiltonian_numerator)) {
            throw std::logic_error("SwapLambdas image differs from the swapped model");
        }
        out.flags.emplace_back("Lambda and lambda interchanged by a canonical index swap");
        return out;
    }
    }
    return model;
}

bool branch_is_invariant(const HamiltonianModel& model, const ParticularBranch& branch)
{
    std::vector<RadicalSymbol> radicals = model.radicals;
    radicals.insert(radicals.end(), branch.radicals.begin(), branch.radicals.end());
    for (const PhasePoly& c : branch.constraints) {
        const PhasePoly dc = poisson_bracket(c, model.hamiltonian_numerator);
        const PhasePoly on_manifold = dc.substitute(branch.solved_form);
        if (!reduce_radicals(on_manifold, radicals).is_zero()) {
            return false;
        }
    }
    return true;
}

PhasePoly table_hamiltonian(int row)
{
    const auto& v = phase_variables();
    const ParamPoly k = ParamPoly::param("k");
    const ParamPoly m2 = ParamPoly::param("m2");
    const ParamPoly q1s = v.q1 * v.q1;
    const ParamPoly q2s = v.q2 * v.q2;
    const ParamPoly kinetic = half(v.p2 * v.p2 - v.p1 * v.p1);
    switch (row) {
    case 1:
        return kinetic + half(k * (q2s - q1s)) - (m2 * (q1s * q1s - q1s * q2s.scaled(Rational(6)) + q2s * q2s)).scaled(Rational(1, 12));
    case 2: return kinetic + half(k * (q2s - q1s)) - quarter(m2 * (q2s - q1s).pow(2));
    case 3:
        return kinetic - (m2 * (q1s * q1s).scaled(Rational(16)) - m2 * (q1s * q2s).scaled(Rational(12)) + m2 * q2s * q2s).scaled(Rational(1, 24));
    case 4:
        return kinetic - (m2 * (q1s * q1s).scaled(Rational(8)) - m2 * (q1s * q2s).scaled(Rational(6)) + m2 * q2s * q2s).scaled(Rational(1, 12));
    default: throw std::out_of_range("table rows are 1..4");
    }
}

PhasePoly table_first_integral(int row)
{
    const auto& v = phase_variables();
    const ParamPoly k = ParamPoly::param("k");
    const ParamPoly m2 = ParamPoly::param("m2");
    const ParamPoly q1s = v.q1 * v.q1;
    const ParamPoly q2s = v.q2 * v.q2;
    switch (row) {
    case 1: return v.p1 * v.p2 + (v.q1 * v.q2 * (m2 * (q2s - q1s) - k.scaled(Rational(3)))).scaled(Rational(1, 3));
    case 2: return v.q1 * v.p2 + v.q2 * v.p1;
    case 3: return (v.q1 * v.p2 + v.q2 * v.p1) * v.p2 + (m2 * v.q1 * q2s * (q2s - q1s.scaled(Rational(2)))).scaled(Rational(1, 6));
    case 4: {
        const ParamPoly bracket = (v.q1 * v.q2 * v.p1 * v.p2).scaled(Rational(4)) + q2s * v.p1 * v.p1 -
                                  (q2s - q1s.scaled(Rational(6))) * v.p2 * v.p2 +
                                  (m2 * q2s * (q2s - q1s.scaled(Rational(2))).pow(2)).scaled(Rational(1, 12));
        return v.p2.pow(4) + (m2 * q2s * bracket).scaled(Rational(1, 3));
    }
    default: throw std::out_of_range("table rows are 1..4");
    }
}

std::optional<KnownIntegrableCase> known_integrable_lookup(long k, const Rational& Lambda, const Rational& lambda,
                                                           const Rational& m2)
{
    if (m2.is_zero()) {
        return std::nullopt;
    }
    auto matches = [&](int row, const Rational& L, const Rational& l) {
        switch (row) {
        case 1: return L == l && m2 == Rational(-3) * L;
        case 2: return L == l && m2 == -L;
        case 3: return k == 0 && L == Rational(16) * l && m2 == Rational(-6) * l;
        case 4: return k == 0 && L == Rational(8) * l && m2 == Rational(-3) * l;
        default: return false;
        }
    };
    for (int row = 1; row <= 4; ++row) {
        for (bool swapped : {false, true}) {
            if (!matches(row, swapped ? lambda : Lambda, swapped ? Lambda : lambda)) {
                continue;
            }
            const std::map<std::string, ParamPoly> values = {{"k", ParamPoly(k)}, {"m2", ParamPoly(m2)}};
            KnownIntegrableCase c;
            c.row = row;
            c.swapped = swapped;
            c.hamiltonian = table_hamiltonian(row).substitute(values);
            c.first_integral = table_first_integral(row).substitute(values);
            if (swapped) {
                const std::map<std::string, PhasedTarget> map = {
                    {"q1", {"q2", 1}}, {"q2", {"q1", 1}}, {"p1", {"p2", 3}}, {"p2", {"p1", 3}}};
                c.hamiltonian = phased_substitution(c.hamiltonian, map);
                c.first_integral = phased_substitution(c.first_integral, map);
            }
            const HamiltonianModel model = build_model(ModelId::Conformal, ModelParameters::numeric(k, Lambda, lambda, m2));
            c.verified = c.hamiltonian == model.hamiltonian_numerator &&
                         poisson_bracket(model.hamiltonian_numerator, c.first_integral).is_zero();
            return c;
        }
    }
    return std::nullopt;
}

} // namespace frwgalois
