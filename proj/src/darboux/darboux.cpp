#include "frwgalois/darboux/darboux.hpp"

#include "frwgalois/models/models.hpp"

namespace frwgalois {

namespace {

void check_mass(const Rational& m2)
{
    if (m2.is_zero()) {
        throw DarbouxError("m2 must be nonzero");
    }
}

/// Square of a surd with a single radical part.
Rational square(const Surd& s)
{
    if (s.is_zero()) {
        return Rational(0);
    }
    if (s.parts().size() != 1) {
        throw DarbouxError("direction component with more than one radical");
    }
    const auto& [r, c] = *s.parts().begin();
    return c * c * Rational(r);
}

bool same_pair(const Rational& a, const Rational& b, const Rational& x, const Rational& y)
{
    return (a == x && b == y) || (a == y && b == x);
}

bool kimura_triangular(const Rational& lambda)
{
    const Surd diff = Surd::sqrt_of(Rational(1) + Rational(8) * lambda) * Rational(1, 2);
    return kimura_solvable(Surd(1), Surd(Rational(1, 2)), diff).solvable;
}

} // namespace

std::string to_string(DarbouxCase c)
{
    switch (c) {
    case DarbouxCase::FourSimple: return "FourSimple";
    case DarbouxCase::ThreeSimple: return "ThreeSimple";
    case DarbouxCase::TwoSimple: return "TwoSimple";
    case DarbouxCase::TriplePlusSimple: return "TriplePlusSimple";
    case DarbouxCase::Degenerate: return "Degenerate";
    }
    return "Degenerate";
}

std::string to_string(Equivalence e)
{
    switch (e) {
    case Equivalence::V3: return "V3";
    case Equivalence::V4: return "V4";
    case Equivalence::V5: return "V5";
    case Equivalence::V6: return "V6";
    }
    return "V3";
}

bool is_darboux_point(const Rational& Lambda, const Rational& lambda, const Rational& m2, const DarbouxPoint& p)
{
    if (p.gamma.is_zero() || (p.d1.is_zero() && p.d2.is_zero())) {
        return false;
    }
    const Rational d2sq = square(p.d2);
    // dV/dq1 = d1 (Lambda d1^2 - m2 d2^2), dV/dq2 = d2 (lambda d2^2 - m2 d1^2)
    const Rational g1 = p.d1 * (Lambda * p.d1 * p.d1 - m2 * d2sq);
    const Rational g2_over_d2 = lambda * d2sq - m2 * p.d1 * p.d1;
    return g1 == p.gamma * p.d1 && (p.d2.is_zero() || g2_over_d2 == p.gamma);
}

DarbouxReport darboux_points(const Rational& Lambda, const Rational& lambda, const Rational& m2)
{
    check_mass(m2);
    DarbouxReport report;
    // Directions solve d1 d2 [a d2^2 - c d1^2] = 0.
    const Rational a = lambda + m2;
    const Rational c = Lambda + m2;
    if (a.is_zero() && c.is_zero()) {
        // V = -m2 (q1^2 + q2^2)^2 / 4: every non-isotropic direction.
        report.stratum = DarbouxCase::Degenerate;
        report.equivalence = Equivalence::V3;
        return report;
    }
    auto add = [&](const Rational& d1, const Surd& d2, int multiplicity) {
        DarbouxPoint p;
        p.d1 = d1;
        p.d2 = d2;
        p.multiplicity = multiplicity;
        const Rational d2sq = square(d2);
        const Rational h11 = Rational(3) * Lambda * d1 * d1 - m2 * d2sq;
        const Rational h22 = Rational(3) * lambda * d2sq - m2 * d1 * d1;
        if (!d1.is_zero()) {
            p.gamma = Lambda * d1 * d1 - m2 * d2sq;
        } else {
            p.gamma = lambda * d2sq;
        }
        if (p.gamma.is_zero()) {
            return;
        }
        p.eigenvalue = (h11 + h22) / p.gamma - Rational(3);
        report.points.push_back(p);
    };
    add(Rational(1), Surd(0), c.is_zero() ? 3 : 1);
    add(Rational(0), Surd(1), a.is_zero() ? 3 : 1);
    if (!a.is_zero() && !c.is_zero()) {
        const Surd alpha = Surd::sqrt_of(c / a);
        add(Rational(1), alpha, 1);
        add(Rational(1), -alpha, 1);
    }

    int simple = 0;
    bool triple = false;
    for (const auto& p : report.points) {
        triple = triple || p.multiplicity == 3;
        simple += p.multiplicity == 1 ? 1 : 0;
    }
    if (triple) {
        report.stratum = DarbouxCase::TriplePlusSimple;
        report.equivalence = Equivalence::V3;
        return report;
    }
    switch (simple) {
    case 4: report.stratum = DarbouxCase::FourSimple; break;
    case 3: report.stratum = DarbouxCase::ThreeSimple; break;
    case 2: report.stratum = DarbouxCase::TwoSimple; break;
    default: report.stratum = DarbouxCase::Degenerate; break;
    }
    if (report.stratum == DarbouxCase::FourSimple) {
        const Rational third = -m2 / Rational(3), sixth = -m2 / Rational(6), eight = Rational(-8) * m2 / Rational(3);
        if (Lambda == third && lambda == third) {
            report.equivalence = Equivalence::V4;
        } else if (same_pair(Lambda, lambda, sixth, eight)) {
            report.equivalence = Equivalence::V5;
        } else if (same_pair(Lambda, lambda, third, eight)) {
            report.equivalence = Equivalence::V6;
        }
    }
    return report;
}

Verdict homogeneous_verdict(const Rational& Lambda, const Rational& lambda, const Rational& m2)
{
    const DarbouxReport report = darboux_points(Lambda, lambda, m2);
    Verdict v;
    v.scope = scope::kGenericEnergy;
    v.criterion = "Darboux points of the quartic part";
    v.certificate["darboux_case"] = to_string(report.stratum);
    v.certificate["darboux_points"] = std::to_string(report.points.size());
    if (report.equivalence) {
        v.certificate["equivalence"] = to_string(*report.equivalence);
    }
    for (std::size_t i = 0; i < report.points.size(); ++i) {
        v.certificate["eigenvalue_" + std::to_string(i + 1)] = report.points[i].eigenvalue.to_string();
    }
    const bool v3_integrable = report.equivalence == Equivalence::V3 && Lambda == -m2 && lambda == -m2;
    const bool integrable = v3_integrable || report.equivalence == Equivalence::V4 ||
                            report.equivalence == Equivalence::V5 || report.equivalence == Equivalence::V6;
    v.status = integrable ? VerdictStatus::Integrable : VerdictStatus::NonIntegrable;
    if (!integrable) {
        v.criterion += ": outside the integrable families";
    }
    return v;
}

std::optional<Rational> LambdaTriple::relation_value() const
{
    if (!lambda1 || !lambda2 || !lambda3 || *lambda1 == Rational(1) || *lambda2 == Rational(1) || *lambda3 == Rational(1)) {
        return std::nullopt;
    }
    const Rational one(1);
    return one / (*lambda1 - one) + one / (*lambda2 - one) + Rational(2) / (*lambda3 - one);
}

LambdaTriple lambda_triple(const Rational& Lambda, const Rational& lambda, const Rational& m2)
{
    check_mass(m2);
    LambdaTriple t;
    if (!Lambda.is_zero()) {
        t.lambda1 = -m2 / Lambda;
    }
    if (!lambda.is_zero()) {
        t.lambda2 = -m2 / lambda;
    }
    const Rational alpha2 = Rational(3) * lambda * Lambda + Rational(2) * m2 * (lambda + Lambda) + m2 * m2;
    const Rational alpha5 = lambda * Lambda - m2 * m2;
    if (!alpha5.is_zero()) {
        t.lambda3 = alpha2 / alpha5;
    }
    return t;
}

std::optional<long> triangular_index(const Rational& lambda)
{
    const auto root = (Rational(1) + Rational(8) * lambda).sqrt();
    if (!root || !root->is_integer()) {
        return std::nullopt;
    }
    const Rational l = (*root - Rational(1)) / Rational(2);
    if (!l.is_integer()) {
        return std::nullopt;
    }
    return l.to_long();
}

Verdict zero_energy_verdict(long k, const Rational& Lambda, const Rational& lambda, const Rational& m2)
{
    check_mass(m2);
    if (k < -1 || k > 1) {
        throw DarbouxError("k must be -1, 0 or 1");
    }
    Verdict v;
    v.scope = scope::kZeroEnergy;
    if (const auto known = known_integrable_lookup(k, Lambda, lambda, m2)) {
        v.status = VerdictStatus::Integrable;
        v.criterion = "known first integral";
        v.certificate["table_case"] = std::to_string(known->row);
        v.certificate["integral_verified"] = known->verified ? "true" : "false";
        return v;
    }
    if (k == 0) {
        v.status = VerdictStatus::CandidateOpen;
        v.criterion = "zero-energy normal variational equations are Euler equations";
        return v;
    }
    const Rational alpha1 = Rational(2) * m2 + lambda + Lambda;
    const LambdaTriple t = lambda_triple(Lambda, lambda, m2);
    if (Lambda.is_zero() || lambda.is_zero() || (!t.lambda3 && !alpha1.is_zero())) {
        v.status = VerdictStatus::NonIntegrable;
        v.criterion = "Bessel equation of order 1";
        v.certificate["vanishing"] = Lambda.is_zero() ? "Lambda" : lambda.is_zero() ? "lambda" : "alpha5";
        return v;
    }
    std::vector<std::pair<std::string, Rational>> checks = {{"lambda1", *t.lambda1}, {"lambda2", *t.lambda2}};
    if (!alpha1.is_zero()) {
        checks.emplace_back("lambda3", *t.lambda3);
    } else {
        v.certificate["branch"] = "alpha1=0";
    }
    for (const auto& [name, value] : checks) {
        v.certificate[name] = value.to_string();
        if (const auto l = triangular_index(value)) {
            v.certificate["l" + name.substr(6)] = std::to_string(*l);
        }
    }
    for (const auto& [name, value] : checks) {
        if (!kimura_triangular(value)) {
            v.status = VerdictStatus::NonIntegrable;
            v.criterion = "Kimura: " + name + " is not l(l+1)/2";
            return v;
        }
    }
    const Rational one(1);
    v.status = VerdictStatus::CandidateOpen;
    if (*t.lambda1 == one || *t.lambda2 == one) {
        v.criterion = "one of lambda1, lambda2 equals 1 and the other is l(l+1)/2 with l >= 2";
    } else {
        v.criterion = "Kimura conditions met";
    }
    return v;
}

bool verify_first_integral(const PhasePoly& H, const PhasePoly& I) { return poisson_bracket(H, I).is_zero(); }

} // namespace frwgalois
