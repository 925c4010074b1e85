#include "frwgalois/darboux/darboux.hpp"
#include "frwgalois/models/models.hpp"

#include <doctest.h>

#include <random>

using namespace frwgalois;

namespace {

Rational R(long p, long q = 1) { return Rational(p, q); }

/// Degree-4 Darboux eigenvalues admissible for integrability all lie at or
/// above -1/8; the two infinite families are p(2p-1) and 3/8 + 2p(p+1).
bool below_degree_four_table(const Rational& eigenvalue) { return eigenvalue < R(-1, 8); }

} // namespace

TEST_CASE("Darboux strata")
{
    const Rational m2(3);
    const auto v4 = darboux_points(-m2 / R(3), -m2 / R(3), m2);
    CHECK(v4.stratum == DarbouxCase::FourSimple);
    CHECK(v4.equivalence == Equivalence::V4);

    const auto three = darboux_points(R(0), R(1), R(1));
    CHECK(three.stratum == DarbouxCase::ThreeSimple);
    CHECK_FALSE(three.equivalence.has_value());
    CHECK(darboux_points(R(1), R(0), R(1)).stratum == DarbouxCase::ThreeSimple);

    CHECK(darboux_points(R(1, 2), R(2), R(1)).stratum == DarbouxCase::TwoSimple);
    CHECK(darboux_points(R(0), R(0), R(1)).stratum == DarbouxCase::TwoSimple);

    const auto triple = darboux_points(-m2, R(5), m2);
    CHECK(triple.stratum == DarbouxCase::TriplePlusSimple);
    CHECK(triple.equivalence == Equivalence::V3);
    CHECK(triple.points.size() == 2);
    CHECK(darboux_points(-m2, R(0), m2).points.size() == 1);

    // Lambda + lambda = -2 m2 puts two directions on the isotropic cone d1^2 + d2^2 = 0.
    const auto isotropic = darboux_points(R(-4), R(2), R(1));
    CHECK(isotropic.stratum == DarbouxCase::FourSimple);
    for (const auto& p : isotropic.points) {
        CHECK(is_darboux_point(R(-4), R(2), R(1), p));
    }

    CHECK(darboux_points(-m2, -m2, m2).stratum == DarbouxCase::Degenerate);
    CHECK_THROWS_AS((void)darboux_points(R(1), R(1), R(0)), DarbouxError);
}

TEST_CASE("Darboux points satisfy the gradient equation")
{
    std::mt19937 rng(11);
    std::uniform_int_distribution<int> d(-9, 9), den(1, 4);
    for (int i = 0; i < 200; ++i) {
        const Rational L(d(rng), den(rng)), l(d(rng), den(rng));
        Rational m2(d(rng), den(rng));
        if (m2.is_zero()) {
            m2 = R(1);
        }
        const auto report = darboux_points(L, l, m2);
        int total = 0;
        for (const auto& p : report.points) {
            CHECK(is_darboux_point(L, l, m2, p));
            total += p.multiplicity;
        }
        CHECK(total <= 4);
        const LambdaTriple t = lambda_triple(L, l, m2);
        for (const auto& p : report.points) {
            if (p.d2.is_zero() && t.lambda1) {
                CHECK(p.eigenvalue == *t.lambda1);
            } else if (p.d1.is_zero() && t.lambda2) {
                CHECK(p.eigenvalue == *t.lambda2);
            } else if (!p.d1.is_zero() && !p.d2.is_zero() && t.lambda3) {
                CHECK(p.eigenvalue == *t.lambda3);
            }
        }
    }
}

TEST_CASE("homogeneous verdict")
{
    const Rational m2(6);
    CHECK(homogeneous_verdict(-m2 / R(6), R(-8) * m2 / R(3), m2).status == VerdictStatus::Integrable);
    CHECK(darboux_points(-m2 / R(6), R(-8) * m2 / R(3), m2).equivalence == Equivalence::V5);
    CHECK(darboux_points(-m2 / R(3), R(-8) * m2 / R(3), m2).equivalence == Equivalence::V6);
    CHECK(homogeneous_verdict(-m2, -m2, m2).status == VerdictStatus::Integrable);
    CHECK(homogeneous_verdict(-m2, R(1), m2).status == VerdictStatus::NonIntegrable);

    const Verdict one = homogeneous_verdict(R(1), R(1), R(1));
    CHECK(one.status == VerdictStatus::NonIntegrable);
    // Lambda lambda = m2^2 here, so only the two coordinate directions remain.
    const auto report = darboux_points(R(1), R(1), R(1));
    CHECK(report.stratum == DarbouxCase::TwoSimple);
    bool obstructed = false;
    for (const auto& p : report.points) {
        obstructed = obstructed || below_degree_four_table(p.eigenvalue);
    }
    CHECK(obstructed);

    std::mt19937 rng(5);
    std::uniform_int_distribution<int> d(-12, 12);
    for (int i = 0; i < 200; ++i) {
        const Rational L(d(rng), 3), l(d(rng), 3);
        CHECK(homogeneous_verdict(L, l, R(2)).status == homogeneous_verdict(l, L, R(2)).status);
    }
}

TEST_CASE("lambda triple relation")
{
    std::mt19937 rng(17);
    std::uniform_int_distribution<int> d(-20, 20), den(1, 5);
    int checked = 0;
    for (int i = 0; i < 300; ++i) {
        const Rational L(d(rng), den(rng)), l(d(rng), den(rng)), m2(d(rng), den(rng));
        if (m2.is_zero() || (Rational(2) * m2 + L + l).is_zero()) {
            continue;
        }
        const LambdaTriple t = lambda_triple(L, l, m2);
        if (const auto r = t.relation_value()) {
            CHECK(*r == R(-1));
            const Rational l1 = *t.lambda1, l2 = *t.lambda2;
            CHECK(*t.lambda3 == (R(3) - R(2) * (l1 + l2) + l1 * l2) / (R(1) - l1 * l2));
            ++checked;
        }
    }
    CHECK(checked > 100);
    for (long l = 0; l <= 30; ++l) {
        CHECK(triangular_index(Rational(l * (l + 1), 2)) == l);
    }
    CHECK_FALSE(triangular_index(R(2)).has_value());
}

TEST_CASE("zero-energy verdicts")
{
    const Rational m2(3);
    const Verdict c1 = zero_energy_verdict(1, -m2 / R(3), -m2 / R(3), m2);
    CHECK(c1.status == VerdictStatus::Integrable);
    CHECK(c1.certificate.at("table_case") == "1");
    const LambdaTriple t1 = lambda_triple(-m2 / R(3), -m2 / R(3), m2);
    CHECK(*t1.lambda1 == R(3));
    CHECK(*t1.lambda3 == R(0));

    const Verdict c2 = zero_energy_verdict(1, -m2, -m2, m2);
    CHECK(c2.status == VerdictStatus::Integrable);
    CHECK(c2.certificate.at("table_case") == "2");

    const Verdict bessel = zero_energy_verdict(1, R(0), R(1), R(1));
    CHECK(bessel.status == VerdictStatus::NonIntegrable);
    CHECK(bessel.criterion == "Bessel equation of order 1");
    CHECK(zero_energy_verdict(-1, R(2), R(1, 2), R(1)).status == VerdictStatus::NonIntegrable);

    // lambda1 = 1 with lambda2 = 3 (l2 = 2).
    const Verdict special = zero_energy_verdict(1, -m2, -m2 / R(3), m2);
    CHECK(special.status == VerdictStatus::CandidateOpen);
    CHECK(zero_energy_verdict(1, -m2, -m2, R(1)).status == VerdictStatus::NonIntegrable);

    CHECK(zero_energy_verdict(0, R(1), R(2), R(5)).status == VerdictStatus::CandidateOpen);
    CHECK_THROWS_AS((void)zero_energy_verdict(2, R(1), R(1), R(1)), DarbouxError);

    std::mt19937 rng(23);
    std::uniform_int_distribution<int> d(-9, 9);
    for (int i = 0; i < 100; ++i) {
        const Rational L(d(rng), 2), l(d(rng), 2);
        CHECK(zero_energy_verdict(1, L, l, R(2)).status == zero_energy_verdict(-1, L, l, R(2)).status);
    }
}

TEST_CASE("first integrals of the tabulated cases")
{
    for (int row = 1; row <= 4; ++row) {
        const PhasePoly H = table_hamiltonian(row);
        const PhasePoly I = table_first_integral(row);
        CHECK(verify_first_integral(H, I));
        CHECK(verify_first_integral(H, H));
        const ParamPoly m2 = ParamPoly::param("m2");
        if (!I.has_symbol("m2")) {
            // Row 2: q1 p2 + q2 p1 carries no mass.
            continue;
        }
        CHECK_FALSE(verify_first_integral(H, I.substitute("m2", m2 + ParamPoly(1))));
    }
}
