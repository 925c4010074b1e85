#include "frwgalois/models/models.hpp"

#include <doctest.h>

#include <complex>
#include <random>

using namespace frwgalois;

namespace {

const PhaseVariables& V() { return phase_variables(); }

ParamPoly P(const char* name) { return ParamPoly::param(name); }

} // namespace

TEST_CASE("Hamilton equations of the minimal model")
{
    const auto m = build_model(ModelId::Minimal, ModelParameters::symbolic());
    const auto eq = m.equations_of_motion();
    const ParamPoly k = P("k"), L = P("Lambda"), m2 = P("m2");
    const ParamPoly q1i = V().q1.monomial_inverse();
    CHECK(eq[0] == -V().p1);
    CHECK(eq[1] == V().p2 * V().p2 * q1i.pow(3) + (k * V().q1).scaled(Rational(2)) - (L * V().q1.pow(3)).scaled(Rational(4)) -
                       (m2 * V().q2 * V().q2 * V().q1.pow(3)).scaled(Rational(4)));
    CHECK(eq[2] == V().p2 * q1i.pow(2));
    CHECK(eq[3] == -(m2 * V().q2 * V().q1.pow(4)).scaled(Rational(2)));
    CHECK(branch_is_invariant(m, m.branch(BranchId::EmptyUniverse)));
}

TEST_CASE("Hamilton equations of the rotated conformal model")
{
    const auto m = build_model(ModelId::ConformalRotated, ModelParameters::symbolic());
    const auto eq = m.equations_of_motion();
    const ParamPoly k = P("k"), L = P("Lambda"), l = P("lambda"), m2 = P("m2");
    CHECK(eq[0] == V().p1);
    CHECK(eq[1] == -k * V().q1 + m2 * V().q1 * V().q2 * V().q2 - L * V().q1.pow(3));
    CHECK(eq[2] == V().p2);
    CHECK(eq[3] == -k * V().q2 + m2 * V().q2 * V().q1 * V().q1 - l * V().q2.pow(3));
    for (const auto& b : m.branches) {
        CHECK_MESSAGE(branch_is_invariant(m, b), to_string(b.id));
    }
    CHECK(m.has_branch(BranchId::Pi3));
}

TEST_CASE("Pi3 with the opposite momentum sign is not invariant")
{
    auto m = build_model(ModelId::ConformalRotated, ModelParameters::symbolic());
    ParticularBranch b = m.branch(BranchId::Pi3);
    const ParamPoly alpha = P("alpha");
    b.constraints = {V().q2 + alpha * V().q1, V().p2 - alpha * V().p1};
    b.solved_form = {{"q2", -alpha * V().q1}, {"p2", alpha * V().p1}};
    CHECK_FALSE(branch_is_invariant(m, b));
}

TEST_CASE("conformal branches are invariant")
{
    const auto m = build_model(ModelId::Conformal, ModelParameters::symbolic());
    CHECK(branch_is_invariant(m, m.branch(BranchId::Pi1)));
    CHECK(branch_is_invariant(m, m.branch(BranchId::Pi2)));
    CHECK_THROWS_AS(m.branch(BranchId::EmptyUniverse), ModelError);
}

TEST_CASE("BlockB normal form")
{
    const auto p = ModelParameters::symbolic();
    const auto m = build_model(ModelId::ConformalPi3, p);
    const auto aq = alpha_quantities(p);
    const ParamPoly k = P("k"), L = P("Lambda"), l = P("lambda"), a3 = P("alpha3");
    const ParamPoly Q1 = V().q1, Q2 = V().q2;
    const ParamPoly quad = (V().p1 * V().p1 + V().p2 * V().p2 + k * (Q1 * Q1 + Q2 * Q2)).scaled(Rational(1, 2));
    const ParamPoly quart = aq.alpha5 * Q1.pow(4) + (aq.alpha2 * Q1 * Q1 * Q2 * Q2).scaled(Rational(2)) +
                            ((L - l) * a3 * Q1 * Q2.pow(3)).scaled(Rational(4)) + aq.alpha4 * Q2.pow(4);
    const ParamRational expected = ParamRational(quad) + ParamRational(quart, aq.alpha1.scaled(Rational(4)));
    CHECK(m.hamiltonian() == expected);
    CHECK(m.hamiltonian_numerator.coefficient("q1", 3).coefficient("q2", 1).is_zero());
    CHECK(branch_is_invariant(m, m.branch(BranchId::Pi3)));
    CHECK(aq.a_squared + aq.b_squared == ParamRational(1));
}

TEST_CASE("BlockB with equal quartic couplings has no Q1 Q2^3 term")
{
    auto p = ModelParameters::symbolic();
    p.lambda = p.Lambda;
    const auto m = build_model(ModelId::ConformalPi3, p);
    CHECK(m.hamiltonian_numerator.coefficient("q1", 1).coefficient("q2", 3).is_zero());
    CHECK(branch_is_invariant(m, m.branch(BranchId::Pi3)));
}

TEST_CASE("BlockB numeric pullback agrees with the original Hamiltonian")
{
    std::mt19937 rng(7);
    std::uniform_int_distribution<int> d(1, 9);
    for (int trial = 0; trial < 10; ++trial) {
        const Rational L(d(rng)), l(d(rng)), m2(d(rng));
        const auto rot = build_model(ModelId::ConformalRotated, ModelParameters::numeric(1, L, l, m2));
        const auto pi3 = canonical_transform(rot, TransformId::BlockB);
        const double a1 = (Rational(2) * m2 + l + L).to_double();
        const double a = std::sqrt((m2 + L).to_double() / a1);
        const double b = std::sqrt((m2 + l).to_double() / a1);
        const double Q1 = 0.3, Q2 = -0.7, P1 = 0.2, P2 = 0.9;
        std::unordered_map<std::string, double> orig = {
            {"q1", -b * Q1 - a * Q2}, {"q2", -a * Q1 + b * Q2}, {"p1", -b * P1 - a * P2}, {"p2", -a * P1 + b * P2}};
        std::unordered_map<std::string, double> tr = {
            {"q1", Q1}, {"q2", Q2}, {"p1", P1}, {"p2", P2}, {"alpha3", std::sqrt(((m2 + l) * (m2 + L)).to_double())}};
        const double h0 = rot.hamiltonian_numerator.evaluate(orig);
        const double h1 = pi3.hamiltonian_numerator.evaluate(tr) / pi3.hamiltonian_denominator.evaluate(tr);
        CHECK(h1 == doctest::Approx(h0).epsilon(1e-12));
    }
}

TEST_CASE("SwapLambdas")
{
    const auto p = ModelParameters::symbolic();
    for (ModelId id : {ModelId::Conformal, ModelId::ConformalRotated}) {
        const auto m = build_model(id, p);
        const auto s = canonical_transform(m, TransformId::SwapLambdas);
        CHECK(s.parameters.Lambda == p.lambda);
        CHECK(s.parameters.lambda == p.Lambda);
        const auto back = canonical_transform(s, TransformId::SwapLambdas);
        CHECK(back.hamiltonian_numerator == m.hamiltonian_numerator);
    }
    CHECK_THROWS_AS(canonical_transform(build_model(ModelId::Minimal, p), TransformId::SwapLambdas), ModelError);
}

TEST_CASE("FlipK is an involution and a complex rescaling")
{
    const auto p = ModelParameters::numeric(1, Rational(2), Rational(-3), Rational(5, 2));
    const auto m = build_model(ModelId::ConformalRotated, p);
    const auto f = canonical_transform(m, TransformId::FlipK);
    CHECK(f.parameters.k == ParamPoly(-1));
    CHECK(canonical_transform(f, TransformId::FlipK).hamiltonian_numerator == m.hamiltonian_numerator);

    const auto sym = build_model(ModelId::ConformalRotated, ModelParameters::symbolic());
    using C = std::complex<double>;
    const C w = std::polar(1.0, M_PI / 4);
    const C I(0, 1);
    const double q1 = 0.4, q2 = -1.1, p1 = 0.3, p2 = 0.8;
    std::unordered_map<std::string, C> lhs = {{"q1", w * q1}, {"q2", w * q2}, {"p1", std::conj(w) * p1}, {"p2", std::conj(w) * p2},
                                              {"k", 1.0},     {"Lambda", 2.0}, {"lambda", -3.0},  {"m2", 2.5}};
    std::unordered_map<std::string, C> rhs = {{"q1", q1},     {"q2", q2},        {"p1", p1},        {"p2", p2},
                                              {"k", -1.0},    {"Lambda", -I * 2.0}, {"lambda", I * 3.0}, {"m2", -I * 2.5}};
    const C a = sym.hamiltonian_numerator.evaluate(lhs);
    const C b = -I * sym.hamiltonian_numerator.evaluate(rhs);
    CHECK(std::abs(a - b) < 1e-12);
}

TEST_CASE("parameter constraints")
{
    CHECK_THROWS_AS(build_model(ModelId::Minimal, ModelParameters::numeric(2, Rational(1), Rational(1), Rational(1))), ModelError);
    CHECK_THROWS_AS(build_model(ModelId::MinimalScaled, ModelParameters::numeric(1, Rational(0), Rational(1), Rational(1))),
                    ModelError);
    const auto massless = build_model(ModelId::Conformal, ModelParameters::numeric(0, Rational(1), Rational(1), Rational(0)));
    CHECK_FALSE(massless.flags.empty());
    CHECK(parse_model_id("ConformalPi3") == ModelId::ConformalPi3);
    CHECK_THROWS_AS(parse_model_id("Nope"), ModelError);
}

TEST_CASE("tabulated integrable cases")
{
    const ParamPoly k = P("k"), m2 = P("m2");
    for (int row = 1; row <= 4; ++row) {
        CHECK(poisson_bracket(table_hamiltonian(row), table_first_integral(row)).is_zero());
    }
    struct Case {
        long k;
        Rational L, l, m2;
        int row;
        bool swapped;
    };
    const Case cases[] = {
        {1, Rational(1), Rational(1), Rational(-3), 1, false},
        {-1, Rational(2), Rational(2), Rational(-2), 2, false},
        {0, Rational(16), Rational(1), Rational(-6), 3, false},
        {0, Rational(1), Rational(16), Rational(-6), 3, true},
        {0, Rational(8), Rational(1), Rational(-3), 4, false},
        {0, Rational(2), Rational(16), Rational(-6), 4, true},
    };
    for (const auto& c : cases) {
        const auto hit = known_integrable_lookup(c.k, c.L, c.l, c.m2);
        REQUIRE(hit.has_value());
        CHECK(hit->row == c.row);
        CHECK(hit->swapped == c.swapped);
        CHECK(hit->verified);
    }
    CHECK_FALSE(known_integrable_lookup(1, Rational(16), Rational(1), Rational(-6)).has_value());
    CHECK_FALSE(known_integrable_lookup(0, Rational(8), Rational(1), Rational(-6)).has_value());
    CHECK_FALSE(known_integrable_lookup(0, Rational(1), Rational(2), Rational(0)).has_value());
}
