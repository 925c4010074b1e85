#include "frwgalois/hve/hve.hpp"

#include <doctest.h>

using namespace frwgalois;

namespace {

ParamPoly k() { return ParamPoly::param("k"); }
ParamPoly E() { return ParamPoly::param("E"); }
ParamPoly r(long p, long q = 1) { return ParamPoly(Rational(p, q)); }

HveParameters flat()
{
    HveParameters p;
    p.k = Rational(0);
    return p;
}

} // namespace

TEST_CASE("fundamental series leading terms")
{
    const FundamentalSystem fs = fundamental_series(2, 8);
    CHECK(fs.v1.coefficient(3) == r(1));
    CHECK(fs.v1.coefficient(5) == k().scaled(Rational(1, 7)));
    CHECK(fs.v2.coefficient(-2) == r(-1, 5));
    CHECK(fs.v2.coefficient(0) == k().scaled(Rational(1, 15)));
    CHECK(fs.v4 == fs.v2);
    for (long n = 1; n <= 11; ++n) {
        const FundamentalSystem f = fundamental_series(n, 10);
        CHECK(f.v3.valuation() == n + 1);
        CHECK(f.v4.valuation() == -n);
        CHECK(f.v3.coefficient(static_cast<int>(n) + 3) == k().scaled(Rational(n * n + n - 3, 6 * n + 9)));
        CHECK(f.v4.coefficient(static_cast<int>(-n)) == r(-1, 2 * n + 1));
        CHECK(f.v4.coefficient(static_cast<int>(2 - n)) ==
              k().scaled(Rational(n * n + n - 3, (2 * n + 1) * (6 * n - 3))));
        CHECK(f.wronskian_tangential() == LaurentSeries::monomial("eta", r(1), 0));
        CHECK(f.wronskian_normal() == LaurentSeries::monomial("eta", r(1), 0));
        for (int i = 1; i <= 4; ++i) {
            CHECK(f.lame_residual(i).is_zero());
        }
    }
    CHECK_THROWS_AS((void)fundamental_series(0, 8), HveError);
}

TEST_CASE("third-order integrand for n = 2")
{
    const SeriesVector g = hve_integrand(3, 2, 16);
    CHECK(g[0].is_zero());
    CHECK(g[1].is_zero());
    CHECK(g[2].valuation() == -8);
    CHECK(g[2].coefficient(-8) == r(54, 625));
    CHECK(g[2].coefficient(-6) == k().scaled(Rational(-44, 625)));
    CHECK(g[3].valuation() == -3);
    CHECK(g[3].coefficient(-3) == r(54, 125));
    CHECK(g[3].coefficient(-1) == k().scaled(Rational(-128, 875)));
}

TEST_CASE("fifth-order integrand for n = 2, k = 0")
{
    const SeriesVector g = hve_integrand(5, 2, 16, SeedChoice::V4, flat());
    CHECK(g[0].is_zero());
    CHECK(g[1].is_zero());
    CHECK(g[2].coefficient(-10) == r(-3618, 109375));
    CHECK(g[2].coefficient(-6) == E().scaled(Rational(-1272, 21875)));
    CHECK(g[3].coefficient(-5) == r(-3618, 21875));
    CHECK(g[3].coefficient(-1) == E().scaled(Rational(-1536, 21875)));
}

TEST_CASE("logarithm obstructions")
{
    const auto sym = log_obstruction(2, {}, 5);
    REQUIRE(sym.has_value());
    CHECK(sym->order == 3);
    CHECK(sym->component == 4);
    CHECK(sym->residue == k().scaled(Rational(-128, 875)));
    CHECK(sym->residue.substitute("k", r(0)).is_zero());

    const auto zero_k = log_obstruction(2, flat(), 5);
    REQUIRE(zero_k.has_value());
    CHECK(zero_k->order == 5);
    CHECK(zero_k->residue == E().scaled(Rational(-1536, 21875)));

    HveParameters both = flat();
    both.E = Rational(0);
    CHECK_FALSE(log_obstruction(2, both, 5).has_value());

    CHECK_FALSE(log_obstruction(1, {}, 5).has_value());

    // The residue does not depend on the truncation once the window reaches eta^-1.
    for (int order : {12, 14, 20}) {
        const auto again = log_obstruction(2, flat(), 5, order);
        REQUIRE(again.has_value());
        CHECK(again->residue == zero_k->residue);
    }
    CHECK_THROWS_AS((void)log_obstruction(2, flat(), 5, 6), HveError);
}

TEST_CASE("n scan at third order")
{
    for (long n = 2; n <= 11; ++n) {
        const auto ob = log_obstruction(n, {}, 3);
        CAPTURE(n);
        REQUIRE(ob.has_value());
        CHECK(ob->order == 3);
        CHECK(ob->residue.substitute("k", r(0)).is_zero() == (n % 2 == 0));
    }
}
