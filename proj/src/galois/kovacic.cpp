#include "frwgalois/exact/upoly.hpp"
#include "frwgalois/galois/galois.hpp"

#include <set>

namespace frwgalois {

namespace {

const UPoly& t_poly()
{
    static const UPoly t(std::vector<Rational>{Rational(0), Rational(1)});
    return t;
}

/// p(t + c).
UPoly shift(const UPoly& p, const Rational& c)
{
    const UPoly step(std::vector<Rational>{c, Rational(1)});
    UPoly out;
    for (auto it = p.coefficients().rbegin(); it != p.coefficients().rend(); ++it) {
        out = out * step + UPoly(*it);
    }
    return out;
}

/// t^deg p(1/t).
UPoly reverse(const UPoly& p)
{
    std::vector<Rational> c(p.coefficients().rbegin(), p.coefficients().rend());
    return UPoly(std::move(c));
}

int low_order(const UPoly& p)
{
    const auto& c = p.coefficients();
    for (std::size_t i = 0; i < c.size(); ++i) {
        if (!c[i].is_zero()) {
            return static_cast<int>(i);
        }
    }
    return 0;
}

UPoly drop_low(const UPoly& p, int k)
{
    const auto& c = p.coefficients();
    return UPoly(std::vector<Rational>(c.begin() + k, c.end()));
}

/// First `count` coefficients of the power series n/d, d(0) != 0.
std::vector<Rational> series_quotient(const UPoly& n, const UPoly& d, std::size_t count)
{
    std::vector<Rational> out(count);
    const Rational d0 = d.coefficient(0);
    for (std::size_t i = 0; i < count; ++i) {
        Rational acc = n.coefficient(static_cast<int>(i));
        for (std::size_t j = 1; j <= i; ++j) {
            acc -= d.coefficient(static_cast<int>(j)) * out[i - j];
        }
        out[i] = acc / d0;
    }
    return out;
}

/// r = sum_i s_i t^(v + i) with t = z - c, or t = 1/z at infinity.
struct LocalSeries {
    int v = 0;
    std::vector<Rational> s;
};

LocalSeries local_series(const UPoly& num, const UPoly& den, const std::optional<Rational>& point, std::size_t count)
{
    LocalSeries out;
    if (point) {
        const UPoly n = shift(num, *point);
        const UPoly d = shift(den, *point);
        const int mn = low_order(n);
        const int md = low_order(d);
        out.v = mn - md;
        out.s = series_quotient(drop_low(n, mn), drop_low(d, md), count);
    } else {
        out.v = den.degree() - num.degree();
        out.s = series_quotient(reverse(num), reverse(den), count);
    }
    return out;
}

/// Coefficients of sqrt(1 + u) where 1 + u = s / s_0.
std::vector<Rational> sqrt_series(const std::vector<Rational>& s)
{
    std::vector<Rational> S(s.size());
    S[0] = Rational(1);
    for (std::size_t n = 1; n < s.size(); ++n) {
        Rational acc = s[n] / s[0];
        for (std::size_t i = 1; i < n; ++i) {
            acc -= S[i] * S[n - i];
        }
        S[n] = acc / Rational(2);
    }
    return S;
}

/// b / a for the Kovacic square-root truncation: 2 sqrt(s_0) S_index.
Surd b_over_a(const LocalSeries& ls, std::size_t index)
{
    const auto S = sqrt_series(ls.s);
    return Surd::sqrt_of(ls.s[0]) * (Rational(2) * S[index]);
}

/// Inverse of a modulo f, when gcd(a, f) = 1.
std::optional<UPoly> inverse_mod(const UPoly& a, const UPoly& f)
{
    UPoly r0 = f, r1 = divmod(a, f).second;
    UPoly s0, s1(Rational(1));
    while (!r1.is_zero()) {
        auto [q, r] = divmod(r0, r1);
        r0 = r1;
        r1 = r;
        UPoly s = s0 - q * s1;
        s0 = s1;
        s1 = s;
    }
    if (r0.degree() != 0) {
        return std::nullopt;
    }
    return divmod(s0 * UPoly(r0.coefficient(0).inverse()), f).second;
}

struct PoleGroup {
    int order = 0;
    int count = 1;
    std::optional<Rational> location;
    /// Case 1 exponents (alpha+, alpha-); nullopt when only algebraic data is available.
    std::optional<std::array<Surd, 2>> alpha;
    std::vector<Rational> e_set;
};

std::vector<Rational> order_two_e_set(const Rational& b)
{
    std::vector<Rational> e = {Rational(2)};
    if (auto root = (Rational(1) + Rational(4) * b).sqrt()) {
        for (const Rational& x : {Rational(2) + Rational(2) * *root, Rational(2) - Rational(2) * *root}) {
            if (x.is_integer() && std::find(e.begin(), e.end(), x) == e.end()) {
                e.push_back(x);
            }
        }
    }
    return e;
}

std::array<Surd, 2> order_two_alpha(const Rational& b)
{
    const Surd root = Surd::sqrt_of(Rational(1) + Rational(4) * b) * Rational(1, 2);
    return {Surd(Rational(1, 2)) + root, Surd(Rational(1, 2)) - root};
}

PoleGroup make_group(const UPoly& num, const UPoly& den, const UPoly& factor, int order)
{
    PoleGroup g;
    g.order = order;
    g.count = factor.degree();
    if (g.count == 1) {
        g.location = -factor.coefficient(0) / factor.coefficient(1);
    }
    if (order == 1) {
        g.alpha = std::array<Surd, 2>{Surd(1), Surd(1)};
        g.e_set = {Rational(4)};
        return g;
    }
    if (order % 2 != 0) {
        g.e_set = {Rational(order)};
        return g;
    }
    if (order == 2) {
        // b = num / (f'^2 g) at each root, with den = f^2 g.
        const UPoly rest = divmod(den, factor * factor).first;
        const UPoly fp = factor.derivative();
        const auto inv = inverse_mod(fp * fp * rest, factor);
        if (inv) {
            const UPoly b = divmod(num * *inv, factor).second;
            if (b.degree() <= 0) {
                const Rational bc = b.coefficient(0);
                g.alpha = order_two_alpha(bc);
                g.e_set = order_two_e_set(bc);
                return g;
            }
        }
        g.e_set = {Rational(2)};
        return g;
    }
    g.e_set = {Rational(order)};
    if (g.location) {
        const int nu = order / 2;
        const LocalSeries ls = local_series(num, den, g.location, static_cast<std::size_t>(nu) + 2);
        const Surd ba = b_over_a(ls, static_cast<std::size_t>(nu - 1));
        const Surd half_nu(Rational(nu, 2));
        g.alpha = std::array<Surd, 2>{ba * Rational(1, 2) + half_nu, half_nu - ba * Rational(1, 2)};
    }
    return g;
}

/// All sums of `count` picks from a two-element list.
std::vector<Surd> pair_sums(const std::array<Surd, 2>& a, int count)
{
    std::vector<Surd> out;
    for (int j = 0; j <= count; ++j) {
        out.push_back(a[0] * Rational(j) + a[1] * Rational(count - j));
    }
    return out;
}

std::set<Rational> multiset_sums(const std::vector<Rational>& e, int count)
{
    std::set<Rational> sums = {Rational(0)};
    for (int i = 0; i < count; ++i) {
        std::set<Rational> next;
        for (const Rational& s : sums) {
            for (const Rational& x : e) {
                next.insert(s + x);
            }
        }
        sums = std::move(next);
    }
    return sums;
}

std::array<KovacicCase, 3> analyze(const UPoly& num_in, const UPoly& den_in)
{
    std::array<KovacicCase, 3> out;
    for (int i = 0; i < 3; ++i) {
        out[static_cast<std::size_t>(i)].id = i + 1;
    }
    if (num_in.is_zero()) {
        for (auto& c : out) {
            c.reason = "r = 0";
        }
        out[0].candidate_degrees = {0};
        return out;
    }
    const UPoly common = gcd(num_in, den_in);
    const UPoly num = divmod(num_in, common).first;
    const UPoly den = divmod(den_in, common).first;

    std::vector<PoleGroup> poles;
    for (const auto& [factor, mult] : square_free_decomposition(den)) {
        if (factor.degree() <= 0) {
            continue;
        }
        UPoly rest = factor;
        for (const Rational& root : factor.rational_roots()) {
            const UPoly linear(std::vector<Rational>{-root, Rational(1)});
            poles.push_back(make_group(num, den, linear, mult));
            rest = divmod(rest, linear).first;
        }
        if (rest.degree() > 0) {
            poles.push_back(make_group(num, den, rest, mult));
        }
    }
    const LocalSeries inf = local_series(num, den, std::nullopt, 8);
    const int ord_inf = inf.v;

    bool odd_high = false, has_two = false, all_le_two = true, unknown = false;
    for (const auto& p : poles) {
        odd_high = odd_high || (p.order > 1 && p.order % 2 != 0);
        has_two = has_two || p.order == 2;
        all_le_two = all_le_two && p.order <= 2;
        unknown = unknown || (!p.alpha && (p.order == 2 || p.order % 2 == 0));
    }

    // Case 1.
    KovacicCase& c1 = out[0];
    if (odd_high) {
        c1.possible = false;
        c1.reason = "pole of odd order greater than 1";
    } else if (ord_inf <= 2 && ord_inf % 2 != 0) {
        c1.possible = false;
        c1.reason = "odd order at infinity not greater than 2";
    } else {
        std::array<Surd, 2> alpha_inf;
        if (ord_inf > 2) {
            alpha_inf = {Surd(0), Surd(1)};
        } else if (ord_inf == 2) {
            alpha_inf = order_two_alpha(inf.s[0]);
        } else {
            const int nu = -ord_inf / 2;
            const Surd ba = b_over_a(inf, static_cast<std::size_t>(nu + 1));
            const Surd half_nu(Rational(nu, 2));
            alpha_inf = {ba * Rational(1, 2) - half_nu, Surd(0) - ba * Rational(1, 2) - half_nu};
        }
        std::vector<Surd> totals = {Surd(0)};
        for (const auto& p : poles) {
            if (!p.alpha) {
                continue;
            }
            std::vector<Surd> next;
            for (const Surd& t : totals) {
                for (const Surd& s : pair_sums(*p.alpha, p.count)) {
                    next.push_back(t + s);
                }
            }
            totals = std::move(next);
        }
        std::set<long> degrees;
        for (const Surd& a : alpha_inf) {
            for (const Surd& t : totals) {
                const auto d = (a - t).rational_value();
                if (d && d->is_integer() && d->sign() >= 0) {
                    degrees.insert(d->to_long().value());
                }
            }
        }
        c1.candidate_degrees.assign(degrees.begin(), degrees.end());
        if (unknown) {
            c1.reason = "inconclusive: exponents at algebraic poles";
        } else if (degrees.empty()) {
            c1.possible = false;
            c1.reason = "no non-negative integer degree";
        } else {
            c1.reason = "candidate degrees available";
        }
    }

    // Case 2.
    KovacicCase& c2 = out[1];
    if (!has_two && !odd_high) {
        c2.possible = false;
        c2.reason = "no pole of order 2 or of odd order greater than 2";
    } else {
        std::vector<Rational> e_inf;
        if (ord_inf > 2) {
            e_inf = {Rational(0), Rational(2), Rational(4)};
        } else if (ord_inf == 2) {
            e_inf = order_two_e_set(inf.s[0]);
        } else {
            e_inf = {Rational(ord_inf)};
        }
        std::set<Rational> totals = {Rational(0)};
        for (const auto& p : poles) {
            std::set<Rational> next;
            for (const Rational& t : totals) {
                for (const Rational& s : multiset_sums(p.e_set, p.count)) {
                    next.insert(t + s);
                }
            }
            totals = std::move(next);
        }
        std::set<long> degrees;
        for (const Rational& e : e_inf) {
            for (const Rational& t : totals) {
                const Rational d = (e - t) / Rational(2);
                if (d.is_integer() && d.sign() >= 0) {
                    degrees.insert(d.to_long().value());
                }
            }
        }
        c2.candidate_degrees.assign(degrees.begin(), degrees.end());
        if (degrees.empty()) {
            c2.possible = false;
            c2.reason = "no non-negative integer degree";
        } else {
            c2.reason = "candidate degrees available";
        }
    }

    // Case 3.
    KovacicCase& c3 = out[2];
    if (!all_le_two) {
        c3.possible = false;
        c3.reason = "pole of order greater than 2";
    } else if (ord_inf < 2) {
        c3.possible = false;
        c3.reason = "order at infinity less than 2";
    } else {
        c3.reason = "singularity orders allow case 3";
    }
    return out;
}

/// Reduced form w'' = r w of the equation, r = -q + p'/2 + p^2/4.
ParamRational reduced_potential(const LinearODE2& ode)
{
    const ParamRational p = ode.p();
    const ParamRational q = ode.q();
    return -q + p.derivative(ode.variable) / ParamRational(2) + p * p / ParamRational(4);
}

} // namespace

KovacicReport kovacic_necessary(const LinearODE2& ode)
{
    const ParamRational r = reduced_potential(ode);
    std::vector<std::string> symbols;
    for (const auto& s : (r.numerator() + r.denominator()).free_symbols()) {
        if (s != ode.variable) {
            symbols.push_back(s);
        }
    }
    KovacicReport report;
    if (symbols.empty()) {
        report.cases = analyze(UPoly::from_param_poly(r.numerator(), ode.variable), UPoly::from_param_poly(r.denominator(), ode.variable));
        return report;
    }
    // Parameters are specialized at several generic rational points; a case is
    // excluded when the majority of samples exclude it.
    static const std::vector<Rational> pool = {Rational(13, 7), Rational(29, 11), Rational(41, 17), Rational(53, 19),
                                               Rational(67, 23), Rational(79, 29), Rational(97, 31), Rational(107, 37)};
    std::vector<std::array<KovacicCase, 3>> runs;
    for (std::size_t sample = 0; sample < 3; ++sample) {
        std::map<std::string, Rational> values;
        std::map<std::string, ParamPoly> subst;
        for (std::size_t i = 0; i < symbols.size(); ++i) {
            const Rational v = pool[(i + 3 * sample) % pool.size()];
            values[symbols[i]] = v;
            subst[symbols[i]] = ParamPoly(v);
        }
        const ParamRational rs = r.substitute(subst);
        runs.push_back(analyze(UPoly::from_param_poly(rs.numerator(), ode.variable), UPoly::from_param_poly(rs.denominator(), ode.variable)));
        report.samples.push_back(values);
    }
    for (std::size_t c = 0; c < 3; ++c) {
        int excluded = 0;
        for (const auto& run : runs) {
            excluded += run[c].possible ? 0 : 1;
        }
        const bool possible = excluded < 2;
        for (const auto& run : runs) {
            if (run[c].possible == possible) {
                report.cases[c] = run[c];
                break;
            }
        }
    }
    return report;
}

} // namespace frwgalois
