#include "frwgalois/linode/linode.hpp"
#include "frwgalois/exact/surd.hpp"
#include "frwgalois/exact/upoly.hpp"

#include <algorithm>
#include <array>

namespace frwgalois {

namespace {

bool free_of(const ParamRational& r, const std::string& variable)
{
    if (r.numerator().degree(variable) <= 0 && r.denominator().degree(variable) <= 0) {
        return true;
    }
    return r.derivative(variable).is_zero();
}

/// Coefficients (c0, c1, c2) with f = c0 + c1 v + c2 v^2, when f is such a
/// quadratic; found by interpolation and confirmed by an exact identity.
std::optional<std::array<ParamRational, 3>> quadratic_in(const ParamRational& f, const std::string& v)
{
    std::vector<std::pair<Rational, ParamRational>> samples;
    for (long x = 0; samples.size() < 3 && x < 64; ++x) {
        const ParamPoly at{Rational(x)};
        const ParamPoly den = f.denominator().substitute(v, at);
        if (!den.is_zero()) {
            samples.emplace_back(Rational(x), ParamRational(f.numerator().substitute(v, at), den));
        }
    }
    if (samples.size() < 3) {
        return std::nullopt;
    }
    const auto& [x0, f0] = samples[0];
    const auto& [x1, f1] = samples[1];
    const auto& [x2, f2] = samples[2];
    // Newton divided differences.
    const ParamRational d01 = (f1 - f0) / ParamRational(x1 - x0);
    const ParamRational d12 = (f2 - f1) / ParamRational(x2 - x1);
    const ParamRational c2 = (d12 - d01) / ParamRational(x2 - x0);
    const ParamRational c1 = d01 - c2 * ParamRational(x0 + x1);
    const ParamRational c0 = f0 - c1 * ParamRational(x0) - c2 * ParamRational(x0 * x0);
    const ParamRational z(ParamPoly::param(v));
    if (!(c0 + c1 * z + c2 * z * z == f)) {
        return std::nullopt;
    }
    return std::array<ParamRational, 3>{c0, c1, c2};
}

/// Replaces qd^(2j) by F^j; odd powers of qd are an error.
ParamRational eliminate_velocity(const ParamPoly& p, const ParamRational& F)
{
    ParamRational out;
    for (const auto& [e, c] : p.coefficients_in("qd")) {
        if (e % 2 != 0) {
            throw LinodeError("odd power of the branch velocity survives");
        }
        out += ParamRational(c) * F.pow(e / 2);
    }
    return out;
}

ParamRational eliminate_velocity(const ParamRational& r, const ParamRational& F)
{
    return eliminate_velocity(r.numerator(), F) / eliminate_velocity(r.denominator(), F);
}

/// Maps q^(2j) to (z/s)^j.
ParamRational square_pullback(const ParamPoly& p, const ParamRational& zs)
{
    ParamRational out;
    for (const auto& [e, c] : p.coefficients_in("q")) {
        if (e % 2 != 0) {
            throw LinodeError("substitution not invertible: odd power of q");
        }
        out += ParamRational(c) * zs.pow(e / 2);
    }
    return out;
}

ParamPoly monomial(const SymbolTablePtr& table, const Exponents& e)
{
    ParamPoly m(1);
    for (std::size_t i = 0; i < e.size(); ++i) {
        if (e[i] == 0) {
            continue;
        }
        const Symbol& s = (*table)[i];
        const ParamPoly x = ParamPoly::symbol(s.name, s.kind, s.pair);
        m *= e[i] > 0 ? x.pow(static_cast<unsigned>(e[i])) : x.monomial_inverse().pow(static_cast<unsigned>(-e[i]));
    }
    return m;
}

/// Divides the three coefficients by their common monomial and rational content.
void strip_content(std::array<ParamPoly, 3>& a)
{
    ParamPoly joint;
    for (const auto& x : a) {
        joint += x;
    }
    const SymbolTablePtr table = joint.table();
    std::optional<Exponents> g;
    mpz_class num = 0;
    mpz_class den = 1;
    for (auto& x : a) {
        x = x.rebase(table);
        for (const auto& [e, c] : x.terms()) {
            if (!g) {
                g = e;
            } else {
                for (std::size_t i = 0; i < e.size(); ++i) {
                    (*g)[i] = std::min((*g)[i], e[i]);
                }
            }
            const mpz_class n = c.numerator();
            const mpz_class d = c.denominator();
            mpz_gcd(num.get_mpz_t(), num.get_mpz_t(), n.get_mpz_t());
            mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), d.get_mpz_t());
        }
    }
    if (!g) {
        return;
    }
    const ParamPoly inv = monomial(table, *g).monomial_inverse();
    Rational scale(den, num);
    // Keep the leading z coefficient of a2 positive.
    if (a[0].terms().rbegin()->second.sign() < 0) {
        scale = -scale;
    }
    for (auto& x : a) {
        x = (x * inv).scaled(scale).compact();
    }
}

/// Removes a polynomial factor shared by all three coefficients, when it divides exactly.
bool divide_common(std::array<ParamPoly, 3>& a, const ParamPoly& f)
{
    if (f.is_constant() || f.is_monomial()) {
        return false;
    }
    std::array<ParamPoly, 3> out;
    for (std::size_t i = 0; i < 3; ++i) {
        if (a[i].is_zero()) {
            continue;
        }
        try {
            auto q = a[i].divide_exact(f);
            if (!q) {
                return false;
            }
            out[i] = *q;
        } catch (const std::domain_error&) {
            return false;
        }
    }
    a = out;
    return true;
}

bool numeric_in(const ParamPoly& p, const std::string& variable)
{
    for (const auto& s : p.free_symbols()) {
        if (s != variable) {
            return false;
        }
    }
    return p.min_degree(variable) >= 0 || p.is_zero();
}

std::string wrap(const std::string& s) { return "(" + s + ")"; }

/// Leading coefficients of a2, a1, a0 at a point shifted to the origin.
struct LocalData {
    ParamPoly a2, a1, a0;
    int m2 = 0, m1 = 0, m0 = 0;
};

LocalData local_at_origin(const LinearODE2& ode)
{
    LocalData d{ode.a2, ode.a1, ode.a0};
    d.m2 = d.a2.min_degree(ode.variable);
    d.m1 = d.a1.is_zero() ? d.m2 + 100 : d.a1.min_degree(ode.variable);
    d.m0 = d.a0.is_zero() ? d.m2 + 100 : d.a0.min_degree(ode.variable);
    return d;
}

ParamRational ratio_or_zero(const ParamPoly& top, int degree, const ParamPoly& bottom, int bottom_degree, const std::string& v)
{
    return ParamRational(top.coefficient(v, degree), bottom.coefficient(v, bottom_degree));
}

LinearODE2 affine_pullback(const LinearODE2& ode, const ParamRational& offset, const ParamRational& scale)
{
    const ParamRational z = ParamRational(ParamPoly::param(ode.variable));
    const std::map<std::string, ParamRational> map = {{ode.variable, offset + scale * z}};
    return LinearODE2::from_coefficients(ParamRational(ode.a2).substitute(map), scale * ParamRational(ode.a1).substitute(map),
                                         scale * scale * ParamRational(ode.a0).substitute(map), ode.variable);
}

int multiplicity(ParamPoly p, const ParamPoly& f)
{
    int m = 0;
    while (!p.is_zero()) {
        std::optional<ParamPoly> q;
        try {
            q = p.divide_exact(f);
        } catch (const std::domain_error&) {
            break;
        }
        if (!q) {
            break;
        }
        p = *q;
        ++m;
    }
    return p.is_zero() ? 1000 : m;
}

} // namespace

std::string Substitution::to_string() const
{
    const std::string s = wrap(scale.to_string());
    return kind == SubstitutionKind::Linear ? "z = " + s + "*q" : "z = " + s + "*q^2";
}

std::string SingularPoint::to_string() const
{
    std::string where;
    if (is_infinity()) {
        where = "infinity";
    } else if (location) {
        where = location->to_string();
    } else {
        where = "roots of " + factor->to_string();
    }
    return where + (regular ? " (regular)" : " (irregular)");
}

LinearODE2 LinearODE2::from_coefficients(ParamRational a2, ParamRational a1, ParamRational a0, std::string variable)
{
    if (a2.is_zero()) {
        throw LinodeError("vanishing leading coefficient");
    }
    const std::array<ParamRational, 3> r = {a2, a1, a0};
    std::array<ParamPoly, 3> a;
    for (std::size_t i = 0; i < 3; ++i) {
        a[i] = r[i].numerator();
        for (std::size_t j = 0; j < 3; ++j) {
            if (j != i) {
                a[i] = a[i] * r[j].denominator();
            }
        }
    }
    strip_content(a);
    for (const auto& x : r) {
        while (divide_common(a, x.denominator())) {
        }
    }
    if (numeric_in(a[0], variable) && numeric_in(a[1], variable) && numeric_in(a[2], variable)) {
        UPoly g = UPoly::from_param_poly(a[0], variable);
        for (std::size_t i = 1; i < 3; ++i) {
            if (!a[i].is_zero()) {
                g = gcd(g, UPoly::from_param_poly(a[i], variable));
            }
        }
        if (g.degree() > 0) {
            divide_common(a, g.to_param_poly(variable));
        }
    }
    strip_content(a);
    LinearODE2 ode;
    ode.variable = std::move(variable);
    ode.a2 = a[0];
    ode.a1 = a[1];
    ode.a0 = a[2];
    return ode;
}

bool LinearODE2::equivalent(const LinearODE2& other) const
{
    if (variable != other.variable) {
        return false;
    }
    return p() == other.p() && q() == other.q();
}

LinearODE2 LinearODE2::rescaled(const ParamRational& factor) const
{
    return affine_pullback(*this, ParamRational(0), factor);
}

std::vector<SingularPoint> LinearODE2::singular_points() const
{
    std::vector<SingularPoint> out;
    auto at = [&](const ParamRational& location) {
        SingularPoint s;
        s.location = location;
        s.regular = true;
        try {
            (void)indicial_exponents(*this, location);
        } catch (const LinodeError&) {
            s.regular = false;
        }
        out.push_back(s);
    };
    const int m = a2.min_degree(variable);
    if (m > 0) {
        at(ParamRational(0));
    }
    const ParamPoly z = ParamPoly::param(variable);
    ParamPoly rest = a2;
    if (m > 0) {
        rest = *a2.divide_exact(z.pow(static_cast<unsigned>(m)));
    }
    if (rest.degree(variable) > 0) {
        if (numeric_in(rest, variable)) {
            for (const auto& [factor, mult] : square_free_decomposition(UPoly::from_param_poly(rest, variable))) {
                UPoly remaining = factor;
                for (const Rational& root : factor.rational_roots()) {
                    at(ParamRational(root));
                    remaining = divmod(remaining, UPoly({-root, Rational(1)})).first;
                }
                if (remaining.degree() > 0) {
                    SingularPoint s;
                    s.factor = remaining.to_param_poly(variable);
                    const int d2 = multiplicity(a2, *s.factor);
                    s.regular = d2 - multiplicity(a1, *s.factor) <= 1 && d2 - multiplicity(a0, *s.factor) <= 2;
                    out.push_back(s);
                }
                (void)mult;
            }
        } else if (rest.degree(variable) == 1) {
            at(-ParamRational(rest.coefficient(variable, 0), rest.coefficient(variable, 1)));
        } else {
            SingularPoint s;
            s.factor = rest;
            const int d2 = multiplicity(a2, rest);
            s.regular = d2 - multiplicity(a1, rest) <= 1 && d2 - multiplicity(a0, rest) <= 2;
            out.push_back(s);
        }
    }
    // Infinity is ordinary when z p - 2 = O(1/z) and q = O(1/z^4).
    const int d2 = a2.degree(variable);
    const ParamPoly shifted = z * a1 - a2.scaled(Rational(2));
    const bool p_ok = shifted.is_zero() || shifted.degree(variable) <= d2 - 1;
    const bool q_ok = a0.is_zero() || a0.degree(variable) <= d2 - 4;
    if (!(p_ok && q_ok)) {
        SingularPoint s;
        try {
            (void)indicial_exponents(*this, std::nullopt);
        } catch (const LinodeError&) {
            s.regular = false;
        }
        out.push_back(s);
    }
    return out;
}

std::string LinearODE2::to_string() const
{
    return wrap(a2.to_string()) + "*x'' + " + wrap(a1.to_string()) + "*x' + " + wrap(a0.to_string()) + "*x = 0";
}

LinearODE2 algebraize(const NormalVariationalEquation& nve, const Substitution& substitution, const std::optional<ParamPoly>& energy)
{
    ParamRational F = nve.system.velocity_squared;
    if (energy) {
        F = F.substitute(std::map<std::string, ParamPoly>{{"E", *energy}});
    }
    if (F.is_zero()) {
        throw LinodeError("degenerate particular solution");
    }
    if (substitution.scale.is_zero()) {
        throw LinodeError("substitution not invertible: zero scale");
    }
    const ParamRational& s = substitution.scale;
    const ParamRational q(ParamPoly::param("q"));
    const ParamRational qd(ParamPoly::param("qd"));
    ParamRational d1, d2;
    if (substitution.kind == SubstitutionKind::Linear) {
        d1 = s;
        d2 = ParamRational(0);
    } else {
        d1 = ParamRational(2) * s * q;
        d2 = ParamRational(2) * s;
    }
    const ParamRational acc = eliminate_velocity(nve.system.acceleration, F);
    const std::array<ParamRational, 3> in_q = {
        d1 * d1 * F,
        d2 * F + d1 * acc + eliminate_velocity(nve.P * qd, F) * d1,
        eliminate_velocity(nve.Q, F),
    };
    const ParamRational z(ParamPoly::param("z"));
    std::array<ParamRational, 3> in_z;
    for (std::size_t i = 0; i < 3; ++i) {
        if (substitution.kind == SubstitutionKind::Linear) {
            in_z[i] = in_q[i].substitute(std::map<std::string, ParamRational>{{"q", z / s}});
        } else {
            in_z[i] = square_pullback(in_q[i].numerator(), z / s) / square_pullback(in_q[i].denominator(), z / s);
        }
    }
    return LinearODE2::from_coefficients(in_z[0], in_z[1], in_z[2], "z");
}

ParamRational ExponentPair::mean() const { return sum / ParamRational(2); }

ParamRational ExponentPair::discriminant() const { return sum * sum - ParamRational(4) * product; }

std::optional<std::pair<Rational, Rational>> ExponentPair::rational_values() const
{
    const auto d = discriminant().constant_value();
    const auto m = mean().constant_value();
    if (!d || !m) {
        return std::nullopt;
    }
    const auto r = d->sqrt();
    if (!r) {
        return std::nullopt;
    }
    const Rational half = *r / Rational(2);
    return std::make_pair(*m - half, *m + half);
}

std::string ExponentPair::to_string() const
{
    if (auto v = rational_values()) {
        return "(" + v->first.to_string() + ", " + v->second.to_string() + ")";
    }
    return "(" + mean().to_string() + " -+ sqrt(" + discriminant().to_string() + ")/2)";
}

ExponentPair indicial_exponents(const LinearODE2& ode, const std::optional<ParamRational>& point)
{
    const std::string& v = ode.variable;
    if (point) {
        const LinearODE2 local = point->is_zero() ? ode : affine_pullback(ode, *point, ParamRational(1));
        const LocalData d = local_at_origin(local);
        if (d.m1 < d.m2 - 1 || d.m0 < d.m2 - 2) {
            throw LinodeError("irregular singular point");
        }
        if (d.m2 == 0) {
            return {ParamRational(1), ParamRational(0)};
        }
        const ParamRational p0 = ratio_or_zero(d.a1, d.m2 - 1, d.a2, d.m2, v);
        const ParamRational q0 = ratio_or_zero(d.a0, d.m2 - 2, d.a2, d.m2, v);
        return {ParamRational(1) - p0, q0};
    }
    const int d2 = ode.a2.degree(v);
    const int d1 = ode.a1.is_zero() ? d2 - 100 : ode.a1.degree(v);
    const int d0 = ode.a0.is_zero() ? d2 - 100 : ode.a0.degree(v);
    if (d1 > d2 - 1 || d0 > d2 - 2) {
        throw LinodeError("irregular singular point at infinity");
    }
    const ParamRational pinf = ratio_or_zero(ode.a1, d2 - 1, ode.a2, d2, v);
    const ParamRational qinf = ratio_or_zero(ode.a0, d2 - 2, ode.a2, d2, v);
    return {pinf - ParamRational(1), qinf};
}

std::string to_string(CanonicalFamily family)
{
    switch (family) {
    case CanonicalFamily::Whittaker: return "Whittaker";
    case CanonicalFamily::RiemannP: return "RiemannP";
    case CanonicalFamily::Lame: return "Lame";
    case CanonicalFamily::Bessel: return "Bessel";
    case CanonicalFamily::Euler: return "Euler";
    case CanonicalFamily::Raw: return "Raw";
    }
    return "Raw";
}

LinearODE2 riemann_p_equation(const ExponentPair& at0, const ExponentPair& at1, const ExponentPair& atinf, const std::string& variable)
{
    const ParamRational z(ParamPoly::param(variable));
    const ParamRational zm1 = z - ParamRational(1);
    const ParamRational one(1);
    const ParamRational p = (one - at0.sum) / z + (one - at1.sum) / zm1;
    const ParamRational q =
        at0.product / (z * z) + at1.product / (zm1 * zm1) + (atinf.product - at0.product - at1.product) / (z * zm1);
    return LinearODE2::from_coefficients(one, p, q, variable);
}

CanonicalODE recognize(const LinearODE2& ode)
{
    const std::string& v = ode.variable;
    const ParamRational z(ParamPoly::param(v));
    const ParamRational p = ode.p();
    const ParamRational q = ode.q();
    const ParamRational zp = z * p;
    const ParamRational z2q = z * z * q;
    CanonicalODE out;

    if (free_of(zp, v) && free_of(z2q, v)) {
        out.family = CanonicalFamily::Euler;
        out.parameters = {{"alpha", zp}, {"beta", z2q}};
        out.exponents = {ExponentPair{ParamRational(1) - zp, z2q}};
        out.change_of_variables = "x = " + v + "^rho";
        out.round_trip_verified = true;
        return out;
    }

    const ParamRational gamma = z2q.derivative(v);
    if (free_of(zp, v) && free_of(gamma, v) && !gamma.is_zero()) {
        const ParamRational beta = z2q - gamma * z;
        const ParamRational e = (ParamRational(1) - zp) / ParamRational(2);
        const ParamRational n2 = (ParamRational(1) - zp).pow(2) - ParamRational(4) * beta;
        out.family = CanonicalFamily::Bessel;
        out.parameters = {{"order_squared", n2}, {"scale", gamma}, {"exponent", e}};
        out.change_of_variables = "x = " + v + "^(" + e.to_string() + ") Z_n(s), s^2 = 4*(" + gamma.to_string() + ")*" + v;
        const ParamRational four(4);
        const LinearODE2 rebuilt = LinearODE2::from_coefficients(four * z * z, four * (ParamRational(1) - ParamRational(2) * e) * z,
                                                                 four * e * e + four * gamma * z - n2, v);
        out.round_trip_verified = rebuilt.equivalent(ode);
        return out;
    }

    // Normal form w'' = R w with x = w exp(-int p / 2).
    const ParamRational R = -q + p.derivative(v) / ParamRational(2) + p * p / ParamRational(4);
    const ParamRational z2R = z * z * R;
    if (const auto quad = quadratic_in(z2R, v)) {
        const ParamRational& a = (*quad)[2];
        if (!a.is_zero()) {
            const ParamRational& c = (*quad)[1];
            const ParamRational& d = (*quad)[0];
            out.family = CanonicalFamily::Whittaker;
            const ParamRational scale2 = ParamRational(4) * a;
            const ParamRational kappa2 = c * c / scale2;
            const ParamRational mu2 = d + ParamRational(Rational(1, 4));
            out.parameters = {{"kappa_squared", kappa2}, {"mu_squared", mu2}, {"scale_squared", scale2}, {"kappa_scale", -c}};
            out.change_of_variables = "x = w(s) exp(-int p/2), s^2 = (" + scale2.to_string() + ")*" + v + "^2";
            const ParamRational rebuilt = scale2 / ParamRational(4) - (-c) / z + (mu2 - ParamRational(1) / ParamRational(4)) / (z * z);
            out.round_trip_verified = rebuilt == R && (-c) * (-c) == kappa2 * scale2;
            return out;
        }
    }

    try {
        const auto points = ode.singular_points();
        std::vector<ParamRational> finite;
        bool ok = points.size() == 3;
        for (const auto& pt : points) {
            ok = ok && pt.regular && !pt.factor;
            if (pt.location) {
                finite.push_back(*pt.location);
            }
        }
        if (ok && finite.size() == 2) {
            const ParamRational offset = finite[0];
            const ParamRational scale = finite[1] - finite[0];
            const LinearODE2 moved = affine_pullback(ode, offset, scale);
            const ExponentPair e0 = indicial_exponents(moved, ParamRational(0));
            const ExponentPair e1 = indicial_exponents(moved, ParamRational(1));
            const ExponentPair einf = indicial_exponents(moved, std::nullopt);
            out.family = CanonicalFamily::RiemannP;
            out.exponents = {e0, e1, einf};
            out.parameters = {{"offset", offset}, {"scale", scale}, {"fuchs_sum", e0.sum + e1.sum + einf.sum}};
            out.change_of_variables = v + " = " + wrap(offset.to_string()) + " + " + wrap(scale.to_string()) + "*t";
            out.round_trip_verified = riemann_p_equation(e0, e1, einf, v).equivalent(moved);
            return out;
        }
    } catch (const LinodeError&) {
    }
    out.family = CanonicalFamily::Raw;
    out.round_trip_verified = true;
    return out;
}

CanonicalODE recognize(const NormalVariationalEquation& nve, const std::optional<ParamPoly>& energy)
{
    CanonicalODE out;
    ParamRational F = nve.system.velocity_squared;
    if (energy) {
        F = F.substitute(std::map<std::string, ParamPoly>{{"E", *energy}});
    }
    const ParamRational qd(ParamPoly::param("qd"));
    const ParamRational acc = nve.system.acceleration;
    const ParamRational Pdot = nve.P.derivative("q") * qd + nve.P.derivative("qd") * acc;
    const ParamRational raw = -nve.Q + Pdot / ParamRational(2) + nve.P * nve.P / ParamRational(4);
    const ParamRational R = eliminate_velocity(raw.numerator(), F) / eliminate_velocity(raw.denominator(), F);
    const auto Rp = R.as_polynomial();
    const auto Fp = F.as_polynomial();
    if (!Rp || !Fp || Rp->degree("q") > 2 || Rp->min_degree("q") < 0 || Fp->degree("q") != 4 || Fp->min_degree("q") < 0 ||
        !Rp->coefficient("q", 1).is_zero() || !Fp->coefficient("q", 1).is_zero() || !Fp->coefficient("q", 3).is_zero()) {
        out.family = CanonicalFamily::Raw;
        out.round_trip_verified = true;
        return out;
    }
    const ParamRational r0(Rp->coefficient("q", 0)), r1(Rp->coefficient("q", 2));
    const ParamRational c0(Fp->coefficient("q", 0)), c2(Fp->coefficient("q", 2)), c4(Fp->coefficient("q", 4));
    // q^2 = s wp + t turns (q^2)'^2 = 4 q^2 F into the Weierstrass cubic.
    const ParamRational s = c4.inverse();
    const ParamRational t = -c2 / (ParamRational(3) * c4);
    const ParamRational g2 = -ParamRational(4) * (ParamRational(3) * c4 * s * t * t + ParamRational(2) * c2 * s * t + c0 * s) / (s * s);
    const ParamRational g3 = -ParamRational(4) * (c4 * t * t * t + c2 * t * t + c0 * t) / (s * s);
    const ParamRational A = r1 * s;
    const ParamRational B = r0 + r1 * t;
    out.family = CanonicalFamily::Lame;
    out.parameters = {{"A", A}, {"B", B}, {"g2", g2}, {"g3", g3}, {"scale", s}, {"shift", t}};
    out.change_of_variables = "q^2 = " + wrap(s.to_string()) + "*wp(t) + " + wrap(t.to_string());

    const ParamRational W(ParamPoly::param("wp_value"));
    const ParamRational y = s * W + t;
    const bool cubic = s * s * (ParamRational(4) * W * W * W - g2 * W - g3) ==
                       ParamRational(4) * (c4 * y * y * y + c2 * y * y + c0 * y);
    const ParamRational q2(ParamPoly::param("q").pow(2));
    const bool potential = A * (q2 - t) / s + B == R;
    out.round_trip_verified = cubic && potential;
    return out;
}

} // namespace frwgalois
