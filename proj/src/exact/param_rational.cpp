#include "frwgalois/exact/param_rational.hpp"

#include <algorithm>

namespace frwgalois {

namespace {

/// a / b when b is a non-constant exact divisor of a.
std::optional<ParamPoly> quotient(const ParamPoly& a, const ParamPoly& b)
{
    if (b.is_constant()) {
        return std::nullopt;
    }
    try {
        return a.divide_exact(b);
    } catch (const std::domain_error&) {
        return std::nullopt;
    }
}

/// Largest monomial dividing every term of `p`, as an exponent vector in p's table.
Exponents monomial_gcd(const ParamPoly& p)
{
    Exponents g;
    bool first = true;
    for (const auto& [e, c] : p.terms()) {
        if (first) {
            g = e;
            first = false;
        } else {
            for (std::size_t i = 0; i < g.size(); ++i) {
                g[i] = std::min(g[i], e[i]);
            }
        }
    }
    return g;
}

ParamPoly monomial_from(const SymbolTablePtr& table, const Exponents& e)
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

Rational content(const ParamPoly& p)
{
    mpz_class g = 0;
    mpz_class l = 1;
    for (const auto& [e, c] : p.terms()) {
        const mpz_class n = c.numerator();
        const mpz_class d = c.denominator();
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), n.get_mpz_t());
        mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), d.get_mpz_t());
    }
    if (g == 0) {
        return Rational(1);
    }
    return Rational(mpz_class(abs(g)), l);
}

} // namespace

ParamRational::ParamRational(const ParamPoly& num) : num_(num) {}

ParamRational::ParamRational(const ParamPoly& num, const ParamPoly& den) : num_(num), den_(den)
{
    if (den_.is_zero()) {
        throw std::domain_error("rational function with zero denominator");
    }
    normalize();
}

void ParamRational::normalize()
{
    if (num_.is_zero()) {
        den_ = ParamPoly(1);
        return;
    }
    // Clear Laurent exponents and common monomials from both sides.
    const ParamPoly joint = num_ + den_;
    Exponents gn = monomial_gcd(num_.rebase(joint.table()));
    const Exponents gd = monomial_gcd(den_.rebase(joint.table()));
    for (std::size_t i = 0; i < gn.size(); ++i) {
        gn[i] = std::min(gn[i], gd[i]);
    }
    if (std::any_of(gn.begin(), gn.end(), [](int x) { return x != 0; })) {
        const ParamPoly m = monomial_from(joint.table(), gn).monomial_inverse();
        num_ *= m;
        den_ *= m;
    }
    const Rational cd = content(den_).inverse();
    num_ = num_.scaled(cd);
    den_ = den_.scaled(cd);
    const Rational lead = den_.terms().rbegin()->second;
    if (lead.sign() < 0) {
        num_ = -num_;
        den_ = -den_;
    }
    if (!den_.is_constant()) {
        try {
            if (auto q = num_.divide_exact(den_)) {
                num_ = *q;
                den_ = ParamPoly(1);
            }
        } catch (const std::domain_error&) {
        }
    }
    if (auto c = den_.constant_value()) {
        num_ = num_.scaled(c->inverse());
        den_ = ParamPoly(1);
    }
    num_ = num_.compact();
    den_ = den_.compact();
}

std::optional<ParamPoly> ParamRational::as_polynomial() const
{
    if (auto c = den_.constant_value()) {
        return num_.scaled(c->inverse());
    }
    return std::nullopt;
}

std::optional<Rational> ParamRational::constant_value() const
{
    auto p = as_polynomial();
    if (!p) {
        return std::nullopt;
    }
    return p->constant_value();
}

ParamRational ParamRational::inverse() const
{
    if (num_.is_zero()) {
        throw std::domain_error("inverse of zero rational function");
    }
    return ParamRational(den_, num_);
}

ParamRational ParamRational::pow(int exponent) const
{
    if (exponent < 0) {
        return inverse().pow(-exponent);
    }
    return ParamRational(num_.pow(static_cast<unsigned>(exponent)), den_.pow(static_cast<unsigned>(exponent)));
}

ParamRational ParamRational::substitute(const std::map<std::string, ParamPoly>& values) const
{
    return ParamRational(num_.substitute(values), den_.substitute(values));
}

ParamRational ParamRational::substitute(const std::map<std::string, ParamRational>& values) const
{
    // Substitute one symbol at a time through numerator/denominator expansions.
    ParamRational out = *this;
    for (const auto& [name, value] : values) {
        auto apply = [&](const ParamPoly& p) {
            if (!p.has_symbol(name)) {
                return ParamRational(p);
            }
            ParamRational acc;
            for (const auto& [e, c] : p.coefficients_in(name)) {
                acc += ParamRational(c) * value.pow(e);
            }
            return acc;
        };
        out = apply(out.num_) / apply(out.den_);
    }
    return out;
}

ParamRational ParamRational::derivative(std::string_view name) const
{
    return ParamRational(num_.derivative(name) * den_ - num_ * den_.derivative(name), den_ * den_);
}

Rational ParamRational::evaluate(const std::map<std::string, Rational>& values) const
{
    return num_.evaluate(values) / den_.evaluate(values);
}

double ParamRational::evaluate(const std::unordered_map<std::string, double>& values) const
{
    return num_.evaluate(values) / den_.evaluate(values);
}

std::string ParamRational::to_string() const
{
    if (den_.is_constant()) {
        return num_.to_string();
    }
    auto wrap = [](const ParamPoly& p) {
        const std::string s = p.to_string();
        return p.term_count() > 1 ? "(" + s + ")" : s;
    };
    return wrap(num_) + "/" + wrap(den_);
}

ParamRational& ParamRational::operator+=(const ParamRational& o)
{
    if (den_ == o.den_) {
        *this = ParamRational(num_ + o.num_, den_);
        return *this;
    }
    if (auto q = quotient(den_, o.den_)) {
        *this = ParamRational(num_ + o.num_ * *q, den_);
    } else if (auto r = quotient(o.den_, den_)) {
        *this = ParamRational(num_ * *r + o.num_, o.den_);
    } else {
        *this = ParamRational(num_ * o.den_ + o.num_ * den_, den_ * o.den_);
    }
    return *this;
}

ParamRational& ParamRational::operator-=(const ParamRational& o)
{
    return *this += -o;
}

ParamRational& ParamRational::operator*=(const ParamRational& o)
{
    *this = ParamRational(num_ * o.num_, den_ * o.den_);
    return *this;
}

ParamRational& ParamRational::operator/=(const ParamRational& o)
{
    if (o.is_zero()) {
        throw std::domain_error("division by zero rational function");
    }
    *this = ParamRational(num_ * o.den_, den_ * o.num_);
    return *this;
}

bool operator==(const ParamRational& a, const ParamRational& b)
{
    return a.num_ * b.den_ == b.num_ * a.den_;
}

} // namespace frwgalois
