#include "frwgalois/exact/upoly.hpp"

#include <cmath>
#include <set>
#include <sstream>

namespace frwgalois {

UPoly::UPoly(const Rational& c)
{
    if (!c.is_zero()) {
        c_.push_back(c);
    }
}

UPoly::UPoly(std::vector<Rational> coefficients) : c_(std::move(coefficients))
{
    trim();
}

void UPoly::trim()
{
    while (!c_.empty() && c_.back().is_zero()) {
        c_.pop_back();
    }
}

UPoly UPoly::from_param_poly(const ParamPoly& p, std::string_view variable)
{
    std::vector<Rational> c;
    for (const auto& [e, coeff] : p.coefficients_in(variable)) {
        if (e < 0) {
            throw std::invalid_argument("negative power of " + std::string(variable));
        }
        const auto value = coeff.constant_value();
        if (!value) {
            throw std::invalid_argument("non-numeric coefficient " + coeff.to_string());
        }
        if (c.size() <= static_cast<std::size_t>(e)) {
            c.resize(static_cast<std::size_t>(e) + 1);
        }
        c[static_cast<std::size_t>(e)] = *value;
    }
    return UPoly(std::move(c));
}

ParamPoly UPoly::to_param_poly(const std::string& variable) const
{
    const ParamPoly z = ParamPoly::param(variable);
    ParamPoly out;
    ParamPoly power(1);
    for (const Rational& c : c_) {
        out += power.scaled(c);
        power *= z;
    }
    return out;
}

Rational UPoly::coefficient(int i) const
{
    if (i < 0 || i > degree()) {
        return Rational(0);
    }
    return c_[static_cast<std::size_t>(i)];
}

UPoly UPoly::derivative() const
{
    std::vector<Rational> d;
    for (std::size_t i = 1; i < c_.size(); ++i) {
        d.push_back(c_[i] * Rational(static_cast<long>(i)));
    }
    return UPoly(std::move(d));
}

UPoly UPoly::monic() const
{
    if (c_.empty()) {
        return *this;
    }
    const Rational inv = c_.back().inverse();
    std::vector<Rational> m = c_;
    for (Rational& x : m) {
        x *= inv;
    }
    return UPoly(std::move(m));
}

Rational UPoly::evaluate(const Rational& x) const
{
    Rational acc;
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) {
        acc = acc * x + *it;
    }
    return acc;
}

double UPoly::evaluate(double x) const
{
    double acc = 0.0;
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) {
        acc = acc * x + it->to_double();
    }
    return acc;
}

int UPoly::multiplicity_at(const Rational& x) const
{
    if (is_zero()) {
        throw std::domain_error("multiplicity in the zero polynomial");
    }
    int m = 0;
    UPoly p = *this;
    const UPoly lin(std::vector<Rational>{-x, Rational(1)});
    while (true) {
        auto [q, r] = divmod(p, lin);
        if (!r.is_zero()) {
            return m;
        }
        p = q;
        ++m;
    }
}

std::vector<Rational> UPoly::rational_roots() const
{
    std::vector<Rational> roots;
    if (c_.empty()) {
        return roots;
    }
    // Clear denominators, then apply the rational root test.
    mpz_class l = 1;
    for (const Rational& c : c_) {
        const mpz_class d = c.denominator();
        mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), d.get_mpz_t());
    }
    std::vector<mpz_class> ints;
    for (const Rational& c : c_) {
        ints.push_back((c * Rational(l)).numerator());
    }
    std::size_t shift = 0;
    while (shift < ints.size() && ints[shift] == 0) {
        ++shift;
    }
    if (shift > 0) {
        roots.emplace_back(0);
    }
    const mpz_class a0 = abs(ints[shift]);
    const mpz_class an = abs(ints.back());
    auto divisors = [](const mpz_class& n) {
        std::vector<mpz_class> d;
        if (n > mpz_class(1000000000L)) {
            throw std::invalid_argument("rational_roots: coefficient too large for divisor enumeration");
        }
        const unsigned long v = n.get_ui();
        for (unsigned long i = 1; i * i <= v; ++i) {
            if (v % i == 0) {
                d.emplace_back(i);
                if (i * i != v) {
                    d.emplace_back(v / i);
                }
            }
        }
        return d;
    };
    std::set<Rational> found;
    for (const mpz_class& p : divisors(a0)) {
        for (const mpz_class& q : divisors(an)) {
            for (int s : {1, -1}) {
                const Rational cand(mpz_class(p * s), q);
                if (evaluate(cand).is_zero()) {
                    found.insert(cand);
                }
            }
        }
    }
    roots.insert(roots.end(), found.begin(), found.end());
    return roots;
}

std::string UPoly::to_string(const std::string& variable) const
{
    return to_param_poly(variable).to_string();
}

UPoly operator+(const UPoly& a, const UPoly& b)
{
    std::vector<Rational> c(std::max(a.c_.size(), b.c_.size()));
    for (std::size_t i = 0; i < a.c_.size(); ++i) {
        c[i] += a.c_[i];
    }
    for (std::size_t i = 0; i < b.c_.size(); ++i) {
        c[i] += b.c_[i];
    }
    return UPoly(std::move(c));
}

UPoly operator-(const UPoly& a)
{
    std::vector<Rational> c = a.c_;
    for (Rational& x : c) {
        x = -x;
    }
    return UPoly(std::move(c));
}

UPoly operator-(const UPoly& a, const UPoly& b)
{
    return a + (-b);
}

UPoly operator*(const UPoly& a, const UPoly& b)
{
    if (a.c_.empty() || b.c_.empty()) {
        return UPoly();
    }
    std::vector<Rational> c(a.c_.size() + b.c_.size() - 1);
    for (std::size_t i = 0; i < a.c_.size(); ++i) {
        for (std::size_t j = 0; j < b.c_.size(); ++j) {
            c[i + j] += a.c_[i] * b.c_[j];
        }
    }
    return UPoly(std::move(c));
}

std::pair<UPoly, UPoly> divmod(const UPoly& a, const UPoly& b)
{
    if (b.is_zero()) {
        throw std::domain_error("polynomial division by zero");
    }
    std::vector<Rational> r = a.coefficients();
    const int db = b.degree();
    std::vector<Rational> q(static_cast<std::size_t>(std::max(0, a.degree() - db + 1)));
    const Rational lead_inv = b.leading().inverse();
    for (int i = a.degree(); i >= db; --i) {
        const Rational f = r[static_cast<std::size_t>(i)] * lead_inv;
        if (f.is_zero()) {
            continue;
        }
        q[static_cast<std::size_t>(i - db)] = f;
        for (int j = 0; j <= db; ++j) {
            r[static_cast<std::size_t>(i - db + j)] -= f * b.coefficient(j);
        }
    }
    return {UPoly(std::move(q)), UPoly(std::move(r))};
}

UPoly gcd(const UPoly& a, const UPoly& b)
{
    UPoly x = a;
    UPoly y = b;
    while (!y.is_zero()) {
        UPoly r = divmod(x, y).second;
        x = std::move(y);
        y = std::move(r);
    }
    return x.monic();
}

std::vector<std::pair<UPoly, int>> square_free_decomposition(const UPoly& p)
{
    std::vector<std::pair<UPoly, int>> out;
    if (p.degree() < 1) {
        return out;
    }
    const UPoly f = p.monic();
    const UPoly fp = f.derivative();
    UPoly a = gcd(f, fp);
    UPoly b = divmod(f, a).first;
    UPoly c = divmod(fp, a).first;
    UPoly d = c - b.derivative();
    int i = 1;
    while (b.degree() >= 1) {
        const UPoly g = gcd(b, d);
        if (g.degree() >= 1) {
            out.emplace_back(g, i);
        }
        b = divmod(b, g).first;
        c = divmod(d, g).first;
        d = c - b.derivative();
        ++i;
    }
    return out;
}

} // namespace frwgalois
