#pragma once

#include "frwgalois/exact/param_poly.hpp"

namespace frwgalois {

/// Quotient of two ParamPolys. Equality is tested by cross-multiplication, so
/// no multivariate gcd is needed; construction only strips rational content,
/// common monomial factors and exact polynomial quotients.
class ParamRational {
public:
    ParamRational() = default;
    ParamRational(const ParamPoly& num);
    ParamRational(const Rational& c) : ParamRational(ParamPoly(c)) {}
    ParamRational(long c) : ParamRational(ParamPoly(c)) {}
    ParamRational(int c) : ParamRational(ParamPoly(c)) {}
    ParamRational(const ParamPoly& num, const ParamPoly& den);

    [[nodiscard]] const ParamPoly& numerator() const { return num_; }
    [[nodiscard]] const ParamPoly& denominator() const { return den_; }

    [[nodiscard]] bool is_zero() const { return num_.is_zero(); }
    [[nodiscard]] bool is_polynomial() const { return den_.is_constant(); }
    [[nodiscard]] std::optional<ParamPoly> as_polynomial() const;
    [[nodiscard]] std::optional<Rational> constant_value() const;

    [[nodiscard]] ParamRational inverse() const;
    [[nodiscard]] ParamRational pow(int exponent) const;
    [[nodiscard]] ParamRational substitute(const std::map<std::string, ParamPoly>& values) const;
    [[nodiscard]] ParamRational substitute(const std::map<std::string, ParamRational>& values) const;
    [[nodiscard]] ParamRational derivative(std::string_view name) const;
    [[nodiscard]] Rational evaluate(const std::map<std::string, Rational>& values) const;
    [[nodiscard]] double evaluate(const std::unordered_map<std::string, double>& values) const;

    [[nodiscard]] std::string to_string() const;

    ParamRational& operator+=(const ParamRational& o);
    ParamRational& operator-=(const ParamRational& o);
    ParamRational& operator*=(const ParamRational& o);
    ParamRational& operator/=(const ParamRational& o);

    friend ParamRational operator+(ParamRational a, const ParamRational& b) { return a += b; }
    friend ParamRational operator-(ParamRational a, const ParamRational& b) { return a -= b; }
    friend ParamRational operator*(ParamRational a, const ParamRational& b) { return a *= b; }
    friend ParamRational operator/(ParamRational a, const ParamRational& b) { return a /= b; }
    friend ParamRational operator-(const ParamRational& a) { return ParamRational(-a.num_, a.den_); }

    friend bool operator==(const ParamRational& a, const ParamRational& b);
    friend std::ostream& operator<<(std::ostream& os, const ParamRational& r) { return os << r.to_string(); }

private:
    void normalize();

    ParamPoly num_;
    ParamPoly den_{1};
};

} // namespace frwgalois
