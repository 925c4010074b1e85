#pragma once

#include "frwgalois/exact/param_poly.hpp"

#include <utility>
#include <vector>

namespace frwgalois {

/// Dense univariate polynomial over the rationals, coefficients ascending.
class UPoly {
public:
    UPoly() = default;
    UPoly(const Rational& c);
    explicit UPoly(std::vector<Rational> coefficients);

    /// Requires every coefficient with respect to `variable` to be a rational
    /// constant and all exponents non-negative.
    static UPoly from_param_poly(const ParamPoly& p, std::string_view variable);
    [[nodiscard]] ParamPoly to_param_poly(const std::string& variable) const;

    [[nodiscard]] int degree() const { return static_cast<int>(c_.size()) - 1; }
    [[nodiscard]] bool is_zero() const { return c_.empty(); }
    [[nodiscard]] const std::vector<Rational>& coefficients() const { return c_; }
    [[nodiscard]] Rational coefficient(int i) const;
    [[nodiscard]] Rational leading() const { return c_.empty() ? Rational(0) : c_.back(); }

    [[nodiscard]] UPoly derivative() const;
    [[nodiscard]] UPoly monic() const;
    [[nodiscard]] Rational evaluate(const Rational& x) const;
    [[nodiscard]] double evaluate(double x) const;
    /// Order of vanishing at the rational point x.
    [[nodiscard]] int multiplicity_at(const Rational& x) const;
    [[nodiscard]] std::vector<Rational> rational_roots() const;

    [[nodiscard]] std::string to_string(const std::string& variable = "z") const;

    friend UPoly operator+(const UPoly& a, const UPoly& b);
    friend UPoly operator-(const UPoly& a, const UPoly& b);
    friend UPoly operator*(const UPoly& a, const UPoly& b);
    friend UPoly operator-(const UPoly& a);
    friend bool operator==(const UPoly& a, const UPoly& b) { return a.c_ == b.c_; }

private:
    void trim();
    std::vector<Rational> c_;
};

/// Quotient and remainder of Euclidean division.
[[nodiscard]] std::pair<UPoly, UPoly> divmod(const UPoly& a, const UPoly& b);
/// Monic greatest common divisor.
[[nodiscard]] UPoly gcd(const UPoly& a, const UPoly& b);
/// Yun's square-free decomposition: monic factors with their multiplicities.
[[nodiscard]] std::vector<std::pair<UPoly, int>> square_free_decomposition(const UPoly& p);

} // namespace frwgalois
