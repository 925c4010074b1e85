#pragma once

#include "frwgalois/exact/param_poly.hpp"

#include <limits>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace frwgalois {

/// Thrown when an operation would leave no known coefficient.
class TruncationUnderflow : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Truncated Laurent series  sum_d c_d x^d + O(x^order)  with ParamPoly
/// coefficients, plus an optional coefficient L of a  L*log(x)  term.
///
/// Coefficients at degrees >= order are unknown; asking for them throws.
/// A series may also be exact (no truncation), e.g. a polynomial.
class LaurentSeries {
public:
    static constexpr int kExact = std::numeric_limits<int>::max() / 4;

    LaurentSeries() = default;
    explicit LaurentSeries(std::string variable, int order = kExact);

    static LaurentSeries monomial(std::string variable, const ParamPoly& c, int degree, int order = kExact);
    static LaurentSeries from_coefficients(std::string variable, int min_degree, const std::vector<ParamPoly>& coeffs,
                                           int order);

    [[nodiscard]] const std::string& variable() const { return variable_; }
    [[nodiscard]] int order() const { return order_; }
    [[nodiscard]] bool is_exact() const { return order_ >= kExact; }
    /// Lowest degree with a nonzero coefficient; equals order() for a zero series.
    [[nodiscard]] int valuation() const;
    [[nodiscard]] int min_degree() const { return valuation(); }
    /// Highest stored nonzero degree (valuation() - 1 when zero).
    [[nodiscard]] int max_degree() const;
    [[nodiscard]] bool is_zero() const { return terms_.empty() && !log_.has_value(); }

    [[nodiscard]] ParamPoly coefficient(int degree) const;
    [[nodiscard]] ParamPoly residue() const { return coefficient(-1); }
    [[nodiscard]] const std::optional<ParamPoly>& log_coefficient() const { return log_; }
    [[nodiscard]] const std::map<int, ParamPoly>& terms() const { return terms_; }
    /// Dense coefficient list for degrees min_degree()..max_degree().
    [[nodiscard]] std::vector<ParamPoly> coefficients() const;

    [[nodiscard]] LaurentSeries truncated(int order) const;
    [[nodiscard]] LaurentSeries scaled(const ParamPoly& c) const;
    /// Multiplication by x^shift.
    [[nodiscard]] LaurentSeries shifted(int shift) const;
    [[nodiscard]] LaurentSeries differentiate() const;
    /// Term-wise antiderivative with zero constant; the x^-1 term becomes the log coefficient.
    [[nodiscard]] LaurentSeries integrate() const;
    /// Multiplicative inverse. The leading coefficient must be a nonzero
    /// rational unless `leading_nonvanishing` declares a monomial leading
    /// coefficient to be nonzero.
    [[nodiscard]] LaurentSeries inverse(bool leading_nonvanishing = false) const;
    /// Power with rational exponent via the binomial series; non-integer
    /// exponents need an exact root of the leading term.
    [[nodiscard]] LaurentSeries pow(const Rational& exponent, bool leading_nonvanishing = false) const;
    [[nodiscard]] LaurentSeries sqrt(bool leading_nonvanishing = false) const { return pow(Rational(1, 2), leading_nonvanishing); }
    [[nodiscard]] LaurentSeries substitute(const std::map<std::string, ParamPoly>& values) const;

    /// Sum of the known terms at a numeric point; the log term is ignored.
    [[nodiscard]] double evaluate(double x, const std::unordered_map<std::string, double>& params) const;

    /// "{d: c, ...} + O(x^n)" with degrees ascending.
    [[nodiscard]] std::string to_string() const;

    LaurentSeries& operator+=(const LaurentSeries& o);
    LaurentSeries& operator-=(const LaurentSeries& o);
    friend LaurentSeries operator+(LaurentSeries a, const LaurentSeries& b) { return a += b; }
    friend LaurentSeries operator-(LaurentSeries a, const LaurentSeries& b) { return a -= b; }
    friend LaurentSeries operator-(const LaurentSeries& a) { return a.scaled(ParamPoly(-1)); }
    friend LaurentSeries operator*(const LaurentSeries& a, const LaurentSeries& b);

    /// Equal known coefficients over the common window and equal log parts.
    friend bool operator==(const LaurentSeries& a, const LaurentSeries& b);

private:
    void set(int degree, ParamPoly c);
    void check_compatible(const LaurentSeries& o) const;

    std::string variable_ = "x";
    std::map<int, ParamPoly> terms_;
    int order_ = kExact;
    std::optional<ParamPoly> log_;
};

/// Laurent expansion of the Weierstrass function at the origin,
/// x^-2 + sum_{k>=2} c_k x^(2k-2) + O(x^order).
[[nodiscard]] LaurentSeries wp_series(const ParamPoly& g2, const ParamPoly& g3, int order, std::string variable = "eta");

} // namespace frwgalois
