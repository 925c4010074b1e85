#pragma once

#include "frwgalois/exact/rational.hpp"

#include <map>
#include <optional>
#include <string>

namespace frwgalois {

/// Finite sum  sum_r c_r * sqrt(r)  over distinct square-free integers r
/// (r = 1 is the rational part, negative r are imaginary). Enough to decide
/// exactly whether combinations of exponent differences are rational.
class Surd {
public:
    Surd() = default;
    Surd(const Rational& c);
    Surd(long c) : Surd(Rational(c)) {}
    Surd(int c) : Surd(Rational(c)) {}

    /// sqrt(x) for a rational x of either sign.
    static Surd sqrt_of(const Rational& x);

    [[nodiscard]] bool is_rational() const;
    [[nodiscard]] std::optional<Rational> rational_value() const;
    [[nodiscard]] bool is_zero() const { return parts_.empty(); }
    /// Real and imaginary parts numerically.
    [[nodiscard]] double real_value() const;
    [[nodiscard]] double imag_value() const;
    [[nodiscard]] const std::map<mpz_class, Rational>& parts() const { return parts_; }

    [[nodiscard]] std::string to_string() const;

    Surd& operator+=(const Surd& o);
    Surd& operator-=(const Surd& o);
    Surd& operator*=(const Rational& c);
    friend Surd operator+(Surd a, const Surd& b) { return a += b; }
    friend Surd operator-(Surd a, const Surd& b) { return a -= b; }
    friend Surd operator-(Surd a) { return a *= Rational(-1); }
    friend Surd operator*(Surd a, const Rational& c) { return a *= c; }
    friend bool operator==(const Surd& a, const Surd& b) { return a.parts_ == b.parts_; }

private:
    std::map<mpz_class, Rational> parts_;
};

/// Square-free part s and cofactor f with n = s * f^2 (sign kept in s).
struct SquareFreeSplit {
    mpz_class squarefree;
    mpz_class cofactor;
};

[[nodiscard]] SquareFreeSplit square_free_split(const mpz_class& n);

} // namespace frwgalois
