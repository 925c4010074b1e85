#include "frwgalois/exact/rational.hpp"

#include <cctype>

namespace frwgalois {

Rational::Rational(long num, long den)
{
    if (den == 0) {
        throw std::domain_error("rational with zero denominator");
    }
    value_ = mpq_class(num, den);
    value_.canonicalize();
}

Rational::Rational(const mpz_class& num, const mpz_class& den)
{
    if (den == 0) {
        throw std::domain_error("rational with zero denominator");
    }
    value_ = mpq_class(num, den);
    value_.canonicalize();
}

Rational Rational::parse(std::string_view text)
{
    std::string s;
    for (char c : text) {
        if (!std::isspace(static_cast<unsigned char>(c))) {
            s.push_back(c);
        }
    }
    if (s.empty()) {
        throw std::invalid_argument("empty rational literal");
    }
    auto valid_integer = [](std::string_view digits) {
        std::size_t i = 0;
        if (i < digits.size() && (digits[i] == '-' || digits[i] == '+')) {
            ++i;
        }
        if (i == digits.size()) {
            return false;
        }
        for (; i < digits.size(); ++i) {
            if (!std::isdigit(static_cast<unsigned char>(digits[i]))) {
                return false;
            }
        }
        return true;
    };
    auto make_integer = [&](std::string digits) {
        if (!valid_integer(digits)) {
            throw std::invalid_argument("malformed rational literal: " + s);
        }
        if (digits.front() == '+') {
            digits.erase(0, 1);
        }
        return mpz_class(digits, 10);
    };

    if (const auto slash = s.find('/'); slash != std::string::npos) {
        const mpz_class num = make_integer(s.substr(0, slash));
        const mpz_class den = make_integer(s.substr(slash + 1));
        if (den == 0) {
            throw std::invalid_argument("zero denominator in literal: " + s);
        }
        return Rational(num, den);
    }
    if (const auto dot = s.find('.'); dot != std::string::npos) {
        std::string whole = s.substr(0, dot);
        const std::string frac = s.substr(dot + 1);
        bool negative = !whole.empty() && whole.front() == '-';
        if (whole.empty() || whole == "-" || whole == "+") {
            whole += "0";
        }
        if (frac.empty() || !valid_integer(frac) || frac.front() == '-' || frac.front() == '+') {
            throw std::invalid_argument("malformed decimal literal: " + s);
        }
        mpz_class scale = 1;
        for (std::size_t i = 0; i < frac.size(); ++i) {
            scale *= 10;
        }
        mpz_class w = make_integer(whole);
        mpz_class f(frac, 10);
        mpz_class num = ::abs(w) * scale + f;
        if (negative) {
            num = -num;
        }
        return Rational(num, scale);
    }
    return Rational(make_integer(s));
}

std::optional<long> Rational::to_long() const
{
    if (!is_integer() || !value_.get_num().fits_slong_p()) {
        return std::nullopt;
    }
    return value_.get_num().get_si();
}

std::optional<Rational> Rational::sqrt() const
{
    if (sign() < 0) {
        return std::nullopt;
    }
    const mpz_class num = value_.get_num();
    const mpz_class den = value_.get_den();
    if (mpz_perfect_square_p(num.get_mpz_t()) == 0 || mpz_perfect_square_p(den.get_mpz_t()) == 0) {
        return std::nullopt;
    }
    mpz_class rn;
    mpz_class rd;
    mpz_sqrt(rn.get_mpz_t(), num.get_mpz_t());
    mpz_sqrt(rd.get_mpz_t(), den.get_mpz_t());
    return Rational(rn, rd);
}

Rational Rational::inverse() const
{
    if (is_zero()) {
        throw std::domain_error("inverse of zero rational");
    }
    return Rational(mpq_class(1 / value_));
}

Rational Rational::pow(long exponent) const
{
    if (exponent < 0) {
        return inverse().pow(-exponent);
    }
    mpz_class num;
    mpz_class den;
    mpz_pow_ui(num.get_mpz_t(), value_.get_num_mpz_t(), static_cast<unsigned long>(exponent));
    mpz_pow_ui(den.get_mpz_t(), value_.get_den_mpz_t(), static_cast<unsigned long>(exponent));
    return Rational(num, den);
}

mpz_class Rational::floor() const
{
    mpz_class q;
    mpz_fdiv_q(q.get_mpz_t(), value_.get_num_mpz_t(), value_.get_den_mpz_t());
    return q;
}

Rational& Rational::operator/=(const Rational& o)
{
    if (o.is_zero()) {
        throw std::domain_error("division by zero rational");
    }
    value_ /= o.value_;
    return *this;
}

std::size_t hash_value(const Rational& r)
{
    return std::hash<std::string>{}(r.to_string());
}

} // namespace frwgalois
