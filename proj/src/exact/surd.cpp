#include "frwgalois/exact/surd.hpp"

#include <cmath>
#include <sstream>

namespace frwgalois {

SquareFreeSplit square_free_split(const mpz_class& n)
{
    if (n == 0) {
        return {0, 1};
    }
    mpz_class rest = abs(n);
    mpz_class s = 1;
    mpz_class f = 1;
    // Trial division, then a perfect-square test on what is left. A leftover
    // with a repeated prime factor above the trial bound is treated as square-free.
    constexpr unsigned long kBound = 100000;
    for (unsigned long p = 2; p <= kBound; p += (p == 2 ? 1 : 2)) {
        const mpz_class pp = p;
        if (pp * pp > rest) {
            break;
        }
        int count = 0;
        while (mpz_divisible_ui_p(rest.get_mpz_t(), p) != 0) {
            rest /= p;
            ++count;
        }
        for (int i = 0; i < count / 2; ++i) {
            f *= p;
        }
        if (count % 2 == 1) {
            s *= p;
        }
    }
    if (rest > 1) {
        if (mpz_perfect_square_p(rest.get_mpz_t()) != 0) {
            mpz_class r;
            mpz_sqrt(r.get_mpz_t(), rest.get_mpz_t());
            f *= r;
        } else {
            s *= rest;
        }
    }
    if (n < 0) {
        s = -s;
    }
    return {s, f};
}

Surd::Surd(const Rational& c)
{
    if (!c.is_zero()) {
        parts_.emplace(mpz_class(1), c);
    }
}

Surd Surd::sqrt_of(const Rational& x)
{
    Surd out;
    if (x.is_zero()) {
        return out;
    }
    // sqrt(p/q) = sqrt(p*q)/q
    const mpz_class pq = x.numerator() * x.denominator();
    const auto split = square_free_split(pq);
    out.parts_.emplace(split.squarefree, Rational(split.cofactor, x.denominator()));
    return out;
}

bool Surd::is_rational() const
{
    return parts_.empty() || (parts_.size() == 1 && parts_.begin()->first == 1);
}

std::optional<Rational> Surd::rational_value() const
{
    if (!is_rational()) {
        return std::nullopt;
    }
    return parts_.empty() ? Rational(0) : parts_.begin()->second;
}

double Surd::real_value() const
{
    double sum = 0.0;
    for (const auto& [r, c] : parts_) {
        if (r > 0) {
            sum += c.to_double() * std::sqrt(r.get_d());
        }
    }
    return sum;
}

double Surd::imag_value() const
{
    double sum = 0.0;
    for (const auto& [r, c] : parts_) {
        if (r < 0) {
            sum += c.to_double() * std::sqrt(-r.get_d());
        }
    }
    return sum;
}

std::string Surd::to_string() const
{
    if (parts_.empty()) {
        return "0";
    }
    std::ostringstream os;
    bool first = true;
    for (const auto& [r, c] : parts_) {
        if (!first) {
            os << " + ";
        }
        os << c;
        if (r != 1) {
            os << "*sqrt(" << r.get_str() << ')';
        }
        first = false;
    }
    return os.str();
}

Surd& Surd::operator+=(const Surd& o)
{
    for (const auto& [r, c] : o.parts_) {
        auto [it, inserted] = parts_.try_emplace(r, c);
        if (!inserted) {
            it->second += c;
            if (it->second.is_zero()) {
                parts_.erase(it);
            }
        }
    }
    return *this;
}

Surd& Surd::operator-=(const Surd& o)
{
    return *this += -o;
}

Surd& Surd::operator*=(const Rational& c)
{
    if (c.is_zero()) {
        parts_.clear();
        return *this;
    }
    for (auto& [r, v] : parts_) {
        v *= c;
    }
    return *this;
}

} // namespace frwgalois
