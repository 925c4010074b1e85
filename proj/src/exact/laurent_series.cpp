#include "frwgalois/exact/laurent_series.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

namespace frwgalois {

namespace {

int sat_add(int a, int b)
{
    const long s = static_cast<long>(a) + static_cast<long>(b);
    if (s >= LaurentSeries::kExact) {
        return LaurentSeries::kExact;
    }
    return static_cast<int>(s);
}

int combine_order(int a, int b)
{
    return std::min(a, b);
}

/// Root of a rational multiple of a monomial, when exact.
std::optional<ParamPoly> monomial_root(const ParamPoly& c, long q)
{
    if (q == 1) {
        return c;
    }
    if (!c.is_monomial() || q != 2) {
        return std::nullopt;
    }
    const auto& [e, coeff] = *c.terms().begin();
    const auto r = coeff.sqrt();
    if (!r) {
        return std::nullopt;
    }
    ParamPoly out(*r);
    for (std::size_t i = 0; i < e.size(); ++i) {
        if (e[i] % 2 != 0) {
            return std::nullopt;
        }
        if (e[i] != 0) {
            const ParamPoly s = ParamPoly::symbol((*c.table())[i].name, (*c.table())[i].kind, (*c.table())[i].pair);
            out *= e[i] > 0 ? s.pow(static_cast<unsigned>(e[i] / 2)) : s.monomial_inverse().pow(static_cast<unsigned>(-e[i] / 2));
        }
    }
    return out;
}

ParamPoly leading_power(const ParamPoly& c, const Rational& p, bool leading_nonvanishing)
{
    const bool rational_lead = c.is_constant();
    if (!rational_lead && !leading_nonvanishing) {
        throw std::domain_error("leading coefficient " + c.to_string() + " is not known to be nonzero");
    }
    if (!rational_lead && !c.is_monomial()) {
        throw std::domain_error("leading coefficient " + c.to_string() + " is not a unit");
    }
    const long q = p.denominator().get_si();
    const long n = p.numerator().get_si();
    auto root = monomial_root(c, q);
    if (!root) {
        throw std::domain_error("no exact root of leading coefficient " + c.to_string());
    }
    if (n >= 0) {
        return root->pow(static_cast<unsigned>(n));
    }
    return root->monomial_inverse().pow(static_cast<unsigned>(-n));
}

} // namespace

LaurentSeries::LaurentSeries(std::string variable, int order) : variable_(std::move(variable)), order_(order) {}

LaurentSeries LaurentSeries::monomial(std::string variable, const ParamPoly& c, int degree, int order)
{
    LaurentSeries s(std::move(variable), order);
    if (degree < order) {
        s.set(degree, c);
    }
    return s;
}

LaurentSeries LaurentSeries::from_coefficients(std::string variable, int min_degree, const std::vector<ParamPoly>& coeffs,
                                               int order)
{
    LaurentSeries s(std::move(variable), order);
    for (std::size_t i = 0; i < coeffs.size(); ++i) {
        const int d = min_degree + static_cast<int>(i);
        if (d < order) {
            s.set(d, coeffs[i]);
        }
    }
    return s;
}

void LaurentSeries::set(int degree, ParamPoly c)
{
    if (c.is_zero()) {
        terms_.erase(degree);
    } else {
        terms_[degree] = std::move(c);
    }
}

void LaurentSeries::check_compatible(const LaurentSeries& o) const
{
    if (variable_ != o.variable_) {
        throw std::invalid_argument("series in different variables: " + variable_ + ", " + o.variable_);
    }
}

int LaurentSeries::valuation() const
{
    return terms_.empty() ? order_ : terms_.begin()->first;
}

int LaurentSeries::max_degree() const
{
    return terms_.empty() ? valuation() - 1 : terms_.rbegin()->first;
}

ParamPoly LaurentSeries::coefficient(int degree) const
{
    if (degree >= order_) {
        throw std::out_of_range("coefficient of " + variable_ + "^" + std::to_string(degree) + " beyond truncation order " +
                                std::to_string(order_));
    }
    auto it = terms_.find(degree);
    return it == terms_.end() ? ParamPoly() : it->second;
}

std::vector<ParamPoly> LaurentSeries::coefficients() const
{
    std::vector<ParamPoly> out;
    for (int d = valuation(); d <= max_degree(); ++d) {
        out.push_back(coefficient(d));
    }
    return out;
}

LaurentSeries LaurentSeries::truncated(int order) const
{
    LaurentSeries s = *this;
    s.order_ = std::min(order_, order);
    s.terms_.erase(s.terms_.lower_bound(s.order_), s.terms_.end());
    return s;
}

LaurentSeries LaurentSeries::scaled(const ParamPoly& c) const
{
    LaurentSeries s(variable_, order_);
    for (const auto& [d, v] : terms_) {
        s.set(d, v * c);
    }
    if (log_) {
        ParamPoly l = *log_ * c;
        if (!l.is_zero()) {
            s.log_ = std::move(l);
        }
    }
    return s;
}

LaurentSeries LaurentSeries::shifted(int shift) const
{
    if (log_) {
        throw std::domain_error("shifting a series with a logarithmic term");
    }
    LaurentSeries s(variable_, is_exact() ? kExact : order_ + shift);
    for (const auto& [d, v] : terms_) {
        s.terms_.emplace(d + shift, v);
    }
    return s;
}

LaurentSeries LaurentSeries::differentiate() const
{
    const int order = is_exact() ? kExact : order_ - 1;
    LaurentSeries s(variable_, order);
    for (const auto& [d, v] : terms_) {
        if (d != 0) {
            s.set(d - 1, v.scaled(Rational(d)));
        }
    }
    if (log_) {
        s.set(-1, s.coefficient(-1) + *log_);
    }
    const int lead = std::min(valuation(), log_ ? -1 : valuation()) - 1;
    if (!is_exact() && order <= lead && !(terms_.empty() && !log_)) {
        throw TruncationUnderflow("differentiation leaves no known term");
    }
    return s;
}

LaurentSeries LaurentSeries::integrate() const
{
    if (log_) {
        throw std::domain_error("integration of a logarithmic term is not supported");
    }
    const int order = is_exact() ? kExact : order_ + 1;
    LaurentSeries s(variable_, order);
    for (const auto& [d, v] : terms_) {
        if (d == -1) {
            s.log_ = v;
        } else {
            s.set(d + 1, v.scaled(Rational(1, d + 1)));
        }
    }
    return s;
}

LaurentSeries LaurentSeries::inverse(bool leading_nonvanishing) const
{
    return pow(Rational(-1), leading_nonvanishing);
}

LaurentSeries LaurentSeries::pow(const Rational& exponent, bool leading_nonvanishing) const
{
    if (log_) {
        throw std::domain_error("power of a series with a logarithmic term");
    }
    if (exponent.is_zero()) {
        return monomial(variable_, ParamPoly(1), 0);
    }
    if (terms_.empty()) {
        if (exponent.sign() < 0) {
            throw std::domain_error("negative power of a zero series");
        }
        throw TruncationUnderflow("power of a series with no known term");
    }
    const int v = valuation();
    const Rational pv = exponent * Rational(v);
    if (!pv.is_integer()) {
        throw std::domain_error("fractional power of the leading monomial");
    }
    const int lead_degree = static_cast<int>(pv.numerator().get_si());
    const ParamPoly& lead = terms_.begin()->second;

    // Positive integer powers: repeated products keep the truncation bookkeeping.
    if (exponent.is_integer() && exponent.sign() > 0) {
        LaurentSeries result = monomial(variable_, ParamPoly(1), 0);
        LaurentSeries base = *this;
        long n = exponent.numerator().get_si();
        while (n > 0) {
            if (n & 1) {
                result = result * base;
            }
            n >>= 1;
            if (n > 0) {
                base = base * base;
            }
        }
        return result;
    }
    if (is_exact() && terms_.size() == 1) {
        return monomial(variable_, leading_power(lead, exponent, leading_nonvanishing), lead_degree);
    }
    if (is_exact()) {
        throw std::domain_error("non-polynomial power of an exact multi-term series needs a truncation order");
    }

    // x^-v * s / lead = 1 + u with u known on [1, order - v).
    const int rel_order = order_ - v;
    const ParamPoly lead_inv = lead.is_constant() ? ParamPoly(lead.constant_term().inverse()) : [&] {
        if (!leading_nonvanishing) {
            throw std::domain_error("leading coefficient " + lead.to_string() + " is not known to be nonzero");
        }
        return lead.monomial_inverse();
    }();
    LaurentSeries u(variable_, rel_order);
    for (const auto& [d, c] : terms_) {
        if (d > v) {
            u.set(d - v, c * lead_inv);
        }
    }
    LaurentSeries sum = monomial(variable_, ParamPoly(1), 0, rel_order);
    LaurentSeries upow = monomial(variable_, ParamPoly(1), 0, rel_order);
    Rational binom(1);
    for (int k = 1; k < rel_order; ++k) {
        if (u.terms_.empty() || upow.valuation() + u.valuation() >= rel_order) {
            break;
        }
        upow = (upow * u).truncated(rel_order);
        binom = binom * (exponent - Rational(k - 1)) / Rational(k);
        sum += upow.scaled(ParamPoly(binom));
    }
    const ParamPoly lead_pow = leading_power(lead, exponent, leading_nonvanishing);
    LaurentSeries out = sum.scaled(lead_pow).shifted(lead_degree);
    out.order_ = rel_order + lead_degree;
    return out;
}

LaurentSeries LaurentSeries::substitute(const std::map<std::string, ParamPoly>& values) const
{
    LaurentSeries s(variable_, order_);
    for (const auto& [d, v] : terms_) {
        s.set(d, v.substitute(values));
    }
    if (log_) {
        ParamPoly l = log_->substitute(values);
        if (!l.is_zero()) {
            s.log_ = std::move(l);
        }
    }
    return s;
}

double LaurentSeries::evaluate(double x, const std::unordered_map<std::string, double>& params) const
{
    double sum = 0.0;
    for (const auto& [d, v] : terms_) {
        sum += v.evaluate(params) * std::pow(x, d);
    }
    return sum;
}

std::string LaurentSeries::to_string() const
{
    std::ostringstream os;
    os << '{';
    bool first = true;
    for (const auto& [d, v] : terms_) {
        os << (first ? "" : ", ") << d << ": " << v;
        first = false;
    }
    os << '}';
    if (log_) {
        os << " + (" << *log_ << ")*log(" << variable_ << ')';
    }
    if (!is_exact()) {
        os << " + O(" << variable_ << '^' << order_ << ')';
    }
    return os.str();
}

LaurentSeries& LaurentSeries::operator+=(const LaurentSeries& o)
{
    check_compatible(o);
    const int order = combine_order(order_, o.order_);
    const int lead = std::min(valuation(), o.valuation());
    if (order < kExact && order <= lead && !(terms_.empty() && o.terms_.empty())) {
        throw TruncationUnderflow("sum leaves no known term");
    }
    order_ = order;
    terms_.erase(terms_.lower_bound(order_), terms_.end());
    for (auto it = o.terms_.begin(); it != o.terms_.end() && it->first < order_; ++it) {
        auto found = terms_.find(it->first);
        set(it->first, found == terms_.end() ? it->second : found->second + it->second);
    }
    if (o.log_) {
        ParamPoly l = log_ ? *log_ + *o.log_ : *o.log_;
        if (l.is_zero()) {
            log_.reset();
        } else {
            log_ = std::move(l);
        }
    }
    return *this;
}

LaurentSeries& LaurentSeries::operator-=(const LaurentSeries& o)
{
    return *this += -o;
}

LaurentSeries operator*(const LaurentSeries& a, const LaurentSeries& b)
{
    a.check_compatible(b);
    if (a.log_ || b.log_) {
        throw std::domain_error("product of series with logarithmic terms");
    }
    const bool a_exact_zero = a.is_exact() && a.terms_.empty();
    const bool b_exact_zero = b.is_exact() && b.terms_.empty();
    if (a_exact_zero || b_exact_zero) {
        return LaurentSeries(a.variable_);
    }
    const int va = a.valuation();
    const int vb = b.valuation();
    const int order = std::min(sat_add(a.order_, vb), sat_add(b.order_, va));
    if (a.terms_.empty() || b.terms_.empty()) {
        return LaurentSeries(a.variable_, order);
    }
    if (order < LaurentSeries::kExact && order <= va + vb) {
        throw TruncationUnderflow("product leaves no known term");
    }
    LaurentSeries s(a.variable_, order);
    std::map<int, ParamPoly> acc;
    for (const auto& [da, ca] : a.terms_) {
        for (const auto& [db, cb] : b.terms_) {
            const int d = da + db;
            if (d >= order) {
                break;
            }
            auto [it, inserted] = acc.try_emplace(d, ca * cb);
            if (!inserted) {
                it->second += ca * cb;
            }
        }
    }
    for (auto& [d, c] : acc) {
        s.set(d, std::move(c));
    }
    return s;
}

bool operator==(const LaurentSeries& a, const LaurentSeries& b)
{
    if (a.variable_ != b.variable_) {
        return false;
    }
    const int order = std::min(a.order_, b.order_);
    const bool la = a.log_.has_value();
    const bool lb = b.log_.has_value();
    if (la != lb || (la && !(*a.log_ == *b.log_))) {
        return false;
    }
    std::map<int, ParamPoly> diff;
    for (const auto& [d, c] : a.terms_) {
        if (d < order) {
            diff[d] += c;
        }
    }
    for (const auto& [d, c] : b.terms_) {
        if (d < order) {
            diff[d] -= c;
        }
    }
    return std::all_of(diff.begin(), diff.end(), [](const auto& kv) { return kv.second.is_zero(); });
}

LaurentSeries wp_series(const ParamPoly& g2, const ParamPoly& g3, int order, std::string variable)
{
    if (order < 2) {
        throw std::invalid_argument("wp_series needs order >= 2");
    }
    // c_k multiplies x^(2k-2); known degrees are < order.
    std::vector<ParamPoly> c(2);
    LaurentSeries s = LaurentSeries::monomial(variable, ParamPoly(1), -2, order);
    for (int k = 2;; ++k) {
        const int degree = 2 * k - 2;
        if (degree >= order) {
            break;
        }
        ParamPoly ck;
        if (k == 2) {
            ck = g2.scaled(Rational(1, 20));
        } else if (k == 3) {
            ck = g3.scaled(Rational(1, 28));
        } else {
            for (int m = 2; m <= k - 2; ++m) {
                ck += c[m] * c[k - m];
            }
            ck = ck.scaled(Rational(3, (2 * k + 1) * (k - 3)));
        }
        c.push_back(ck);
        s += LaurentSeries::monomial(variable, ck, degree, order);
    }
    return s;
}

} // namespace frwgalois
