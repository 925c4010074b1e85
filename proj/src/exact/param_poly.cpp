#include "frwgalois/exact/param_poly.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace frwgalois {

SymbolTable::SymbolTable(std::vector<Symbol> symbols) : symbols_(std::move(symbols))
{
    for (std::size_t i = 0; i < symbols_.size(); ++i) {
        for (std::size_t j = i + 1; j < symbols_.size(); ++j) {
            if (symbols_[i].name == symbols_[j].name) {
                throw std::invalid_argument("duplicate symbol " + symbols_[i].name);
            }
        }
    }
}

std::optional<std::size_t> SymbolTable::index_of(std::string_view name) const
{
    for (std::size_t i = 0; i < symbols_.size(); ++i) {
        if (symbols_[i].name == name) {
            return i;
        }
    }
    return std::nullopt;
}

namespace {

std::size_t table_size(const SymbolTablePtr& t) { return t ? t->size() : 0; }

bool same_table(const SymbolTablePtr& a, const SymbolTablePtr& b)
{
    if (a == b) {
        return true;
    }
    if (table_size(a) == 0 && table_size(b) == 0) {
        return true;
    }
    return a && b && *a == *b;
}

Exponents remap(const Exponents& e, const std::vector<std::size_t>& map, std::size_t width)
{
    Exponents out(width, 0);
    for (std::size_t i = 0; i < e.size(); ++i) {
        out[map[i]] = e[i];
    }
    return out;
}

bool all_zero(const Exponents& e)
{
    return std::all_of(e.begin(), e.end(), [](int x) { return x == 0; });
}

template <class T>
T int_pow(T base, int exponent)
{
    if (exponent < 0) {
        return T(1) / int_pow(base, -exponent);
    }
    T result(1);
    while (exponent > 0) {
        if (exponent & 1) {
            result *= base;
        }
        base *= base;
        exponent >>= 1;
    }
    return result;
}

} // namespace

TableUnion unite_tables(const SymbolTablePtr& a, const SymbolTablePtr& b)
{
    TableUnion u;
    const std::size_t na = table_size(a);
    const std::size_t nb = table_size(b);
    if (same_table(a, b)) {
        u.table = na ? a : b;
        u.map_a.resize(na);
        u.map_b.resize(nb);
        for (std::size_t i = 0; i < na; ++i) {
            u.map_a[i] = i;
        }
        for (std::size_t i = 0; i < nb; ++i) {
            u.map_b[i] = i;
        }
        return u;
    }
    if (na == 0 || nb == 0) {
        u.table = na == 0 ? b : a;
        u.map_a.resize(na);
        u.map_b.resize(nb);
        for (std::size_t i = 0; i < na; ++i) {
            u.map_a[i] = i;
        }
        for (std::size_t i = 0; i < nb; ++i) {
            u.map_b[i] = i;
        }
        return u;
    }
    std::vector<Symbol> merged = a->symbols();
    u.map_a.resize(na);
    for (std::size_t i = 0; i < na; ++i) {
        u.map_a[i] = i;
    }
    u.map_b.resize(nb);
    for (std::size_t i = 0; i < nb; ++i) {
        const Symbol& s = (*b)[i];
        auto it = std::find_if(merged.begin(), merged.end(), [&](const Symbol& m) { return m.name == s.name; });
        if (it == merged.end()) {
            u.map_b[i] = merged.size();
            merged.push_back(s);
        } else {
            if (it->kind != s.kind || it->pair != s.pair) {
                throw std::invalid_argument("symbol " + s.name + " declared with conflicting kinds");
            }
            u.map_b[i] = static_cast<std::size_t>(it - merged.begin());
        }
    }
    if (merged.size() == na) {
        u.table = a;
    } else {
        u.table = std::make_shared<const SymbolTable>(std::move(merged));
    }
    return u;
}

ParamPoly::ParamPoly(const Rational& c)
{
    if (!c.is_zero()) {
        terms_.emplace(Exponents{}, c);
    }
}

ParamPoly::ParamPoly(SymbolTablePtr table, std::map<Exponents, Rational> terms)
    : table_(std::move(table)), terms_(std::move(terms))
{
}

ParamPoly ParamPoly::symbol(std::string name, SymbolKind kind, int pair)
{
    auto table = std::make_shared<const SymbolTable>(std::vector<Symbol>{Symbol{std::move(name), kind, pair}});
    std::map<Exponents, Rational> terms;
    terms.emplace(Exponents{1}, Rational(1));
    return ParamPoly(std::move(table), std::move(terms));
}

void ParamPoly::add_term(const Exponents& e, const Rational& c)
{
    if (c.is_zero()) {
        return;
    }
    auto [it, inserted] = terms_.try_emplace(e, c);
    if (!inserted) {
        it->second += c;
        if (it->second.is_zero()) {
            terms_.erase(it);
        }
    }
}

bool ParamPoly::is_constant() const
{
    return terms_.empty() || (terms_.size() == 1 && all_zero(terms_.begin()->first));
}

std::optional<Rational> ParamPoly::constant_value() const
{
    if (!is_constant()) {
        return std::nullopt;
    }
    return constant_term();
}

Rational ParamPoly::constant_term() const
{
    for (const auto& [e, c] : terms_) {
        if (all_zero(e)) {
            return c;
        }
    }
    return Rational(0);
}

bool ParamPoly::has_symbol(std::string_view name) const
{
    if (!table_) {
        return false;
    }
    const auto idx = table_->index_of(name);
    if (!idx) {
        return false;
    }
    return std::any_of(terms_.begin(), terms_.end(), [&](const auto& t) { return t.first[*idx] != 0; });
}

std::vector<std::string> ParamPoly::free_symbols() const
{
    std::vector<std::string> out;
    for (std::size_t i = 0; i < table_size(table_); ++i) {
        if (has_symbol((*table_)[i].name)) {
            out.push_back((*table_)[i].name);
        }
    }
    return out;
}

int ParamPoly::degree(std::string_view name) const
{
    const auto idx = table_ ? table_->index_of(name) : std::nullopt;
    int d = 0;
    bool first = true;
    for (const auto& [e, c] : terms_) {
        const int x = idx ? e[*idx] : 0;
        d = first ? x : std::max(d, x);
        first = false;
    }
    return d;
}

int ParamPoly::min_degree(std::string_view name) const
{
    const auto idx = table_ ? table_->index_of(name) : std::nullopt;
    int d = 0;
    bool first = true;
    for (const auto& [e, c] : terms_) {
        const int x = idx ? e[*idx] : 0;
        d = first ? x : std::min(d, x);
        first = false;
    }
    return d;
}

std::map<int, ParamPoly> ParamPoly::coefficients_in(std::string_view name) const
{
    std::map<int, ParamPoly> out;
    const auto idx = table_ ? table_->index_of(name) : std::nullopt;
    for (const auto& [e, c] : terms_) {
        const int x = idx ? e[*idx] : 0;
        Exponents rest = e;
        if (idx) {
            rest[*idx] = 0;
        }
        auto [it, inserted] = out.try_emplace(x, ParamPoly(table_, {}));
        it->second.add_term(rest, c);
    }
    return out;
}

ParamPoly ParamPoly::coefficient(std::string_view name, int exponent) const
{
    auto all = coefficients_in(name);
    auto it = all.find(exponent);
    return it == all.end() ? ParamPoly() : it->second;
}

ParamPoly ParamPoly::derivative(std::string_view name) const
{
    const auto idx = table_ ? table_->index_of(name) : std::nullopt;
    if (!idx) {
        return ParamPoly();
    }
    ParamPoly out(table_, {});
    for (const auto& [e, c] : terms_) {
        const int x = e[*idx];
        if (x == 0) {
            continue;
        }
        Exponents d = e;
        d[*idx] = x - 1;
        out.add_term(d, c * Rational(x));
    }
    return out;
}

ParamPoly ParamPoly::substitute(std::string_view name, const ParamPoly& value) const
{
    const auto idx = table_ ? table_->index_of(name) : std::nullopt;
    if (!idx) {
        return *this;
    }
    std::map<int, ParamPoly> powers;
    ParamPoly out;
    for (const auto& [e, c] : terms_) {
        const int x = e[*idx];
        Exponents rest = e;
        rest[*idx] = 0;
        ParamPoly term(table_, {});
        term.add_term(rest, c);
        if (x != 0) {
            auto it = powers.find(x);
            if (it == powers.end()) {
                ParamPoly p = x > 0 ? value.pow(static_cast<unsigned>(x)) : value.monomial_inverse().pow(static_cast<unsigned>(-x));
                it = powers.emplace(x, std::move(p)).first;
            }
            term *= it->second;
        }
        out += term;
    }
    return out;
}

ParamPoly ParamPoly::substitute(const std::map<std::string, ParamPoly>& values) const
{
    // Simultaneous substitution: evaluate monomials directly.
    if (!table_) {
        return *this;
    }
    std::vector<const ParamPoly*> image(table_->size(), nullptr);
    for (std::size_t i = 0; i < table_->size(); ++i) {
        auto it = values.find((*table_)[i].name);
        if (it != values.end()) {
            image[i] = &it->second;
        }
    }
    ParamPoly out;
    for (const auto& [e, c] : terms_) {
        Exponents rest = e;
        ParamPoly term;
        bool started = false;
        for (std::size_t i = 0; i < e.size(); ++i) {
            if (image[i] != nullptr && e[i] != 0) {
                rest[i] = 0;
                ParamPoly f = e[i] > 0 ? image[i]->pow(static_cast<unsigned>(e[i]))
                                       : image[i]->monomial_inverse().pow(static_cast<unsigned>(-e[i]));
                term = started ? term * f : f;
                started = true;
            }
        }
        ParamPoly base(table_, {});
        base.add_term(rest, c);
        out += started ? base * term : base;
    }
    return out;
}

ParamPoly ParamPoly::pow(unsigned exponent) const
{
    ParamPoly result(1);
    ParamPoly base = *this;
    while (exponent > 0) {
        if (exponent & 1U) {
            result *= base;
        }
        exponent >>= 1U;
        if (exponent > 0) {
            base *= base;
        }
    }
    return result;
}

ParamPoly ParamPoly::scaled(const Rational& c) const
{
    if (c.is_zero()) {
        return ParamPoly();
    }
    ParamPoly out = *this;
    for (auto& [e, v] : out.terms_) {
        v *= c;
    }
    return out;
}

ParamPoly ParamPoly::monomial_inverse() const
{
    if (!is_monomial()) {
        throw std::domain_error("only monomials are invertible: " + to_string());
    }
    const auto& [e, c] = *terms_.begin();
    Exponents inv = e;
    for (int& x : inv) {
        x = -x;
    }
    std::map<Exponents, Rational> t;
    t.emplace(inv, c.inverse());
    return ParamPoly(table_, std::move(t));
}

std::optional<ParamPoly> ParamPoly::divide_exact(const ParamPoly& divisor) const
{
    if (divisor.is_zero()) {
        throw std::domain_error("polynomial division by zero");
    }
    if (is_zero()) {
        return ParamPoly();
    }
    auto u = unite_tables(table_, divisor.table_);
    const std::size_t w = u.table->size();
    auto lift = [&](const ParamPoly& p, const std::vector<std::size_t>& map) {
        std::map<Exponents, Rational> t;
        for (const auto& [e, c] : p.terms_) {
            Exponents x = remap(e, map, w);
            if (std::any_of(x.begin(), x.end(), [](int v) { return v < 0; })) {
                throw std::domain_error("divide_exact needs non-negative exponents");
            }
            t.emplace(std::move(x), c);
        }
        return ParamPoly(u.table, std::move(t));
    };
    ParamPoly rem = lift(*this, u.map_a);
    const ParamPoly d = lift(divisor, u.map_b);
    const auto& [lead_e, lead_c] = *d.terms_.rbegin();
    ParamPoly quot(u.table, {});
    while (!rem.is_zero()) {
        const auto& [re, rc] = *rem.terms_.rbegin();
        Exponents qe(w, 0);
        for (std::size_t i = 0; i < w; ++i) {
            qe[i] = re[i] - lead_e[i];
            if (qe[i] < 0) {
                return std::nullopt;
            }
        }
        std::map<Exponents, Rational> mt;
        mt.emplace(qe, rc / lead_c);
        const ParamPoly m(u.table, std::move(mt));
        quot += m;
        rem -= m * d;
    }
    return quot;
}

double ParamPoly::evaluate(const std::unordered_map<std::string, double>& values) const
{
    std::vector<double> v(table_size(table_), 0.0);
    for (std::size_t i = 0; i < v.size(); ++i) {
        auto it = values.find((*table_)[i].name);
        if (it != values.end()) {
            v[i] = it->second;
        } else if (has_symbol((*table_)[i].name)) {
            throw std::invalid_argument("no value for symbol " + (*table_)[i].name);
        }
    }
    double sum = 0.0;
    for (const auto& [e, c] : terms_) {
        double term = c.to_double();
        for (std::size_t i = 0; i < e.size(); ++i) {
            if (e[i] != 0) {
                term *= int_pow(v[i], e[i]);
            }
        }
        sum += term;
    }
    return sum;
}

std::complex<double> ParamPoly::evaluate(const std::unordered_map<std::string, std::complex<double>>& values) const
{
    using C = std::complex<double>;
    std::vector<C> v(table_size(table_), C(0.0));
    for (std::size_t i = 0; i < v.size(); ++i) {
        auto it = values.find((*table_)[i].name);
        if (it != values.end()) {
            v[i] = it->second;
        } else if (has_symbol((*table_)[i].name)) {
            throw std::invalid_argument("no value for symbol " + (*table_)[i].name);
        }
    }
    C sum(0.0);
    for (const auto& [e, c] : terms_) {
        C term(c.to_double());
        for (std::size_t i = 0; i < e.size(); ++i) {
            if (e[i] != 0) {
                term *= int_pow(v[i], e[i]);
            }
        }
        sum += term;
    }
    return sum;
}

Rational ParamPoly::evaluate(const std::map<std::string, Rational>& values) const
{
    std::vector<Rational> v(table_size(table_));
    for (std::size_t i = 0; i < v.size(); ++i) {
        auto it = values.find((*table_)[i].name);
        if (it != values.end()) {
            v[i] = it->second;
        } else if (has_symbol((*table_)[i].name)) {
            throw std::invalid_argument("no value for symbol " + (*table_)[i].name);
        }
    }
    Rational sum;
    for (const auto& [e, c] : terms_) {
        Rational term = c;
        for (std::size_t i = 0; i < e.size(); ++i) {
            if (e[i] != 0) {
                term *= v[i].pow(e[i]);
            }
        }
        sum += term;
    }
    return sum;
}

ParamPoly ParamPoly::rebase(const SymbolTablePtr& target) const
{
    if (same_table(table_, target)) {
        return ParamPoly(target, terms_);
    }
    const std::size_t n = table_size(table_);
    std::vector<std::size_t> map(n, 0);
    std::vector<bool> present(n, false);
    for (std::size_t i = 0; i < n; ++i) {
        const auto idx = target ? target->index_of((*table_)[i].name) : std::nullopt;
        if (idx) {
            if ((*target)[*idx].kind != (*table_)[i].kind) {
                throw std::invalid_argument("symbol kind mismatch for " + (*table_)[i].name);
            }
            map[i] = *idx;
            present[i] = true;
        } else if (has_symbol((*table_)[i].name)) {
            throw std::invalid_argument("target table lacks symbol " + (*table_)[i].name);
        }
    }
    const std::size_t w = table_size(target);
    std::map<Exponents, Rational> t;
    for (const auto& [e, c] : terms_) {
        Exponents x(w, 0);
        for (std::size_t i = 0; i < e.size(); ++i) {
            if (present[i]) {
                x[map[i]] = e[i];
            }
        }
        t.emplace(std::move(x), c);
    }
    return ParamPoly(target, std::move(t));
}

ParamPoly ParamPoly::compact() const
{
    std::vector<Symbol> used;
    for (std::size_t i = 0; i < table_size(table_); ++i) {
        if (has_symbol((*table_)[i].name)) {
            used.push_back((*table_)[i]);
        }
    }
    if (used.size() == table_size(table_)) {
        return *this;
    }
    return rebase(used.empty() ? nullptr : std::make_shared<const SymbolTable>(std::move(used)));
}

std::string ParamPoly::to_string() const
{
    if (terms_.empty()) {
        return "0";
    }
    std::ostringstream os;
    bool first = true;
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
        const auto& [e, c] = *it;
        std::ostringstream mono;
        bool has_var = false;
        for (std::size_t i = 0; i < e.size(); ++i) {
            if (e[i] == 0) {
                continue;
            }
            if (has_var) {
                mono << '*';
            }
            mono << (*table_)[i].name;
            if (e[i] != 1) {
                mono << '^' << e[i];
            }
            has_var = true;
        }
        const Rational mag = c.abs();
        if (first) {
            if (c.sign() < 0) {
                os << '-';
            }
        } else {
            os << (c.sign() < 0 ? " - " : " + ");
        }
        if (!has_var) {
            os << mag;
        } else if (mag.is_one()) {
            os << mono.str();
        } else {
            os << mag << '*' << mono.str();
        }
        first = false;
    }
    return os.str();
}

ParamPoly& ParamPoly::operator+=(const ParamPoly& o)
{
    if (o.terms_.empty()) {
        return *this;
    }
    if (same_table(table_, o.table_)) {
        if (!table_) {
            table_ = o.table_;
        }
        for (const auto& [e, c] : o.terms_) {
            Exponents x = e;
            x.resize(table_size(table_), 0);
            add_term(x, c);
        }
        return *this;
    }
    auto u = unite_tables(table_, o.table_);
    const std::size_t w = u.table->size();
    std::map<Exponents, Rational> mine;
    for (const auto& [e, c] : terms_) {
        mine.emplace(remap(e, u.map_a, w), c);
    }
    terms_ = std::move(mine);
    table_ = u.table;
    for (const auto& [e, c] : o.terms_) {
        add_term(remap(e, u.map_b, w), c);
    }
    return *this;
}

ParamPoly& ParamPoly::operator-=(const ParamPoly& o)
{
    return *this += -o;
}

ParamPoly operator-(const ParamPoly& a)
{
    ParamPoly out = a;
    for (auto& [e, c] : out.terms_) {
        c = -c;
    }
    return out;
}

ParamPoly operator*(const ParamPoly& a, const ParamPoly& b)
{
    if (a.terms_.empty() || b.terms_.empty()) {
        return ParamPoly();
    }
    if (auto c = b.constant_value()) {
        ParamPoly out = a.scaled(*c);
        return out;
    }
    if (auto c = a.constant_value()) {
        return b.scaled(*c);
    }
    auto u = unite_tables(a.table_, b.table_);
    const std::size_t w = u.table->size();
    std::vector<std::pair<Exponents, Rational>> ta;
    std::vector<std::pair<Exponents, Rational>> tb;
    ta.reserve(a.terms_.size());
    tb.reserve(b.terms_.size());
    for (const auto& [e, c] : a.terms_) {
        ta.emplace_back(remap(e, u.map_a, w), c);
    }
    for (const auto& [e, c] : b.terms_) {
        tb.emplace_back(remap(e, u.map_b, w), c);
    }
    ParamPoly out(u.table, {});
    Exponents x(w, 0);
    for (const auto& [ea, ca] : ta) {
        for (const auto& [eb, cb] : tb) {
            for (std::size_t i = 0; i < w; ++i) {
                x[i] = ea[i] + eb[i];
            }
            out.add_term(x, ca * cb);
        }
    }
    return out;
}

ParamPoly& ParamPoly::operator*=(const ParamPoly& o)
{
    *this = *this * o;
    return *this;
}

bool operator==(const ParamPoly& a, const ParamPoly& b)
{
    return (a - b).is_zero();
}

} // namespace frwgalois
