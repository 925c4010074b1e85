#pragma once

#include "frwgalois/exact/rational.hpp"

#include <complex>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

namespace frwgalois {

enum class SymbolKind { Parameter, Position, Momentum };

struct Symbol {
    std::string name;
    SymbolKind kind = SymbolKind::Parameter;
    /// Index of the canonical pair (q_i, p_i); unused for parameters.
    int pair = 0;

    friend bool operator==(const Symbol&, const Symbol&) = default;
};

/// Ordered symbol declarations shared (immutably) by polynomials.
class SymbolTable {
public:
    SymbolTable() = default;
    explicit SymbolTable(std::vector<Symbol> symbols);

    [[nodiscard]] std::size_t size() const { return symbols_.size(); }
    [[nodiscard]] const Symbol& operator[](std::size_t i) const { return symbols_[i]; }
    [[nodiscard]] const std::vector<Symbol>& symbols() const { return symbols_; }
    [[nodiscard]] std::optional<std::size_t> index_of(std::string_view name) const;

    friend bool operator==(const SymbolTable& a, const SymbolTable& b) { return a.symbols_ == b.symbols_; }

private:
    std::vector<Symbol> symbols_;
};

using SymbolTablePtr = std::shared_ptr<const SymbolTable>;

/// Exponent vector; negative entries make the ring a Laurent polynomial ring,
/// which is how kinetic terms like p^2/q^2 are carried exactly.
using Exponents = std::vector<int>;

/// Multivariate Laurent polynomial over the rationals.
///
/// Polynomials built over different symbol tables are merged on the fly; a
/// symbol declared with two different kinds is an error.
class ParamPoly {
public:
    ParamPoly() = default;
    ParamPoly(const Rational& c);
    ParamPoly(long c) : ParamPoly(Rational(c)) {}
    ParamPoly(int c) : ParamPoly(Rational(c)) {}

    static ParamPoly symbol(std::string name, SymbolKind kind = SymbolKind::Parameter, int pair = 0);
    static ParamPoly param(std::string name) { return symbol(std::move(name)); }
    static ParamPoly position(std::string name, int pair) { return symbol(std::move(name), SymbolKind::Position, pair); }
    static ParamPoly momentum(std::string name, int pair) { return symbol(std::move(name), SymbolKind::Momentum, pair); }

    [[nodiscard]] const SymbolTablePtr& table() const { return table_; }
    [[nodiscard]] const std::map<Exponents, Rational>& terms() const { return terms_; }
    [[nodiscard]] std::size_t term_count() const { return terms_.size(); }

    [[nodiscard]] bool is_zero() const { return terms_.empty(); }
    [[nodiscard]] bool is_constant() const;
    [[nodiscard]] std::optional<Rational> constant_value() const;
    /// Coefficient of the monomial with all exponents zero.
    [[nodiscard]] Rational constant_term() const;
    [[nodiscard]] bool is_monomial() const { return terms_.size() == 1; }
    [[nodiscard]] bool has_symbol(std::string_view name) const;
    [[nodiscard]] std::vector<std::string> free_symbols() const;

    [[nodiscard]] int degree(std::string_view name) const;
    [[nodiscard]] int min_degree(std::string_view name) const;
    /// Coefficients with respect to one symbol, keyed by its exponent.
    [[nodiscard]] std::map<int, ParamPoly> coefficients_in(std::string_view name) const;
    [[nodiscard]] ParamPoly coefficient(std::string_view name, int exponent) const;

    [[nodiscard]] ParamPoly derivative(std::string_view name) const;
    [[nodiscard]] ParamPoly substitute(std::string_view name, const ParamPoly& value) const;
    [[nodiscard]] ParamPoly substitute(const std::map<std::string, ParamPoly>& values) const;
    [[nodiscard]] ParamPoly pow(unsigned exponent) const;
    [[nodiscard]] ParamPoly scaled(const Rational& c) const;

    /// Monomials are invertible in the Laurent ring; anything else throws.
    [[nodiscard]] ParamPoly monomial_inverse() const;
    /// Exact quotient when `divisor` divides this polynomial; both must have
    /// non-negative exponents.
    [[nodiscard]] std::optional<ParamPoly> divide_exact(const ParamPoly& divisor) const;

    [[nodiscard]] double evaluate(const std::unordered_map<std::string, double>& values) const;
    [[nodiscard]] std::complex<double> evaluate(const std::unordered_map<std::string, std::complex<double>>& values) const;
    [[nodiscard]] Rational evaluate(const std::map<std::string, Rational>& values) const;

    /// Re-expresses the polynomial over `target`, which must contain every
    /// symbol that appears with a nonzero exponent.
    [[nodiscard]] ParamPoly rebase(const SymbolTablePtr& target) const;
    /// Drops symbols that do not occur.
    [[nodiscard]] ParamPoly compact() const;

    [[nodiscard]] std::string to_string() const;

    ParamPoly& operator+=(const ParamPoly& o);
    ParamPoly& operator-=(const ParamPoly& o);
    ParamPoly& operator*=(const ParamPoly& o);

    friend ParamPoly operator+(ParamPoly a, const ParamPoly& b) { return a += b; }
    friend ParamPoly operator-(ParamPoly a, const ParamPoly& b) { return a -= b; }
    friend ParamPoly operator*(const ParamPoly& a, const ParamPoly& b);
    friend ParamPoly operator-(const ParamPoly& a);

    friend bool operator==(const ParamPoly& a, const ParamPoly& b);

    friend std::ostream& operator<<(std::ostream& os, const ParamPoly& p) { return os << p.to_string(); }

private:
    ParamPoly(SymbolTablePtr table, std::map<Exponents, Rational> terms);
    void add_term(const Exponents& e, const Rational& c);

    SymbolTablePtr table_;
    std::map<Exponents, Rational> terms_;
};

/// Merged table plus index maps from each input table into it.
struct TableUnion {
    SymbolTablePtr table;
    std::vector<std::size_t> map_a;
    std::vector<std::size_t> map_b;
};

[[nodiscard]] TableUnion unite_tables(const SymbolTablePtr& a, const SymbolTablePtr& b);

} // namespace frwgalois
