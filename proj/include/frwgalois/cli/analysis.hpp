#pragma once

#include "frwgalois/darboux/darboux.hpp"
#include "frwgalois/galois/galois.hpp"
#include "frwgalois/hve/hve.hpp"

#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace frwgalois {

class AnalysisInputError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// Energy level requested for an analysis: generic, zero, or a fixed rational value.
struct EnergySpec {
    enum class Kind { Generic, Zero, Value };
    Kind kind = Kind::Generic;
    Rational value;

    /// "generic", "0" or "p/q".
    static EnergySpec parse(std::string_view text);
    [[nodiscard]] bool is_zero() const { return kind == Kind::Zero; }
    [[nodiscard]] std::string to_string() const;
};

/// Identifiers of the concluding statements a verdict instantiates.
namespace theorem {
inline constexpr const char* kMinimalLambdaZero = "minimal/lambda-zero";
inline constexpr const char* kMinimalGeneric = "minimal/lambda-nonzero/generic-energy";
inline constexpr const char* kMinimalConjecture = "minimal/lambda-nonzero/generic-energy/conjecture";
inline constexpr const char* kMinimalZero = "minimal/lambda-nonzero/zero-energy";
inline constexpr const char* kConformalGeneric = "conformal/generic-energy";
inline constexpr const char* kConformalZero = "conformal/zero-energy";
} // namespace theorem

struct CanonicalSummary {
    std::string family;
    std::map<std::string, std::string> parameters;
    std::vector<std::string> exponents;
};

struct AnalysisReport {
    std::string command;
    std::string model;
    std::map<std::string, std::string> parameters;
    std::string energy;
    /// Particular solution, substitutions and reductions in the order applied.
    std::vector<std::string> trail;
    std::optional<CanonicalSummary> canonical;
    std::vector<Verdict> verdicts;
    std::vector<std::string> flags;
};

struct MinimalOptions {
    /// Run the higher variational equations in the Lame-Hermite case.
    bool hve = false;
    int hve_max_order = 5;
};

[[nodiscard]] AnalysisReport analyze_minimal(long k, const Rational& Lambda, const Rational& m2, const EnergySpec& energy,
                                             const MinimalOptions& options = {});

[[nodiscard]] AnalysisReport analyze_conformal(long k, const Rational& Lambda, const Rational& lambda, const Rational& m2,
                                               const EnergySpec& energy);

struct IntegralCheck {
    int row = 0;
    bool swapped = false;
    std::map<std::string, std::string> parameters;
    bool hamiltonian_matches = false;
    bool bracket_vanishes = false;
    /// {H, I} with H rebuilt at m2 + 1.
    bool perturbed_bracket_vanishes = true;
};

/// Exact Poisson-bracket checks of the tabulated first integrals at one
/// representative parameter point per row.
[[nodiscard]] std::vector<IntegralCheck> verify_table_integrals();
[[nodiscard]] std::optional<IntegralCheck> verify_integral(long k, const Rational& Lambda, const Rational& lambda,
                                                           const Rational& m2);

} // namespace frwgalois
