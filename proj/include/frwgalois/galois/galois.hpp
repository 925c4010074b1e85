#pragma once

#include "frwgalois/exact/surd.hpp"
#include "frwgalois/linode/linode.hpp"

#include <array>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace frwgalois {

enum class VerdictStatus { Integrable, NonIntegrable, CandidateOpen, Degenerate };

[[nodiscard]] std::string to_string(VerdictStatus status);

namespace scope {
inline constexpr const char* kGenericEnergy = "generic energy";
inline constexpr const char* kZeroEnergy = "E=0";
inline constexpr const char* kAll = "all";
} // namespace scope

struct Verdict {
    VerdictStatus status = VerdictStatus::CandidateOpen;
    /// The criterion that fired (NonIntegrable) or the necessary condition met (CandidateOpen).
    std::string criterion;
    /// Structured evidence; exact values are stored as "p/q" strings.
    std::map<std::string, std::string> certificate;
    std::string scope = scope::kAll;
    /// Class of first integrals the verdict speaks about ("meromorphic" or "rational").
    std::string integral_class = "meromorphic";
    /// Theorem identifier attached by the analysis pipeline.
    std::string theorem;

    friend bool operator==(const Verdict&, const Verdict&) = default;
};

/// Both kappa + mu - 1/2 and kappa - mu - 1/2 are integers of opposite strict sign.
[[nodiscard]] bool whittaker_solvable(const Rational& kappa, const Rational& mu);
/// Same criterion from kappa^2 and mu^2, over every choice of signs.
[[nodiscard]] bool whittaker_solvable_squares(const Rational& kappa_squared, const Rational& mu_squared);

struct KimuraResult {
    bool solvable = false;
    /// 'A' (an odd integer among +-l +-m +-n), 'B' (table row) or 0.
    char condition = 0;
    /// Row of the finite table, 1..15, when condition == 'B'.
    int row = 0;
    std::string detail;
};

/// Liouvillian solutions of the Riemann P equation with exponent differences (l, m, n).
[[nodiscard]] KimuraResult kimura_solvable(const Surd& l, const Surd& m, const Surd& n);
/// Exponent difference sqrt(sum^2 - 4 product) when the pair is numeric.
[[nodiscard]] std::optional<Surd> exponent_difference(const ExponentPair& pair);

enum class LameKind { Hermite, Brioschi, BaldassarriCandidate, NotSolvable };

[[nodiscard]] std::string to_string(LameKind kind);

struct LameClassification {
    LameKind kind = LameKind::NotSolvable;
    /// Non-negative representative of n(n+1) = A (n >= -1/2), when rational.
    std::optional<Rational> n;
    /// l = n + 1/2 in the Brioschi case.
    long l = 0;
    ParamPoly brioschi_value;
    std::optional<ParamRational> j;
};

[[nodiscard]] LameClassification lame_classify(const Rational& A, const ParamPoly& B, const ParamPoly& g2, const ParamPoly& g3);

/// Obstruction to a logarithm at infinity for the algebraic Lame equation
/// with n + 1/2 = l, as the lower-Hessenberg determinant of the Frobenius
/// recurrence (degree l in B).
[[nodiscard]] ParamPoly brioschi_determinant(long l, const ParamPoly& B, const ParamPoly& g2, const ParamPoly& g3);

/// j = g2^3 / (g2^3 - 27 g3^2); throws std::domain_error when the discriminant vanishes.
[[nodiscard]] ParamRational modular_j(const ParamRational& g2, const ParamRational& g3);

/// Bessel functions of order nu are Liouvillian iff nu is in 1/2 + Z.
[[nodiscard]] bool bessel_liouvillian(const Rational& order);
[[nodiscard]] bool bessel_liouvillian_squared(const Rational& order_squared);

struct KovacicCase {
    int id = 0;
    bool possible = true;
    std::string reason;
    /// Non-negative integer degrees allowed by the exponent data (cases 1 and 2).
    std::vector<long> candidate_degrees;
};

struct KovacicReport {
    std::array<KovacicCase, 3> cases;
    /// Parameter values used when the equation carries symbols besides the variable.
    std::vector<std::map<std::string, Rational>> samples;
};

/// Necessary conditions of the three Kovacic cases for the reduced form of `ode`.
[[nodiscard]] KovacicReport kovacic_necessary(const LinearODE2& ode);

} // namespace frwgalois
