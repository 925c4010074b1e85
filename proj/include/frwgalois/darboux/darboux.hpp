#pragma once

#include "frwgalois/exact/poisson.hpp"
#include "frwgalois/exact/surd.hpp"
#include "frwgalois/galois/galois.hpp"

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace frwgalois {

class DarbouxError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// Darboux point d = (d1, d2) of the quartic part
/// V = (Lambda q1^4 - 2 m2 q1^2 q2^2 + lambda q2^4) / 4, with V'(d) = gamma d.
struct DarbouxPoint {
    Rational d1;
    /// d2 may be a square root of a rational.
    Surd d2;
    /// Root multiplicity of the direction in d1 dV/dq2 - d2 dV/dq1 = 0.
    int multiplicity = 1;
    Rational gamma;
    /// Non-trivial eigenvalue of V''(d) / gamma (the other one is 3).
    Rational eigenvalue;
};

enum class DarbouxCase { FourSimple, ThreeSimple, TwoSimple, TriplePlusSimple, Degenerate };
enum class Equivalence { V3, V4, V5, V6 };

[[nodiscard]] std::string to_string(DarbouxCase c);
[[nodiscard]] std::string to_string(Equivalence e);

struct DarbouxReport {
    std::vector<DarbouxPoint> points;
    DarbouxCase stratum = DarbouxCase::Degenerate;
    std::optional<Equivalence> equivalence;
};

/// Exact gradient check V'(d) = gamma d with gamma != 0.
[[nodiscard]] bool is_darboux_point(const Rational& Lambda, const Rational& lambda, const Rational& m2, const DarbouxPoint& p);

[[nodiscard]] DarbouxReport darboux_points(const Rational& Lambda, const Rational& lambda, const Rational& m2);

/// Integrability of the quartic part: the four families and their mirrors.
[[nodiscard]] Verdict homogeneous_verdict(const Rational& Lambda, const Rational& lambda, const Rational& m2);

/// lambda1 = -m2/Lambda, lambda2 = -m2/lambda, lambda3 = alpha2/alpha5 (each when defined).
struct LambdaTriple {
    std::optional<Rational> lambda1, lambda2, lambda3;

    /// 1/(l1-1) + 1/(l2-1) + 2/(l3-1) when all terms are defined.
    [[nodiscard]] std::optional<Rational> relation_value() const;
};

[[nodiscard]] LambdaTriple lambda_triple(const Rational& Lambda, const Rational& lambda, const Rational& m2);

/// lambda = l(l+1)/2 for an integer l >= 0; returns l.
[[nodiscard]] std::optional<long> triangular_index(const Rational& lambda);

/// Zero-energy verdict for k in {-1, 0, 1}.
[[nodiscard]] Verdict zero_energy_verdict(long k, const Rational& Lambda, const Rational& lambda, const Rational& m2);

/// True iff {H, I} is the zero polynomial.
[[nodiscard]] bool verify_first_integral(const PhasePoly& H, const PhasePoly& I);

} // namespace frwgalois
