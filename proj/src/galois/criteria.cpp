#include "frwgalois/galois/galois.hpp"

#include <algorithm>

namespace frwgalois {

namespace {

bool is_integer(const Rational& x) { return x.is_integer(); }

bool odd_integer(const Surd& s)
{
    const auto v = s.rational_value();
    if (!v || !v->is_integer()) {
        return false;
    }
    return v->numerator() % 2 != 0;
}

struct KimuraRow {
    Rational a, b, c;
    bool arbitrary_third = false;
    bool even_sum = false;
};

const std::vector<KimuraRow>& kimura_table()
{
    static const std::vector<KimuraRow> rows = {
        {Rational(1, 2), Rational(1, 2), Rational(0), true, false},
        {Rational(1, 2), Rational(1, 3), Rational(1, 3), false, false},
        {Rational(2, 3), Rational(1, 3), Rational(1, 3), false, true},
        {Rational(1, 2), Rational(1, 3), Rational(1, 4), false, false},
        {Rational(2, 3), Rational(1, 4), Rational(1, 4), false, true},
        {Rational(1, 2), Rational(1, 3), Rational(1, 5), false, false},
        {Rational(2, 5), Rational(1, 3), Rational(1, 3), false, true},
        {Rational(2, 3), Rational(1, 5), Rational(1, 5), false, true},
        {Rational(1, 2), Rational(2, 5), Rational(1, 5), false, false},
        {Rational(3, 5), Rational(1, 3), Rational(1, 5), false, true},
        {Rational(2, 5), Rational(2, 5), Rational(2, 5), false, true},
        {Rational(2, 3), Rational(1, 3), Rational(1, 5), false, true},
        {Rational(4, 5), Rational(1, 5), Rational(1, 5), false, true},
        {Rational(1, 2), Rational(2, 5), Rational(1, 3), false, false},
        {Rational(3, 5), Rational(2, 5), Rational(1, 3), false, true},
    };
    return rows;
}

/// Matches (x, y, z), already signed and ordered, against a row; returns
/// the integer shifts when they exist.
bool matches_row(const std::array<Surd, 3>& v, const KimuraRow& row)
{
    const std::array<Rational, 3> base = {row.a, row.b, row.c};
    mpz_class shift_sum = 0;
    for (std::size_t i = 0; i < 3; ++i) {
        if (i == 2 && row.arbitrary_third) {
            continue;
        }
        const auto x = v[i].rational_value();
        if (!x) {
            return false;
        }
        const Rational d = *x - base[i];
        if (!d.is_integer()) {
            return false;
        }
        shift_sum += d.numerator();
    }
    return !row.even_sum || shift_sum % 2 == 0;
}

} // namespace

std::string to_string(VerdictStatus status)
{
    switch (status) {
    case VerdictStatus::Integrable: return "Integrable";
    case VerdictStatus::NonIntegrable: return "NonIntegrable";
    case VerdictStatus::CandidateOpen: return "CandidateOpen";
    case VerdictStatus::Degenerate: return "Degenerate";
    }
    return "Degenerate";
}

bool whittaker_solvable(const Rational& kappa, const Rational& mu)
{
    const Rational half(1, 2);
    const Rational a = kappa + mu - half;
    const Rational b = kappa - mu - half;
    if (!is_integer(a) || !is_integer(b)) {
        return false;
    }
    return a.sign() * b.sign() < 0;
}

bool whittaker_solvable_squares(const Rational& kappa_squared, const Rational& mu_squared)
{
    const auto kappa = kappa_squared.sqrt();
    const auto mu = mu_squared.sqrt();
    if (!kappa || !mu) {
        // kappa = (a + b + 1) / 2 and mu = (a - b) / 2 are rational whenever the criterion holds.
        return false;
    }
    for (const Rational& k : {*kappa, -*kappa}) {
        for (const Rational& m : {*mu, -*mu}) {
            if (whittaker_solvable(k, m)) {
                return true;
            }
        }
    }
    return false;
}

KimuraResult kimura_solvable(const Surd& l, const Surd& m, const Surd& n)
{
    KimuraResult out;
    for (int sm : {1, -1}) {
        for (int sn : {1, -1}) {
            const Surd s = l + m * Rational(sm) + n * Rational(sn);
            if (odd_integer(s)) {
                out.solvable = true;
                out.condition = 'A';
                out.detail = "odd integer " + s.to_string();
                return out;
            }
        }
    }
    std::array<Surd, 3> v = {l, m, n};
    std::array<int, 3> perm = {0, 1, 2};
    const auto& table = kimura_table();
    for (std::size_t r = 0; r < table.size(); ++r) {
        do {
            for (int signs = 0; signs < 8; ++signs) {
                std::array<Surd, 3> w;
                for (std::size_t i = 0; i < 3; ++i) {
                    const Surd& x = v[static_cast<std::size_t>(perm[i])];
                    w[i] = (signs >> i) & 1 ? -x : x;
                }
                if (matches_row(w, table[r])) {
                    out.solvable = true;
                    out.condition = 'B';
                    out.row = static_cast<int>(r) + 1;
                    out.detail = "(" + w[0].to_string() + ", " + w[1].to_string() + ", " + w[2].to_string() + ")";
                    return out;
                }
            }
        } while (std::next_permutation(perm.begin(), perm.end()));
        perm = {0, 1, 2};
    }
    return out;
}

std::optional<Surd> exponent_difference(const ExponentPair& pair)
{
    const auto d = pair.discriminant().constant_value();
    if (!d) {
        return std::nullopt;
    }
    return Surd::sqrt_of(*d);
}

std::string to_string(LameKind kind)
{
    switch (kind) {
    case LameKind::Hermite: return "Hermite";
    case LameKind::Brioschi: return "Brioschi";
    case LameKind::BaldassarriCandidate: return "BaldassarriCandidate";
    case LameKind::NotSolvable: return "NotSolvable";
    }
    return "NotSolvable";
}

ParamPoly brioschi_determinant(long l, const ParamPoly& B, const ParamPoly& g2, const ParamPoly& g3)
{
    if (l < 1) {
        throw std::invalid_argument("Brioschi index must be positive");
    }
    // y = sum_j c_j x^(sigma - j) at x = wp -> infinity, sigma = n/2, n = l - 1/2:
    // -4 j (l - j) c_j = B c_{j-1} + g2 (sigma-j+2)(sigma-j+3/2) c_{j-2} + g3 (sigma-j+3)(sigma-j+2) c_{j-3}.
    const Rational sigma = (Rational(l) - Rational(1, 2)) / Rational(2);
    std::vector<ParamPoly> c = {ParamPoly(1)};
    auto rhs = [&](long j) {
        const Rational s = sigma - Rational(j);
        const auto at = [&](long i) { return c[static_cast<std::size_t>(i)]; };
        ParamPoly out = B * at(j - 1);
        if (j >= 2) {
            out += (g2 * at(j - 2)).scaled((s + Rational(2)) * (s + Rational(3, 2)));
        }
        if (j >= 3) {
            out += (g3 * at(j - 3)).scaled((s + Rational(3)) * (s + Rational(2)));
        }
        return out;
    };
    // Determinant of the lower-Hessenberg recurrence matrix: the diagonal
    // product times the residual equation at the resonant index j = l.
    Rational diagonal(1);
    for (long j = 1; j < l; ++j) {
        const Rational d(-4 * j * (l - j));
        c.push_back(rhs(j).scaled(d.inverse()));
        diagonal *= d;
    }
    return rhs(l).scaled(diagonal).compact();
}

LameClassification lame_classify(const Rational& A, const ParamPoly& B, const ParamPoly& g2, const ParamPoly& g3)
{
    LameClassification out;
    const auto root = (Rational(1) + Rational(4) * A).sqrt();
    if (!root) {
        return out;
    }
    Rational n = (*root - Rational(1)) / Rational(2);
    if (n < Rational(-1, 2)) {
        n = -n - Rational(1);
    }
    out.n = n;
    if (n.is_integer()) {
        out.kind = LameKind::Hermite;
        return out;
    }
    const Rational shifted = n + Rational(1, 2);
    if (shifted.is_integer()) {
        out.kind = LameKind::Brioschi;
        out.l = shifted.to_long().value();
        out.brioschi_value = out.l >= 1 ? brioschi_determinant(out.l, B, g2, g3) : ParamPoly(1);
        return out;
    }
    for (long d : {3, 4, 5}) {
        if ((shifted * Rational(d)).is_integer()) {
            out.kind = LameKind::BaldassarriCandidate;
            try {
                out.j = modular_j(ParamRational(g2), ParamRational(g3));
            } catch (const std::domain_error&) {
            }
            return out;
        }
    }
    return out;
}

ParamRational modular_j(const ParamRational& g2, const ParamRational& g3)
{
    const ParamRational cube = g2 * g2 * g2;
    const ParamRational delta = cube - ParamRational(27) * g3 * g3;
    if (delta.is_zero()) {
        throw std::domain_error("modular function at vanishing discriminant");
    }
    return cube / delta;
}

bool bessel_liouvillian(const Rational& order) { return (order + Rational(1, 2)).is_integer(); }

bool bessel_liouvillian_squared(const Rational& order_squared)
{
    const auto order = order_squared.sqrt();
    return order && bessel_liouvillian(*order);
}

} // namespace frwgalois
