#include "frwgalois/hve/hve.hpp"

#include "frwgalois/elliptic/weierstrass.hpp"

#include <algorithm>

namespace frwgalois {

namespace {

const std::string kEta = "eta";

LaurentSeries zero_series() { return LaurentSeries(kEta); }

LaurentSeries constant(const ParamPoly& c) { return LaurentSeries::monomial(kEta, c, 0); }

/// Truncated power series in the perturbation parameter with series coefficients.
class EpsSeries {
public:
    explicit EpsSeries(int degree) : c_(static_cast<std::size_t>(degree) + 1, zero_series()) {}

    [[nodiscard]] int degree() const { return static_cast<int>(c_.size()) - 1; }
    LaurentSeries& operator[](int i) { return c_[static_cast<std::size_t>(i)]; }
    const LaurentSeries& operator[](int i) const { return c_[static_cast<std::size_t>(i)]; }

    friend EpsSeries operator+(const EpsSeries& a, const EpsSeries& b)
    {
        EpsSeries s(a.degree());
        for (int i = 0; i <= a.degree(); ++i) {
            s[i] = a[i] + b[i];
        }
        return s;
    }
    friend EpsSeries operator-(const EpsSeries& a, const EpsSeries& b)
    {
        EpsSeries s(a.degree());
        for (int i = 0; i <= a.degree(); ++i) {
            s[i] = a[i] - b[i];
        }
        return s;
    }
    friend EpsSeries operator*(const EpsSeries& a, const EpsSeries& b)
    {
        EpsSeries s(a.degree());
        for (int i = 0; i <= a.degree(); ++i) {
            if (a[i].is_zero() && a[i].is_exact()) {
                continue;
            }
            for (int j = 0; i + j <= a.degree(); ++j) {
                if (b[j].is_zero() && b[j].is_exact()) {
                    continue;
                }
                s[i + j] += a[i] * b[j];
            }
        }
        return s;
    }
    [[nodiscard]] EpsSeries scaled(const ParamPoly& c) const
    {
        EpsSeries s(degree());
        for (int i = 0; i <= degree(); ++i) {
            s[i] = c_[static_cast<std::size_t>(i)].scaled(c);
        }
        return s;
    }
    [[nodiscard]] EpsSeries inverse() const
    {
        EpsSeries s(degree());
        s[0] = c_[0].inverse();
        for (int m = 1; m <= degree(); ++m) {
            LaurentSeries acc = zero_series();
            for (int i = 1; i <= m; ++i) {
                if (!(*this)[i].is_zero() || !(*this)[i].is_exact()) {
                    acc += (*this)[i] * s[m - i];
                }
            }
            s[m] = -(s[0] * acc);
        }
        return s;
    }

private:
    std::vector<LaurentSeries> c_;
};

void check_n(long n)
{
    if (n < 1) {
        throw HveError("n must be a positive integer, got " + std::to_string(n));
    }
}

SeriesVector substitute(const SeriesVector& v, const std::map<std::string, ParamPoly>& values)
{
    SeriesVector out;
    for (std::size_t i = 0; i < 4; ++i) {
        out[i] = v[i].substitute(values);
    }
    return out;
}

} // namespace

LaurentSeries lame_frobenius(const Rational& A, const ParamPoly& B, const LaurentSeries& wp, long rho,
                             const Rational& a0, int relative_order)
{
    // [(rho+m)(rho+m-1) - A] a_m = B a_{m-2} + A sum_d c_d a_{m-2-d}, with c_d the eta^d coefficient of wp.
    std::vector<ParamPoly> a(static_cast<std::size_t>(relative_order), ParamPoly());
    a[0] = ParamPoly(a0);
    for (int m = 2; m < relative_order; m += 2) {
        ParamPoly rhs = B * a[static_cast<std::size_t>(m - 2)];
        for (int d = 2; m - 2 - d >= 0; d += 2) {
            rhs += (wp.coefficient(d) * a[static_cast<std::size_t>(m - 2 - d)]).scaled(A);
        }
        const Rational lhs = Rational(rho + m) * Rational(rho + m - 1) - A;
        if (lhs == Rational(0)) {
            if (!rhs.is_zero()) {
                throw HveError("logarithmic Frobenius solution at index " + std::to_string(m));
            }
            continue;
        }
        a[static_cast<std::size_t>(m)] = rhs.scaled(lhs.inverse());
    }
    return LaurentSeries::from_coefficients(wp.variable(), static_cast<int>(rho), a, static_cast<int>(rho) + relative_order);
}

LaurentSeries FundamentalSystem::lame_residual(int index) const
{
    const bool tangential = index <= 2;
    const LaurentSeries& v = index == 1 ? v1 : index == 2 ? v2 : index == 3 ? v3 : v4;
    const Rational& A = tangential ? A1 : A2;
    const ParamPoly& B = tangential ? B1 : B2;
    const LaurentSeries potential = wp.scaled(ParamPoly(A)) + constant(B);
    return v.differentiate().differentiate() - potential * v;
}

LaurentSeries FundamentalSystem::wronskian_tangential() const { return v1 * v2.differentiate() - v1.differentiate() * v2; }

LaurentSeries FundamentalSystem::wronskian_normal() const { return v3 * v4.differentiate() - v3.differentiate() * v4; }

FundamentalSystem fundamental_series(long n, int order, const HveParameters& params)
{
    check_n(n);
    if (order < 4) {
        throw HveError("fundamental series need order >= 4");
    }
    const ParamPoly k = params.k_poly();
    const ParamPoly E = params.E_poly();
    const auto inv = invariants_minimal_symbolic();
    const std::map<std::string, ParamPoly> values = {{"k", k}, {"E", E}};

    FundamentalSystem fs;
    fs.n = n;
    fs.truncation_order = order;
    fs.A1 = Rational(6);
    fs.B1 = k.scaled(Rational(2));
    fs.A2 = Rational(n * (n + 1));
    fs.B2 = k.scaled(Rational(2 * (n * n + n - 3), 3));
    fs.wp = wp_series(inv.g2.substitute(values), inv.g3.substitute(values), order - 2, kEta);
    fs.v1 = lame_frobenius(fs.A1, fs.B1, fs.wp, 3, Rational(1), order);
    fs.v2 = lame_frobenius(fs.A1, fs.B1, fs.wp, -2, Rational(-1, 5), order);
    fs.v3 = lame_frobenius(fs.A2, fs.B2, fs.wp, n + 1, Rational(1), order);
    fs.v4 = lame_frobenius(fs.A2, fs.B2, fs.wp, -n, Rational(-1, 2 * n + 1), order);
    return fs;
}

HveSolver::HveSolver(long n, int order, SeedChoice seed, const HveParameters& params)
    : fs_(fundamental_series(n, order, params)), k_(params.k_poly()), b_(Rational(2 - n * (n + 1)))
{
    const LaurentSeries w1 = (fs_.wp + constant(k_.scaled(Rational(2, 3)))).sqrt();
    phi_ = {w1, w1.differentiate(), zero_series(), zero_series()};
    const LaurentSeries& v = seed == SeedChoice::V4 ? fs_.v4 : fs_.v3;
    w_.push_back({zero_series(), zero_series(), v, v.differentiate()});
}

SeriesVector HveSolver::forcing() const
{
    const int j = order() + 1;
    std::array<EpsSeries, 4> w = {EpsSeries(j), EpsSeries(j), EpsSeries(j), EpsSeries(j)};
    for (std::size_t c = 0; c < 4; ++c) {
        w[c][0] = phi_[c];
        for (int i = 1; i < j; ++i) {
            w[c][i] = w_[static_cast<std::size_t>(i - 1)][c];
        }
    }
    const EpsSeries& u1 = w[0];
    const EpsSeries& u2 = w[1];
    const EpsSeries& w3 = w[2];
    const EpsSeries& w4 = w[3];
    const EpsSeries inv = u1.inverse();
    const EpsSeries p = u1 * w4 - u2 * w3;
    // u2dot = -2k u1 + 2 u1^3 + 4b u1 w3^2 - 2 p^2 / u1^3
    const EpsSeries u2dot = u1.scaled(k_.scaled(Rational(-2))) + (u1 * u1 * u1).scaled(ParamPoly(2)) +
                            (u1 * w3 * w3).scaled(ParamPoly(Rational(4) * b_)) -
                            (p * p * inv * inv * inv).scaled(ParamPoly(2));
    // w4dot = -b w3 u1^2 + w3 u2dot / u1
    const EpsSeries w4dot = (w3 * u1 * u1).scaled(ParamPoly(-b_)) + w3 * u2dot * inv;
    return {u2[j], u2dot[j], w4[j], w4dot[j]};
}

SeriesVector HveSolver::integrand() const
{
    const SeriesVector f = forcing();
    const LaurentSeries d1 = fs_.v1.differentiate(), d2 = fs_.v2.differentiate();
    const LaurentSeries d3 = fs_.v3.differentiate(), d4 = fs_.v4.differentiate();
    return {d2 * f[0] - fs_.v2 * f[1], fs_.v1 * f[1] - d1 * f[0], d4 * f[2] - fs_.v4 * f[3], fs_.v3 * f[3] - d3 * f[2]};
}

namespace {

std::array<ParamPoly, 4> residues_of(const SeriesVector& g, int j)
{
    std::array<ParamPoly, 4> out;
    for (std::size_t c = 0; c < 4; ++c) {
        if (g[c].order() <= -1) {
            throw HveError("truncation window too small for the eta^-1 coefficient of component " +
                           std::to_string(c + 1) + " at order " + std::to_string(j) + " (known below eta^" +
                           std::to_string(g[c].order()) + ")");
        }
        out[c] = g[c].coefficient(-1);
    }
    return out;
}

} // namespace

std::array<ParamPoly, 4> HveSolver::residues() const { return residues_of(integrand(), order() + 1); }

void HveSolver::advance()
{
    const SeriesVector g = integrand();
    const auto res = residues_of(g, order() + 1);
    for (const auto& r : res) {
        if (!r.is_zero()) {
            throw HveError("integrand at order " + std::to_string(order() + 1) + " has a nonzero residue");
        }
    }
    SeriesVector G;
    for (std::size_t c = 0; c < 4; ++c) {
        G[c] = g[c].integrate();
    }
    const LaurentSeries d1 = fs_.v1.differentiate(), d2 = fs_.v2.differentiate();
    const LaurentSeries d3 = fs_.v3.differentiate(), d4 = fs_.v4.differentiate();
    w_.push_back({fs_.v1 * G[0] + fs_.v2 * G[1], d1 * G[0] + d2 * G[1], fs_.v3 * G[2] + fs_.v4 * G[3],
                  d3 * G[2] + d4 * G[3]});
}

void HveSolver::specialize(const std::map<std::string, ParamPoly>& values)
{
    fs_.wp = fs_.wp.substitute(values);
    for (LaurentSeries* v : {&fs_.v1, &fs_.v2, &fs_.v3, &fs_.v4}) {
        *v = v->substitute(values);
    }
    fs_.B1 = fs_.B1.substitute(values);
    fs_.B2 = fs_.B2.substitute(values);
    k_ = k_.substitute(values);
    phi_ = substitute(phi_, values);
    for (auto& w : w_) {
        w = substitute(w, values);
    }
}

int default_hve_order(long n, int max_order) { return 4 * static_cast<int>(n) + 2 * std::max(max_order, 2); }

SeriesVector hve_integrand(int j, long n, int order, SeedChoice seed, const HveParameters& params)
{
    if (j < 2 || j > 5) {
        throw HveError("order j must lie in 2..5");
    }
    HveSolver solver(n, order, seed, params);
    while (solver.order() + 1 < j) {
        solver.advance();
    }
    return solver.integrand();
}

std::optional<Obstruction> log_obstruction(long n, const HveParameters& params, int max_order, int order)
{
    check_n(n);
    if (max_order < 2 || max_order > 5) {
        throw HveError("max_order must lie in 2..5");
    }
    if (order <= 0) {
        order = default_hve_order(n, max_order);
    }
    std::map<std::string, ParamPoly> values;
    if (params.k) {
        values.emplace("k", ParamPoly(*params.k));
    }
    if (params.E) {
        values.emplace("E", ParamPoly(*params.E));
    }
    HveSolver solver(n, order);
    std::vector<SeriesVector> trail;
    bool specialized = false;
    for (int j = 2; j <= max_order; ++j) {
        SeriesVector g = solver.integrand();
        auto res = residues_of(g, j);
        trail.push_back(g);
        bool vanishes = true;
        bool symbolic_vanishes = true;
        for (auto& r : res) {
            symbolic_vanishes = symbolic_vanishes && r.is_zero();
            r = r.substitute(values).compact();
            vanishes = vanishes && r.is_zero();
        }
        if (!vanishes) {
            Obstruction ob;
            ob.order = j;
            ob.residues = res;
            const auto it = std::find_if(res.begin(), res.end(), [](const ParamPoly& r) { return !r.is_zero(); });
            ob.component = static_cast<int>(it - res.begin()) + 1;
            ob.residue = *it;
            ob.trail = std::move(trail);
            return ob;
        }
        if (j == max_order) {
            break;
        }
        if (!symbolic_vanishes && !specialized) {
            solver.specialize(values);
            specialized = true;
        }
        solver.advance();
    }
    return std::nullopt;
}

} // namespace frwgalois
