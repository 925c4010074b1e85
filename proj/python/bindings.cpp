#include "frwgalois/cli/analysis.hpp"
#include "frwgalois/cli/report_json.hpp"
#include "frwgalois/darboux/darboux.hpp"
#include "frwgalois/dynamics/dynamics.hpp"
#include "frwgalois/hve/hve.hpp"
#include "frwgalois/models/models.hpp"

#include <json.hpp>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

namespace py = pybind11;
using namespace frwgalois;
using nlohmann::json;

namespace {

std::optional<Rational> optional_rational(const std::optional<std::string>& text)
{
    if (!text || *text == "symbolic") {
        return std::nullopt;
    }
    return Rational::parse(*text);
}

IntegrationOptions integration_options(int samples, double rel_tol, double abs_tol)
{
    IntegrationOptions options;
    options.samples = samples;
    options.rel_tol = rel_tol;
    options.abs_tol = abs_tol;
    return options;
}

py::dict trajectory_dict(const Trajectory& tr)
{
    py::dict out;
    out["eta"] = tr.times;
    std::vector<std::vector<double>> states;
    states.reserve(tr.states.size());
    for (const auto& x : tr.states) {
        states.emplace_back(x.begin(), x.end());
    }
    out["states"] = states;
    out["energy"] = tr.energy;
    out["max_energy_drift"] = tr.max_energy_drift();
    return out;
}

py::dict oracle_dict(const OracleComparison& c)
{
    py::dict out = trajectory_dict(c.trajectory);
    out["first_oracle"] = c.first_oracle;
    out["second_oracle"] = c.second_oracle;
    out["max_error"] = c.max_error;
    return out;
}

} // namespace

PYBIND11_MODULE(_frwgalois, m)
{
    py::register_exception<AnalysisInputError>(m, "AnalysisInputError", PyExc_ValueError);
    py::register_exception<DynamicsError>(m, "DynamicsError", PyExc_RuntimeError);

    m.attr("REPORT_SCHEMA") = kReportSchema;

    m.def(
        "analyze_minimal_json",
        [](long k, const std::string& Lambda, const std::string& m2, const std::string& E, bool hve, int hve_order) {
            MinimalOptions options;
            options.hve = hve;
            options.hve_max_order = hve_order;
            return to_json(analyze_minimal(k, Rational::parse(Lambda), Rational::parse(m2), EnergySpec::parse(E), options)).dump();
        },
        py::arg("k"), py::arg("Lambda"), py::arg("m2"), py::arg("E") = "generic", py::arg("hve") = false,
        py::arg("hve_order") = 5);

    m.def(
        "analyze_conformal_json",
        [](long k, const std::string& Lambda, const std::string& lambda, const std::string& m2, const std::string& E) {
            return to_json(analyze_conformal(k, Rational::parse(Lambda), Rational::parse(lambda), Rational::parse(m2),
                                             EnergySpec::parse(E)))
                .dump();
        },
        py::arg("k"), py::arg("Lambda"), py::arg("lambda_"), py::arg("m2"), py::arg("E") = "generic");

    m.def(
        "hve_check_json",
        [](long n, const std::optional<std::string>& k, const std::optional<std::string>& E, int max_order) {
            const HveParameters params{optional_rational(k), optional_rational(E)};
            py::gil_scoped_release release;
            return hve_to_json(n, params, max_order, log_obstruction(n, params, max_order)).dump();
        },
        py::arg("n"), py::arg("k") = py::none(), py::arg("E") = py::none(), py::arg("max_order") = 5);

    m.def(
        "darboux_json",
        [](const std::string& Lambda, const std::string& lambda, const std::string& m2) {
            const Rational L = Rational::parse(Lambda), l = Rational::parse(lambda), mm = Rational::parse(m2);
            json j = to_json(darboux_points(L, l, mm));
            j["homogeneous_verdict"] = to_json(homogeneous_verdict(L, l, mm));
            return j.dump();
        },
        py::arg("Lambda"), py::arg("lambda_"), py::arg("m2"));

    m.def("verify_integrals_json", [] {
        json out = json::array();
        for (const auto& c : verify_table_integrals()) {
            out.push_back(to_json(c));
        }
        return out.dump();
    });

    m.def(
        "simulate_raw",
        [](const std::string& model, long k, const std::string& Lambda, const std::string& lambda, const std::string& m2,
           const std::array<double, 4>& state, double eta0, double eta1, int samples, double rel_tol, double abs_tol) {
            const auto h = build_model(parse_model_id(model), ModelParameters::numeric(k, Rational::parse(Lambda),
                                                                                       Rational::parse(lambda), Rational::parse(m2)));
            Trajectory tr;
            {
                py::gil_scoped_release release;
                tr = integrate(h, state, eta0, eta1, integration_options(samples, rel_tol, abs_tol));
            }
            return trajectory_dict(tr);
        },
        py::arg("model"), py::arg("k"), py::arg("Lambda"), py::arg("lambda_"), py::arg("m2"), py::arg("state"),
        py::arg("eta0"), py::arg("eta1"), py::arg("samples") = 100, py::arg("rel_tol") = 1e-12, py::arg("abs_tol") = 1e-12);

    m.def(
        "compare_appendix_a",
        [](double k, double Lambda, double E, double J, double q2, double eta0, double eta1, int samples) {
            return oracle_dict(compare_appendix_a(k, Lambda, E, J, q2, eta0, eta1, integration_options(samples, 1e-12, 1e-12)));
        },
        py::arg("k"), py::arg("Lambda"), py::arg("E"), py::arg("J"), py::arg("q2"), py::arg("eta0"), py::arg("eta1"),
        py::arg("samples") = 40);

    m.def(
        "compare_appendix_b",
        [](double k, double Lambda, double lambda, double E1, double E2, double eta0, double eta1, int samples) {
            return oracle_dict(
                compare_appendix_b(k, Lambda, lambda, E1, E2, eta0, eta1, integration_options(samples, 1e-12, 1e-12)));
        },
        py::arg("k"), py::arg("Lambda"), py::arg("lambda_"), py::arg("E1"), py::arg("E2"), py::arg("eta0"), py::arg("eta1"),
        py::arg("samples") = 40);

    m.def(
        "mle_raw",
        [](const std::string& model, long k, const std::string& Lambda, const std::string& lambda, const std::string& m2,
           const std::array<double, 4>& state, double span, double renormalize_every) {
            const auto h = build_model(parse_model_id(model), ModelParameters::numeric(k, Rational::parse(Lambda),
                                                                                       Rational::parse(lambda), Rational::parse(m2)));
            py::gil_scoped_release release;
            return mle_estimate(h, state, span, renormalize_every).exponent;
        },
        py::arg("model"), py::arg("k"), py::arg("Lambda"), py::arg("lambda_"), py::arg("m2"), py::arg("state"), py::arg("span"),
        py::arg("renormalize_every") = 1.0);
}
