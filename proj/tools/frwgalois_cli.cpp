#include "frwgalois/cli/analysis.hpp"
#include "frwgalois/cli/report_json.hpp"
#include "frwgalois/dynamics/dynamics.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <cstdio>
#include <fstream>
#include <future>
#include <iomanip>
#include <iostream>
#include <sstream>

using namespace frwgalois;
using nlohmann::json;

namespace {

constexpr int kInputError = 2;
constexpr int kNumericError = 3;

struct Parameters {
    long k = 1;
    std::string Lambda = "0";
    std::string lambda = "0";
    std::string m2 = "1";
    std::string energy = "generic";
};

void add_parameters(CLI::App* cmd, Parameters& p, bool with_lambda, bool with_energy)
{
    cmd->add_option("--k", p.k, "curvature index")->check(CLI::IsMember({-1, 0, 1}));
    cmd->add_option("--Lambda", p.Lambda, "cosmological constant (p/q)");
    if (with_lambda) {
        cmd->add_option("--lambda", p.lambda, "field self-coupling (p/q)");
    }
    cmd->add_option("--m2", p.m2, "squared mass (p/q)");
    if (with_energy) {
        cmd->add_option("--E", p.energy, "energy level: generic, 0 or p/q");
    }
}

Rational rational(const std::string& text, const char* name)
{
    try {
        return Rational::parse(text);
    } catch (const std::exception&) {
        throw AnalysisInputError(std::string("--") + name + " expects a rational, got '" + text + "'");
    }
}

std::vector<std::string> split(const std::string& text)
{
    std::vector<std::string> out;
    std::stringstream in(text);
    std::string item;
    while (std::getline(in, item, ',')) {
        if (!item.empty()) {
            out.push_back(item);
        }
    }
    return out;
}

/// Writes to `path`, or to stdout when empty.
void emit(const std::string& path, const std::string& text)
{
    if (path.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream out(path);
    if (!out) {
        throw AnalysisInputError("cannot open " + path);
    }
    out << text;
}

std::string dump(const json& j) { return j.dump(2) + "\n"; }

std::optional<Rational> optional_rational(const std::string& text, const char* name)
{
    if (text == "symbolic") {
        return std::nullopt;
    }
    return rational(text, name);
}

/// Runs `work(i)` for i in [0, n) concurrently and concatenates the results in index order.
std::string run_ordered(std::size_t n, const std::function<std::string(std::size_t)>& work)
{
    std::vector<std::future<std::string>> jobs;
    jobs.reserve(n);
    for (std::size_t i = 0; i < n; ++i) {
        jobs.push_back(std::async(std::launch::async, work, i));
    }
    std::string out;
    for (auto& job : jobs) {
        out += job.get();
    }
    return out;
}

} // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Integrability analysis of FRW cosmologies with a scalar field"};
    app.require_subcommand(1);
    std::string json_path;
    std::string csv_path;

    Parameters minimal;
    bool run_hve = false;
    int hve_order = 5;
    auto* cmd_minimal = app.add_subcommand("analyze-minimal", "minimally coupled field");
    add_parameters(cmd_minimal, minimal, false, true);
    cmd_minimal->add_flag("--hve", run_hve, "run the higher variational equations in the Lame-Hermite case");
    cmd_minimal->add_option("--hve-order", hve_order, "highest variational order")->check(CLI::Range(2, 12));
    cmd_minimal->add_option("--json", json_path, "output path");

    Parameters conformal;
    auto* cmd_conformal = app.add_subcommand("analyze-conformal", "conformally coupled field");
    add_parameters(cmd_conformal, conformal, true, true);
    cmd_conformal->add_option("--json", json_path, "output path");

    long hve_n = 2;
    std::string hve_k = "symbolic", hve_E = "symbolic";
    int hve_max = 5, hve_truncation = 0;
    auto* cmd_hve = app.add_subcommand("hve-check", "logarithm search in the higher variational equations");
    cmd_hve->add_option("--n", hve_n, "Lame-Hermite index, b = 2 - n(n+1)")->check(CLI::Range(1, 40));
    cmd_hve->add_option("--k", hve_k, "symbolic, -1, 0 or 1");
    cmd_hve->add_option("--E", hve_E, "symbolic or p/q (scaled energy)");
    cmd_hve->add_option("--max-order", hve_max, "highest variational order")->check(CLI::Range(2, 12));
    cmd_hve->add_option("--order", hve_truncation, "series truncation (0: automatic)");
    cmd_hve->add_option("--json", json_path, "output path");

    Parameters darboux;
    auto* cmd_darboux = app.add_subcommand("darboux", "Darboux points of the conformal quartic potential");
    add_parameters(cmd_darboux, darboux, true, false);
    cmd_darboux->add_option("--json", json_path, "output path");

    Parameters sim;
    std::string model_name = "Minimal", state_text = "1,0,0.1,0", oracle;
    double eta0 = 0.0, eta1 = 10.0, rel_tol = 1e-12, abs_tol = 1e-12;
    int samples = 100;
    double oracle_E = 1.0, oracle_J = 0.5, oracle_E1 = 0.5, oracle_E2 = 0.5;
    auto* cmd_simulate = app.add_subcommand("simulate", "numerical trajectory as CSV");
    add_parameters(cmd_simulate, sim, true, false);
    cmd_simulate->add_option("--model", model_name, "Minimal, MinimalScaled, Conformal or ConformalRotated");
    cmd_simulate->add_option("--state", state_text, "q1,p1,q2,p2 at eta0");
    cmd_simulate->add_option("--eta0", eta0);
    cmd_simulate->add_option("--eta1", eta1);
    cmd_simulate->add_option("--samples", samples)->check(CLI::Range(1, 10000000));
    cmd_simulate->add_option("--rel-tol", rel_tol);
    cmd_simulate->add_option("--abs-tol", abs_tol);
    cmd_simulate->add_option("--oracle", oracle, "compare with a closed form; the initial state is taken from it")
        ->check(CLI::IsMember({"appendixA", "appendixB"}));
    cmd_simulate->add_option("--oracle-E", oracle_E, "appendixA: energy");
    cmd_simulate->add_option("--oracle-J", oracle_J, "appendixA: p2^2 / 2");
    cmd_simulate->add_option("--oracle-E1", oracle_E1, "appendixB: energy of (q1, p1)");
    cmd_simulate->add_option("--oracle-E2", oracle_E2, "appendixB: energy of (q2, p2)");
    cmd_simulate->add_option("--csv", csv_path, "output path");

    Parameters integrals;
    bool single = false;
    auto* cmd_integrals = app.add_subcommand("verify-integrals", "exact Poisson-bracket check of the tabulated integrals");
    add_parameters(cmd_integrals, integrals, true, false);
    cmd_integrals->add_flag("--single", single, "check the given parameters instead of every row");
    cmd_integrals->add_option("--json", json_path, "output path");

    std::string scan = "hve";
    long n_from = 2, n_to = 11;
    std::string k_values, Lambda_values, lambda_values, m2_values, batch_E = "generic";
    auto* cmd_batch = app.add_subcommand("batch", "parameter scans, one JSON report per line");
    cmd_batch->add_option("--scan", scan)->check(CLI::IsMember({"hve", "minimal", "conformal"}));
    cmd_batch->add_option("--n-from", n_from)->check(CLI::Range(1, 40));
    cmd_batch->add_option("--n-to", n_to)->check(CLI::Range(1, 40));
    cmd_batch->add_option("--k", hve_k, "hve scan: symbolic, -1, 0 or 1");
    cmd_batch->add_option("--max-order", hve_max)->check(CLI::Range(2, 12));
    cmd_batch->add_option("--k-values", k_values, "comma-separated");
    cmd_batch->add_option("--Lambda-values", Lambda_values, "comma-separated");
    cmd_batch->add_option("--lambda-values", lambda_values, "comma-separated");
    cmd_batch->add_option("--m2-values", m2_values, "comma-separated");
    cmd_batch->add_option("--E", batch_E, "energy level (symbolic or p/q for the hve scan)");
    cmd_batch->add_option("--json", json_path, "output path (JSON lines)");

    CLI11_PARSE(app, argc, argv);

    try {
        if (cmd_minimal->parsed()) {
            MinimalOptions options;
            options.hve = run_hve;
            options.hve_max_order = hve_order;
            const auto report = analyze_minimal(minimal.k, rational(minimal.Lambda, "Lambda"), rational(minimal.m2, "m2"),
                                                EnergySpec::parse(minimal.energy), options);
            emit(json_path, dump(to_json(report)));
        } else if (cmd_conformal->parsed()) {
            const auto report =
                analyze_conformal(conformal.k, rational(conformal.Lambda, "Lambda"), rational(conformal.lambda, "lambda"),
                                  rational(conformal.m2, "m2"), EnergySpec::parse(conformal.energy));
            emit(json_path, dump(to_json(report)));
        } else if (cmd_hve->parsed()) {
            HveParameters params{optional_rational(hve_k, "k"), optional_rational(hve_E, "E")};
            const auto obstruction = log_obstruction(hve_n, params, hve_max, hve_truncation);
            emit(json_path, dump(hve_to_json(hve_n, params, hve_max, obstruction)));
        } else if (cmd_darboux->parsed()) {
            const Rational L = rational(darboux.Lambda, "Lambda"), l = rational(darboux.lambda, "lambda"),
                           m2 = rational(darboux.m2, "m2");
            json j = to_json(darboux_points(L, l, m2));
            j["command"] = "darboux";
            j["parameters"] = {{"Lambda", L.to_string()}, {"lambda", l.to_string()}, {"m2", m2.to_string()}};
            j["homogeneous_verdict"] = to_json(homogeneous_verdict(L, l, m2));
            const LambdaTriple t = lambda_triple(L, l, m2);
            auto opt = [](const std::optional<Rational>& r) { return r ? json(r->to_string()) : json(nullptr); };
            j["lambda_triple"] = {{"lambda1", opt(t.lambda1)}, {"lambda2", opt(t.lambda2)}, {"lambda3", opt(t.lambda3)},
                                  {"relation", opt(t.relation_value())}};
            emit(json_path, dump(j));
        } else if (cmd_simulate->parsed()) {
            IntegrationOptions options;
            options.rel_tol = rel_tol;
            options.abs_tol = abs_tol;
            options.samples = samples;
            const double Lambda = rational(sim.Lambda, "Lambda").to_double();
            const double lambda = rational(sim.lambda, "lambda").to_double();
            std::ostringstream csv;
            csv << std::setprecision(17);
            if (oracle.empty()) {
                const auto values = split(state_text);
                if (values.size() != 4) {
                    throw AnalysisInputError("--state expects q1,p1,q2,p2");
                }
                PhaseState x0;
                for (std::size_t i = 0; i < 4; ++i) {
                    x0[i] = std::stod(values[i]);
                }
                const auto model = build_model(parse_model_id(model_name),
                                               ModelParameters::numeric(sim.k, rational(sim.Lambda, "Lambda"),
                                                                        rational(sim.lambda, "lambda"), rational(sim.m2, "m2")));
                const Trajectory tr = integrate(model, x0, eta0, eta1, options);
                csv << "eta,q1,p1,q2,p2,H\n";
                for (std::size_t i = 0; i < tr.times.size(); ++i) {
                    const auto& x = tr.states[i];
                    csv << tr.times[i] << ',' << x[0] << ',' << x[1] << ',' << x[2] << ',' << x[3] << ',' << tr.energy[i] << '\n';
                }
                std::cerr << "max_energy_drift=" << tr.max_energy_drift() << '\n';
            } else {
                const bool a = oracle == "appendixA";
                const double q2 = a ? std::stod(split(state_text).at(2)) : 0.0;
                const OracleComparison c = a ? compare_appendix_a(sim.k, Lambda, oracle_E, oracle_J, q2, eta0, eta1, options)
                                             : compare_appendix_b(sim.k, Lambda, lambda, oracle_E1, oracle_E2, eta0, eta1, options);
                csv << "eta,q1,p1,q2,p2,H,a2_oracle,a2_error" << (a ? "" : ",phi2_oracle,phi2_error") << '\n';
                const Trajectory& tr = c.trajectory;
                for (std::size_t i = 0; i < tr.times.size(); ++i) {
                    const auto& x = tr.states[i];
                    csv << tr.times[i] << ',' << x[0] << ',' << x[1] << ',' << x[2] << ',' << x[3] << ',' << tr.energy[i] << ','
                        << c.first_oracle[i] << ',' << x[0] * x[0] - c.first_oracle[i];
                    if (!a) {
                        csv << ',' << c.second_oracle[i] << ',' << x[2] * x[2] - c.second_oracle[i];
                    }
                    csv << '\n';
                }
                std::cerr << "oracle=" << oracle << " max_error=" << c.max_error << " max_energy_drift=" << tr.max_energy_drift()
                          << '\n';
            }
            emit(csv_path, csv.str());
        } else if (cmd_integrals->parsed()) {
            json j;
            j["schema"] = kReportSchema;
            j["command"] = "verify-integrals";
            j["checks"] = json::array();
            if (single) {
                const auto check = verify_integral(integrals.k, rational(integrals.Lambda, "Lambda"),
                                                   rational(integrals.lambda, "lambda"), rational(integrals.m2, "m2"));
                if (check) {
                    j["checks"].push_back(to_json(*check));
                }
            } else {
                for (const auto& check : verify_table_integrals()) {
                    j["checks"].push_back(to_json(check));
                }
            }
            emit(json_path, dump(j));
        } else if (cmd_batch->parsed()) {
            std::string out;
            if (scan == "hve") {
                if (n_from > n_to) {
                    throw AnalysisInputError("empty grid: --n-from exceeds --n-to");
                }
                const HveParameters params{optional_rational(hve_k, "k"),
                                           optional_rational(batch_E == "generic" ? "symbolic" : batch_E, "E")};
                out = run_ordered(static_cast<std::size_t>(n_to - n_from + 1), [&](std::size_t i) {
                    const long n = n_from + static_cast<long>(i);
                    return hve_to_json(n, params, hve_max, log_obstruction(n, params, hve_max)).dump() + "\n";
                });
            } else {
                const auto ks = split(k_values), Ls = split(Lambda_values), ls = split(lambda_values), ms = split(m2_values);
                const bool conf = scan == "conformal";
                if (ks.empty() || Ls.empty() || ms.empty() || (conf && ls.empty())) {
                    throw AnalysisInputError("empty grid: every value list must be non-empty");
                }
                const std::size_t nl = conf ? ls.size() : 1;
                const std::size_t total = ks.size() * Ls.size() * nl * ms.size();
                const EnergySpec energy = EnergySpec::parse(batch_E);
                std::vector<long> kv;
                for (const auto& k : ks) {
                    kv.push_back(rational(k, "k").to_long().value_or(2));
                }
                out = run_ordered(total, [&](std::size_t i) {
                    const std::size_t im = i % ms.size(), il = (i / ms.size()) % nl, iL = (i / (ms.size() * nl)) % Ls.size(),
                                      ik = i / (ms.size() * nl * Ls.size());
                    const Rational L = rational(Ls[iL], "Lambda"), m2 = rational(ms[im], "m2");
                    const AnalysisReport r = conf ? analyze_conformal(kv[ik], L, rational(ls[il], "lambda"), m2, energy)
                                                  : analyze_minimal(kv[ik], L, m2, energy);
                    json j = to_json(r);
                    j["grid_index"] = i;
                    return j.dump() + "\n";
                });
            }
            emit(json_path, out);
        }
    } catch (const AnalysisInputError& e) {
        std::cerr << "input error: " << e.what() << '\n';
        return kInputError;
    } catch (const std::invalid_argument& e) {
        std::cerr << "input error: " << e.what() << '\n';
        return kInputError;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kNumericError;
    }
    return 0;
}
