#include "frwgalois/cli/report_json.hpp"

namespace frwgalois {

using nlohmann::json;

json to_json(const Verdict& verdict)
{
    json j;
    j["status"] = to_string(verdict.status);
    j["scope"] = verdict.scope;
    j["criterion"] = verdict.criterion;
    j["integral_class"] = verdict.integral_class;
    j["certificate"] = verdict.certificate;
    if (!verdict.theorem.empty()) {
        j["theorem"] = verdict.theorem;
    }
    return j;
}

json to_json(const AnalysisReport& report)
{
    json j;
    j["schema"] = kReportSchema;
    j["command"] = report.command;
    j["model"] = {{"id", report.model}, {"parameters", report.parameters}, {"energy", report.energy}};
    j["trail"] = report.trail;
    if (report.canonical) {
        j["canonical_form"] = {{"family", report.canonical->family},
                               {"parameters", report.canonical->parameters},
                               {"exponents", report.canonical->exponents}};
    } else {
        j["canonical_form"] = nullptr;
    }
    j["verdicts"] = json::array();
    for (const auto& v : report.verdicts) {
        j["verdicts"].push_back(to_json(v));
    }
    j["flags"] = report.flags;
    return j;
}

json to_json(const DarbouxReport& report)
{
    json j;
    j["schema"] = kReportSchema;
    j["stratum"] = to_string(report.stratum);
    j["equivalence"] = report.equivalence ? json(to_string(*report.equivalence)) : json(nullptr);
    j["points"] = json::array();
    for (const auto& p : report.points) {
        j["points"].push_back({{"d1", p.d1.to_string()},
                               {"d2", p.d2.to_string()},
                               {"multiplicity", p.multiplicity},
                               {"gamma", p.gamma.to_string()},
                               {"eigenvalue", p.eigenvalue.to_string()}});
    }
    return j;
}

json to_json(const IntegralCheck& check)
{
    return {{"row", check.row},
            {"swapped", check.swapped},
            {"parameters", check.parameters},
            {"hamiltonian_matches", check.hamiltonian_matches},
            {"bracket_vanishes", check.bracket_vanishes},
            {"perturbed_bracket_vanishes", check.perturbed_bracket_vanishes}};
}

json hve_to_json(long n, const HveParameters& params, int max_order, const std::optional<Obstruction>& obstruction)
{
    json j;
    j["schema"] = kReportSchema;
    j["command"] = "hve-check";
    j["n"] = n;
    j["k"] = params.k ? params.k->to_string() : "symbolic";
    j["E"] = params.E ? params.E->to_string() : "symbolic";
    j["max_order"] = max_order;
    if (!obstruction) {
        j["obstruction"] = nullptr;
        j["result"] = "none up to order " + std::to_string(max_order);
        return j;
    }
    json residues = json::array();
    for (const auto& r : obstruction->residues) {
        residues.push_back(r.to_string());
    }
    j["obstruction"] = {{"order", obstruction->order},
                        {"component", obstruction->component},
                        {"residue", obstruction->residue.to_string()},
                        {"residues", residues}};
    j["result"] = "logarithm in w^(" + std::to_string(obstruction->order) + ")";
    return j;
}

} // namespace frwgalois
