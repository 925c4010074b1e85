#include "frwgalois/linode/linode.hpp"

namespace frwgalois {

namespace {

const ParamPoly& sym_q()
{
    static const ParamPoly q = ParamPoly::param("q");
    return q;
}

const ParamPoly& sym_qd()
{
    static const ParamPoly qd = ParamPoly::param("qd");
    return qd;
}

/// Time derivative along the branch: f_q qd + f_qd qddot.
ParamRational along_flow(const ParamRational& f, const ParamRational& acceleration)
{
    return f.derivative("q") * ParamRational(sym_qd()) + f.derivative("qd") * acceleration;
}

} // namespace

std::array<std::array<ParamRational, 2>, 2> VariationalSystem::normal_block() const
{
    return {{{matrix[2][2], matrix[2][3]}, {matrix[3][2], matrix[3][3]}}};
}

VariationalSystem variational_equations(const HamiltonianModel& model, BranchId branch_id)
{
    if (model.id == ModelId::ConformalRotated && branch_id == BranchId::Pi3) {
        VariationalSystem s = variational_equations(canonical_transform(model, TransformId::BlockB), BranchId::Pi3);
        s.model = ModelId::ConformalRotated;
        return s;
    }
    const ParticularBranch& branch = model.branch(branch_id);
    const int moving = branch.coordinate == "q2" ? 2 : 1;
    const std::string qt = moving == 1 ? "q1" : "q2";
    const std::string pt = moving == 1 ? "p1" : "p2";
    const std::string qn = moving == 1 ? "q2" : "q1";
    const std::string pn = moving == 1 ? "p2" : "p1";

    const auto eom = model.equations_of_motion();
    // equations_of_motion is ordered (q1, p1, q2, p2).
    const std::map<std::string, PhasePoly> rhs = {{"q1", eom[0]}, {"p1", eom[1]}, {"q2", eom[2]}, {"p2", eom[3]}};
    const ParamPoly p_sym = ParamPoly::param("p");
    const std::map<std::string, ParamPoly> on_branch = {{qt, sym_q()}, {pt, p_sym}, {qn, ParamPoly()}, {pn, ParamPoly()}};
    const ParamRational denominator(model.hamiltonian_denominator);

    VariationalSystem s;
    s.model = model.id;
    s.branch = branch_id;
    s.variables = {qt, pt, qn, pn};

    // qd = c p on the branch.
    const ParamPoly qdot = eom[moving == 1 ? 0 : 2].substitute(on_branch);
    const ParamPoly c = qdot.coefficient("p", 1);
    if (c.is_zero() || !(c * p_sym == qdot) || c.has_symbol("q")) {
        throw LinodeError("tangential velocity is not a constant multiple of the momentum");
    }
    s.velocity_factor = ParamRational(c) / denominator;
    const std::map<std::string, ParamRational> p_to_qd = {{"p", ParamRational(sym_qd()) / s.velocity_factor}};

    const ParamPoly pdot = rhs.at(pt).substitute(on_branch);
    s.acceleration = (s.velocity_factor * ParamRational(pdot) / denominator).substitute(p_to_qd);

    for (std::size_t i = 0; i < 4; ++i) {
        for (std::size_t j = 0; j < 4; ++j) {
            const ParamPoly entry = rhs.at(s.variables[i]).derivative(s.variables[j]).substitute(on_branch);
            s.matrix[i][j] = (ParamRational(entry) / denominator).substitute(p_to_qd);
        }
    }
    s.velocity_squared = branch.velocity_squared;
    if (s.velocity_squared.is_zero()) {
        throw LinodeError("degenerate particular solution");
    }
    return s;
}

NormalVariationalEquation normal_variational_equation(const VariationalSystem& system)
{
    const auto n = system.normal_block();
    if (n[0][1].is_zero()) {
        throw LinodeError("normal block does not couple position to momentum");
    }
    const ParamRational d12 = along_flow(n[0][1], system.acceleration) / n[0][1];
    const ParamRational d11 = along_flow(n[0][0], system.acceleration);
    NormalVariationalEquation nve;
    nve.system = system;
    nve.P = -(n[0][0] + d12 + n[1][1]);
    nve.Q = -(d11 + n[0][1] * n[1][0] - n[0][0] * d12 - n[0][0] * n[1][1]);
    return nve;
}

} // namespace frwgalois
