#include "tnl/io.hpp"

#include <cstdio>
#include <json.hpp>

#include "tnl/errors.hpp"

namespace tnl {

std::string format_double(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

void write_csv(std::ostream& os, std::span<const std::string> header,
               std::span<const std::span<const double>> columns) {
    require(header.size() == columns.size() && !columns.empty(), ErrorKind::InvalidArgument,
            "csv: header and columns disagree");
    const std::size_t rows = columns.front().size();
    for (const auto& c : columns)
        require(c.size() == rows, ErrorKind::InvalidArgument, "csv: ragged columns");
    for (std::size_t i = 0; i < header.size(); ++i) os << (i ? "," : "") << header[i];
    os << '\n';
    for (std::size_t r = 0; r < rows; ++r) {
        for (std::size_t c = 0; c < columns.size(); ++c)
            os << (c ? "," : "") << format_double(columns[c][r]);
        os << '\n';
    }
}

void write_trajectory_csv(std::ostream& os, const Grid& grid, std::span<const double> q,
                          std::span<const double> qdot) {
    const std::string header[] = {"s", "q", "qdot"};
    const std::span<const double> cols[] = {grid.nodes(), q, qdot};
    write_csv(os, header, cols);
}

void write_residual_csv(std::ostream& os, const ResidualProfile& profile) {
    std::vector<double> s(profile.r.size());
    for (std::size_t k = 0; k < s.size(); ++k) s[k] = profile.node(k);
    const std::string header[] = {"s", "residual"};
    const std::span<const double> cols[] = {s, profile.r};
    write_csv(os, header, cols);
}

void write_phase_csv(std::ostream& os, const PhasePath& phase) {
    const std::string header[] = {"s", "q", "p"};
    const std::span<const double> cols[] = {phase.grid.nodes(), phase.q, phase.p};
    write_csv(os, header, cols);
}

namespace {

nlohmann::ordered_json cplx(complex z) { return {{"re", z.real()}, {"im", z.imag()}}; }

}  // namespace

std::string solution_to_json(const ClosedFormSolution& sol, int indent) {
    nlohmann::ordered_json j;
    j["params"] = {{"m", sol.params.m},
                   {"k", sol.params.k},
                   {"ktilde", sol.params.ktilde},
                   {"gamma", sol.params.gamma}};
    j["t_end"] = sol.t_end;
    j["boundary"] = {{"q0", sol.q0}, {"v0", sol.v0}};
    j["ode"] = {{"form", "q'''' - c2 q'' + c0 q = 0"},
                {"c2", sol.coefficients.c2},
                {"c0", sol.coefficients.c0}};
    j["consistency"] = sol.consistency == ConsistencyVariant::Derived ? "derived" : "paper";
    j["roots"] = {{"x1", cplx(sol.roots.x1)}, {"x2", cplx(sol.roots.x2)}};
    j["basis"] = {"exp(x1*(s-t))", "exp(-x1*s)", "exp(x2*(s-t))", "exp(-x2*s)"};
    auto amps = nlohmann::ordered_json::array();
    for (const auto& a : sol.amplitudes) amps.push_back(cplx(a));
    j["amplitudes"] = std::move(amps);
    return j.dump(indent);
}

std::string convergence_to_json(const ConvergenceEstimate& est, int indent) {
    nlohmann::ordered_json j;
    j["sizes"] = est.sizes;
    j["differences"] = est.differences;
    j["orders"] = est.orders;
    j["order"] = est.order;
    j["inconclusive"] = est.inconclusive;
    return j.dump(indent);
}

}  // namespace tnl
