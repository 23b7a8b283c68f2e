#include "tnl/hamiltonian.hpp"

#include <cmath>

#include "tnl/errors.hpp"

namespace tnl {

PhasePath::PhasePath(Grid g, std::vector<double> qs, std::vector<double> ps)
    : grid(std::move(g)), q(std::move(qs)), p(std::move(ps)) {
    require(q.size() == grid.size() && p.size() == grid.size(), ErrorKind::InvalidArgument,
            "phase path: q and p must match the grid");
    for (std::size_t i = 0; i < q.size(); ++i) {
        require(std::isfinite(q[i]) && std::isfinite(p[i]), ErrorKind::InvalidArgument,
                "phase path: non-finite sample");
    }
}

std::vector<double> momentum(const ReducedLagrangianSpec& spec, const Path& path) {
    const auto v = first_derivative(path.grid(), path.q());
    std::vector<double> p(path.size());
    for (std::size_t i = 0; i < p.size(); ++i) {
        const double s = path.grid()[i];
        p[i] = spec.m * v[i] + spec.a(s) * path[i] + spec.c(s);
    }
    return p;
}

std::vector<double> momentum(const OscillatorParams& params, const Path& path) {
    return momentum(to_reduced(params), path);
}

std::vector<double> velocity_from_momentum(const ReducedLagrangianSpec& spec,
                                           const PhasePath& phase) {
    std::vector<double> v(phase.q.size());
    for (std::size_t i = 0; i < v.size(); ++i) {
        const double s = phase.grid[i];
        v[i] = (phase.p[i] - spec.a(s) * phase.q[i] - spec.c(s)) / spec.m;
    }
    return v;
}

double generalized_hamiltonian(const ReducedLagrangianSpec& spec, const PhasePath& phase,
                               QuadratureRule rule) {
    spec.validate();
    const auto v = velocity_from_momentum(spec, phase);
    const auto w = quadrature_weights(rule, phase.grid);
    double pv = 0.0;
    for (std::size_t i = 0; i < v.size(); ++i) pv += w[i] * phase.p[i] * v[i];
    return -action_qv(spec, phase.grid, phase.q, v, rule) + pv;
}

double analytic_hamiltonian_reduced(const ReducedLagrangianSpec& spec, const PhasePath& phase,
                                    QuadratureRule rule, HamiltonianDensity density) {
    spec.validate();
    const auto& grid = phase.grid;
    const auto w = quadrature_weights(rule, grid);
    const auto J = prefix_memory(spec.kernel, grid, phase.q);
    const double m = spec.m;
    const double q0 = phase.q.front();
    const double qt = phase.q.back();
    const bool literal = density == HamiltonianDensity::PaperLiteral;
    double H = 0.0;
    for (std::size_t i = 0; i < grid.size(); ++i) {
        const double s = grid[i];
        const double A = spec.a(s), B = spec.b(s), C = spec.c(s), D = spec.d(s), F = spec.f(s);
        const double q = phase.q[i];
        const double p = phase.p[i];
        const double qq = literal ? A / (2.0 * m) - B : A * A / (2.0 * m) - B;
        const double lin = literal ? (A * C - D) / m : A * C / m - D;
        double h = p * p / (2.0 * m) - A / m * q * p + qq * q * q - C / m * p + lin * q +
                   C * C / (2.0 * m) - F * q * J[i];
        if (spec.initial_coupling) h -= q0 * spec.initial_coupling(s) * q;
        if (spec.terminal_coupling) h -= qt * spec.terminal_coupling(s) * q;
        H += w[i] * h;
    }
    return H - spec.remainder(q0, qt);
}

HamiltonResiduals hamilton_residuals(const ReducedLagrangianSpec& spec, const PhasePath& phase,
                                     QuadratureRule rule, double h) {
    require(std::isfinite(h) && h > 0.0, ErrorKind::InvalidArgument,
            "hamilton residuals: perturbation must be positive");
    const auto& grid = phase.grid;
    const std::size_t n = grid.size();
    const auto w = quadrature_weights(rule, grid);
    const auto qdot = first_derivative(grid, phase.q);
    const auto v = velocity_from_momentum(spec, phase);

    HamiltonResiduals out{std::vector<double>(n), std::vector<double>(n)};
    PhasePath work = phase;
    std::vector<double> q(phase.q);
    for (std::size_t i = 0; i < n; ++i) {
        const double norm = 2.0 * h * w[i];

        const double p_saved = work.p[i];
        work.p[i] = p_saved + h;
        const double hp_up = generalized_hamiltonian(spec, work, rule);
        work.p[i] = p_saved - h;
        const double hp_down = generalized_hamiltonian(spec, work, rule);
        work.p[i] = p_saved;
        out.r_p[i] = (hp_up - hp_down) / norm - qdot[i];

        const double q_saved = work.q[i];
        work.q[i] = q_saved + h;
        const double hq_up = generalized_hamiltonian(spec, work, rule);
        q[i] = q_saved + h;
        const double sq_up = action_qv(spec, grid, q, v, rule);
        work.q[i] = q_saved - h;
        const double hq_down = generalized_hamiltonian(spec, work, rule);
        q[i] = q_saved - h;
        const double sq_down = action_qv(spec, grid, q, v, rule);
        work.q[i] = q_saved;
        q[i] = q_saved;
        out.r_q[i] = (hq_up - hq_down) / norm + (sq_up - sq_down) / norm;
    }
    return out;
}

double legendre_roundtrip(const ReducedLagrangianSpec& spec, const Path& path,
                          QuadratureRule rule) {
    const auto p = momentum(spec, path);
    const PhasePath phase(path.grid(), std::vector<double>(path.q().begin(), path.q().end()), p);
    const double H = generalized_hamiltonian(spec, phase, rule);
    const auto v = first_derivative(path.grid(), path.q());
    const auto w = quadrature_weights(rule, path.grid());
    double pv = 0.0;
    for (std::size_t i = 0; i < v.size(); ++i) pv += w[i] * p[i] * v[i];
    return std::abs((-H + pv) - action(spec, path, rule));
}

}  // namespace tnl
