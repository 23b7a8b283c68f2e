#include "tnl/variational.hpp"

#include <algorithm>
#include <cmath>

#include "tnl/errors.hpp"

namespace tnl {

namespace {

double central(const TimeFunction& fn, double s, double h) {
    return (fn(s + h) - fn(s - h)) / (2.0 * h);
}

// Perturbation for the discrete gradient. The action is quadratic in q so a
// central difference is exact up to rounding; a step comparable to the path
// scale keeps cancellation small.
double default_step(const Path& path) {
    double scale = 0.0;
    for (double x : path.q()) scale = std::max(scale, std::abs(x));
    return 1e-2 * std::max(scale, 1.0);
}

double max_mismatch(const FunctionalGradient& g, const ResidualProfile& r) {
    double worst = 0.0;
    for (std::size_t i = g.first_clean; i <= g.last_clean; ++i)
        worst = std::max(worst, std::abs(g.g[i] + r.r[i - 1]));
    return worst;
}

}  // namespace

ResidualProfile ResidualProfile::from_interior(Grid grid, std::vector<double> r) {
    require(r.size() + 2 == grid.size(), ErrorKind::InvalidArgument,
            "residual: expected one value per interior node");
    ResidualProfile p{std::move(grid), std::move(r)};
    double sq = 0.0;
    for (double x : p.r) {
        p.norm_inf = std::max(p.norm_inf, std::abs(x));
        sq += x * x;
    }
    p.norm_l2 = std::sqrt(sq * p.grid.step());
    return p;
}

ResidualProfile el_residual_analytic(const ReducedLagrangianSpec& spec, const Path& path,
                                     KernelArgumentOrder order) {
    spec.validate();
    const Grid& grid = path.grid();
    const std::size_t n = grid.size();
    const double h = grid.step();
    const auto q = path.q();
    const auto acc = second_derivative(grid, q);
    const auto J = prefix_memory(spec.kernel, grid, q);

    // Future integral \int_{s_i}^t F~(r) alpha q(r) dr by trapezoid on [s_i, t].
    std::vector<double> future(n, 0.0);
    std::vector<double> fq(n);
    for (std::size_t j = 0; j < n; ++j) fq[j] = spec.f(grid[j]) * q[j];
    if (spec.kernel.is_dirac()) {
        for (std::size_t i = 0; i + 1 < n; ++i) future[i] = 0.5 * fq[i];
    } else {
        const GridKernel a(spec.kernel, grid);
        const bool derived = order == KernelArgumentOrder::Derived;
        for (std::size_t i = 0; i + 1 < n; ++i) {
            const auto alpha = [&](std::size_t j) { return derived ? a(j, i) : a(i, j); };
            double sum = 0.5 * (alpha(i) * fq[i] + alpha(n - 1) * fq[n - 1]);
            for (std::size_t j = i + 1; j + 1 < n; ++j) sum += alpha(j) * fq[j];
            future[i] = h * sum;
        }
    }

    std::vector<double> r(n - 2);
    for (std::size_t i = 1; i + 1 < n; ++i) {
        const double s = grid[i];
        double value = spec.m * acc[i] + central(spec.a, s, h) * q[i] + central(spec.c, s, h) -
                       2.0 * spec.b(s) * q[i] - spec.d(s) - spec.f(s) * J[i] - future[i];
        if (spec.initial_coupling) value -= q.front() * spec.initial_coupling(s);
        if (spec.terminal_coupling) value -= q.back() * spec.terminal_coupling(s);
        r[i - 1] = value;
    }
    return ResidualProfile::from_interior(grid, std::move(r));
}

ResidualProfile oscillator_residual(const OscillatorParams& params, const Path& path) {
    params.validate();
    const Grid& grid = path.grid();
    const auto q = path.q();
    const auto acc = second_derivative(grid, q);
    const auto I = full_memory(params.kernel(), grid, q);
    std::vector<double> r(grid.size() - 2);
    for (std::size_t i = 1; i + 1 < grid.size(); ++i)
        r[i - 1] = params.m * acc[i] + params.k * q[i] + params.ktilde * I[i];
    return ResidualProfile::from_interior(grid, std::move(r));
}

double oscillator_relative_residual(const OscillatorParams& params, const Path& path) {
    const auto res = oscillator_residual(params, path);
    const auto acc = second_derivative(path.grid(), path.q());
    double scale = 0.0;
    for (std::size_t i = 1; i + 1 < acc.size(); ++i)
        scale = std::max(scale, std::abs(params.m * acc[i]));
    if (res.norm_inf == 0.0) return 0.0;
    return scale > 0.0 ? res.norm_inf / scale : INFINITY;
}

double gradient_vs_analytic(const ReducedLagrangianSpec& spec, const Path& path,
                            QuadratureRule rule, KernelArgumentOrder order, double h) {
    const double step = h > 0.0 ? h : default_step(path);
    const auto g = functional_gradient(spec, path, rule, step);
    return max_mismatch(g, el_residual_analytic(spec, path, order));
}

double gradient_vs_analytic(const GeneralLagrangianSpec& spec, const Path& path,
                            QuadratureRule rule, double h) {
    const double step = h > 0.0 ? h : default_step(path);
    const auto g = functional_gradient(spec, path, rule, step);
    const auto reduced = reduce_general(spec, path.grid().t_end());
    return max_mismatch(g, el_residual_analytic(reduced, path, KernelArgumentOrder::Derived));
}

}  // namespace tnl
