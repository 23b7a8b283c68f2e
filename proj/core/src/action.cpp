#include "tnl/action.hpp"

#include <boost/math/quadrature/gauss_kronrod.hpp>
#include <cmath>

#include "tnl/errors.hpp"

namespace tnl {

namespace {

using boost::math::quadrature::gauss_kronrod;

constexpr unsigned kMaxDepth = 15;
constexpr double kRelTol = 1e-13;

template <class F>
double gk(F&& f, double a, double b) {
    if (b <= a) return 0.0;
    return gauss_kronrod<double, 31>::integrate(std::forward<F>(f), a, b, kMaxDepth, kRelTol);
}

void require_matching(const Path& path) {
    require(path.size() >= 3, ErrorKind::InvalidArgument, "action: path too short");
}

}  // namespace

double action_qv(const ReducedLagrangianSpec& spec, const Grid& grid, std::span<const double> q,
                 std::span<const double> qdot, QuadratureRule rule) {
    const std::size_t n = grid.size();
    require(q.size() == n && qdot.size() == n, ErrorKind::InvalidArgument,
            "action: samples do not match the integration grid");
    const auto w = quadrature_weights(rule, grid);
    const auto J = prefix_memory(spec.kernel, grid, q);
    const double q0 = q.front();
    const double qt = q.back();
    double S = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        const double s = grid[i];
        const double x = q[i];
        const double v = qdot[i];
        double density = 0.5 * spec.m * v * v + spec.a(s) * x * v + spec.b(s) * x * x +
                         spec.c(s) * v + spec.d(s) * x + spec.f(s) * x * J[i];
        if (spec.initial_coupling) density += q0 * spec.initial_coupling(s) * x;
        if (spec.terminal_coupling) density += qt * spec.terminal_coupling(s) * x;
        S += w[i] * density;
    }
    return S + spec.remainder(q0, qt);
}

double action(const ReducedLagrangianSpec& spec, const Path& path, QuadratureRule rule) {
    require_matching(path);
    const auto v = first_derivative(path.grid(), path.q());
    return action_qv(spec, path.grid(), path.q(), v, rule);
}

double action(const GeneralLagrangianSpec& spec, const Path& path, QuadratureRule rule) {
    require_matching(path);
    spec.validate();
    const Grid& grid = path.grid();
    const auto q = path.q();
    const auto v = first_derivative(grid, q);
    const auto w = quadrature_weights(rule, grid);
    const auto Jq = prefix_memory(spec.kernel, grid, q);
    const auto Jv = prefix_memory(spec.kernel, grid, v);
    double S = 0.0;
    for (std::size_t i = 0; i < grid.size(); ++i) {
        const double x = q[i];
        const double u = v[i];
        const double local = 0.5 * spec.m * u * u + spec.A * x * u + spec.B * x * x +
                             spec.C * u + spec.D * x;
        const double memory =
            x * (spec.E * Jv[i] + spec.F * Jq[i]) + u * (spec.G * Jq[i] + spec.H * Jv[i]);
        S += w[i] * (local + memory);
    }
    return S;
}

double action(const OscillatorParams& params, const Path& path, QuadratureRule rule) {
    return action(to_reduced(params), path, rule);
}

double action_smooth(const ReducedLagrangianSpec& spec, const SmoothPath& path, double t_end) {
    require(!spec.kernel.is_dirac(), ErrorKind::UnsupportedKernel,
            "smooth action: Dirac kernel has no pointwise value");
    const double q0 = path.q(0.0);
    const double qt = path.q(t_end);
    const auto density = [&](double s) {
        const double x = path.q(s);
        const double v = path.qdot(s);
        const double J = gk([&](double r) { return spec.kernel(s, r) * path.q(r); }, 0.0, s);
        double l = 0.5 * spec.m * v * v + spec.a(s) * x * v + spec.b(s) * x * x + spec.c(s) * v +
                   spec.d(s) * x + spec.f(s) * x * J;
        if (spec.initial_coupling) l += q0 * spec.initial_coupling(s) * x;
        if (spec.terminal_coupling) l += qt * spec.terminal_coupling(s) * x;
        return l;
    };
    return gk(density, 0.0, t_end) + spec.remainder(q0, qt);
}

double action_smooth(const GeneralLagrangianSpec& spec, const SmoothPath& path, double t_end) {
    spec.validate();
    require(!spec.kernel.is_dirac(), ErrorKind::UnsupportedKernel,
            "smooth action: Dirac kernel has no pointwise value");
    const auto density = [&](double s) {
        const double x = path.q(s);
        const double u = path.qdot(s);
        const double Jq = gk([&](double r) { return spec.kernel(s, r) * path.q(r); }, 0.0, s);
        const double Jv = gk([&](double r) { return spec.kernel(s, r) * path.qdot(r); }, 0.0, s);
        return 0.5 * spec.m * u * u + spec.A * x * u + spec.B * x * x + spec.C * u + spec.D * x +
               x * (spec.E * Jv + spec.F * Jq) + u * (spec.G * Jq + spec.H * Jv);
    };
    return gk(density, 0.0, t_end);
}

FunctionalGradient functional_gradient(const ActionFunctional& S, const Path& path,
                                       QuadratureRule rule, double h) {
    require(std::isfinite(h) && h > 0.0, ErrorKind::InvalidArgument,
            "functional gradient: perturbation must be positive");
    const std::size_t n = path.size();
    const auto w = quadrature_weights(rule, path.grid());
    std::vector<double> q(path.q().begin(), path.q().end());
    FunctionalGradient out;
    out.g.resize(n);
    for (std::size_t i = 0; i < n; ++i) {
        const double saved = q[i];
        q[i] = saved + h;
        const double up = S(path.with_values(q));
        q[i] = saved - h;
        const double down = S(path.with_values(q));
        q[i] = saved;
        out.g[i] = (up - down) / (2.0 * h * w[i]);
    }
    out.first_clean = std::min<std::size_t>(3, n - 1);
    out.last_clean = n >= 4 ? n - 4 : 0;
    return out;
}

FunctionalGradient functional_gradient(const ReducedLagrangianSpec& spec, const Path& path,
                                       QuadratureRule rule, double h) {
    return functional_gradient([&](const Path& p) { return action(spec, p, rule); }, path, rule,
                               h);
}

FunctionalGradient functional_gradient(const GeneralLagrangianSpec& spec, const Path& path,
                                       QuadratureRule rule, double h) {
    return functional_gradient([&](const Path& p) { return action(spec, p, rule); }, path, rule,
                               h);
}

FunctionalGradient functional_gradient(const OscillatorParams& params, const Path& path,
                                       QuadratureRule rule, double h) {
    return functional_gradient(to_reduced(params), path, rule, h);
}

std::vector<double> velocity_gradient(const ReducedLagrangianSpec& spec, const Grid& grid,
                                      std::span<const double> q, std::span<const double> qdot,
                                      QuadratureRule rule, double h) {
    require(std::isfinite(h) && h > 0.0, ErrorKind::InvalidArgument,
            "velocity gradient: perturbation must be positive");
    const auto w = quadrature_weights(rule, grid);
    std::vector<double> v(qdot.begin(), qdot.end());
    std::vector<double> out(v.size());
    for (std::size_t i = 0; i < v.size(); ++i) {
        const double saved = v[i];
        v[i] = saved + h;
        const double up = action_qv(spec, grid, q, v, rule);
        v[i] = saved - h;
        const double down = action_qv(spec, grid, q, v, rule);
        v[i] = saved;
        out[i] = (up - down) / (2.0 * h * w[i]);
    }
    return out;
}

}  // namespace tnl
