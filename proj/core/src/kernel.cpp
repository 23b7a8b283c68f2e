#include "tnl/kernel.hpp"

#include <algorithm>
#include <cmath>

#include "tnl/errors.hpp"

namespace tnl {

namespace {

template <class... Ts>
struct overloaded : Ts... {
    using Ts::operator()...;
};
template <class... Ts>
overloaded(Ts...) -> overloaded<Ts...>;

double bilinear(const TabulatedKernel& tab, double t, double s) {
    const auto& g = tab.grid;
    const double slack = 1e-12 * g.t_end();
    if (t < -slack || s < -slack || t > g.t_end() + slack || s > g.t_end() + slack) {
        fail(ErrorKind::Domain, "tabulated kernel evaluated outside its grid");
    }
    const std::size_t n = g.size();
    const auto locate = [&](double x, std::size_t& cell, double& frac) {
        const double u = std::clamp(x / g.step(), 0.0, static_cast<double>(n - 1));
        cell = std::min(static_cast<std::size_t>(u), n - 2);
        frac = u - static_cast<double>(cell);
    };
    std::size_t i = 0, j = 0;
    double ft = 0.0, fs = 0.0;
    locate(t, i, ft);
    locate(s, j, fs);
    const auto at = [&](std::size_t a, std::size_t b) { return tab.values[a * n + b]; };
    return (1 - ft) * (1 - fs) * at(i, j) + ft * (1 - fs) * at(i + 1, j) +
           (1 - ft) * fs * at(i, j + 1) + ft * fs * at(i + 1, j + 1);
}

}  // namespace

MemoryKernel MemoryKernel::exponential(double gamma) {
    require(std::isfinite(gamma) && gamma > 0.0, ErrorKind::InvalidArgument,
            "exponential kernel: gamma must be positive");
    return MemoryKernel(ExponentialKernel{gamma});
}

MemoryKernel MemoryKernel::dirac() { return MemoryKernel(DiracLimitKernel{}); }

MemoryKernel MemoryKernel::tabulated(Grid grid, std::vector<double> values) {
    require(values.size() == grid.size() * grid.size(), ErrorKind::InvalidArgument,
            "tabulated kernel: need n*n values");
    for (double v : values) {
        require(std::isfinite(v), ErrorKind::InvalidArgument, "tabulated kernel: non-finite value");
    }
    return MemoryKernel(TabulatedKernel{std::move(grid), std::move(values)});
}

double MemoryKernel::gamma() const {
    if (const auto* e = std::get_if<ExponentialKernel>(&variant_)) return e->gamma;
    fail(ErrorKind::UnsupportedKernel, "kernel has no cutoff gamma");
}

double MemoryKernel::operator()(double t, double s) const {
    return std::visit(
        overloaded{
            [&](const ExponentialKernel& e) {
                return 0.5 * e.gamma * std::exp(-e.gamma * std::abs(t - s));
            },
            [](const DiracLimitKernel&) -> double {
                fail(ErrorKind::UnsupportedKernel, "Dirac kernel has no pointwise value");
            },
            [&](const TabulatedKernel& tab) { return bilinear(tab, t, s); },
        },
        variant_);
}

double MemoryKernel::asymmetry() const {
    const auto* tab = std::get_if<TabulatedKernel>(&variant_);
    if (tab == nullptr) return 0.0;
    const std::size_t n = tab->grid.size();
    double worst = 0.0;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < i; ++j)
            worst = std::max(worst, std::abs(tab->values[i * n + j] - tab->values[j * n + i]));
    return worst;
}

double kernel_eval(const MemoryKernel& kernel, double t, double s) { return kernel(t, s); }

GridKernel::GridKernel(const MemoryKernel& kernel, const Grid& grid) : n_(grid.size()) {
    if (kernel.is_dirac()) {
        dirac_ = true;
        by_distance_.assign(n_, 0.0);
        return;
    }
    if (kernel.is_exponential()) {
        const double g = kernel.gamma();
        by_distance_.resize(n_);
        for (std::size_t d = 0; d < n_; ++d)
            by_distance_[d] = 0.5 * g * std::exp(-g * static_cast<double>(d) * grid.step());
        return;
    }
    dense_.resize(n_ * n_);
    for (std::size_t i = 0; i < n_; ++i)
        for (std::size_t j = 0; j < n_; ++j) dense_[i * n_ + j] = kernel(grid[i], grid[j]);
}

std::vector<double> prefix_memory(const MemoryKernel& kernel, const Grid& grid,
                                  std::span<const double> q) {
    const std::size_t n = grid.size();
    require(q.size() == n, ErrorKind::InvalidArgument, "memory: size mismatch");
    const double h = grid.step();
    std::vector<double> J(n, 0.0);
    if (kernel.is_dirac()) {
        for (std::size_t i = 0; i < n; ++i) J[i] = 0.5 * q[i];
        return J;
    }
    if (kernel.is_exponential()) {
        const double g = kernel.gamma();
        const double decay = std::exp(-g * h);
        double acc = 0.5 * q[0];
        for (std::size_t i = 1; i < n; ++i) {
            acc = decay * acc + q[i];
            J[i] = 0.5 * g * h * (acc - 0.5 * q[i]);
        }
        return J;
    }
    const GridKernel a(kernel, grid);
    for (std::size_t i = 1; i < n; ++i) {
        double sum = 0.5 * (a(i, 0) * q[0] + a(i, i) * q[i]);
        for (std::size_t j = 1; j < i; ++j) sum += a(i, j) * q[j];
        J[i] = h * sum;
    }
    return J;
}

std::vector<double> full_memory(const MemoryKernel& kernel, const Grid& grid,
                                std::span<const double> q) {
    const std::size_t n = grid.size();
    require(q.size() == n, ErrorKind::InvalidArgument, "memory: size mismatch");
    const double h = grid.step();
    std::vector<double> I(n, 0.0);
    if (kernel.is_dirac()) {
        for (std::size_t i = 0; i < n; ++i) I[i] = q[i];
        I.front() *= 0.5;
        I.back() *= 0.5;
        return I;
    }
    if (kernel.is_exponential()) {
        const double g = kernel.gamma();
        const double decay = std::exp(-g * h);
        I = prefix_memory(kernel, grid, q);
        double acc = 0.5 * q[n - 1];
        for (std::size_t i = n - 1; i-- > 0;) {
            acc = decay * acc + q[i];
            I[i] += 0.5 * g * h * (acc - 0.5 * q[i]);
        }
        return I;
    }
    const GridKernel a(kernel, grid);
    for (std::size_t i = 0; i < n; ++i) {
        double sum = 0.5 * (a(i, 0) * q[0] + a(i, n - 1) * q[n - 1]);
        for (std::size_t j = 1; j + 1 < n; ++j) sum += a(i, j) * q[j];
        I[i] = h * sum;
    }
    return I;
}

}  // namespace tnl
