#pragma once

#include <span>
#include <variant>
#include <vector>

#include "tnl/grid.hpp"

namespace tnl {

struct ExponentialKernel {
    double gamma;
};

/// alpha -> delta(t - s). Handled operationally by the memory integrals:
/// two-sided integrals pick up q(s) with unit weight, one-sided ones (prefix
/// [0, s] or suffix [s, t]) pick up half of it, matching the gamma -> inf
/// limit of the exponential kernel.
struct DiracLimitKernel {};

/// Values on a uniform tensor grid, bilinear in between.
struct TabulatedKernel {
    Grid grid;
    std::vector<double> values;  // row-major, values[i * n + j] = alpha(s_i, s_j)
};

class MemoryKernel {
public:
    using Variant = std::variant<ExponentialKernel, DiracLimitKernel, TabulatedKernel>;

    static MemoryKernel exponential(double gamma);
    static MemoryKernel dirac();
    static MemoryKernel tabulated(Grid grid, std::vector<double> values);

    const Variant& variant() const noexcept { return variant_; }
    bool is_dirac() const noexcept { return std::holds_alternative<DiracLimitKernel>(variant_); }
    bool is_exponential() const noexcept {
        return std::holds_alternative<ExponentialKernel>(variant_);
    }
    /// Only meaningful for the exponential kernel.
    double gamma() const;

    /// alpha(t, s). The Dirac limit has no pointwise value and raises.
    double operator()(double t, double s) const;

    /// Max |alpha(t,s) - alpha(s,t)| over the table; 0 for analytic kernels.
    double asymmetry() const;

private:
    explicit MemoryKernel(Variant v) : variant_(std::move(v)) {}
    Variant variant_;
};

double kernel_eval(const MemoryKernel& kernel, double t, double s);

/// Kernel restricted to the nodes of one grid. Exponential kernels are stored
/// by node distance, others as a dense matrix.
class GridKernel {
public:
    GridKernel(const MemoryKernel& kernel, const Grid& grid);

    bool dirac() const noexcept { return dirac_; }
    double operator()(std::size_t i, std::size_t j) const noexcept {
        if (!by_distance_.empty()) return by_distance_[i > j ? i - j : j - i];
        return dense_[i * n_ + j];
    }

private:
    std::size_t n_;
    bool dirac_ = false;
    std::vector<double> by_distance_;
    std::vector<double> dense_;
};

/// J_i = \int_0^{s_i} alpha(s_i, r) q(r) dr with trapezoid weights on each
/// prefix (J_0 = 0). O(n) for the exponential kernel, O(n^2) otherwise.
std::vector<double> prefix_memory(const MemoryKernel& kernel, const Grid& grid,
                                  std::span<const double> q);

/// I_i = \int_0^t alpha(s_i, r) q(r) dr with trapezoid weights.
std::vector<double> full_memory(const MemoryKernel& kernel, const Grid& grid,
                                std::span<const double> q);

}  // namespace tnl
