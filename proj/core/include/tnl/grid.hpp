#pragma once

#include <cstddef>
#include <functional>
#include <span>
#include <vector>

namespace tnl {

/// Uniform grid s_i = i*h on [0, t_end], h = t_end/(n-1), n >= 3.
class Grid {
public:
    static Grid uniform(double t_end, std::size_t n);

    double t_end() const noexcept { return t_end_; }
    std::size_t size() const noexcept { return nodes_.size(); }
    double step() const noexcept { return step_; }
    double operator[](std::size_t i) const noexcept { return nodes_[i]; }
    std::span<const double> nodes() const noexcept { return nodes_; }

    /// Grids are the same when they describe the same node set.
    bool same_as(const Grid& other) const noexcept;

private:
    Grid(double t_end, std::vector<double> nodes);

    double t_end_;
    double step_;
    std::vector<double> nodes_;
};

Grid make_uniform_grid(double t_end, std::size_t n);

/// A sampled trajectory q(s_i). Velocities are never stored; they are
/// recovered from positions by finite differences.
class Path {
public:
    Path(Grid grid, std::vector<double> q);

    static Path sample(const Grid& grid, const std::function<double(double)>& f);
    static Path zero(const Grid& grid);

    const Grid& grid() const noexcept { return grid_; }
    std::span<const double> q() const noexcept { return q_; }
    double operator[](std::size_t i) const noexcept { return q_[i]; }
    std::size_t size() const noexcept { return q_.size(); }

    Path with_values(std::vector<double> q) const { return Path(grid_, std::move(q)); }

private:
    Grid grid_;
    std::vector<double> q_;
};

/// Second-order central differences in the interior, second-order one-sided
/// stencils at both endpoints.
std::vector<double> first_derivative(const Grid& grid, std::span<const double> q);

/// Central second difference at interior nodes; endpoint entries are left at 0
/// and must not be consumed.
std::vector<double> second_derivative(const Grid& grid, std::span<const double> q);

}  // namespace tnl
