#include "tnl/grid.hpp"

#include <cmath>

#include "tnl/errors.hpp"

namespace tnl {

Grid::Grid(double t_end, std::vector<double> nodes)
    : t_end_(t_end), step_(t_end / static_cast<double>(nodes.size() - 1)), nodes_(std::move(nodes)) {}

Grid Grid::uniform(double t_end, std::size_t n) {
    require(std::isfinite(t_end) && t_end > 0.0, ErrorKind::InvalidArgument,
            "grid: t_end must be positive and finite");
    require(n >= 3, ErrorKind::InvalidArgument, "grid: need at least 3 nodes");
    std::vector<double> nodes(n);
    const double h = t_end / static_cast<double>(n - 1);
    for (std::size_t i = 0; i < n; ++i) nodes[i] = static_cast<double>(i) * h;
    nodes.back() = t_end;
    return Grid(t_end, std::move(nodes));
}

bool Grid::same_as(const Grid& other) const noexcept {
    return size() == other.size() && t_end_ == other.t_end_;
}

Grid make_uniform_grid(double t_end, std::size_t n) { return Grid::uniform(t_end, n); }

Path::Path(Grid grid, std::vector<double> q) : grid_(std::move(grid)), q_(std::move(q)) {
    require(q_.size() == grid_.size(), ErrorKind::InvalidArgument,
            "path: sample count does not match grid");
    for (double v : q_) {
        require(std::isfinite(v), ErrorKind::InvalidArgument, "path: non-finite sample");
    }
}

Path Path::sample(const Grid& grid, const std::function<double(double)>& f) {
    std::vector<double> q(grid.size());
    for (std::size_t i = 0; i < q.size(); ++i) q[i] = f(grid[i]);
    return Path(grid, std::move(q));
}

Path Path::zero(const Grid& grid) { return Path(grid, std::vector<double>(grid.size(), 0.0)); }

std::vector<double> first_derivative(const Grid& grid, std::span<const double> q) {
    const std::size_t n = grid.size();
    require(q.size() == n, ErrorKind::InvalidArgument, "derivative: size mismatch");
    const double h = grid.step();
    std::vector<double> v(n);
    v[0] = (-3.0 * q[0] + 4.0 * q[1] - q[2]) / (2.0 * h);
    for (std::size_t i = 1; i + 1 < n; ++i) v[i] = (q[i + 1] - q[i - 1]) / (2.0 * h);
    v[n - 1] = (3.0 * q[n - 1] - 4.0 * q[n - 2] + q[n - 3]) / (2.0 * h);
    return v;
}

std::vector<double> second_derivative(const Grid& grid, std::span<const double> q) {
    const std::size_t n = grid.size();
    require(q.size() == n, ErrorKind::InvalidArgument, "derivative: size mismatch");
    const double h2 = grid.step() * grid.step();
    std::vector<double> a(n, 0.0);
    for (std::size_t i = 1; i + 1 < n; ++i) a[i] = (q[i - 1] - 2.0 * q[i] + q[i + 1]) / h2;
    return a;
}

}  // namespace tnl
