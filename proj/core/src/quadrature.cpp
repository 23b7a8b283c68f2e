#include "tnl/quadrature.hpp"

#include "tnl/errors.hpp"

namespace tnl {

std::vector<double> quadrature_weights(QuadratureRule rule, const Grid& grid) {
    const std::size_t n = grid.size();
    const double h = grid.step();
    std::vector<double> w(n);
    if (rule == QuadratureRule::Trapezoid) {
        for (auto& x : w) x = h;
        w.front() = w.back() = 0.5 * h;
        return w;
    }
    require(n % 2 == 1, ErrorKind::InvalidArgument, "simpson: node count must be odd");
    for (std::size_t i = 0; i < n; ++i) w[i] = (i % 2 == 1 ? 4.0 : 2.0) * h / 3.0;
    w.front() = w.back() = h / 3.0;
    return w;
}

double integrate(QuadratureRule rule, const Grid& grid, std::span<const double> samples) {
    require(samples.size() == grid.size(), ErrorKind::InvalidArgument,
            "integrate: sample count does not match grid");
    const auto w = quadrature_weights(rule, grid);
    double sum = 0.0;
    for (std::size_t i = 0; i < w.size(); ++i) sum += w[i] * samples[i];
    return sum;
}

}  // namespace tnl
