#include "tnl/collocation.hpp"

#include <Eigen/Sparse>
#include <Eigen/SparseLU>
#include <cmath>

#include "tnl/errors.hpp"

namespace tnl {

namespace {

constexpr double kSingularRcond = 1e-15;

void require_size(std::size_t n) {
    require(n >= 5, ErrorKind::InvalidArgument, "collocation: need at least 5 nodes");
}

double central(const TimeFunction& fn, double s, double h) {
    return (fn(s + h) - fn(s - h)) / (2.0 * h);
}

}  // namespace

CollocationSystem assemble_collocation(const ReducedLagrangianSpec& spec, const Grid& grid,
                                       double q0, SecondCondition second, double value) {
    spec.validate();
    const std::size_t n = grid.size();
    require_size(n);
    require(std::isfinite(q0) && std::isfinite(value), ErrorKind::InvalidArgument,
            "collocation: boundary data must be finite");
    const double h = grid.step();
    const auto N = static_cast<Eigen::Index>(n);

    CollocationSystem sys{grid, Eigen::MatrixXd::Zero(N, N), Eigen::VectorXd::Zero(N), {0, n - 1}};
    auto& A = sys.matrix;
    auto& b = sys.rhs;

    std::vector<double> f(n);
    for (std::size_t j = 0; j < n; ++j) f[j] = spec.f(grid[j]);
    const bool dirac = spec.kernel.is_dirac();
    const GridKernel alpha(spec.kernel, grid);
    const double diff = spec.m / (h * h);

    for (std::size_t i = 1; i + 1 < n; ++i) {
        const auto r = static_cast<Eigen::Index>(i);
        const double s = grid[i];
        A(r, r - 1) += diff;
        A(r, r) += -2.0 * diff + central(spec.a, s, h) - 2.0 * spec.b(s);
        A(r, r + 1) += diff;
        b(r) = spec.d(s) - central(spec.c, s, h);
        if (spec.initial_coupling) A(r, 0) -= spec.initial_coupling(s);
        if (spec.terminal_coupling) A(r, N - 1) -= spec.terminal_coupling(s);

        if (dirac) {
            A(r, r) -= f[i];  // half from each one-sided integral
            continue;
        }
        // -F~(s_i) \int_0^{s_i} alpha(s_i, r) q(r) dr
        for (std::size_t j = 0; j <= i; ++j) {
            const double w = (j == 0 || j == i) ? 0.5 * h : h;
            A(r, static_cast<Eigen::Index>(j)) -= f[i] * w * alpha(i, j);
        }
        // -\int_{s_i}^t F~(r) alpha(r, s_i) q(r) dr
        for (std::size_t j = i; j < n; ++j) {
            const double w = (j == i || j == n - 1) ? 0.5 * h : h;
            A(r, static_cast<Eigen::Index>(j)) -= w * f[j] * alpha(j, i);
        }
    }

    A(0, 0) = 1.0;
    b(0) = q0;
    if (second == SecondCondition::InitialVelocity) {
        A(N - 1, 0) = -3.0 / (2.0 * h);
        A(N - 1, 1) = 4.0 / (2.0 * h);
        A(N - 1, 2) = -1.0 / (2.0 * h);
    } else {
        A(N - 1, N - 1) = 1.0;
    }
    b(N - 1) = value;
    return sys;
}

CollocationSolution solve_collocation(const CollocationSystem& system) {
    Eigen::PartialPivLU<Eigen::MatrixXd> lu(system.matrix);
    const double rcond = lu.rcond();
    if (!(rcond > kSingularRcond)) {
        fail(ErrorKind::IllPosed, "collocation: system matrix is numerically singular");
    }
    const Eigen::VectorXd x = lu.solve(system.rhs);
    std::vector<double> q(x.data(), x.data() + x.size());
    for (double v : q) {
        if (!std::isfinite(v)) fail(ErrorKind::IllPosed, "collocation: non-finite solution");
    }
    return {Path(system.grid, std::move(q)), rcond};
}

Path solve_integro_ivp(const ReducedLagrangianSpec& spec, double q0, double v0, double t_end,
                       std::size_t n) {
    require_size(n);
    const Grid grid = Grid::uniform(t_end, n);
    return solve_collocation(
               assemble_collocation(spec, grid, q0, SecondCondition::InitialVelocity, v0))
        .path;
}

Path solve_integro_ivp(const OscillatorParams& params, double q0, double v0, double t_end,
                       std::size_t n) {
    return solve_integro_ivp(to_reduced(params), q0, v0, t_end, n);
}

Path solve_integro_bvp(const ReducedLagrangianSpec& spec, double q0, double q_bar, double t_end,
                       std::size_t n) {
    require_size(n);
    const Grid grid = Grid::uniform(t_end, n);
    return solve_collocation(
               assemble_collocation(spec, grid, q0, SecondCondition::TerminalPosition, q_bar))
        .path;
}

Path solve_integro_bvp(const OscillatorParams& params, double q0, double q_bar, double t_end,
                       std::size_t n) {
    return solve_integro_bvp(to_reduced(params), q0, q_bar, t_end, n);
}

Path solve_integro_ivp_banded(const OscillatorParams& params, double q0, double v0,
                              double t_end, std::size_t n) {
    params.validate();
    require_size(n);
    const Grid grid = Grid::uniform(t_end, n);
    const double h = grid.step();
    const double g = params.gamma;
    const double decay = std::exp(-g * h);
    const double mem = params.ktilde * 0.5 * g * h;
    const double diff = params.m / (h * h);

    // Unknowns interleaved as (q_i, P_i, R_i):
    //   P_0 = q_0/2,     P_i = decay P_{i-1} + q_i
    //   R_{n-1} = q_{n-1}/2, R_i = decay R_{i+1} + q_i
    // so the full trapezoid memory sum at node i is (g h/2)(P_i + R_i - q_i).
    const auto Q = [](std::size_t i) { return static_cast<int>(3 * i); };
    const auto P = [](std::size_t i) { return static_cast<int>(3 * i + 1); };
    const auto R = [](std::size_t i) { return static_cast<int>(3 * i + 2); };
    const int size = static_cast<int>(3 * n);

    std::vector<Eigen::Triplet<double>> t;
    t.reserve(12 * n);
    Eigen::VectorXd rhs = Eigen::VectorXd::Zero(size);
    for (std::size_t i = 0; i < n; ++i) {
        if (i == 0) {
            t.emplace_back(P(0), P(0), 1.0);
            t.emplace_back(P(0), Q(0), -0.5);
        } else {
            t.emplace_back(P(i), P(i), 1.0);
            t.emplace_back(P(i), P(i - 1), -decay);
            t.emplace_back(P(i), Q(i), -1.0);
        }
        if (i == n - 1) {
            t.emplace_back(R(i), R(i), 1.0);
            t.emplace_back(R(i), Q(i), -0.5);
        } else {
            t.emplace_back(R(i), R(i), 1.0);
            t.emplace_back(R(i), R(i + 1), -decay);
            t.emplace_back(R(i), Q(i), -1.0);
        }
        if (i == 0) {
            t.emplace_back(Q(0), Q(0), 1.0);
            rhs(Q(0)) = q0;
        } else if (i == n - 1) {
            t.emplace_back(Q(i), Q(0), -3.0 / (2.0 * h));
            t.emplace_back(Q(i), Q(1), 4.0 / (2.0 * h));
            t.emplace_back(Q(i), Q(2), -1.0 / (2.0 * h));
            rhs(Q(i)) = v0;
        } else {
            t.emplace_back(Q(i), Q(i - 1), diff);
            t.emplace_back(Q(i), Q(i), -2.0 * diff + params.k - mem);
            t.emplace_back(Q(i), Q(i + 1), diff);
            t.emplace_back(Q(i), P(i), mem);
            t.emplace_back(Q(i), R(i), mem);
        }
    }
    Eigen::SparseMatrix<double> A(size, size);
    A.setFromTriplets(t.begin(), t.end());
    A.makeCompressed();
    Eigen::SparseLU<Eigen::SparseMatrix<double>, Eigen::COLAMDOrdering<int>> lu;
    lu.compute(A);
    if (lu.info() != Eigen::Success) {
        fail(ErrorKind::IllPosed, "collocation: banded system is singular");
    }
    const Eigen::VectorXd z = lu.solve(rhs);
    std::vector<double> q(n);
    for (std::size_t i = 0; i < n; ++i) {
        q[i] = z(Q(i));
        if (!std::isfinite(q[i])) fail(ErrorKind::IllPosed, "collocation: non-finite solution");
    }
    return Path(grid, std::move(q));
}

ConvergenceEstimate estimate_convergence(const std::function<Path(std::size_t)>& solver,
                                         const std::vector<std::size_t>& n_sequence) {
    require(n_sequence.size() >= 3, ErrorKind::InvalidArgument,
            "convergence: need at least three grid sizes");
    for (std::size_t k = 0; k + 1 < n_sequence.size(); ++k) {
        const std::size_t coarse = n_sequence[k] - 1;
        const std::size_t fine = n_sequence[k + 1] - 1;
        require(fine > coarse && fine % coarse == 0, ErrorKind::InvalidArgument,
                "convergence: grid sizes must be increasing and nested");
    }
    ConvergenceEstimate est;
    est.sizes = n_sequence;
    std::vector<Path> paths;
    paths.reserve(n_sequence.size());
    for (std::size_t n : n_sequence) paths.push_back(solver(n));

    for (std::size_t k = 0; k + 1 < paths.size(); ++k) {
        const auto& coarse = paths[k];
        const auto& fine = paths[k + 1];
        const std::size_t stride = (fine.size() - 1) / (coarse.size() - 1);
        double worst = 0.0;
        for (std::size_t i = 0; i < coarse.size(); ++i)
            worst = std::max(worst, std::abs(fine[i * stride] - coarse[i]));
        est.differences.push_back(worst);
    }
    for (std::size_t k = 0; k + 1 < est.differences.size(); ++k) {
        const double d0 = est.differences[k];
        const double d1 = est.differences[k + 1];
        if (!(d0 > 0.0 && d1 > 0.0) || d1 >= d0) {
            est.inconclusive = true;
            est.orders.push_back(NAN);
            continue;
        }
        const double ratio =
            static_cast<double>(n_sequence[k + 1] - 1) / static_cast<double>(n_sequence[k] - 1);
        est.orders.push_back(std::log(d0 / d1) / std::log(ratio));
    }
    est.order = est.orders.empty() ? NAN : est.orders.back();
    if (!std::isfinite(est.order)) est.inconclusive = true;
    return est;
}

double observed_order(double h_coarse, double err_coarse, double h_fine, double err_fine) {
    if (!(err_coarse > 0.0 && err_fine > 0.0)) return NAN;
    return std::log(err_coarse / err_fine) / std::log(h_coarse / h_fine);
}

}  // namespace tnl
