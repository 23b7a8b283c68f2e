#pragma once

#include <Eigen/Dense>
#include <array>
#include <functional>
#include <vector>

#include "tnl/grid.hpp"
#include "tnl/lagrangian.hpp"

namespace tnl {

/// How the second boundary row is closed.
enum class SecondCondition {
    InitialVelocity,   // (-3 q_0 + 4 q_1 - q_2) / 2h = v0
    TerminalPosition,  // q_{n-1} = qbar
};

/// Dense collocation of the integro-differential equation of motion. Interior
/// rows hold the residual operator (m times the second difference plus local
/// terms plus trapezoid memory sums); rows 0 and n-1 are the two conditions.
struct CollocationSystem {
    Grid grid;
    Eigen::MatrixXd matrix;
    Eigen::VectorXd rhs;
    std::array<std::size_t, 2> condition_rows{};
};

CollocationSystem assemble_collocation(const ReducedLagrangianSpec& spec, const Grid& grid,
                                       double q0, SecondCondition second, double value);

struct CollocationSolution {
    Path path;
    double rcond = 0.0;  // reciprocal condition estimate of the LU factorisation
};

/// Dense LU with partial pivoting. Raises IllPosed when the factorisation is
/// numerically singular.
CollocationSolution solve_collocation(const CollocationSystem& system);

Path solve_integro_ivp(const ReducedLagrangianSpec& spec, double q0, double v0, double t_end,
                       std::size_t n);
Path solve_integro_ivp(const OscillatorParams& params, double q0, double v0, double t_end,
                       std::size_t n);
Path solve_integro_bvp(const ReducedLagrangianSpec& spec, double q0, double q_bar, double t_end,
                       std::size_t n);
Path solve_integro_bvp(const OscillatorParams& params, double q0, double q_bar, double t_end,
                       std::size_t n);

/// O(n) solve of the oscillator IVP for the exponential kernel. The memory sums
/// split into forward and backward geometric recursions, turning the dense
/// system into a banded one. Agrees with the dense solver to rounding.
Path solve_integro_ivp_banded(const OscillatorParams& params, double q0, double v0,
                              double t_end, std::size_t n);

struct ConvergenceEstimate {
    std::vector<std::size_t> sizes;
    std::vector<double> differences;  // L-inf between successive solutions on shared nodes
    std::vector<double> orders;       // one per consecutive pair of differences
    double order = 0.0;               // finest-level estimate
    bool inconclusive = false;
};

/// Self-convergence from successive refinements. Consecutive sizes must nest
/// ((n_{k+1} - 1) divisible by (n_k - 1)). Zero or non-decreasing differences
/// mark the estimate inconclusive.
ConvergenceEstimate estimate_convergence(const std::function<Path(std::size_t)>& solver,
                                         const std::vector<std::size_t>& n_sequence);

/// Observed order from errors against a known reference at spacings h_k.
double observed_order(double h_coarse, double err_coarse, double h_fine, double err_fine);

}  // namespace tnl
