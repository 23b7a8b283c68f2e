#pragma once

#include <functional>
#include <span>
#include <vector>

#include "tnl/lagrangian.hpp"
#include "tnl/quadrature.hpp"

namespace tnl {

/// S[q] = \int_0^t L ds on the path's grid. Velocities come from
/// first_derivative(); inner memory integrals use trapezoid on each prefix.
double action(const ReducedLagrangianSpec& spec, const Path& path, QuadratureRule rule);
double action(const GeneralLagrangianSpec& spec, const Path& path, QuadratureRule rule);
double action(const OscillatorParams& params, const Path& path, QuadratureRule rule);

/// Action with positions and velocities sampled independently, S[q, qdot].
/// This is the object the momentum and Hamiltonian are defined against.
double action_qv(const ReducedLagrangianSpec& spec, const Grid& grid, std::span<const double> q,
                 std::span<const double> qdot, QuadratureRule rule);

/// Continuous trajectory for high-accuracy action evaluation.
struct SmoothPath {
    std::function<double(double)> q;
    std::function<double(double)> qdot;
};

/// Adaptive Gauss-Kronrod on the outer and every inner integral. Used as the
/// reference when comparing the general and reduced forms at 1e-8 relative,
/// a level the O(h^2) grid discretisation cannot reach.
double action_smooth(const ReducedLagrangianSpec& spec, const SmoothPath& path, double t_end);
double action_smooth(const GeneralLagrangianSpec& spec, const SmoothPath& path, double t_end);

/// Node-wise discrete functional derivative
///   g_i = [S(q + h e_i) - S(q - h e_i)] / (2 h w_i).
/// Nodes closer than three steps to either end see one-sided velocity stencils
/// and boundary terms; they are reported but flagged as not clean.
struct FunctionalGradient {
    std::vector<double> g;
    std::size_t first_clean = 0;
    std::size_t last_clean = 0;  // inclusive
};

using ActionFunctional = std::function<double(const Path&)>;

FunctionalGradient functional_gradient(const ActionFunctional& S, const Path& path,
                                       QuadratureRule rule, double h);
FunctionalGradient functional_gradient(const ReducedLagrangianSpec& spec, const Path& path,
                                       QuadratureRule rule, double h);
FunctionalGradient functional_gradient(const GeneralLagrangianSpec& spec, const Path& path,
                                       QuadratureRule rule, double h);
FunctionalGradient functional_gradient(const OscillatorParams& params, const Path& path,
                                       QuadratureRule rule, double h);

/// Discrete delta S / delta qdot(s_i), perturbing velocity samples with q fixed.
std::vector<double> velocity_gradient(const ReducedLagrangianSpec& spec, const Grid& grid,
                                      std::span<const double> q, std::span<const double> qdot,
                                      QuadratureRule rule, double h);

}  // namespace tnl
