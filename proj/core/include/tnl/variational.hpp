#pragma once

#include <vector>

#include "tnl/action.hpp"

namespace tnl {

/// Residual of the equation of motion at the interior nodes s_1..s_{n-2}.
/// Endpoints are excluded: the variation vanishes there.
struct ResidualProfile {
    Grid grid;
    std::vector<double> r;  // r[k] belongs to node k + 1
    double norm_inf = 0.0;
    double norm_l2 = 0.0;

    static ResidualProfile from_interior(Grid grid, std::vector<double> r);
    double node(std::size_t k) const { return grid[k + 1]; }
};

/// Argument order of the kernel in the future integral \int_s^t F~(r) alpha(., .) q(r) dr.
/// Derived = alpha(r, s), what the functional derivative of the action produces;
/// PaperLiteral = alpha(s, r). They coincide for symmetric kernels.
enum class KernelArgumentOrder { Derived, PaperLiteral };

/// residual(s) = m q'' + A~' q + C~' - 2 B~ q - D~ - q(0) u0 - q(t) ut
///             - F~(s) \int_0^s alpha(s,r) q dr - \int_s^t F~(r) alpha(.,.) q(r) dr.
///
/// Sign convention: residual = -delta S / delta q(s). A path solves the
/// equation of motion iff the residual vanishes. Coefficient derivatives are
/// central differences with the grid step.
ResidualProfile el_residual_analytic(const ReducedLagrangianSpec& spec, const Path& path,
                                     KernelArgumentOrder order = KernelArgumentOrder::Derived);

/// residual(s) = m q'' + k q + ktilde \int_0^t alpha(s,r) q(r) dr.
ResidualProfile oscillator_residual(const OscillatorParams& params, const Path& path);

/// norm_inf of oscillator_residual over max interior |m q''|; 0 for an exact
/// zero residual, infinity when the residual is nonzero on a flat path.
double oscillator_relative_residual(const OscillatorParams& params, const Path& path);

/// max over clean interior nodes of |functional_gradient + el_residual_analytic|,
/// i.e. |g - (-1) r|: the discrete action gradient equals minus the residual.
double gradient_vs_analytic(const ReducedLagrangianSpec& spec, const Path& path,
                            QuadratureRule rule,
                            KernelArgumentOrder order = KernelArgumentOrder::Derived,
                            double h = 0.0);

/// Same comparison, but the gradient is taken of the unreduced action while the
/// residual is that of its reduction.
double gradient_vs_analytic(const GeneralLagrangianSpec& spec, const Path& path,
                            QuadratureRule rule, double h = 0.0);

}  // namespace tnl
