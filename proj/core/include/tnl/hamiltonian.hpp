#pragma once

#include <vector>

#include "tnl/action.hpp"

namespace tnl {

struct PhasePath {
    Grid grid;
    std::vector<double> q;
    std::vector<double> p;

    PhasePath(Grid grid, std::vector<double> q, std::vector<double> p);
};

/// p(s) = delta S / delta qdot(s) = m qdot + A~ q + C~. The memory term holds
/// no velocity, so the momentum stays local.
std::vector<double> momentum(const ReducedLagrangianSpec& spec, const Path& path);
std::vector<double> momentum(const OscillatorParams& params, const Path& path);

/// qdot(p) = (p - A~ q - C~) / m.
std::vector<double> velocity_from_momentum(const ReducedLagrangianSpec& spec,
                                           const PhasePath& phase);

/// H[q, p] = -S[q, qdot(p)] + \int p qdot(p) ds.
double generalized_hamiltonian(const ReducedLagrangianSpec& spec, const PhasePath& phase,
                               QuadratureRule rule);

enum class HamiltonianDensity {
    /// (A~^2/2m - B~) q^2 and (A~ C~/m - D~) q, what the Legendre transform gives.
    LegendreConsistent,
    /// (A~/2m - B~) q^2 and ((A~ C~ - D~)/m) q, as printed.
    PaperLiteral,
};

/// Quadrature of the closed-form density
///   p^2/2m - (A~/m) q p + c_qq q^2 - (C~/m) p + c_q q + C~^2/2m - F~ q J
/// minus endpoint couplings and the boundary remainder.
double analytic_hamiltonian_reduced(
    const ReducedLagrangianSpec& spec, const PhasePath& phase, QuadratureRule rule,
    HamiltonianDensity density = HamiltonianDensity::LegendreConsistent);

struct HamiltonResiduals {
    std::vector<double> r_q;  // delta H/delta q + delta S/delta q (qdot held fixed)
    std::vector<double> r_p;  // delta H/delta p - qdot
};

/// Both residuals are node-wise weight-normalised central differences with
/// step h, the same scheme as functional_gradient. qdot in r_p is the finite
/// difference velocity of the phase's q.
HamiltonResiduals hamilton_residuals(const ReducedLagrangianSpec& spec, const PhasePath& phase,
                                     QuadratureRule rule, double h);

/// |(-H + \int p qdot) - S| with p = momentum(path).
double legendre_roundtrip(const ReducedLagrangianSpec& spec, const Path& path,
                          QuadratureRule rule);

}  // namespace tnl
