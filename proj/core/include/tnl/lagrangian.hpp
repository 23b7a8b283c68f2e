#pragma once

#include <functional>

#include "tnl/kernel.hpp"

namespace tnl {

using TimeFunction = std::function<double(double)>;

/// Second-order Lagrangian with constant coefficients
///   L = m/2 qdot^2 + A q qdot + B q^2 + C qdot + D q
///     + \int_0^s alpha(s,r) [E q(s) qdot(r) + F q(s) q(r) + G qdot(s) q(r) + H qdot(s) qdot(r)] dr
struct GeneralLagrangianSpec {
    double m = 1.0;
    double A = 0.0, B = 0.0, C = 0.0, D = 0.0;
    double E = 0.0, F = 0.0, G = 0.0, H = 0.0;
    MemoryKernel kernel = MemoryKernel::exponential(1.0);

    void validate() const;
};

/// Reduced form with a single memory term:
///   L = m/2 qdot^2 + A~ q qdot + B~ q^2 + C~ qdot + D~ q + F~ q(s) \int_0^s alpha(s,r) q(r) dr
///     + q(0) u0(s) q(s) + q(t) ut(s) q(s)
/// plus an endpoint-only remainder R(q(0), q(t)) added to the action.
///
/// The two endpoint couplings collect what integration by parts of the E, G, H
/// terms leaves behind: q(0) or q(t) times a linear functional of the path.
/// With both endpoints pinned they act as extra D~-type forcing.
struct ReducedLagrangianSpec {
    double m = 1.0;
    TimeFunction a, b, c, d, f;
    MemoryKernel kernel = MemoryKernel::exponential(1.0);
    TimeFunction initial_coupling;
    TimeFunction terminal_coupling;
    std::function<double(double q0, double qt)> boundary_remainder;

    static ReducedLagrangianSpec constant(double m, double a, double b, double c, double d,
                                          double f, MemoryKernel kernel);

    bool has_couplings() const noexcept {
        return static_cast<bool>(initial_coupling) || static_cast<bool>(terminal_coupling);
    }
    double remainder(double q0, double qt) const {
        return boundary_remainder ? boundary_remainder(q0, qt) : 0.0;
    }
    void validate() const;
};

struct OscillatorParams {
    double m = 1.0;
    double k = 1.0;
    double ktilde = 0.0;
    double gamma = 1.0;

    void validate() const;
    MemoryKernel kernel() const { return MemoryKernel::exponential(gamma); }
};

/// L = m/2 qdot^2 - k/2 q^2 - ktilde q \int_0^s alpha q, i.e. B~ = -k/2, F~ = -ktilde.
ReducedLagrangianSpec to_reduced(const OscillatorParams& params);

/// Eliminates the E, G, H double integrals by integration by parts. Only the
/// exponential kernel is supported: its r-derivative is proportional to
/// itself on r < s, which is what lets the leftover memory terms fold into F~.
ReducedLagrangianSpec reduce_general(const GeneralLagrangianSpec& spec, double t_end);

}  // namespace tnl
