#pragma once

#include <array>
#include <complex>
#include <optional>
#include <vector>

#include "tnl/grid.hpp"
#include "tnl/lagrangian.hpp"

namespace tnl {

using complex = std::complex<double>;

/// Fourth-order reduction q'''' - c2 q'' + c0 q = 0 of the exponential-kernel
/// oscillator.
struct CharacteristicCoefficients {
    double c2 = 0.0;
    double c0 = 0.0;
};

/// Obtained by differentiating the integro-differential equation twice: the
/// kernel (g/2) e^{-g|s-r|} is a Green's function of g^2 - d^2/ds^2, so the
/// memory integral I obeys I'' = g^2 I - g^2 q. Eliminating I gives
///   c2 = g^2 - k/m,   c0 = -g^2 (k + ktilde)/m.
CharacteristicCoefficients characteristic_coefficients(const OscillatorParams& params);

struct RootPair {
    complex x1;  // x1^2 is the root of y^2 - c2 y + c0 with the larger real part
    complex x2;
};

/// Principal square roots of the two solutions of y^2 - c2 y + c0 = 0.
/// Throws DegenerateRoots when the quadratic has a double root.
RootPair roots(const CharacteristicCoefficients& cc);

/// Which pair of boundary relations ties the fourth-order ODE back to the
/// integro-differential equation.
enum class ConsistencyVariant { Derived, PaperLiteral };

/// w[0] q + w[1] q' + w[2] q'' + w[3] q''' = 0 at s = at.
struct ConsistencyCondition {
    double at = 0.0;
    std::array<double, 4> weights{};

    double apply(double q, double dq, double ddq, double dddq) const {
        return weights[0] * q + weights[1] * dq + weights[2] * ddq + weights[3] * dddq;
    }
};

/// Derived: the memory integral satisfies I'(0) = g I(0) and I'(t) = -g I(t);
/// with I = -(m q'' + k q)/ktilde this reads
///   q'''(0) + (k/m) q'(0) =  g (q''(0) + (k/m) q(0))
///   q'''(t) + (k/m) q'(t) = -g (q''(t) + (k/m) q(t)).
/// PaperLiteral flips the sign of every k/m term.
std::array<ConsistencyCondition, 2> consistency_conditions(const OscillatorParams& params,
                                                           double t_end,
                                                           ConsistencyVariant variant);

struct ClosedFormOptions {
    /// Overrides the reduced-ODE coefficients (used to test alternative sets).
    std::optional<CharacteristicCoefficients> coefficients;
    ConsistencyVariant consistency = ConsistencyVariant::Derived;
};

/// q(s) = sum_j c_j e^{lambda_j (s - o_j)} over the scaled basis
///   {e^{x1 (s-t)}, e^{-x1 s}, e^{x2 (s-t)}, e^{-x2 s}}.
/// Shifting the growing exponentials to the right end keeps every basis value
/// at most 1 in magnitude for Re x >= 0.
struct ClosedFormSolution {
    OscillatorParams params;
    double t_end = 0.0;
    CharacteristicCoefficients coefficients;
    RootPair roots;
    std::array<complex, 4> amplitudes{};
    double q0 = 0.0;
    double v0 = 0.0;
    ConsistencyVariant consistency = ConsistencyVariant::Derived;

    std::array<complex, 4> rates() const { return {roots.x1, -roots.x1, roots.x2, -roots.x2}; }
    std::array<double, 4> offsets() const { return {t_end, 0.0, t_end, 0.0}; }
};

ClosedFormSolution solve_closed_form(const OscillatorParams& params, double q0, double v0,
                                     double t_end, const ClosedFormOptions& options = {});

/// order-th derivative (0..4) of q at s, as a complex number (no realness check).
complex eval_complex(const ClosedFormSolution& sol, double s, int order);

/// Sum of the moduli of the individual basis terms: the scale against which
/// rounding in eval_complex is judged.
double term_scale(const ClosedFormSolution& sol, double s, int order);

/// Real part of the order-th derivative. Raises Domain for s outside [0, t]
/// and InternalConsistency when the imaginary part exceeds 1e-10 of the term scale.
double eval_solution(const ClosedFormSolution& sol, double s, int order = 0);

std::vector<double> sample_solution(const ClosedFormSolution& sol, const Grid& grid,
                                    int order = 0);
Path sample_path(const ClosedFormSolution& sol, const Grid& grid);

}  // namespace tnl
