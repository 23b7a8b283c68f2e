#include "tnl/lagrangian.hpp"

#include <cmath>

#include "tnl/errors.hpp"

namespace tnl {

namespace {

TimeFunction constant_fn(double v) {
    return [v](double) { return v; };
}

bool finite_all(std::initializer_list<double> xs) {
    for (double x : xs)
        if (!std::isfinite(x)) return false;
    return true;
}

}  // namespace

void GeneralLagrangianSpec::validate() const {
    require(std::isfinite(m) && m > 0.0, ErrorKind::InvalidArgument, "lagrangian: m must be > 0");
    require(finite_all({A, B, C, D, E, F, G, H}), ErrorKind::InvalidArgument,
            "lagrangian: coefficients must be finite");
}

ReducedLagrangianSpec ReducedLagrangianSpec::constant(double m, double a, double b, double c,
                                                      double d, double f, MemoryKernel kernel) {
    ReducedLagrangianSpec spec;
    spec.m = m;
    spec.a = constant_fn(a);
    spec.b = constant_fn(b);
    spec.c = constant_fn(c);
    spec.d = constant_fn(d);
    spec.f = constant_fn(f);
    spec.kernel = std::move(kernel);
    spec.validate();
    return spec;
}

void ReducedLagrangianSpec::validate() const {
    require(std::isfinite(m) && m > 0.0, ErrorKind::InvalidArgument, "lagrangian: m must be > 0");
    require(a && b && c && d && f, ErrorKind::InvalidArgument,
            "lagrangian: reduced coefficient functions must all be set");
}

void OscillatorParams::validate() const {
    require(std::isfinite(m) && m > 0.0, ErrorKind::InvalidArgument, "oscillator: m must be > 0");
    require(std::isfinite(gamma) && gamma > 0.0, ErrorKind::InvalidArgument,
            "oscillator: gamma must be > 0");
    require(std::isfinite(k) && std::isfinite(ktilde), ErrorKind::InvalidArgument,
            "oscillator: spring constants must be finite");
}

ReducedLagrangianSpec to_reduced(const OscillatorParams& params) {
    params.validate();
    return ReducedLagrangianSpec::constant(params.m, 0.0, -0.5 * params.k, 0.0, 0.0,
                                           -params.ktilde, params.kernel());
}

ReducedLagrangianSpec reduce_general(const GeneralLagrangianSpec& spec, double t_end) {
    spec.validate();
    require(std::isfinite(t_end) && t_end > 0.0, ErrorKind::InvalidArgument,
            "reduce: t_end must be positive");
    if (spec.E == 0.0 && spec.G == 0.0 && spec.H == 0.0) {
        return ReducedLagrangianSpec::constant(spec.m, spec.A, spec.B, spec.C, spec.D, spec.F,
                                               spec.kernel);
    }
    if (!spec.kernel.is_exponential()) {
        fail(ErrorKind::UnsupportedKernel,
             "reduce: integration by parts needs d(alpha)/dr proportional to alpha "
             "(exponential kernel only)");
    }
    const double g = spec.kernel.gamma();
    const double E = spec.E, G = spec.G, H = spec.H;

    // On r < s: alpha(s,s) = g/2, d(alpha)/dr = g alpha, d(alpha)/ds = -g alpha.
    //   E q(s) \int alpha qdot  ->  (E g/2) q^2 - E q(0) alpha(s,0) q(s) - E g q J
    //   G qdot(s) J(s)          ->  G q(t) J(t) - (G g/2) q^2 + G g q J
    //   H qdot(s) \int alpha qdot -> (H g^2/2) q^2 - H g^2 q J - H g q(0) alpha(s,0) q(s)
    //                                - H g q(t) J(t) + endpoint terms
    ReducedLagrangianSpec out = ReducedLagrangianSpec::constant(
        spec.m, spec.A, spec.B + 0.5 * (E - G) * g + 0.5 * H * g * g, spec.C, spec.D,
        spec.F - (E - G) * g - H * g * g, spec.kernel);

    const double initial_scale = -(E + H * g) * 0.5 * g;
    if (initial_scale != 0.0) {
        out.initial_coupling = [initial_scale, g](double s) {
            return initial_scale * std::exp(-g * s);
        };
    }
    const double terminal_scale = (G - H * g) * 0.5 * g;
    if (terminal_scale != 0.0) {
        out.terminal_coupling = [terminal_scale, g, t_end](double s) {
            return terminal_scale * std::exp(-g * (t_end - s));
        };
    }
    if (H != 0.0) {
        const double cross = 0.5 * H * g * std::exp(-g * t_end);
        out.boundary_remainder = [H, g, cross](double q0, double qt) {
            return 0.25 * H * g * (q0 * q0 + qt * qt) - cross * q0 * qt;
        };
    }
    return out;
}

}  // namespace tnl
