#include "tnl/paper_faithful.hpp"

#include <algorithm>
#include <cmath>

#include "tnl/errors.hpp"
#include "tnl/variational.hpp"

namespace tnl {

namespace {

constexpr double kOverflowExponent = 700.0;
constexpr double kRootMatchTol = 1e-12;
constexpr double kSolutionMatchTol = 1e-6;
constexpr double kGroundTruthTol = 1e-5;

}  // namespace

CharacteristicCoefficients printed_characteristic_coefficients(const OscillatorParams& params) {
    params.validate();
    const double g2 = params.gamma * params.gamma;
    return {params.k / params.m + g2, g2 * (params.k + params.ktilde) / params.m};
}

CharacteristicCoefficients appendix_implied_coefficients(const OscillatorParams& params) {
    params.validate();
    const double g2 = params.gamma * params.gamma;
    return {g2 - 2.0 * params.k / params.m, -g2 * params.ktilde / params.m};
}

RootPair appendix_roots(const OscillatorParams& params) {
    params.validate();
    const double g2 = params.gamma * params.gamma;
    const double base = g2 / 2.0 - params.k / params.m;
    const complex inner = std::sqrt(complex(base * base + g2 * params.ktilde / params.m, 0.0));
    const auto root = [](complex y) {
        return std::sqrt(complex(y.real(), y.imag() == 0.0 ? 0.0 : y.imag()));
    };
    return {root(base + inner), root(base - inner)};
}

double root_distance(const RootPair& a, const RootPair& b) {
    const auto rel = [](complex x, complex y) {
        const double scale = std::max({std::abs(x), std::abs(y), 1e-300});
        return std::min(std::abs(x - y), std::abs(x + y)) / scale;
    };
    // Roots are compared up to sign and as an unordered pair.
    const double same = std::max(rel(a.x1, b.x1), rel(a.x2, b.x2));
    const double swapped = std::max(rel(a.x1, b.x2), rel(a.x2, b.x1));
    const bool zero_pair = std::abs(a.x2) == 0.0 && std::abs(b.x2) == 0.0;
    if (zero_pair) return rel(a.x1, b.x1);
    return std::min(same, swapped);
}

double local_limit_deviation(const CharacteristicCoefficients& cc, const OscillatorParams& params) {
    params.validate();
    const double target = -(params.k + params.ktilde) / params.m;
    const complex sd = std::sqrt(complex(cc.c2 * cc.c2 - 4.0 * cc.c0, 0.0));
    const complex plus = 0.5 * (cc.c2 + sd);
    const complex minus = 0.5 * (cc.c2 - sd);
    const complex big = std::abs(plus) >= std::abs(minus) ? plus : minus;
    const complex small = std::abs(big) > 0.0 ? complex(cc.c0, 0.0) / big : complex(0.0);
    const double diff = std::abs(small - target);
    return target != 0.0 ? diff / std::abs(target) : diff;
}

namespace appendix_terms {

complex d_prefactor(const AppendixInputs& in) { return in.x1 * in.x1 - in.x2 * in.x2; }

complex d_term1(const AppendixInputs& in) {
    const auto& [x1, x2, k, g, x0, v0, t] = in;
    return -2.0 * x1 * x2 * (k + x2 * x2) * g * std::cosh(x2 * t);
}

complex d_term2(const AppendixInputs& in) {
    const auto& [x1, x2, k, g, x0, v0, t] = in;
    return (k + x1 * x1) * x2 *
           (2.0 * x1 * g * std::cosh(x1 * t) + (x1 * x1 + g * g) * std::sinh(x1 * t));
}

complex d_term3(const AppendixInputs& in) {
    const auto& [x1, x2, k, g, x0, v0, t] = in;
    return -x1 * (k + x2 * x2) * (x2 * x2 + g * g) * std::sinh(x2 * t);
}

complex b1_prefactor(const AppendixInputs& in) { return in.kappa + in.x2 * in.x2; }

complex b1_term1(const AppendixInputs& in) {
    const auto& [x1, x2, k, g, x0, v0, t] = in;
    return -x2 * g * (v0 * (-k + x1 * x1 - 2.0 * x2 * x2) + x0 * (k + x1 * x1) * g) *
           std::cosh(x2 * t);
}

complex b1_term2(const AppendixInputs& in) {
    const auto& [x1, x2, k, g, x0, v0, t] = in;
    return -(k + x1 * x1) * x2 * (v0 - x0 * g) * (g * std::cosh(x1 * t) + x1 * std::sinh(x1 * t));
}

complex b1_term3(const AppendixInputs& in) {
    const auto& [x1, x2, k, g, x0, v0, t] = in;
    return (v0 * x2 * x2 * (k + x2 * x2) - x0 * (k + x1 * x1) * x2 * x2 * g +
            v0 * (-x1 * x1 + x2 * x2) * g * g) *
           std::sinh(x2 * t);
}

complex b3_prefactor(const AppendixInputs& in) { return in.x1 * (in.kappa + in.x1 * in.x1); }

complex b3_term1(const AppendixInputs& in) {
    const auto& [x1, x2, k, g, x0, v0, t] = in;
    return (k + x2 * x2) * g * (-v0 + x0 * g) * std::cosh(x2 * t);
}

complex b3_term2(const AppendixInputs& in) {
    const auto& [x1, x2, k, g, x0, v0, t] = in;
    return -x1 * g * (v0 * (-k - 2.0 * x1 * x1 + x2 * x2) + x0 * (k + x2 * x2) * g) *
           std::cosh(x1 * t);
}

complex b3_term3(const AppendixInputs& in) {
    const auto& [x1, x2, k, g, x0, v0, t] = in;
    return -(-v0 * x1 * x1 * (k + x1 * x1) + x0 * x1 * x1 * (k + x2 * x2) * g +
             v0 * (-x1 * x1 + x2 * x2) * g * g) *
           std::sinh(x1 * t);
}

complex b3_term4(const AppendixInputs& in) {
    const auto& [x1, x2, k, g, x0, v0, t] = in;
    return -x1 * x2 * (k + x1 * x1) * (k + x2 * x2) * (v0 - x0 * g) * std::sinh(x2 * t);
}

complex b4_prefactor(const AppendixInputs& in) { return in.kappa + in.x1 * in.x1; }

complex b4_term1(const AppendixInputs& in) {
    const auto& [x1, x2, k, g, x0, v0, t] = in;
    return x1 * x2 * (-v0 * (k + x2 * x2) - x0 * (-k - 2.0 * x1 * x1 + x2 * x2) * g) *
           std::cosh(x1 * t);
}

complex b4_term2(const AppendixInputs& in) {
    const auto& [x1, x2, k, g, x0, v0, t] = in;
    return x2 *
           (-v0 * (k + x2 * x2) * g + x0 * (k * g * g + x1 * x1 * (x1 * x1 - x2 * x2 + g * g))) *
           std::sinh(x1 * t);
}

complex b4_term3(const AppendixInputs& in) {
    const auto& [x1, x2, k, g, x0, v0, t] = in;
    return x1 * (k + x2 * x2) * (v0 - x0 * g) * (x2 * std::cosh(x2 * t) + g * std::sinh(x2 * t));
}

}  // namespace appendix_terms

AppendixCoefficients appendix_coefficients(const OscillatorParams& params, double q0, double v0,
                                           double t_end) {
    params.validate();
    require(std::isfinite(t_end) && t_end > 0.0, ErrorKind::InvalidArgument,
            "appendix: t_end must be positive");
    const auto r = appendix_roots(params);
    AppendixCoefficients c;
    c.inputs = {r.x1, r.x2, params.k / params.m, params.gamma, q0, v0, t_end};
    const double growth = std::max(std::abs(r.x1.real()), std::abs(r.x2.real())) * t_end;
    if (growth > kOverflowExponent) {
        fail(ErrorKind::Range, "appendix: unscaled cosh/sinh overflow (Re(x) t > 700)");
    }
    namespace at = appendix_terms;
    const auto& in = c.inputs;
    c.d = at::d_prefactor(in) * (at::d_term1(in) + at::d_term2(in) + at::d_term3(in));
    c.b[0] = at::b1_prefactor(in) * (at::b1_term1(in) + at::b1_term2(in) + at::b1_term3(in));
    c.b[2] = at::b3_prefactor(in) *
             (at::b3_term1(in) + at::b3_term2(in) + at::b3_term3(in) + at::b3_term4(in));
    c.b[3] = at::b4_prefactor(in) * (at::b4_term1(in) + at::b4_term2(in) + at::b4_term3(in));
    c.b[1] = q0 * c.d - c.b[3];
    if (!(std::abs(c.d) > 0.0) || !std::isfinite(std::abs(c.d))) {
        fail(std::isfinite(std::abs(c.d)) ? ErrorKind::DegenerateProblem : ErrorKind::Range,
             "appendix: denominator d is zero or not finite");
    }
    for (std::size_t i = 0; i < 4; ++i) c.a[i] = c.b[i] / c.d;
    return c;
}

complex appendix_eval(const AppendixCoefficients& c, double s, int order) {
    require(order == 0 || order == 1, ErrorKind::InvalidArgument,
            "appendix: only orders 0 and 1 are transcribed");
    const complex x1 = c.inputs.x1;
    const complex x2 = c.inputs.x2;
    if (order == 0) {
        return (c.b[0] * std::sinh(x1 * s) + c.b[1] * std::cosh(x1 * s) +
                c.b[2] * std::sinh(x2 * s) + c.b[3] * std::cosh(x2 * s)) /
               c.d;
    }
    return (c.b[0] * x1 * std::cosh(x1 * s) + c.b[1] * x1 * std::sinh(x1 * s) +
            c.b[2] * x2 * std::cosh(x2 * s) + c.b[3] * x2 * std::sinh(x2 * s)) /
           c.d;
}

AppendixTrajectory appendix_solution(const OscillatorParams& params, double q0, double v0,
                                     const Grid& grid) {
    const auto c = appendix_coefficients(params, q0, v0, grid.t_end());
    std::vector<double> q(grid.size());
    std::vector<double> v(grid.size());
    double max_q = 0.0;
    double max_imag = 0.0;
    for (std::size_t i = 0; i < grid.size(); ++i) {
        const complex value = appendix_eval(c, grid[i], 0);
        const complex slope = appendix_eval(c, grid[i], 1);
        if (!std::isfinite(value.real()) || !std::isfinite(slope.real())) {
            fail(ErrorKind::Range, "appendix: printed solution is not finite on the grid");
        }
        q[i] = value.real();
        v[i] = slope.real();
        max_q = std::max(max_q, std::abs(q[i]));
        max_imag = std::max(max_imag, std::abs(value.imag()));
    }
    AppendixTrajectory out{Path(grid, std::move(q)), std::move(v), 0.0};
    out.max_imag_ratio = max_q > 0.0 ? max_imag / max_q : (max_imag > 0.0 ? INFINITY : 0.0);
    return out;
}

std::string_view to_string(FormulaVerdict v) noexcept {
    switch (v) {
        case FormulaVerdict::Matches: return "matches";
        case FormulaVerdict::Differs: return "differs";
        case FormulaVerdict::Degenerate: return "degenerate";
    }
    return "degenerate";
}

PaperComparison compare_paper_vs_derived(const OscillatorParams& params, double q0, double v0,
                                         double t_end, std::size_t n) {
    PaperComparison out;
    const Grid grid = Grid::uniform(t_end, n);
    out.derived = characteristic_coefficients(params);
    out.printed = printed_characteristic_coefficients(params);
    out.appendix_implied = appendix_implied_coefficients(params);
    out.appendix_roots = appendix_roots(params);
    try {
        out.derived_roots = roots(out.derived);
        out.root_discrepancy = root_distance(out.derived_roots, out.appendix_roots);
        out.roots_verdict = out.root_discrepancy <= kRootMatchTol ? FormulaVerdict::Matches
                                                                   : FormulaVerdict::Differs;
    } catch (const Error&) {
        out.roots_verdict = FormulaVerdict::Degenerate;
    }

    std::optional<Path> normative;
    try {
        const auto sol = solve_closed_form(params, q0, v0, t_end);
        normative = sample_path(sol, grid);
        out.normative_residual = oscillator_relative_residual(params, *normative);
    } catch (const Error&) {
    }
    try {
        ClosedFormOptions opts;
        opts.coefficients = out.appendix_implied;
        const auto sol = solve_closed_form(params, q0, v0, t_end, opts);
        out.appendix_roots_residual = oscillator_relative_residual(params, sample_path(sol, grid));
    } catch (const Error&) {
    }
    try {
        const auto printed = appendix_solution(params, q0, v0, grid);
        out.appendix_residual = oscillator_relative_residual(params, printed.path);
        out.appendix_imag_ratio = printed.max_imag_ratio;
        if (normative) {
            double diff = 0.0;
            double scale = 0.0;
            for (std::size_t i = 0; i < grid.size(); ++i) {
                diff = std::max(diff, std::abs(printed.path[i] - (*normative)[i]));
                scale = std::max(scale, std::abs((*normative)[i]));
            }
            out.solution_difference = scale > 0.0 ? diff / scale : diff;
            out.solution_verdict = *out.solution_difference <= kSolutionMatchTol
                                       ? FormulaVerdict::Matches
                                       : FormulaVerdict::Differs;
        }
    } catch (const Error& e) {
        out.appendix_failure = e.what();
        out.solution_verdict = FormulaVerdict::Degenerate;
    }

    const bool derived_ok = out.normative_residual && *out.normative_residual <= kGroundTruthTol;
    const bool appendix_ok =
        out.appendix_roots_residual && *out.appendix_roots_residual <= kGroundTruthTol;
    out.residual_winner = derived_ok && appendix_ok ? "both"
                          : derived_ok              ? "derived"
                          : appendix_ok             ? "appendix"
                                                    : "none";
    return out;
}

}  // namespace tnl
