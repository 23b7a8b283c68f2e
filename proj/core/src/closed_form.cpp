#include "tnl/closed_form.hpp"

#include <Eigen/Dense>
#include <cmath>
#include <string>

#include "tnl/errors.hpp"

namespace tnl {

namespace {

constexpr double kDegenerateRootTol = 1e-12;
constexpr double kSingularTol = 1e-12;
constexpr double kBoundaryTol = 1e-10;
constexpr double kConsistencyTol = 1e-9;
constexpr double kRealnessTol = 1e-10;

complex ipow(complex x, int p) {
    complex r(1.0, 0.0);
    for (int i = 0; i < p; ++i) r *= x;
    return r;
}

void check_residual(const ClosedFormSolution& sol, double s, int order, double target,
                    double tol, const char* what) {
    const double value = eval_complex(sol, s, order).real();
    const double scale = std::max({term_scale(sol, s, order), std::abs(target), 1e-300});
    if (std::abs(value - target) > tol * scale) {
        fail(ErrorKind::InternalConsistency,
             std::string("closed form: ") + what + " not satisfied after solve");
    }
}

}  // namespace

CharacteristicCoefficients characteristic_coefficients(const OscillatorParams& params) {
    params.validate();
    const double g2 = params.gamma * params.gamma;
    return {g2 - params.k / params.m, -g2 * (params.k + params.ktilde) / params.m};
}

RootPair roots(const CharacteristicCoefficients& cc) {
    require(std::isfinite(cc.c2) && std::isfinite(cc.c0), ErrorKind::InvalidArgument,
            "roots: non-finite coefficients");
    const double disc = cc.c2 * cc.c2 - 4.0 * cc.c0;
    if (std::abs(disc) <= kDegenerateRootTol * (cc.c2 * cc.c2 + 4.0 * std::abs(cc.c0))) {
        fail(ErrorKind::DegenerateRoots, "roots: characteristic quadratic has a double root");
    }
    const complex sd = std::sqrt(complex(disc, 0.0));
    // Larger-modulus root first, the other from the product to avoid cancellation.
    const complex plus = 0.5 * (cc.c2 + sd);
    const complex minus = 0.5 * (cc.c2 - sd);
    const complex big = std::abs(plus) >= std::abs(minus) ? plus : minus;
    const complex small = std::abs(big) > 0.0 ? complex(cc.c0, 0.0) / big : complex(0.0);
    const bool big_first = big.real() >= small.real();
    const complex y1 = big_first ? big : small;
    const complex y2 = big_first ? small : big;
    // Drop signed zeros so a negative real root maps to +i|x|, not -i|x|.
    const auto canon = [](complex y) { return complex(y.real(), y.imag() == 0.0 ? 0.0 : y.imag()); };
    return {std::sqrt(canon(y1)), std::sqrt(canon(y2))};
}

std::array<ConsistencyCondition, 2> consistency_conditions(const OscillatorParams& params,
                                                           double t_end,
                                                           ConsistencyVariant variant) {
    params.validate();
    const double kappa = params.k / params.m;
    const double g = params.gamma;
    const double s = variant == ConsistencyVariant::Derived ? 1.0 : -1.0;
    // q''' + s kappa q' = g (q'' + s kappa q) at 0 and = -g (...) at t.
    ConsistencyCondition at0{0.0, {-g * s * kappa, s * kappa, -g, 1.0}};
    ConsistencyCondition att{t_end, {g * s * kappa, s * kappa, g, 1.0}};
    return {at0, att};
}

complex eval_complex(const ClosedFormSolution& sol, double s, int order) {
    const auto rates = sol.rates();
    const auto offsets = sol.offsets();
    complex sum(0.0, 0.0);
    for (std::size_t j = 0; j < 4; ++j) {
        if (sol.amplitudes[j] == complex(0.0)) continue;
        sum += sol.amplitudes[j] * ipow(rates[j], order) * std::exp(rates[j] * (s - offsets[j]));
    }
    return sum;
}

double term_scale(const ClosedFormSolution& sol, double s, int order) {
    const auto rates = sol.rates();
    const auto offsets = sol.offsets();
    double sum = 0.0;
    for (std::size_t j = 0; j < 4; ++j) {
        if (sol.amplitudes[j] == complex(0.0)) continue;
        sum += std::abs(sol.amplitudes[j] * ipow(rates[j], order) *
                        std::exp(rates[j] * (s - offsets[j])));
    }
    return sum;
}

double eval_solution(const ClosedFormSolution& sol, double s, int order) {
    require(order >= 0 && order <= 4, ErrorKind::InvalidArgument,
            "eval: derivative order must be in 0..4");
    const double slack = 1e-12 * sol.t_end;
    if (!(s >= -slack && s <= sol.t_end + slack)) {
        fail(ErrorKind::Domain, "eval: s outside [0, t_end]");
    }
    const complex value = eval_complex(sol, s, order);
    if (std::abs(value.imag()) > kRealnessTol * std::max(term_scale(sol, s, order), 1e-300)) {
        fail(ErrorKind::InternalConsistency, "eval: closed-form value is not real");
    }
    return value.real();
}

ClosedFormSolution solve_closed_form(const OscillatorParams& params, double q0, double v0,
                                     double t_end, const ClosedFormOptions& options) {
    params.validate();
    require(std::isfinite(t_end) && t_end > 0.0, ErrorKind::InvalidArgument,
            "closed form: t_end must be positive");
    require(std::isfinite(q0) && std::isfinite(v0), ErrorKind::InvalidArgument,
            "closed form: boundary data must be finite");

    ClosedFormSolution sol;
    sol.params = params;
    sol.t_end = t_end;
    sol.q0 = q0;
    sol.v0 = v0;
    sol.consistency = options.consistency;
    sol.coefficients = options.coefficients.value_or(characteristic_coefficients(params));
    sol.roots = roots(sol.coefficients);

    const auto rates = sol.rates();
    const auto offsets = sol.offsets();
    const auto conditions = consistency_conditions(params, t_end, options.consistency);

    // d^p/ds^p of basis j at s.
    const auto basis = [&](std::size_t j, double s, int p) {
        return ipow(rates[j], p) * std::exp(rates[j] * (s - offsets[j]));
    };

    Eigen::Matrix4cd M;
    Eigen::Vector4cd rhs(q0, v0, 0.0, 0.0);
    for (std::size_t j = 0; j < 4; ++j) {
        const auto col = static_cast<Eigen::Index>(j);
        M(0, col) = basis(j, 0.0, 0);
        M(1, col) = basis(j, 0.0, 1);
        for (std::size_t c = 0; c < 2; ++c) {
            complex entry(0.0);
            for (int p = 0; p < 4; ++p)
                entry += conditions[c].weights[static_cast<std::size_t>(p)] *
                         basis(j, conditions[c].at, p);
            M(static_cast<Eigen::Index>(2 + c), col) = entry;
        }
    }
    // Equilibrate rows so the singularity test is scale free.
    for (Eigen::Index r = 0; r < 4; ++r) {
        const double norm = M.row(r).norm();
        if (norm > 0.0) {
            M.row(r) /= norm;
            rhs(r) /= norm;
        }
    }
    if (!(std::abs(M.determinant()) > kSingularTol)) {
        fail(ErrorKind::DegenerateProblem, "closed form: boundary system is singular");
    }
    const Eigen::Vector4cd a = M.fullPivLu().solve(rhs);
    for (std::size_t j = 0; j < 4; ++j) sol.amplitudes[j] = a(static_cast<Eigen::Index>(j));

    check_residual(sol, 0.0, 0, q0, kBoundaryTol, "q(0) = q0");
    check_residual(sol, 0.0, 1, v0, kBoundaryTol, "q'(0) = v0");
    for (const auto& c : conditions) {
        complex value(0.0);
        double scale = 0.0;
        for (int p = 0; p < 4; ++p) {
            const double w = c.weights[static_cast<std::size_t>(p)];
            value += w * eval_complex(sol, c.at, p);
            scale += std::abs(w) * term_scale(sol, c.at, p);
        }
        if (std::abs(value) > kConsistencyTol * std::max(scale, 1e-300)) {
            fail(ErrorKind::InternalConsistency, "closed form: consistency condition violated");
        }
    }
    return sol;
}

std::vector<double> sample_solution(const ClosedFormSolution& sol, const Grid& grid, int order) {
    std::vector<double> out(grid.size());
    for (std::size_t i = 0; i < grid.size(); ++i) out[i] = eval_solution(sol, grid[i], order);
    return out;
}

Path sample_path(const ClosedFormSolution& sol, const Grid& grid) {
    return Path(grid, sample_solution(sol, grid, 0));
}

}  // namespace tnl
