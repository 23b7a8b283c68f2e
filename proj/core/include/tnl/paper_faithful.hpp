#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "tnl/closed_form.hpp"

namespace tnl {

// Literal transcriptions of the printed reduced ODE and of the printed
// closed-form coefficients. Nothing here is rescaled or corrected: overflow
// and cancellation are observed behaviour. The normative solver lives in
// closed_form.hpp.

/// Coefficient pair as printed for the fourth-order ODE:
///   c2 = k/m + g^2,  c0 = g^2 (k + ktilde)/m.
CharacteristicCoefficients printed_characteristic_coefficients(const OscillatorParams& params);

/// Pair whose roots are the printed root formula:
///   c2 = g^2 - 2k/m,  c0 = -g^2 ktilde/m.
CharacteristicCoefficients appendix_implied_coefficients(const OscillatorParams& params);

/// x_i = sqrt(g^2/2 - k/m + (-1)^{i+1} sqrt((g^2/2 - k/m)^2 + g^2 ktilde/m)).
RootPair appendix_roots(const OscillatorParams& params);

/// Inputs shared by every printed sub-expression.
/// Largest relative root difference, comparing the pairs unordered and each
/// root up to sign (the basis uses both x and -x).
double root_distance(const RootPair& a, const RootPair& b);

/// Distance of the small root y = x^2 of y^2 - c2 y + c0 from -(k + ktilde)/m,
/// relative to (k + ktilde)/m. Evaluated with coefficients computed at large
/// gamma, a quartic with the right local limit gives a value near zero.
double local_limit_deviation(const CharacteristicCoefficients& cc, const OscillatorParams& params);

struct AppendixInputs {
    complex x1, x2;
    double kappa;  // k/m
    double gamma;
    double x0;     // initial position (q0)
    double v0;
    double t;
};

/// Each bracketed summand of the printed d, b1, b3, b4, without the common
/// prefactor. Exposed one by one so each can be checked against an independent
/// re-entry of the formula.
namespace appendix_terms {
complex d_prefactor(const AppendixInputs& in);
complex d_term1(const AppendixInputs& in);
complex d_term2(const AppendixInputs& in);
complex d_term3(const AppendixInputs& in);

complex b1_prefactor(const AppendixInputs& in);
complex b1_term1(const AppendixInputs& in);
complex b1_term2(const AppendixInputs& in);
complex b1_term3(const AppendixInputs& in);

complex b3_prefactor(const AppendixInputs& in);
complex b3_term1(const AppendixInputs& in);
complex b3_term2(const AppendixInputs& in);
complex b3_term3(const AppendixInputs& in);
complex b3_term4(const AppendixInputs& in);

complex b4_prefactor(const AppendixInputs& in);
complex b4_term1(const AppendixInputs& in);
complex b4_term2(const AppendixInputs& in);
complex b4_term3(const AppendixInputs& in);
}  // namespace appendix_terms

/// d, b_i and a_i = b_i/d. Complex because x2 is imaginary for ktilde > 0;
/// the ratios come out real only if the printed formulas are consistent.
struct AppendixCoefficients {
    AppendixInputs inputs;
    complex d;
    std::array<complex, 4> b;
    std::array<complex, 4> a;
};

/// Raises Range when Re(x1) t > 700 (unscaled cosh/sinh overflow) and
/// DegenerateProblem when |d| vanishes.
AppendixCoefficients appendix_coefficients(const OscillatorParams& params, double q0, double v0,
                                           double t_end);

/// order 0 or 1 derivative of (b1 sinh x1 s + b2 cosh x1 s + b3 sinh x2 s + b4 cosh x2 s)/d.
complex appendix_eval(const AppendixCoefficients& coeffs, double s, int order = 0);

struct AppendixTrajectory {
    Path path;
    std::vector<double> qdot;
    double max_imag_ratio = 0.0;  // max |Im q| / max |q| over the grid
};

/// Real part of the printed solution on the grid. Non-finite samples raise Range.
AppendixTrajectory appendix_solution(const OscillatorParams& params, double q0, double v0,
                                     const Grid& grid);

enum class FormulaVerdict { Matches, Differs, Degenerate };
std::string_view to_string(FormulaVerdict v) noexcept;

struct PaperComparison {
    RootPair derived_roots;
    RootPair appendix_roots;
    CharacteristicCoefficients derived;
    CharacteristicCoefficients printed;
    CharacteristicCoefficients appendix_implied;
    double root_discrepancy = 0.0;  // max relative root difference

    // Integro-differential residuals, relative to max |m q''|.
    std::optional<double> normative_residual;
    std::optional<double> appendix_residual;
    std::optional<double> appendix_roots_residual;  // closed form built on the appendix roots
    std::optional<double> solution_difference;      // L-inf(appendix - normative) / max|q|
    std::optional<double> appendix_imag_ratio;
    std::string appendix_failure;  // non-empty when the printed solution could not be evaluated

    FormulaVerdict roots_verdict = FormulaVerdict::Degenerate;
    FormulaVerdict solution_verdict = FormulaVerdict::Degenerate;
    /// "derived", "appendix", "both" or "none": which root set drives the ground-truth
    /// residual below 1e-5 max|m q''|.
    std::string residual_winner;
};

PaperComparison compare_paper_vs_derived(const OscillatorParams& params, double q0, double v0,
                                         double t_end, std::size_t n);

}  // namespace tnl
