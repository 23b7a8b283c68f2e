#pragma once

#include <optional>
#include <string>
#include <vector>

#include <tnl/closed_form.hpp>
#include <tnl/lagrangian.hpp>
#include <tnl/variational.hpp>

namespace tnl::cli {

enum class Command { Solve, Validate, Figures };
enum class Method { Closed, Oracle, Appendix };

std::string_view to_string(Command c) noexcept;
std::string_view to_string(Method m) noexcept;

/// Everything a run needs. Built from per-command defaults, then the JSON
/// config file, then command-line flags (later sources win).
struct RunConfig {
    Command command = Command::Solve;
    OscillatorParams params{1.0, 1.0, 2.0, 1.0};
    // General Lagrangian used by the validate checks that need E, G, H terms.
    GeneralLagrangianSpec lagrangian;
    double q0 = 0.0;
    double v0 = 1.0;
    std::optional<double> qbar;  // when set, q(t) = qbar replaces qdot(0) = v0
    double t_end = 10.0;
    std::size_t n = 2001;
    Method method = Method::Closed;
    ConsistencyVariant consistency = ConsistencyVariant::Derived;
    KernelArgumentOrder kernel_order = KernelArgumentOrder::Derived;
    std::vector<double> gammas{0.1, 0.3, 0.7};
    unsigned jobs = 1;
    std::string out = ".";

    void validate() const;
};

/// Defaults for a command: desk-scale oscillator for solve/validate, the
/// stiff large-ktilde oscillator on t = 2 for figures.
RunConfig default_config(Command command);

/// Overlay of a JSON config document onto `base`. Unknown keys are rejected.
RunConfig apply_json(RunConfig base, const std::string& json_text);

/// Lagrangian spec from JSON:
///   {"m", "A".."H" | "coeffs": [A..H], "kernel": {"type", "gamma"}}
GeneralLagrangianSpec lagrangian_from_json(const std::string& json_text);
std::string lagrangian_to_json(const GeneralLagrangianSpec& spec);

/// Comma-separated list of positive reals.
std::vector<double> parse_gamma_list(const std::string& text);

}  // namespace tnl::cli
