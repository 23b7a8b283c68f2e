#pragma once

#include <optional>
#include <string>
#include <vector>

#include "tnl/closed_form.hpp"

namespace tnl {

struct PeriodAmplitude {
    double period = 0.0;
    double amplitude = 0.0;
    std::size_t crossings = 0;
};

/// Period from the mean spacing of same-direction zero crossings (linear
/// interpolation between nodes), amplitude from the mean |extremum| (parabolic
/// refinement of discrete extrema). Needs at least three crossings in
/// [t_a, t_b], otherwise InsufficientData.
PeriodAmplitude estimate_period_amplitude(const Path& path, double t_a, double t_b);

/// Upward zero-crossing times of a sampled trajectory.
std::vector<double> upward_crossings(const Path& path, double t_a, double t_b);

struct StageReport {
    double gamma = 0.0;
    bool stabilized = false;
    double transient_end = 0.0;
    double longtime_period = 0.0;
    double longtime_amplitude = 0.0;
    double local_period = 0.0;     // 2 pi sqrt(m / (k + ktilde))
    double local_amplitude = 0.0;  // sqrt(q0^2 + m v0^2 / (k + ktilde))
};

/// Stabilisation threshold on the cycle-by-cycle period.
inline constexpr double kStabilityBand = 0.02;

/// transient_end is the start of the first cycle after which every cycle's
/// period stays within 2% of the final cycle's. Fewer than two full cycles
/// leave `stabilized` false. n = 0 picks a grid with at least 200 points per
/// oscillation of the imaginary root.
StageReport detect_stages(const ClosedFormSolution& sol, double t_end, std::size_t n = 0);

/// Classical oscillator with spring k + ktilde: the gamma -> infinity limit.
double local_reference(const OscillatorParams& params, double q0, double v0, double s);

struct SweepEntry {
    double gamma = 0.0;
    double l2_distance = 0.0;  // || q_gamma - q_local ||_L2 on the common grid
    double local_norm = 0.0;   // || q_local ||_L2
    double initial_mismatch = 0.0;  // max(|q(0) - q0|, |q'(0) - v0|)
    StageReport stages;
    std::string error;  // non-empty if the solve failed
};

/// One closed-form solve per gamma (the gamma in `base` is ignored). Entries
/// are independent and are evaluated on up to `jobs` threads.
std::vector<SweepEntry> gamma_sweep(const OscillatorParams& base,
                                    const std::vector<double>& gammas, double q0, double v0,
                                    double t_end, std::size_t n, unsigned jobs = 1);

}  // namespace tnl
